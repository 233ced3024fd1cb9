#include "arknit/replin.hpp"

#include <algorithm>
#include <regex>

namespace arknit {

FamilyLabel FamilyLabel::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  static const std::regex pattern(R"(^([AB])(?:\^\{?\(([01])\)\}?|([01])(?=_))?_\{?(-?\d+)(?:,(-?\d+))?\}?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ValidationError("unrecognised object label '" + raw + "'");
  FamilyLabel l;
  l.kind = m[1].str()[0];
  std::string variant = m[2].matched ? m[2].str() : (m[3].matched ? m[3].str() : "");
  if (!variant.empty()) {
    if (l.kind != 'A' || m[5].matched) throw ValidationError("label '" + raw + "': A^{(i)} takes one index");
    l.variant = variant[0] - '0';
    l.m = std::stol(m[4].str());
    return l;
  }
  if (!m[5].matched) throw ValidationError("label '" + raw + "' needs two indices");
  l.n = std::stol(m[4].str());
  l.m = std::stol(m[5].str());
  return l;
}

std::string FamilyLabel::to_string() const {
  if (variant >= 0) return "A^{(" + std::to_string(variant) + ")}_{" + std::to_string(m) + "}";
  FamilyLabel c = normalized();
  return std::string(1, kind) + "_{" + std::to_string(c.n) + "," + std::to_string(c.m) + "}";
}

FamilyLabel FamilyLabel::normalized() const {
  FamilyLabel c = *this;
  if (kind == 'B' && c.n > c.m) std::swap(c.n, c.m);
  return c;
}

std::vector<long> family_support(FamilyTag family, const FamilyLabel& label0) {
  FamilyLabel l = label0.normalized();
  std::vector<long> s;
  auto range = [&](long a, long b) {
    for (long i = a; i <= b; ++i) s.push_back(i);
  };
  if (family == FamilyTag::DInf) {
    if (l.variant >= 0) {
      if (l.m < 1) throw PreconditionError(l.to_string() + " needs m >= 1");
      s.push_back(l.variant == 0 ? 1 : 0);
      range(2, l.m);
      return s;
    }
    if (l.kind == 'A') {
      if (l.n < 2 || l.n > l.m) throw PreconditionError(l.to_string() + " needs 2 <= n <= m on D-infinity");
      range(l.n, l.m);
      return s;
    }
    // B_{n,n} would split as A^{(0)}_n + A^{(1)}_n
    if (l.n < 1 || l.n >= l.m) throw PreconditionError(l.to_string() + " needs 1 <= n < m");
    range(0, l.m);
    return s;
  }
  if (family != FamilyTag::AInf && family != FamilyTag::ABiInf)
    throw PreconditionError("labelled objects exist only over the A and D families");
  if (l.kind != 'A' || l.variant >= 0) throw PreconditionError(l.to_string() + " is not an object over type A");
  if (l.n > l.m) throw PreconditionError(l.to_string() + " needs n <= m");
  range(l.n, l.m);
  return s;
}

Representation interval_rep(const QuiverPtr& qp, const std::vector<VertexId>& support, const Field& f) {
  const auto& q = *qp;
  DimVector dims(q.vertex_count(), 0);
  for (const auto& v : support) {
    if (!q.contains(v)) throw TruncationError("vertex " + v + " lies outside the window", q.level() + 1);
    dims[q.index_of(v)] = 1;
  }
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) {
    Matrix m(f, dims[a.target], dims[a.source]);
    if (dims[a.source] && dims[a.target]) m(0, 0) = f.one();
    maps.push_back(std::move(m));
  }
  return Representation(qp, f, std::move(dims), std::move(maps));
}

Representation realize_family_object(const QuiverPtr& qp, FamilyTag family, const FamilyLabel& label0,
                                     const Field& f) {
  const FamilyLabel l = label0.normalized();
  auto support = family_support(family, l);
  std::vector<VertexId> names;
  for (long i : support) names.push_back(std::to_string(i));
  const auto& q = *qp;
  for (const auto& v : names)
    if (!q.contains(v)) throw TruncationError(l.to_string() + " needs vertex " + v + " in the window", q.level() + 1);
  if (l.kind == 'A' || l.n == 1) return interval_rep(qp, names, f);

  // B_{n,m}, 2 <= n: k^2 at 2..n, k at 0, 1 and n+1..m; the fork sees the two coordinate lines
  // and the boundary arrow between n and n+1 sees the diagonal.
  DimVector dims(q.vertex_count(), 0);
  auto idx = [&](long i) { return q.index_of(std::to_string(i)); };
  for (long i : support) dims[idx(i)] = (i >= 2 && i <= l.n) ? 2 : 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) {
    const std::size_t ds = dims[a.source], dt = dims[a.target];
    Matrix m(f, dt, ds);
    if (ds && dt) {
      long s = std::stol(q.vertices()[a.source]), t = std::stol(q.vertices()[a.target]);
      long lo = std::min(s, t), hi = std::max(s, t);
      if (ds == 2 && dt == 2) {
        m = Matrix::identity(f, 2);
      } else if (lo <= 1 && hi == 2) {
        // fork arrow: vertex 0 sees the first coordinate, vertex 1 the second
        std::size_t coord = lo == 0 ? 0 : 1;
        if (ds == 2)
          m(0, coord) = f.one();
        else
          m(coord, 0) = f.one();
      } else if (ds == 2 || dt == 2) {
        if (ds == 2) {
          m(0, 0) = f.one();
          m(0, 1) = f.one();
        } else {
          m(0, 0) = f.one();
          m(1, 0) = f.one();
        }
      } else {
        m(0, 0) = f.one();
      }
    }
    maps.push_back(std::move(m));
  }
  return Representation(qp, f, std::move(dims), std::move(maps));
}

}  // namespace arknit
