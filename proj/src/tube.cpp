#include "arknit/tube.hpp"

#include <algorithm>

namespace arknit {

TubeCategory TubeCategory::of_rank(int n) {
  if (n < 1) throw PreconditionError("a tube has positive rank");
  TubeCategory c;
  c.rank_ = n;
  return c;
}

TubeCategory TubeCategory::infinite() { return {}; }

int TubeCategory::rank() const {
  if (!rank_) throw PreconditionError("the A-infinity-infinity category has infinitely many simples");
  return *rank_;
}

std::string TubeCategory::rank_string() const { return rank_ ? std::to_string(*rank_) : "inf"; }

long TubeCategory::simple(long i) const {
  if (!rank_) return i;
  long n = *rank_;
  return ((i % n) + n) % n;
}

std::string TubeObject::to_string() const {
  return "T_{" + std::to_string(top) + "," + std::to_string(length) + "}";
}

TubeObject normalize(const TubeCategory& c, TubeObject t) {
  if (t.length < 1) throw PreconditionError("tube objects have positive length");
  t.top = c.simple(t.top);
  return t;
}

// The radical of T_{i,m} is T_{i+1,m-1}, and tau is the radical twist: the top moves one step
// along the arrows.
TubeObject tau_tube(const TubeCategory& c, const TubeObject& t) {
  auto u = normalize(c, t);
  return {c.v(u.top), u.length};
}

TubeObject tau_inv_tube(const TubeCategory& c, const TubeObject& t) {
  auto u = normalize(c, t);
  return {c.v_inv(u.top), u.length};
}

TubeSequence ass_tube(const TubeCategory& c, const TubeObject& t) {
  auto right = normalize(c, t);
  TubeSequence s;
  s.right = right;
  s.left = tau_tube(c, right);
  s.middle.push_back({right.top, right.length + 1});
  if (right.length > 1) s.middle.push_back({s.left.top, right.length - 1});
  std::sort(s.middle.begin(), s.middle.end());
  return s;
}

std::size_t hom_dim_tube(const TubeCategory& c, const TubeObject& x0, const TubeObject& y0) {
  auto x = normalize(c, x0), y = normalize(c, y0);
  std::size_t count = 0;
  // the length-k subobject of Y has top y.top + (y.length - k)
  for (long k = 1; k <= std::min(x.length, y.length); ++k)
    if (c.simple(y.top + y.length - k) == x.top) ++count;
  return count;
}

QuiverPtr tube_quiver(const TubeCategory& c, int level) {
  if (c.is_infinite()) return truncate_ptr(family(FamilyTag::ABiInf, Orientation::LinearRight), level);
  return truncate_ptr(cyclic_quiver(c.rank()), 0);
}

Representation realize_tube_object(const TubeCategory& c, const TubeObject& t0, const Field& f, int level) {
  auto t = normalize(c, t0);
  auto q = tube_quiver(c, level);
  const auto& w = *q;
  // basis vector k sits at vertex top + k; its position inside that vertex space
  std::vector<std::size_t> vertex_of(t.length), slot(t.length);
  DimVector dims(w.vertex_count(), 0);
  for (long k = 0; k < t.length; ++k) {
    VertexId name = std::to_string(c.simple(t.top + k));
    if (!w.contains(name))
      throw TruncationError(t.to_string() + " needs vertex " + name + " inside the window");
    auto v = w.index_of(name);
    if (w.open_in(v) || w.open_out(v))
      throw TruncationError(t.to_string() + " reaches the open end " + name + " of the window");
    vertex_of[k] = v;
    slot[k] = dims[v]++;
  }
  std::vector<Matrix> maps;
  for (const auto& a : w.arrows()) maps.emplace_back(f, dims[a.target], dims[a.source]);
  for (long k = 0; k + 1 < t.length; ++k)
    for (std::size_t a = 0; a < w.arrow_count(); ++a) {
      const auto& arr = w.arrows()[a];
      if (arr.source == vertex_of[k] && arr.target == vertex_of[k + 1]) {
        maps[a](slot[k + 1], slot[k]) = f.one();
        break;
      }
    }
  return Representation(q, f, dims, maps);
}

TubeObject identify_tube_object(const TubeCategory& c, const Representation& x) {
  if (x.is_zero()) throw PreconditionError("the zero object is not uniserial");
  auto top_support = [&](const Representation& r) {
    auto s = r.support();
    std::vector<std::size_t> out;
    auto rad = radical(r).source;
    for (auto v : s)
      if (rad.dim(v) < r.dim(v)) out.push_back(v);
    return std::make_pair(out, rad);
  };
  auto [tops, rad] = top_support(x);
  if (tops.size() != 1 || x.dim(tops[0]) - rad.dim(tops[0]) != 1)
    throw PreconditionError(x.dimvec_string() + " does not have a simple top");
  TubeObject t{std::stol(x.quiver().vertices()[tops[0]]), static_cast<long>(x.total_dim())};
  // every radical layer must be simple
  Representation layer = rad;
  while (!layer.is_zero()) {
    auto [ts, next] = top_support(layer);
    if (next.total_dim() + 1 != layer.total_dim())
      throw PreconditionError(x.dimvec_string() + " is not uniserial");
    layer = next;
  }
  return normalize(c, t);
}

std::string classify_finite_length(const FiniteLengthDescriptor& d) {
  if (!d.connected) throw PreconditionError("split a disconnected category into components first");
  if (!d.simples) return "A-inf-inf-nilpotent";
  if (*d.simples < 1) throw PreconditionError("a non-zero finite-length category has simple objects");
  return "tube(" + std::to_string(*d.simples) + ")";
}

}  // namespace arknit
