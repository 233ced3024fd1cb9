#include "arknit/knit.hpp"

#include <algorithm>
#include <set>

#include "knit_detail.hpp"

namespace arknit {

bool is_dynkin(const FiniteQuiver& q) {
  const std::size_t n = q.vertices.size();
  if (n == 0 || q.arrows.size() != n - 1) return false;
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[q.vertices[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : q.arrows) {
    auto s = idx.at(a.source), t = idx.at(a.target);
    if (s == t || !edges.insert({std::min(s, t), std::max(s, t)}).second) return false;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  // connected with n - 1 edges: a tree
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return false;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return true;  // A_n
  if (branch.size() > 1) return false;
  std::vector<std::size_t> arms;
  for (auto start : adj[branch[0]]) {
    std::size_t len = 1, prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return true;                  // D_n
  return arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4;  // E_6, E_7, E_8
}

std::optional<FamilyLabel> label_of_dimvec(FamilyTag family, const TruncatedQuiver& window, const DimVector& d) {
  std::map<long, std::size_t> dims;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (!d[v]) continue;
    long i;
    try {
      i = std::stol(window.vertices()[v]);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    dims[i] = d[v];
  }
  if (dims.empty()) return std::nullopt;
  auto contiguous = [&](long from, long to) {
    for (long i = from; i <= to; ++i)
      if (!dims.count(i)) return false;
    return true;
  };
  const long lo = dims.begin()->first, hi = dims.rbegin()->first;
  std::size_t top = 0;
  for (auto [i, k] : dims) top = std::max(top, k);
  FamilyLabel l;
  if (family == FamilyTag::AInf || family == FamilyTag::ABiInf) {
    if (top != 1 || !contiguous(lo, hi) || static_cast<long>(dims.size()) != hi - lo + 1) return std::nullopt;
    l.n = lo;
    l.m = hi;
    return l;
  }
  if (family != FamilyTag::DInf || top > 2) return std::nullopt;
  const bool has0 = dims.count(0), has1 = dims.count(1);
  if (top == 2) {
    // B_{n,m}: k^2 exactly on 2..n, k on 0, 1 and n+1..m
    if (!has0 || !has1 || dims[0] != 1 || dims[1] != 1 || !contiguous(0, hi)) return std::nullopt;
    long n = 1;
    while (dims.count(n + 1) && dims[n + 1] == 2) ++n;
    for (long i = n + 1; i <= hi; ++i)
      if (dims[i] != 1) return std::nullopt;
    if (n < 2 || hi <= n) return std::nullopt;
    l.kind = 'B';
    l.n = n;
    l.m = hi;
    return l;
  }
  if (has0 && has1) {
    if (hi < 2 || !contiguous(0, hi)) return std::nullopt;
    l.kind = 'B';
    l.n = 1;
    l.m = hi;
    return l;
  }
  if (has0 || has1) {
    if (hi >= 2 && !contiguous(2, hi)) return std::nullopt;
    l.variant = has0 ? 1 : 0;
    l.m = hi <= 1 ? 1 : hi;
    return l;
  }
  if (lo < 2 || !contiguous(lo, hi)) return std::nullopt;
  l.n = lo;
  l.m = hi;
  return l;
}

FamilyLabel za_inf_label(FamilyTag family, int which, long p, long r) {
  if (r < 1) throw PreconditionError("quasi-length must be positive");
  FamilyLabel l;
  if (family == FamilyTag::ABiInf) {
    if (which == 1) {
      l.n = 2 * p;
      l.m = 2 * p + 2 * r - 1;
    } else if (which == 2) {
      l.m = -2 * p;
      l.n = l.m - 2 * r + 1;
    } else {
      throw PreconditionError("A-infinity-infinity has ZA-infinity components 1 and 2");
    }
    return l;
  }
  if (family != FamilyTag::DInf || which != 1) throw PreconditionError("no ZA-infinity component for this family");
  // X(p, r) has the mouth positions p .. p + r - 1; position 0 is B_{1,2}
  const long last = p + r - 1;
  if (last < 0) {
    l.n = -2 * last + 1;
    l.m = -2 * p + 2;
  } else if (p > 0) {
    l.n = 2 * p;
    l.m = 2 * last + 1;
  } else {
    l.kind = 'B';
    l.n = last > 0 ? 2 * last + 1 : 1;
    l.m = p < 0 ? -2 * p + 2 : 2;
  }
  return l.normalized();
}

std::string component_membership(FamilyTag family, const FamilyLabel& label0) {
  const FamilyLabel l = label0.normalized();
  family_support(family, l);  // validates the label
  auto odd = [](long v) { return v % 2 != 0; };
  if (family == FamilyTag::ABiInf) {
    if (odd(l.n) && odd(l.m)) return "preprojective";
    if (!odd(l.n) && !odd(l.m)) return "preinjective";
    return odd(l.m) ? "ZA-inf#1" : "ZA-inf#2";
  }
  if (family == FamilyTag::AInf) {
    if (l.n < 1) throw PreconditionError(l.to_string() + " lies outside the A-infinity family starting at 1");
    return odd(l.m) ? "preprojective" : "preinjective";
  }
  if (family == FamilyTag::DInf) {
    if (l.variant >= 0) return odd(l.m) ? "preprojective" : "preinjective";
    if (odd(l.n) && odd(l.m)) return "preprojective";
    if (!odd(l.n) && !odd(l.m)) return "preinjective";
    return "ZA-inf";
  }
  throw PreconditionError("component membership is defined for the A and D families");
}

ARComponentModel tilt_join(const QuiverSpec& spec, int level, long n_min, long n_max, long rows) {
  if (!check_p1(spec) || !check_p2(spec)) throw PreconditionError("tilt_join needs a quiver satisfying (P1)(P2)");
  if (n_min >= 0 || n_max < 0) throw PreconditionError("the column range must contain -1 and 0");
  if (spec.is_finite()) {
    auto fq = std::get<FiniteQuiver>(spec.body());
    if (is_dynkin(fq)) throw PreconditionError("Dynkin quiver: the preprojective and preinjective components coincide");
  }
  auto window = truncate_ptr(spec, level);
  const auto& q = *window;
  auto family = detail::zigzag_family(spec);

  ARComponentModel m;
  m.shape = "tilted";
  m.window = window;
  m.family = family;
  auto pre = knit_preprojective(spec, level, static_cast<int>(n_max));
  auto inj = knit_preinjective(spec, level, static_cast<int>(-n_min - 1));
  for (long n = n_min; n <= n_max; ++n)
    for (std::size_t x = 0; x < q.vertex_count(); ++x) {
      ModelVertex v;
      v.component = "sigma";
      v.n = n;
      v.x = q.vertices()[x];
      const bool open = q.open_in(x) || q.open_out(x);
      v.open_in = open || n == n_min;
      v.open_out = open || n == n_max;
      std::optional<std::size_t> src = n >= 0 ? pre.find("preprojective", n, v.x) : inj.find("preinjective", n + 1, v.x);
      const ARComponentModel& from = n >= 0 ? pre : inj;
      if (src && from.vertex(*src).reliable) {
        v.label = from.vertex(*src).label + (n < 0 ? "[-1]" : "");
        if (n >= 0) v.dimvec = from.vertex(*src).dimvec;
      } else {
        v.label = "sigma(" + std::to_string(n) + "," + v.x + ")";
        v.reliable = false;
      }
      m.add_vertex(std::move(v));
    }
  for (long n = n_min; n <= n_max; ++n)
    for (const auto& a : q.arrows()) {
      const auto& s = q.vertices()[a.source];
      const auto& t = q.vertices()[a.target];
      // ZQ^op: (n, t) -> (n, s) and (n, s) -> (n + 1, t)
      if (auto u = m.find("sigma", n, t), w = m.find("sigma", n, s); u && w) m.add_arrow(*u, *w);
      if (auto u = m.find("sigma", n, s), w = m.find("sigma", n + 1, t); u && w) m.add_arrow(*u, *w);
    }

  std::vector<std::pair<std::string, int>> tubes;
  if (family == FamilyTag::ABiInf) tubes = {{"ZA-inf#1", 1}, {"ZA-inf#2", 2}};
  if (family == FamilyTag::DInf) tubes = {{"ZA-inf", 1}};
  if (tubes.empty()) m.notes.push_back("components other than sigma are not modelled for this quiver");
  if (rows <= 0) rows = n_max - n_min + 1;
  for (const auto& [name, which] : tubes) {
    for (long p = n_min; p <= n_max; ++p)
      for (long r = 1; r <= rows; ++r) {
        ModelVertex v;
        v.component = name;
        v.n = p;
        v.x = std::to_string(r);
        FamilyLabel l = za_inf_label(*family, which, p, r);
        v.label = l.to_string();
        v.open_in = p == n_min || r == rows;
        v.open_out = p == n_max || r == rows;
        try {
          v.dimvec = realize_family_object(window, *family, l, Field::rationals()).dims();
        } catch (const TruncationError&) {
        }
        m.add_vertex(std::move(v));
      }
    for (long p = n_min; p <= n_max; ++p)
      for (long r = 1; r <= rows; ++r) {
        auto here = *m.find(name, p, std::to_string(r));
        if (auto up = m.find(name, p, std::to_string(r + 1))) m.add_arrow(here, *up);
        if (r > 1)
          if (auto down = m.find(name, p + 1, std::to_string(r - 1))) m.add_arrow(here, *down);
      }
  }
  return m;
}

SimpleReport mark_simples(ARComponentModel& model) {
  if (model.shape != "tilted" || (model.family != FamilyTag::ABiInf && model.family != FamilyTag::DInf))
    throw PreconditionError("simple objects are placed only for the tilted A-infinity-infinity and D-infinity models");
  SimpleReport r;
  std::set<std::pair<std::string, VertexId>> orbits;
  for (std::size_t v = 0; v < model.size(); ++v) {
    auto& mv = model.vertex(v);
    mv.simple = mv.component.rfind("ZA-inf", 0) == 0 && mv.x == "1";
    if (!mv.simple) continue;
    r.marked.push_back(v);
    orbits.insert({mv.component, mv.x});
  }
  r.tau_orbits = orbits.size();
  return r;
}

}  // namespace arknit
