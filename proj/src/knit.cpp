#include "arknit/knit.hpp"

#include "knit_detail.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace arknit {

// ---- translation quivers -------------------------------------------------------------------

std::string Coord::to_string() const { return "(" + std::to_string(n) + "," + x + ")"; }

TranslationQuiver::TranslationQuiver(QuiverPtr base, long n_min, long n_max)
    : base_(std::move(base)), n_min_(n_min), n_max_(n_max) {
  if (n_min > n_max) throw PreconditionError("empty column range for ZQ");
  const auto& q = *base_;
  for (long n = n_min; n <= n_max; ++n)
    for (const auto& x : q.vertices()) {
      index_[{n, x}] = vertices_.size();
      vertices_.push_back({n, x});
    }
  succ_.resize(vertices_.size());
  pred_.resize(vertices_.size());
  auto link = [&](const Coord& a, const Coord& b) {
    auto i = index_.find(a), j = index_.find(b);
    if (i == index_.end() || j == index_.end()) return;
    arrows_.push_back({i->second, j->second});
    succ_[i->second].push_back(j->second);
    pred_[j->second].push_back(i->second);
  };
  for (long n = n_min; n <= n_max; ++n)
    for (const auto& a : q.arrows()) {
      const auto& s = q.vertices()[a.source];
      const auto& t = q.vertices()[a.target];
      link({n, s}, {n, t});
      link({n, t}, {n + 1, s});
    }
}

std::optional<std::size_t> TranslationQuiver::find(const Coord& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TranslationQuiver::index_of(const Coord& c) const {
  auto v = find(c);
  if (!v) throw TruncationError("vertex " + c.to_string() + " lies outside the ZQ window");
  return *v;
}

std::optional<std::size_t> TranslationQuiver::tau(std::size_t v) const {
  return find({vertices_[v].n - 1, vertices_[v].x});
}

std::optional<std::size_t> TranslationQuiver::tau_inv(std::size_t v) const {
  return find({vertices_[v].n + 1, vertices_[v].x});
}

std::size_t TranslationQuiver::path_count(std::size_t a, std::size_t b) const {
  // vertices are stored column by column and arrows inside a column follow base arrows, so a
  // topological pass over the window suffices
  const auto& q = *base_;
  auto order = q.topological_order();
  std::vector<std::size_t> rank(q.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::size_t> seq(vertices_.size());
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i;
  std::sort(seq.begin(), seq.end(), [&](std::size_t i, std::size_t j) {
    if (vertices_[i].n != vertices_[j].n) return vertices_[i].n < vertices_[j].n;
    return rank[q.index_of(vertices_[i].x)] < rank[q.index_of(vertices_[j].x)];
  });
  std::vector<std::size_t> count(vertices_.size(), 0);
  count[a] = 1;
  for (auto v : seq)
    for (auto w : succ_[v]) count[w] += count[v];
  return count[b];
}

namespace {

void require_p1p2(const QuiverSpec& spec) {
  if (!check_p1(spec) || !check_p2(spec)) throw PreconditionError("ZQ needs a quiver satisfying (P1)(P2)");
}

}  // namespace

TranslationQuiver zq(const QuiverSpec& spec, long n_min, long n_max, int level) {
  require_p1p2(spec);
  auto w = truncate_ptr(spec, level);
  if (!w->is_acyclic()) throw PreconditionError("ZQ needs an acyclic quiver");
  return TranslationQuiver(w, n_min, n_max);
}

TranslationQuiver nq(const QuiverSpec& spec, long n_max, int level) { return zq(spec, 0, n_max, level); }

bool is_section(const TranslationQuiver& tq, const std::vector<Coord>& candidate) {
  const auto& q = *tq.base();
  std::map<VertexId, long> chosen;
  for (const auto& c : candidate) {
    if (!q.contains(c.x)) throw TruncationError("section vertex " + c.to_string() + " lies outside the window");
    if (c.n <= tq.n_min() || c.n >= tq.n_max())
      throw TruncationError("section vertex " + c.to_string() + " needs one column of margin in the window");
    if (!chosen.emplace(c.x, c.n).second) return false;  // two vertices in one orbit
  }
  if (chosen.size() != q.vertex_count()) return false;
  auto in = [&](const Coord& c) {
    auto it = chosen.find(c.x);
    return it != chosen.end() && it->second == c.n;
  };
  for (const auto& c : candidate) {
    auto v = tq.index_of(c);
    for (auto s : tq.successors(v)) {
      const Coord& y = tq.vertices()[s];
      if (!in(y) && !in({y.n - 1, y.x})) return false;
    }
    for (auto p : tq.predecessors(v)) {
      const Coord& z = tq.vertices()[p];
      if (!in(z) && !in({z.n + 1, z.x})) return false;
    }
  }
  return true;
}

// ---- component models ------------------------------------------------------------------------

std::size_t ARComponentModel::add_vertex(ModelVertex v) {
  auto key = std::make_tuple(v.component, v.n, v.x);
  if (index_.count(key)) throw CrossValidationError("duplicate model vertex " + v.label);
  std::size_t id = vertices_.size();
  index_[key] = id;
  if (!v.label.empty()) {
    std::string text = v.label;
    try {
      text = FamilyLabel::parse(v.label).to_string();
    } catch (const ValidationError&) {
    }
    labels_.emplace(text, id);
  }
  vertices_.push_back(std::move(v));
  succ_.emplace_back();
  pred_.emplace_back();
  return id;
}

void ARComponentModel::add_arrow(std::size_t from, std::size_t to) {
  arrows_.push_back({from, to});
  succ_[from].push_back(to);
  pred_[to].push_back(from);
}

std::optional<std::size_t> ARComponentModel::find(const std::string& component, long n, const VertexId& x) const {
  auto it = index_.find(std::make_tuple(component, n, x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ARComponentModel::find_label(const std::string& label) const {
  std::string text = label;
  try {
    text = FamilyLabel::parse(label).to_string();
  } catch (const ValidationError&) {
  }
  auto it = labels_.find(text);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ARComponentModel::tau(std::size_t v) const {
  const auto& m = vertices_[v];
  if (m.projective) return std::nullopt;
  return find(m.component, m.n - 1, m.x);
}

std::optional<std::size_t> ARComponentModel::tau_inv(std::size_t v) const {
  const auto& m = vertices_[v];
  if (m.injective) return std::nullopt;
  return find(m.component, m.n + 1, m.x);
}

std::vector<std::string> ARComponentModel::components() const {
  std::vector<std::string> out;
  for (const auto& v : vertices_)
    if (std::find(out.begin(), out.end(), v.component) == out.end()) out.push_back(v.component);
  return out;
}

// ---- knitting --------------------------------------------------------------------------------

namespace {

bool touches_open(const TruncatedQuiver& q, const DimVector& d) {
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] && (q.open_in(v) || q.open_out(v))) return true;
  return false;
}

bool is_open(const TruncatedQuiver& q, std::size_t v) { return q.open_in(v) || q.open_out(v); }

void require_connected(const TruncatedQuiver& q) {
  if (q.vertex_count() == 0) throw PreconditionError("knitting needs a non-empty quiver");
  std::vector<bool> seen(q.vertex_count(), false);
  std::deque<std::size_t> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop_front();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    };
    for (auto a : q.out_arrows(v)) visit(q.arrows()[a].target);
    for (auto a : q.in_arrows(v)) visit(q.arrows()[a].source);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw PreconditionError("knitting needs a connected quiver");
}

struct Cell {
  bool exists = false;
  DimVector dims;
  bool reliable = false;
  bool injective = false;
  bool blocked = false;  // the mesh could not be evaluated reliably
};

std::string preprojective_name(long n, const VertexId& x) {
  return n == 0 ? "P_" + x : "tau^-" + std::to_string(n) + " P_" + x;
}

std::string preinjective_name(long k, const VertexId& x) {
  return k == 0 ? "I_" + x : "tau^" + std::to_string(k) + " I_" + x;
}

}  // namespace

ARComponentModel knit_preprojective(const QuiverPtr& window, int depth, const KnitOptions& opts) {
  const auto& q = *window;
  if (!q.is_acyclic()) throw PreconditionError("knitting needs an acyclic quiver");
  if (depth < 0) throw PreconditionError("knitting depth must be non-negative");
  require_connected(q);
  const std::size_t nv = q.vertex_count();
  const Field f = opts.field;

  std::map<DimVector, std::size_t> injective_dims;
  for (std::size_t w = 0; w < nv; ++w)
    try {
      injective_dims.emplace(injective_rep(window, q.vertices()[w], f, true).dims(), w);
    } catch (const TruncationError&) {
    }

  auto order = q.topological_order();
  std::vector<std::size_t> reverse(order.rbegin(), order.rend());

  std::vector<std::vector<Cell>> grid(static_cast<std::size_t>(depth) + 1, std::vector<Cell>(nv));
  auto mark_injective = [&](Cell& c) {
    if (c.reliable && injective_dims.count(c.dims)) c.injective = true;
  };
  for (std::size_t x = 0; x < nv; ++x) {
    Cell& c = grid[0][x];
    c.exists = true;
    bool closed = true;
    try {
      c.dims = projective_rep(window, q.vertices()[x], f, true).dims();
    } catch (const TruncationError&) {
      closed = false;
      c.dims = projective_rep(window, q.vertices()[x], f, false).dims();
    }
    c.reliable = closed && !is_open(q, x) && !touches_open(q, c.dims);
    mark_injective(c);
  }

  for (int n = 0; n < depth; ++n) {
    for (auto x : reverse) {
      Cell& z = grid[n][x];
      if (!z.exists || z.injective) continue;
      // successors of (n, x) in ZQ^op: (n, a) for arrows a -> x, (n+1, b) for arrows x -> b
      std::vector<long> sum(nv, 0);
      bool reliable = z.reliable && !is_open(q, x);
      auto add = [&](const Cell& c) {
        if (!c.exists) {
          if (c.blocked) reliable = false;
          return;
        }
        reliable = reliable && c.reliable;
        for (std::size_t v = 0; v < nv; ++v) sum[v] += static_cast<long>(c.dims[v]);
      };
      for (auto a : q.in_arrows(x)) add(grid[n][q.arrows()[a].source]);
      for (auto a : q.out_arrows(x)) add(grid[n + 1][q.arrows()[a].target]);
      bool negative = false, zero = true;
      for (std::size_t v = 0; v < nv; ++v) {
        sum[v] -= static_cast<long>(z.dims[v]);
        if (sum[v] < 0) negative = true;
        if (sum[v] != 0) zero = false;
      }
      Cell& next = grid[n + 1][x];
      if (negative || zero) {
        if (reliable)
          throw CrossValidationError("knitting produced " + std::string(negative ? "a negative" : "a zero") +
                                     " dimension vector at " + preprojective_name(n + 1, q.vertices()[x]) +
                                     " from a non-injective vertex");
        next.blocked = true;
        continue;
      }
      next.exists = true;
      next.dims.assign(nv, 0);
      for (std::size_t v = 0; v < nv; ++v) next.dims[v] = static_cast<std::size_t>(sum[v]);
      next.reliable = reliable && !touches_open(q, next.dims);
      mark_injective(next);
    }
  }

  ARComponentModel model;
  model.shape = "preprojective";
  model.window = window;
  std::vector<std::vector<std::optional<std::size_t>>> id(grid.size(), std::vector<std::optional<std::size_t>>(nv));
  for (long n = 0; n <= depth; ++n)
    for (std::size_t x = 0; x < nv; ++x) {
      const Cell& c = grid[n][x];
      if (!c.exists) continue;
      ModelVertex v;
      v.component = "preprojective";
      v.n = n;
      v.x = q.vertices()[x];
      v.label = preprojective_name(n, v.x);
      v.dimvec = c.dims;
      v.projective = n == 0;
      v.injective = c.injective;
      v.reliable = c.reliable;
      v.open_in = is_open(q, x);
      v.open_out = is_open(q, x) || (!c.injective && (n == depth || grid[n + 1][x].blocked));
      v.reliable = v.reliable && !v.open_in;
      if (n == depth && !c.injective) model.partial = true;
      id[n][x] = model.add_vertex(std::move(v));
    }
  for (long n = 0; n <= depth; ++n)
    for (std::size_t x = 0; x < nv; ++x) {
      if (!id[n][x]) continue;
      for (auto a : q.in_arrows(x))
        if (auto t = id[n][q.arrows()[a].source]) model.add_arrow(*id[n][x], *t);
      if (n < depth)
        for (auto a : q.out_arrows(x))
          if (auto t = id[n + 1][q.arrows()[a].target]) model.add_arrow(*id[n][x], *t);
    }
  // a missing successor behind a blocked mesh leaves its neighbours open as well
  for (std::size_t v = 0; v < model.size(); ++v) {
    auto& mv = model.vertex(v);
    std::size_t x = q.index_of(mv.x);
    if (mv.n < depth)
      for (auto a : q.out_arrows(x))
        if (grid[mv.n + 1][q.arrows()[a].target].blocked) mv.open_out = true;
    for (auto a : q.out_arrows(x))
      if (grid[mv.n][q.arrows()[a].target].blocked) mv.open_in = true;
    if (mv.n > 0) {
      if (grid[mv.n - 1][x].blocked) mv.open_in = true;
      for (auto a : q.in_arrows(x))
        if (grid[mv.n - 1][q.arrows()[a].source].blocked) mv.open_in = true;
    }
  }

  if (opts.validate) {
    auto report = validate_knit(model, f);
    if (!report.ok()) throw CrossValidationError("knitting disagrees with tau^-1: " + report.mismatches.front());
  }
  return model;
}

ARComponentModel knit_preinjective(const QuiverPtr& window, int depth, const KnitOptions& opts) {
  KnitOptions inner = opts;
  inner.validate = false;
  ARComponentModel op = knit_preprojective(opposite_window(window), depth, inner);
  ARComponentModel model;
  model.shape = "preinjective";
  model.window = window;
  model.partial = op.partial;
  for (const auto& v0 : op.vertices()) {
    ModelVertex v = v0;
    v.component = "preinjective";
    v.n = -v0.n;
    v.label = preinjective_name(v0.n, v0.x);
    v.projective = v0.injective;
    v.injective = v0.n == 0;
    v.open_in = v0.open_out;
    v.open_out = v0.open_in;
    model.add_vertex(std::move(v));
  }
  for (auto [a, b] : op.arrows()) model.add_arrow(b, a);
  if (opts.validate) {
    auto report = validate_knit(model, opts.field);
    if (!report.ok()) throw CrossValidationError("knitting disagrees with tau: " + report.mismatches.front());
  }
  return model;
}

namespace detail {

std::optional<FamilyTag> zigzag_family(const QuiverSpec& spec) {
  if (auto fam = std::get_if<FamilySpec>(&spec.body()))
    if (fam->orientation == Orientation::Zigzag && fam->even_sources && fam->prefix.empty() &&
        fam->tag != FamilyTag::CycleTilde && fam->tag != FamilyTag::Comb)
      return fam->tag;
  return std::nullopt;
}

bool family_source(FamilyTag family, const VertexId& x) {
  long i = std::stol(x);
  if (family == FamilyTag::DInf && i < 2) return false;
  return i % 2 == 0;
}

// Drawing column: sinks of Q at 2n, sources at 2n + 1. Both diagonals are monotone
// along arrows.
std::vector<long> family_potentials(FamilyTag family, long n, const VertexId& x) {
  long c = 2 * n + (family_source(family, x) ? 1 : 0);
  long i = std::stol(x);
  long r = family == FamilyTag::DInf ? std::max(i, 1L) : i;
  return {c + r, c - r};
}

}  // namespace detail

using detail::zigzag_family;
using detail::family_potentials;

namespace {

ARComponentModel rebuild_with_labels(const ARComponentModel& m, FamilyTag family) {
  // labels change the lookup index, so the model is rebuilt
  ARComponentModel out;
  out.shape = m.shape;
  out.window = m.window;
  out.family = family;
  out.partial = m.partial;
  out.notes = m.notes;
  for (auto v : m.vertices()) {
    if (v.reliable && v.dimvec)
      if (auto l = label_of_dimvec(family, *m.window, *v.dimvec)) v.label = l->to_string();
    out.add_vertex(v);
  }
  for (auto [a, b] : m.arrows()) out.add_arrow(a, b);
  return out;
}

}  // namespace

ARComponentModel knit_preprojective(const QuiverSpec& spec, int level, int depth, const KnitOptions& opts) {
  require_p1p2(spec);
  auto m = knit_preprojective(truncate_ptr(spec, level), depth, opts);
  if (auto fam = zigzag_family(spec)) return rebuild_with_labels(m, *fam);
  return m;
}

ARComponentModel knit_preinjective(const QuiverSpec& spec, int level, int depth, const KnitOptions& opts) {
  require_p1p2(spec);
  auto m = knit_preinjective(truncate_ptr(spec, level), depth, opts);
  if (auto fam = zigzag_family(spec)) return rebuild_with_labels(m, *fam);
  return m;
}

KnitValidation validate_knit(const ARComponentModel& model, const Field& f) {
  KnitValidation r;
  if (!model.window) throw PreconditionError("validate_knit needs a model with a window");
  const bool pre = model.shape == "preprojective";
  if (!pre && model.shape != "preinjective") throw PreconditionError("validate_knit applies to knitted components");
  // realizations per orbit, extended step by step
  std::map<VertexId, std::vector<std::optional<Representation>>> chain;
  auto realize = [&](const VertexId& x, long steps) -> std::optional<Representation> {
    auto& c = chain[x];
    if (c.empty()) {
      try {
        c.push_back(pre ? projective_rep(model.window, x, f, true) : injective_rep(model.window, x, f, true));
      } catch (const TruncationError&) {
        c.emplace_back();
      }
    }
    while (static_cast<long>(c.size()) <= steps) {
      const auto& last = c.back();
      if (!last) {
        c.emplace_back();
        continue;
      }
      try {
        c.push_back(pre ? tau_inv(*last) : tau(*last));
      } catch (const TruncationError&) {
        c.emplace_back();
      } catch (const PreconditionError&) {
        c.emplace_back();
      }
    }
    return c[steps];
  };
  for (const auto& v : model.vertices()) {
    if (!v.reliable || !v.dimvec) {
      ++r.skipped;
      continue;
    }
    long steps = pre ? v.n : -v.n;
    auto rep = realize(v.x, steps);
    if (!rep) {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if (rep->dims() != *v.dimvec) {
      r.mismatches.push_back(v.label + ": knitted " + rep->dimvec_string() + " vs linear algebra");
      continue;
    }
    bool end = pre ? is_injective(*rep) : is_projective(*rep);
    bool marked = pre ? v.injective : v.projective;
    if (end != marked) r.mismatches.push_back(v.label + ": " + (pre ? "injective" : "projective") + " mark disagrees");
  }
  return r;
}

std::vector<std::string> mesh_additivity_failures(const ARComponentModel& model) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < model.size(); ++v) {
    const auto& mv = model.vertex(v);
    auto t = model.tau(v);
    if (!t || !mv.dimvec || !model.vertex(*t).dimvec || mv.open_in || !mv.reliable) continue;
    DimVector lhs = *mv.dimvec;
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += (*model.vertex(*t).dimvec)[i];
    DimVector rhs(lhs.size(), 0);
    bool known = true;
    for (auto p : model.predecessors(v)) {
      if (!model.vertex(p).dimvec) {
        known = false;
        break;
      }
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += (*model.vertex(p).dimvec)[i];
    }
    if (known && lhs != rhs) out.push_back(mv.label);
  }
  return out;
}

// ---- hammocks --------------------------------------------------------------------------------

namespace {

std::vector<long> potentials(const ARComponentModel& m, std::size_t v) {
  const auto& mv = m.vertex(v);
  if (m.shape == "ray-grid") return {mv.n, mv.n - std::stol(mv.x.substr(1))};  // c and -r
  if (m.family && mv.component.rfind("ZA-inf", 0) != 0) return family_potentials(*m.family, mv.n, mv.x);
  if (mv.component.rfind("ZA-inf", 0) == 0) return {mv.n, mv.n + std::stol(mv.x)};
  return {mv.n};
}

bool dominated(const std::vector<long>& a, const std::vector<long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct Interval {
  std::vector<std::size_t> order;  // topological
  std::set<std::size_t> members;
};

Interval interval_of(const ARComponentModel& m, std::size_t x, std::size_t y) {
  if (m.vertex(x).component != m.vertex(y).component)
    throw PreconditionError("hammocks are computed inside one component: " + m.vertex(x).label + " and " +
                            m.vertex(y).label);
  const auto px = potentials(m, x), py = potentials(m, y);
  auto search = [&](std::size_t start, bool forward) {
    std::set<std::size_t> seen{start};
    std::deque<std::size_t> todo{start};
    while (!todo.empty()) {
      auto v = todo.front();
      todo.pop_front();
      for (auto w : forward ? m.successors(v) : m.predecessors(v)) {
        auto pw = potentials(m, w);
        if (forward ? !dominated(pw, py) : !dominated(px, pw)) continue;
        if (seen.insert(w).second) todo.push_back(w);
      }
    }
    return seen;
  };
  auto fwd = search(x, true), bwd = search(y, false);
  for (auto w : fwd) {
    if (!m.vertex(w).open_out) continue;
    for (auto u : bwd)
      // leaving at w and re-entering at w would close an oriented cycle
      if (u != w && m.vertex(u).open_in && dominated(potentials(m, w), potentials(m, u)))
        throw TruncationError("the hammock from " + m.vertex(x).label + " to " + m.vertex(y).label +
                              " may leave the window at " + m.vertex(w).label + " and return at " +
                              m.vertex(u).label + "; enlarge the window");
  }
  Interval iv;
  for (auto v : fwd)
    if (bwd.count(v)) iv.members.insert(v);
  // Kahn's algorithm on the induced subgraph
  std::map<std::size_t, std::size_t> indeg;
  for (auto v : iv.members) indeg[v] = 0;
  for (auto v : iv.members)
    for (auto w : m.successors(v))
      if (iv.members.count(w)) ++indeg[w];
  std::deque<std::size_t> ready;
  for (auto [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    iv.order.push_back(v);
    for (auto w : m.successors(v))
      if (iv.members.count(w) && --indeg[w] == 0) ready.push_back(w);
  }
  if (iv.order.size() != iv.members.size()) throw PreconditionError("component window contains an oriented cycle");
  return iv;
}

}  // namespace

std::vector<std::size_t> path_interval(const ARComponentModel& model, std::size_t x, std::size_t y) {
  return interval_of(model, x, y).order;
}

HammockResult hammock(const ARComponentModel& model, std::size_t x, std::size_t y) {
  auto iv = interval_of(model, x, y);
  HammockResult r;
  for (auto z : iv.order) {
    if (z == x) {
      r.values[z] = 1;
      continue;
    }
    long s = 0;
    for (auto p : model.predecessors(z))
      if (auto it = r.values.find(p); it != r.values.end()) s += static_cast<long>(it->second);
    if (auto t = model.tau(z))
      if (auto it = r.values.find(*t); it != r.values.end()) s -= static_cast<long>(it->second);
    if (s < 0) {
      r.clamps.push_back({z, s});
      s = 0;
    }
    r.values[z] = static_cast<std::size_t>(s);
  }
  if (auto it = r.values.find(y); it != r.values.end()) r.value = it->second;
  return r;
}

HammockResult hammock_backward(const ARComponentModel& model, std::size_t x, std::size_t y) {
  auto iv = interval_of(model, x, y);
  HammockResult r;
  for (auto it = iv.order.rbegin(); it != iv.order.rend(); ++it) {
    auto z = *it;
    if (z == y) {
      r.values[z] = 1;
      continue;
    }
    long s = 0;
    for (auto w : model.successors(z))
      if (auto jt = r.values.find(w); jt != r.values.end()) s += static_cast<long>(jt->second);
    if (auto t = model.tau_inv(z))
      if (auto jt = r.values.find(*t); jt != r.values.end()) s -= static_cast<long>(jt->second);
    if (s < 0) {
      r.clamps.push_back({z, s});
      s = 0;
    }
    r.values[z] = static_cast<std::size_t>(s);
  }
  if (auto it = r.values.find(x); it != r.values.end()) r.value = it->second;
  return r;
}

std::size_t hammock_hom_dim(const ARComponentModel& model, std::size_t x, std::size_t y) {
  auto r = hammock(model, x, y);
  if (!r.clamps.empty())
    throw CrossValidationError("hammock from " + model.vertex(x).label + " clamped a negative value at " +
                               model.vertex(r.clamps.front().vertex).label);
  return r.value;
}

ARComponentModel ray_grid_model(long columns, long rows) {
  if (columns < 1 || rows < 1) throw PreconditionError("the ray grid needs at least one row and one column");
  ARComponentModel m;
  m.shape = "ray-grid";
  m.notes.push_back("closed under predecessors: arrows leaving the top row never return");
  for (long c = 0; c < columns; ++c)
    for (long r = 0; r < rows; ++r) {
      ModelVertex v;
      v.component = "ray";
      v.n = c;
      v.x = "w" + std::to_string(c + r);
      v.label = (c == 0 ? "" : "tau^-" + std::to_string(c) + " ") + "P_" + v.x;
      v.projective = c == 0;
      v.open_in = r == rows - 1;
      v.open_out = c == columns - 1;
      m.add_vertex(std::move(v));
    }
  auto at = [&](long c, long r) { return *m.find("ray", c, "w" + std::to_string(c + r)); };
  for (long c = 0; c < columns; ++c)
    for (long r = 0; r < rows; ++r) {
      if (c + 1 < columns) m.add_arrow(at(c, r), at(c + 1, r));
      if (r > 0) m.add_arrow(at(c, r), at(c, r - 1));
    }
  return m;
}

std::size_t preproj_hom_dim_closed_form(long c, long r, long c2, long r2) { return c <= c2 && r >= r2 ? 1 : 0; }

}  // namespace arknit
