#include "arknit/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>

namespace arknit {

namespace {

std::string edge_label(const VertexId& s, const VertexId& t) { return s + "->" + t; }

// Canonical decimal integer (no leading zeros, no "+", "-0" rejected).
std::optional<long> parse_index(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string_view digits = s[0] == '-' ? s.substr(1) : s;
  if (digits.empty() || (digits.size() > 1 && digits[0] == '0')) return std::nullopt;
  if (s[0] == '-' && digits == "0") return std::nullopt;
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<long> strip_index(const std::string& prefix, const VertexId& v) {
  if (v.size() < prefix.size() || v.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  return parse_index(std::string_view(v).substr(prefix.size()));
}

// A vertex of an infinite family in structured form.
struct FamilyVertex {
  long index = 0;
  bool tooth = false;  // Comb only
};

std::optional<FamilyVertex> parse_family_vertex(const FamilySpec& f, const VertexId& v) {
  if (f.tag == FamilyTag::Comb) {
    for (bool tooth : {false, true}) {
      auto i = strip_index(f.prefix + (tooth ? "y" : "x"), v);
      if (i && *i >= f.start) return FamilyVertex{*i, tooth};
    }
    return std::nullopt;
  }
  auto i = strip_index(f.prefix, v);
  if (!i) return std::nullopt;
  switch (f.tag) {
    case FamilyTag::AInf:
      if (*i < f.start) return std::nullopt;
      break;
    case FamilyTag::ABiInf:
      break;
    case FamilyTag::DInf:
      if (*i < 0) return std::nullopt;
      break;
    case FamilyTag::CycleTilde:
      if (*i < 0 || *i >= f.cycle_length) return std::nullopt;
      break;
    case FamilyTag::Comb:
      break;
  }
  return FamilyVertex{*i, false};
}

VertexId family_name(const FamilySpec& f, const FamilyVertex& v) {
  if (f.tag == FamilyTag::Comb) return f.prefix + (v.tooth ? "y" : "x") + std::to_string(v.index);
  return f.prefix + std::to_string(v.index);
}

long family_distance(const FamilySpec& f, const FamilyVertex& v) {
  switch (f.tag) {
    case FamilyTag::AInf: return v.index - f.start;
    case FamilyTag::ABiInf: return std::labs(v.index);
    case FamilyTag::DInf: return v.index <= 2 ? 0 : v.index - 2;
    case FamilyTag::CycleTilde: return 0;
    case FamilyTag::Comb: return v.index - f.start + (v.tooth ? 1 : 0);
  }
  return 0;
}

// Direction of the edge {a, a+1} (or a fork edge) under a zigzag rule: true when a -> b.
bool zigzag_points(const FamilySpec& f, long a, long b) {
  auto even = [&](long i) {
    if (f.tag == FamilyTag::DInf && (i == 0 || i == 1)) return false;
    return i % 2 == 0;
  };
  bool a_source = even(a) == f.even_sources;
  (void)b;
  return a_source;
}

// Undirected edges of a family as ordered pairs (a, b) with `forward` telling whether a -> b.
struct FamilyEdge {
  FamilyVertex a;
  FamilyVertex b;
  bool forward;
};

std::vector<FamilyEdge> family_edges_at(const FamilySpec& f, const FamilyVertex& v) {
  std::vector<FamilyEdge> out;
  auto linear = [&](FamilyVertex a, FamilyVertex b) {
    bool fwd;
    if (f.orientation == Orientation::Zigzag)
      fwd = zigzag_points(f, a.index, b.index);
    else
      fwd = f.orientation == Orientation::LinearRight;
    out.push_back({a, b, fwd});
  };
  const long i = v.index;
  switch (f.tag) {
    case FamilyTag::AInf:
      if (i > f.start) linear({i - 1}, v);
      linear(v, {i + 1});
      break;
    case FamilyTag::ABiInf:
      linear({i - 1}, v);
      linear(v, {i + 1});
      break;
    case FamilyTag::DInf:
      if (i == 0 || i == 1) {
        // fork edge i -- 2; in linear orientations the fork points toward 2
        if (f.orientation == Orientation::Zigzag)
          out.push_back({v, {2}, !zigzag_points(f, 2, i)});
        else
          out.push_back({v, {2}, f.orientation == Orientation::LinearRight});
      } else {
        if (i == 2) {
          for (long k : {0L, 1L}) {
            if (f.orientation == Orientation::Zigzag)
              out.push_back({{k}, v, !zigzag_points(f, 2, k)});
            else
              out.push_back({{k}, v, f.orientation == Orientation::LinearRight});
          }
        } else {
          linear({i - 1}, v);
        }
        linear(v, {i + 1});
      }
      break;
    case FamilyTag::CycleTilde: {
      const long n = f.cycle_length;
      bool fwd = f.orientation == Orientation::LinearRight;
      if (n == 1) {
        out.push_back({v, v, fwd});
      } else {
        out.push_back({{(i + n - 1) % n}, v, fwd});
        out.push_back({v, {(i + 1) % n}, fwd});
      }
      break;
    }
    case FamilyTag::Comb: {
      bool teeth_out = f.orientation == Orientation::LinearRight;
      if (v.tooth) {
        out.push_back({{i, false}, v, teeth_out});
      } else {
        if (i > f.start) out.push_back({{i - 1, false}, v, true});
        out.push_back({v, {i + 1, false}, true});
        out.push_back({v, {i, true}, teeth_out});
      }
      break;
    }
  }
  return out;
}

// Adjacency in a uniform representation: the arrows of the full quiver touching v.
std::vector<Arrow> arrows_at(const QuiverSpec& spec, const VertexId& v) {
  std::vector<Arrow> out;
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) {
    for (const auto& a : fq->arrows)
      if (a.source == v || a.target == v) out.push_back(a);
    return out;
  }
  if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
    auto fv = parse_family_vertex(*f, v);
    if (!fv) return out;
    for (const auto& e : family_edges_at(*f, *fv)) {
      VertexId a = family_name(*f, e.a), b = family_name(*f, e.b);
      if (e.forward)
        out.push_back({a, b, edge_label(a, b)});
      else
        out.push_back({b, a, edge_label(b, a)});
    }
    return out;
  }
  const auto& c = std::get<CompositeSpec>(spec.body());
  for (const auto& a : c.base.arrows)
    if (a.source == v || a.target == v) out.push_back(a);
  for (const auto& r : c.rays) {
    VertexId first = r.prefix + std::to_string(r.first_index);
    if (r.attach == v) out.push_back({v, first, edge_label(v, first)});
    auto k = strip_index(r.prefix, v);
    if (k && *k >= r.first_index) {
      VertexId prev = *k == r.first_index ? r.attach : r.prefix + std::to_string(*k - 1);
      VertexId next = r.prefix + std::to_string(*k + 1);
      out.push_back({prev, v, edge_label(prev, v)});
      out.push_back({v, next, edge_label(v, next)});
    }
  }
  return out;
}

// Vertices at anchor distance <= level, in canonical order.
std::vector<VertexId> window_vertices(const QuiverSpec& spec, int level) {
  std::vector<VertexId> out;
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) return fq->vertices;
  if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
    switch (f->tag) {
      case FamilyTag::AInf:
        for (long i = f->start; i <= f->start + level; ++i) out.push_back(family_name(*f, {i}));
        break;
      case FamilyTag::ABiInf:
        for (long i = -level; i <= level; ++i) out.push_back(family_name(*f, {i}));
        break;
      case FamilyTag::DInf:
        for (long i = 0; i <= 2 + level; ++i) out.push_back(family_name(*f, {i}));
        break;
      case FamilyTag::CycleTilde:
        for (long i = 0; i < f->cycle_length; ++i) out.push_back(family_name(*f, {i}));
        break;
      case FamilyTag::Comb:
        for (long i = f->start; i <= f->start + level; ++i) {
          out.push_back(family_name(*f, {i, false}));
          if (i < f->start + level) out.push_back(family_name(*f, {i, true}));
        }
        break;
    }
    return out;
  }
  const auto& c = std::get<CompositeSpec>(spec.body());
  out = c.base.vertices;
  for (const auto& r : c.rays)
    for (int k = 0; k < level; ++k) out.push_back(r.prefix + std::to_string(r.first_index + k));
  return out;
}

bool finite_acyclic(const FiniteQuiver& q) {
  return TruncatedQuiver(q.vertices, [&] {
           std::unordered_map<VertexId, std::size_t> idx;
           for (std::size_t i = 0; i < q.vertices.size(); ++i) idx[q.vertices[i]] = i;
           std::vector<TruncatedArrow> arrows;
           for (const auto& a : q.arrows) arrows.push_back({idx.at(a.source), idx.at(a.target), a.label});
           return arrows;
         }())
      .is_acyclic();
}

bool finite_connected(const FiniteQuiver& q) {
  if (q.vertices.empty()) return false;
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (const auto& a : q.arrows) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::set<VertexId> seen{q.vertices.front()};
  std::vector<VertexId> stack{q.vertices.front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == q.vertices.size();
}

void validate_finite(const FiniteQuiver& q, const char* what) {
  std::set<VertexId> names;
  for (const auto& v : q.vertices) {
    if (v.empty()) throw ValidationError(std::string(what) + ": empty vertex name");
    if (!names.insert(v).second) throw ValidationError(std::string(what) + ": duplicate vertex '" + v + "'");
  }
  std::set<std::string> labels;
  for (const auto& a : q.arrows) {
    if (!names.count(a.source) || !names.count(a.target))
      throw ValidationError(std::string(what) + ": arrow '" + a.label + "' (" + a.source + " -> " +
                            a.target + ") has an undeclared endpoint");
    if (!labels.insert(a.label).second)
      throw ValidationError(std::string(what) + ": duplicate arrow label '" + a.label + "'");
  }
}

}  // namespace

QuiverSpec::QuiverSpec(FiniteQuiver q) : body_(std::move(q)) {}
QuiverSpec::QuiverSpec(FamilySpec f) : body_(std::move(f)) {}
QuiverSpec::QuiverSpec(CompositeSpec c) : body_(std::move(c)) {}

bool QuiverSpec::is_finite() const {
  if (std::holds_alternative<FiniteQuiver>(body_)) return true;
  if (auto* f = std::get_if<FamilySpec>(&body_)) return f->tag == FamilyTag::CycleTilde;
  return std::get<CompositeSpec>(body_).rays.empty();
}

std::string QuiverSpec::kind_name() const {
  switch (body_.index()) {
    case 0: return "finite";
    case 1: return "family";
    default: return "composite";
  }
}

void QuiverSpec::validate() const {
  if (auto* fq = std::get_if<FiniteQuiver>(&body_)) {
    validate_finite(*fq, "quiver");
    return;
  }
  if (auto* f = std::get_if<FamilySpec>(&body_)) {
    if (f->orientation == Orientation::Zigzag &&
        (f->tag == FamilyTag::CycleTilde || f->tag == FamilyTag::Comb))
      throw ValidationError("zigzag orientation is not defined for this family");
    if (f->tag == FamilyTag::CycleTilde && f->cycle_length < 1)
      throw ValidationError("cycle length must be positive");
    return;
  }
  const auto& c = std::get<CompositeSpec>(body_);
  validate_finite(c.base, "composite base");
  std::set<VertexId> base(c.base.vertices.begin(), c.base.vertices.end());
  std::set<std::string> prefixes;
  for (const auto& r : c.rays) {
    if (!base.count(r.attach)) throw ValidationError("ray attached at undeclared vertex '" + r.attach + "'");
    if (!prefixes.insert(r.prefix).second) throw ValidationError("two rays share the prefix '" + r.prefix + "'");
    for (const auto& v : c.base.vertices) {
      auto k = strip_index(r.prefix, v);
      if (k && *k >= r.first_index)
        throw ValidationError("ray with prefix '" + r.prefix + "' collides with base vertex '" + v + "'");
    }
  }
  for (const auto& p : prefixes)
    for (const auto& q : prefixes)
      if (p != q && q.size() > p.size() && q.compare(0, p.size(), p) == 0 &&
          parse_index(std::string_view(q).substr(p.size())).has_value())
        throw ValidationError("ray prefixes '" + p + "' and '" + q + "' overlap");
}

QuiverSpec finite_quiver(std::vector<VertexId> vertices,
                         std::vector<std::pair<VertexId, VertexId>> arrows) {
  FiniteQuiver q;
  q.vertices = std::move(vertices);
  std::map<std::string, int> seen;
  for (auto& [s, t] : arrows) {
    std::string label = edge_label(s, t);
    int n = seen[label]++;
    if (n > 0) label += "#" + std::to_string(n + 1);
    q.arrows.push_back({s, t, label});
  }
  QuiverSpec spec(std::move(q));
  spec.validate();
  return spec;
}

QuiverSpec linear_a(int n) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> as;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(std::to_string(i));
    if (i > 1) as.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return finite_quiver(vs, as);
}

QuiverSpec family(FamilyTag tag, Orientation o, std::string prefix) {
  FamilySpec f;
  f.tag = tag;
  f.orientation = o;
  f.prefix = std::move(prefix);
  QuiverSpec s(f);
  s.validate();
  return s;
}

QuiverSpec zigzag_a_biinf() { return family(FamilyTag::ABiInf, Orientation::Zigzag); }
QuiverSpec zigzag_d_inf() { return family(FamilyTag::DInf, Orientation::Zigzag); }

QuiverSpec cyclic_quiver(int n) {
  FamilySpec f;
  f.tag = FamilyTag::CycleTilde;
  f.cycle_length = n;
  QuiverSpec s(f);
  s.validate();
  return s;
}

QuiverSpec comb_quiver(bool teeth_out) {
  return family(FamilyTag::Comb, teeth_out ? Orientation::LinearRight : Orientation::LinearLeft);
}

TruncatedQuiver::TruncatedQuiver(std::vector<VertexId> vertices, std::vector<TruncatedArrow> arrows,
                                 int level, std::vector<bool> open_out, std::vector<bool> open_in)
    : vertices_(std::move(vertices)),
      arrows_(std::move(arrows)),
      level_(level),
      open_out_(std::move(open_out)),
      open_in_(std::move(open_in)) {
  const std::size_t n = vertices_.size();
  if (open_out_.empty()) open_out_.assign(n, false);
  if (open_in_.empty()) open_in_.assign(n, false);
  if (open_out_.size() != n || open_in_.size() != n) throw ValidationError("boundary flags do not match vertices");
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(vertices_[i], i).second) throw ValidationError("duplicate vertex '" + vertices_[i] + "'");
  out_.assign(n, {});
  in_.assign(n, {});
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].source >= n || arrows_[a].target >= n)
      throw ValidationError("arrow '" + arrows_[a].label + "' has an endpoint outside the quiver");
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
  }
}

std::size_t TruncatedQuiver::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw PreconditionError("vertex '" + v + "' is not in the quiver window");
  return it->second;
}

std::optional<std::size_t> TruncatedQuiver::arrow_index(const std::string& label) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].label == label) return a;
  return std::nullopt;
}

bool TruncatedQuiver::closed() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (open_in_[i] || open_out_[i]) return false;
  return true;
}

std::vector<std::size_t> TruncatedQuiver::topological_order() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indeg(n, 0), order;
  for (const auto& a : arrows_) ++indeg[a.target];
  // smallest index first, for determinism
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (auto a : out_[v])
      if (--indeg[arrows_[a].target] == 0) ready.insert(arrows_[a].target);
  }
  if (order.size() != n) throw PreconditionError("quiver has an oriented cycle");
  return order;
}

bool TruncatedQuiver::is_acyclic() const {
  try {
    topological_order();
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

FiniteQuiver TruncatedQuiver::as_finite() const {
  FiniteQuiver q;
  q.vertices = vertices_;
  for (const auto& a : arrows_) q.arrows.push_back({vertices_[a.source], vertices_[a.target], a.label});
  return q;
}

TruncatedQuiver truncate(const QuiverSpec& spec, int level) {
  if (level < 0) throw PreconditionError("truncation level must be non-negative");
  spec.validate();
  std::vector<VertexId> vs = window_vertices(spec, level);
  std::unordered_map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
  std::vector<TruncatedArrow> arrows;
  std::vector<bool> open_out(vs.size(), false), open_in(vs.size(), false);

  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) {
    for (const auto& a : fq->arrows) arrows.push_back({idx.at(a.source), idx.at(a.target), a.label});
    return TruncatedQuiver(vs, std::move(arrows), level, open_out, open_in);
  }
  std::set<std::string> emitted;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (const auto& a : arrows_at(spec, vs[i])) {
      bool s_in = idx.count(a.source), t_in = idx.count(a.target);
      if (s_in && t_in) {
        if (a.source == vs[i] && emitted.insert(a.label).second)
          arrows.push_back({idx.at(a.source), idx.at(a.target), a.label});
      } else if (a.source == vs[i]) {
        open_out[i] = true;
      } else {
        open_in[i] = true;
      }
    }
  }
  return TruncatedQuiver(vs, std::move(arrows), level, open_out, open_in);
}

QuiverPtr truncate_ptr(const QuiverSpec& spec, int level) {
  return std::make_shared<const TruncatedQuiver>(truncate(spec, level));
}

QuiverPtr make_quiver(const FiniteQuiver& q) { return truncate_ptr(QuiverSpec(q), 0); }

std::optional<int> anchor_distance(const QuiverSpec& spec, const VertexId& v) {
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) {
    if (std::find(fq->vertices.begin(), fq->vertices.end(), v) == fq->vertices.end()) return std::nullopt;
    return 0;
  }
  if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
    auto fv = parse_family_vertex(*f, v);
    if (!fv) return std::nullopt;
    return static_cast<int>(family_distance(*f, *fv));
  }
  const auto& c = std::get<CompositeSpec>(spec.body());
  if (std::find(c.base.vertices.begin(), c.base.vertices.end(), v) != c.base.vertices.end()) return 0;
  for (const auto& r : c.rays) {
    auto k = strip_index(r.prefix, v);
    if (k && *k >= r.first_index) return static_cast<int>(*k - r.first_index + 1);
  }
  return std::nullopt;
}

bool check_p1(const QuiverSpec& spec) {
  spec.validate();
  return true;
}

bool check_p2(const QuiverSpec& spec) {
  spec.validate();
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) return finite_acyclic(*fq);
  if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
    switch (f->tag) {
      case FamilyTag::CycleTilde: return false;
      case FamilyTag::Comb: return true;
      case FamilyTag::AInf:
      case FamilyTag::DInf:
        // LinearRight points away from the finite end; LinearLeft builds ... -> x1 -> x0.
        return f->orientation != Orientation::LinearLeft;
      case FamilyTag::ABiInf:
        return f->orientation == Orientation::Zigzag;
    }
  }
  // rays point away from the base, so only the base can carry a backward-infinite path
  return finite_acyclic(std::get<CompositeSpec>(spec.body()).base);
}

namespace {

// Vertices lying on some path from -> to.
std::vector<bool> between(const TruncatedQuiver& q, std::size_t from, std::size_t to) {
  const std::size_t n = q.vertex_count();
  auto sweep = [&](std::size_t start, bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      const auto& arrows = forward ? q.out_arrows(v) : q.in_arrows(v);
      for (auto a : arrows) {
        std::size_t w = forward ? q.arrows()[a].target : q.arrows()[a].source;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  auto fwd = sweep(from, true), bwd = sweep(to, false);
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fwd[i] && bwd[i];
  return out;
}

// Topological order of the sub-quiver on `keep`; throws when it contains a cycle.
std::vector<std::size_t> restricted_order(const TruncatedQuiver& q, const std::vector<bool>& keep) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> indeg(n, 0), order;
  for (const auto& a : q.arrows())
    if (keep[a.source] && keep[a.target]) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i] && indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto a : q.out_arrows(v)) {
      std::size_t w = q.arrows()[a].target;
      if (keep[w] && --indeg[w] == 0) ready.push_back(w);
    }
  }
  std::size_t kept = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
  if (order.size() != kept) throw PreconditionError("infinitely many paths: an oriented cycle lies between the endpoints");
  return order;
}

}  // namespace

std::vector<Path> enumerate_paths(const TruncatedQuiver& q, const VertexId& from, const VertexId& to) {
  std::size_t s = q.index_of(from), t = q.index_of(to);
  auto keep = between(q, s, t);
  if (!keep[s]) return {};
  restricted_order(q, keep);

  std::vector<Path> out;
  std::vector<std::size_t> trail;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == t) out.push_back({from, to, trail});
    for (auto a : q.out_arrows(v)) {
      std::size_t w = q.arrows()[a].target;
      if (!keep[w]) continue;
      trail.push_back(a);
      walk(w);
      trail.pop_back();
    }
  };
  walk(s);
  std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) {
    return std::lexicographical_compare(
        x.arrows.begin(), x.arrows.end(), y.arrows.begin(), y.arrows.end(),
        [&](std::size_t a, std::size_t b) { return q.arrows()[a].label < q.arrows()[b].label; });
  });
  return out;
}

std::size_t count_paths(const TruncatedQuiver& q, std::size_t from, std::size_t to) {
  auto keep = between(q, from, to);
  if (!keep[from]) return 0;
  auto order = restricted_order(q, keep);
  std::vector<std::size_t> ways(q.vertex_count(), 0);
  ways[from] = 1;
  for (auto v : order)
    for (auto a : q.out_arrows(v)) {
      std::size_t w = q.arrows()[a].target;
      if (keep[w]) ways[w] += ways[v];
    }
  return ways[to];
}

namespace {

// Paths ending at (or starting at) x inside a window.
std::size_t count_all(const TruncatedQuiver& q, std::size_t x, bool ending) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) total += ending ? count_paths(q, v, x) : count_paths(q, x, v);
  return total;
}

// count(L) == count(L+1) on distance balls implies stability forever: a path leaving ball L
// has a final excursion that starts at distance exactly L+1.
StabilizedCount stabilize(const QuiverSpec& spec, const VertexId& x, int budget, bool ending) {
  auto d = anchor_distance(spec, x);
  if (!d) throw PreconditionError("vertex '" + x + "' does not belong to the quiver");
  std::optional<std::size_t> prev;
  int first_level = *d;
  for (int level = *d; level <= budget; ++level) {
    TruncatedQuiver q = truncate(spec, level);
    std::size_t c;
    try {
      c = count_all(q, q.index_of(x), ending);
    } catch (const PreconditionError&) {
      throw TruncationError("possible (P2) violation: oriented cycle through paths at '" + x + "'");
    }
    if (spec.is_finite()) return {c, level, level};
    if (prev && *prev == c) return {c, first_level, level};
    if (!prev || *prev != c) first_level = level;
    prev = c;
  }
  throw TruncationError("possible (P2) violation: path count at '" + x + "' did not stabilize within level " +
                        std::to_string(budget));
}

}  // namespace

StabilizedCount count_paths_ending_at(const QuiverSpec& spec, const VertexId& x, int level_budget) {
  return stabilize(spec, x, level_budget, true);
}

StabilizedCount count_paths_starting_at(const QuiverSpec& spec, const VertexId& x, int level_budget) {
  return stabilize(spec, x, level_budget, false);
}

bool is_connected(const QuiverSpec& spec) {
  spec.validate();
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) return finite_connected(*fq);
  if (std::holds_alternative<FamilySpec>(spec.body())) return true;
  return finite_connected(std::get<CompositeSpec>(spec.body()).base);
}

bool is_strongly_locally_finite(const QuiverSpec& spec) {
  spec.validate();
  if (auto* fq = std::get_if<FiniteQuiver>(&spec.body())) return finite_acyclic(*fq);
  if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
    // zigzags have paths of length at most one; every other family contains a linear half-line
    return f->orientation == Orientation::Zigzag;
  }
  const auto& c = std::get<CompositeSpec>(spec.body());
  return c.rays.empty() && finite_acyclic(c.base);
}

StarDecision is_star(const QuiverSpec& spec) {
  spec.validate();
  if (!is_connected(spec)) throw PreconditionError("quiver is not connected");
  if (!check_p2(spec)) {
    std::string witness;
    if (auto* f = std::get_if<FamilySpec>(&spec.body())) {
      if (f->tag == FamilyTag::CycleTilde)
        witness = "oriented cycle through " + family_name(*f, {0});
      else
        witness = "infinite path ending at " + family_name(*f, {f->tag == FamilyTag::DInf ? 2 : f->start});
    } else {
      witness = "oriented cycle in the finite part";
    }
    throw PreconditionError("(P2) violated: " + witness);
  }
  StarDecision d;
  if (std::holds_alternative<FiniteQuiver>(spec.body())) {
    d.is_star = true;
    d.core = spec;
    return d;
  }
  if (auto* c = std::get_if<CompositeSpec>(&spec.body())) {
    d.is_star = true;
    d.core = QuiverSpec(c->base);
    d.rays = c->rays;
    return d;
  }
  const auto& f = std::get<FamilySpec>(spec.body());
  if (f.orientation == Orientation::Zigzag) {
    d.is_star = true;
    d.core = spec;
    return d;
  }
  if (f.tag == FamilyTag::AInf && f.orientation == Orientation::LinearRight) {
    VertexId x0 = family_name(f, {f.start});
    d.is_star = true;
    d.core = QuiverSpec(FiniteQuiver{{x0}, {}});
    d.rays.push_back({x0, f.prefix, f.start + 1});
    return d;
  }
  if (f.tag == FamilyTag::DInf && f.orientation == Orientation::LinearRight) {
    VertexId v0 = family_name(f, {0}), v1 = family_name(f, {1}), v2 = family_name(f, {2});
    d.is_star = true;
    d.core = QuiverSpec(FiniteQuiver{{v0, v1, v2}, {{v0, v2, edge_label(v0, v2)}, {v1, v2, edge_label(v1, v2)}}});
    d.rays.push_back({v2, f.prefix, 3});
    return d;
  }
  if (f.tag == FamilyTag::Comb) {
    d.is_star = false;
    d.obstruction =
        "every spine vertex " + f.prefix + "x<n> carries an extra arrow to or from " + f.prefix +
        "y<n>; no tail of the infinite path " + family_name(f, {f.start, false}) +
        " -> ... is a ray, so the core would contain the whole spine and P_" + family_name(f, {f.start, false}) +
        " has infinite length";
    return d;
  }
  throw PreconditionError("star decision is not defined for this family");
}

QuiverSpec assemble_star(const StarDecision& d) {
  if (!d.is_star || !d.core) throw PreconditionError("not a star decomposition");
  if (d.rays.empty()) return *d.core;
  auto* base = std::get_if<FiniteQuiver>(&d.core->body());
  if (!base) throw PreconditionError("rays can only be attached to a finite core");
  QuiverSpec s(CompositeSpec{*base, d.rays});
  s.validate();
  return s;
}

FiniteQuiver opposite(const FiniteQuiver& q) {
  FiniteQuiver o;
  o.vertices = q.vertices;
  for (const auto& a : q.arrows) o.arrows.push_back({a.target, a.source, a.label});
  return o;
}

}  // namespace arknit
