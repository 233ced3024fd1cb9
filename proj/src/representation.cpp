#include "arknit/replin.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace arknit {

Representation::Representation(QuiverPtr quiver, Field field, DimVector dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  validate();
}

Representation Representation::zero(QuiverPtr quiver, Field field) {
  DimVector dims(quiver->vertex_count(), 0);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) maps.emplace_back(field, 0, 0);
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

void Representation::validate() const {
  if (!quiver_) throw ValidationError("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) throw ValidationError("dimension vector does not match the quiver");
  if (maps_.size() != quiver_->arrow_count()) throw ValidationError("arrow map count does not match the quiver");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = quiver_->arrows()[a];
    const Matrix& m = maps_[a];
    if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source])
      throw ValidationError("arrow '" + arrow.label + "' needs a " + std::to_string(dims_[arrow.target]) + "x" +
                            std::to_string(dims_[arrow.source]) + " matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
    if (!(m.field() == field_)) throw ValidationError("arrow '" + arrow.label + "' uses a different field");
  }
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::vector<std::size_t> Representation::support() const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (dims_[v]) s.push_back(v);
  return s;
}

std::string Representation::dimvec_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto v : support()) {
    os << (first ? "" : " ") << quiver_->vertices()[v] << ":" << dims_[v];
    first = false;
  }
  return first ? "0" : os.str();
}

bool same_quiver(const Representation& x, const Representation& y) {
  return x.quiver_ptr() == y.quiver_ptr() || x.quiver().same_shape(y.quiver());
}

namespace {

void require_same(const Representation& x, const Representation& y, const char* what) {
  if (!same_quiver(x, y)) throw ValidationError(std::string(what) + ": representations live on different quivers");
  if (!(x.field() == y.field())) throw ValidationError(std::string(what) + ": representations use different fields");
}

}  // namespace

bool Morphism::is_intertwining() const {
  const auto& q = source.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (target.map(a) * components[arrow.source] != components[arrow.target] * source.map(a)) return false;
  }
  return true;
}

bool Morphism::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Matrix& m) { return m.is_zero(); });
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& m : components) r += m.rank();
  return r;
}

bool Morphism::is_iso() const {
  return source.dims() == target.dims() && rank() == source.total_dim();
}

bool Morphism::is_mono() const { return rank() == source.total_dim(); }
bool Morphism::is_epi() const { return rank() == target.total_dim(); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.source.dims() != f.target.dims()) throw ValidationError("compose: middle objects differ");
  Morphism h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

Morphism identity_morphism(const Representation& x) {
  Morphism m{x, x, {}};
  for (auto d : x.dims()) m.components.push_back(Matrix::identity(x.field(), d));
  return m;
}

Morphism zero_morphism(const Representation& x, const Representation& y) {
  require_same(x, y, "zero_morphism");
  Morphism m{x, y, {}};
  for (std::size_t v = 0; v < x.dims().size(); ++v) m.components.emplace_back(x.field(), y.dim(v), x.dim(v));
  return m;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h = f;
  for (std::size_t v = 0; v < h.components.size(); ++v) h.components[v] = f.components[v] + g.components[v];
  return h;
}

Morphism scale(const Morphism& f, const Scalar& c) {
  Morphism h = f;
  for (auto& m : h.components) m = m.scaled(c);
  return h;
}

Morphism combine(const std::vector<Morphism>& fs, const std::vector<Scalar>& cs) {
  if (fs.empty() || fs.size() != cs.size()) throw ValidationError("combine: bad arguments");
  Morphism h = scale(fs[0], cs[0]);
  for (std::size_t i = 1; i < fs.size(); ++i) h = add(h, scale(fs[i], cs[i]));
  return h;
}

// ---- standard objects ----------------------------------------------------------------

namespace {

std::vector<bool> reach(const TruncatedQuiver& q, std::size_t start, bool forward) {
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (auto a : forward ? q.out_arrows(v) : q.in_arrows(v)) {
      std::size_t w = forward ? q.arrows()[a].target : q.arrows()[a].source;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

using PathIndex = std::map<std::vector<std::size_t>, std::size_t>;

}  // namespace

std::vector<Path> projective_basis(const TruncatedQuiver& q, std::size_t x, std::size_t y) {
  return enumerate_paths(q, q.vertices()[x], q.vertices()[y]);
}

std::vector<Path> injective_basis(const TruncatedQuiver& q, std::size_t x, std::size_t y) {
  return enumerate_paths(q, q.vertices()[y], q.vertices()[x]);
}

Representation projective_rep(const QuiverPtr& qp, const VertexId& xname, const Field& f, bool strict) {
  const auto& q = *qp;
  std::size_t x = q.index_of(xname);
  auto seen = reach(q, x, true);
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (strict && seen[v] && q.open_out(v))
      throw TruncationError("projective P_" + xname + " leaves the window at vertex " + q.vertices()[v],
                            q.level() + 1);
  std::vector<PathIndex> index(q.vertex_count());
  DimVector dims(q.vertex_count(), 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (!seen[v]) continue;
    auto paths = projective_basis(q, x, v);
    dims[v] = paths.size();
    for (std::size_t i = 0; i < paths.size(); ++i) index[v][paths[i].arrows] = i;
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    for (const auto& [path, col] : index[arrow.source]) {
      auto longer = path;
      longer.push_back(a);
      m(index[arrow.target].at(longer), col) = f.one();
    }
    maps.push_back(std::move(m));
  }
  return Representation(qp, f, std::move(dims), std::move(maps));
}

Representation injective_rep(const QuiverPtr& qp, const VertexId& xname, const Field& f, bool strict) {
  const auto& q = *qp;
  std::size_t x = q.index_of(xname);
  auto seen = reach(q, x, false);
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (strict && seen[v] && q.open_in(v))
      throw TruncationError("injective I_" + xname + " leaves the window at vertex " + q.vertices()[v],
                            q.level() + 1);
  std::vector<PathIndex> index(q.vertex_count());
  DimVector dims(q.vertex_count(), 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (!seen[v]) continue;
    auto paths = injective_basis(q, x, v);
    dims[v] = paths.size();
    for (std::size_t i = 0; i < paths.size(); ++i) index[v][paths[i].arrows] = i;
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    // p* with p = a.q maps to q*; other dual basis vectors map to zero
    for (const auto& [path, col] : index[arrow.source]) {
      if (path.empty() || path.front() != a) continue;
      std::vector<std::size_t> rest(path.begin() + 1, path.end());
      m(index[arrow.target].at(rest), col) = f.one();
    }
    maps.push_back(std::move(m));
  }
  return Representation(qp, f, std::move(dims), std::move(maps));
}

Representation simple_rep(const QuiverPtr& qp, const VertexId& xname, const Field& f) {
  std::size_t x = qp->index_of(xname);
  DimVector dims(qp->vertex_count(), 0);
  dims[x] = 1;
  std::vector<Matrix> maps;
  for (const auto& arrow : qp->arrows()) maps.emplace_back(f, dims[arrow.target], dims[arrow.source]);
  return Representation(qp, f, std::move(dims), std::move(maps));
}

Morphism path_morphism(const Representation& px, const VertexId& xname, const Representation& py,
                       const VertexId& yname, const std::vector<Path>& paths, const std::vector<Scalar>& coeffs) {
  require_same(px, py, "path_morphism");
  if (paths.size() != coeffs.size()) throw ValidationError("path_morphism: coefficient count mismatch");
  const auto& q = px.quiver();
  std::size_t x = q.index_of(xname), y = q.index_of(yname);
  for (const auto& p : paths)
    if (p.source != yname || p.target != xname) throw ValidationError("path_morphism: path has wrong endpoints");
  Morphism m = zero_morphism(px, py);
  for (std::size_t z = 0; z < q.vertex_count(); ++z) {
    if (px.dim(z) == 0) continue;
    auto from = projective_basis(q, x, z);
    auto to = projective_basis(q, y, z);
    PathIndex idx;
    for (std::size_t i = 0; i < to.size(); ++i) idx[to[i].arrows] = i;
    for (std::size_t col = 0; col < from.size(); ++col)
      for (std::size_t k = 0; k < paths.size(); ++k) {
        auto joined = paths[k].arrows;
        joined.insert(joined.end(), from[col].arrows.begin(), from[col].arrows.end());
        auto it = idx.find(joined);
        if (it == idx.end()) throw TruncationError("path_morphism: P_" + yname + " is truncated");
        m.components[z](it->second, col) += coeffs[k];
      }
  }
  return m;
}

Morphism radical_of_projective(const QuiverPtr& qp, const VertexId& xname, const Field& f) {
  const auto& q = *qp;
  std::size_t x = q.index_of(xname);
  Representation px = projective_rep(qp, xname, f);
  std::vector<Representation> parts;
  std::vector<Morphism> maps;
  for (auto a : q.out_arrows(x)) {
    const VertexId& y = q.vertices()[q.arrows()[a].target];
    Representation py = projective_rep(qp, y, f);
    maps.push_back(path_morphism(py, y, px, xname, {Path{xname, y, {a}}}, {f.one()}));
    parts.push_back(std::move(py));
  }
  if (parts.empty()) return zero_morphism(Representation::zero(qp, f), px);
  DirectSum ds = direct_sum(parts);
  Morphism inc = zero_morphism(ds.sum, px);
  for (std::size_t i = 0; i < maps.size(); ++i) inc = add(inc, compose(maps[i], ds.projections[i]));
  return inc;
}

// ---- constructions -------------------------------------------------------------------

DirectSum direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw ValidationError("direct sum of no representations");
  for (const auto& p : parts) require_same(parts[0], p, "direct_sum");
  const auto& q = parts[0].quiver();
  const Field f = parts[0].field();
  DimVector dims(q.vertex_count(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(a));
    maps.push_back(block_diagonal(f, blocks));
  }
  DirectSum ds{Representation(parts[0].quiver_ptr(), f, dims, std::move(maps)), {}, {}};
  std::vector<std::size_t> offset(q.vertex_count(), 0);
  for (const auto& p : parts) {
    Morphism inc = zero_morphism(p, ds.sum), proj = zero_morphism(ds.sum, p);
    for (std::size_t v = 0; v < dims.size(); ++v) {
      for (std::size_t i = 0; i < p.dim(v); ++i) {
        inc.components[v](offset[v] + i, i) = f.one();
        proj.components[v](i, offset[v] + i) = f.one();
      }
      offset[v] += p.dim(v);
    }
    ds.inclusions.push_back(std::move(inc));
    ds.projections.push_back(std::move(proj));
  }
  return ds;
}

Representation direct_sum_rep(const std::vector<Representation>& parts) { return direct_sum(parts).sum; }

Morphism subrepresentation(const Representation& x, const std::vector<Matrix>& bases) {
  const auto& q = x.quiver();
  const Field f = x.field();
  DimVector dims(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = bases[v].cols();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix image = x.map(a) * bases[arrow.source];
    auto m = bases[arrow.target].solve(image);
    if (!m) throw ValidationError("subspace is not stable under arrow '" + arrow.label + "'");
    maps.push_back(std::move(*m));
  }
  Representation sub(x.quiver_ptr(), f, std::move(dims), std::move(maps));
  return Morphism{std::move(sub), x, bases};
}

Morphism quotient(const Representation& x, const std::vector<Matrix>& bases) {
  const auto& q = x.quiver();
  const Field f = x.field();
  std::vector<Matrix> complements, projections;
  DimVector dims(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::size_t d = x.dim(v), k = bases[v].cols();
    Matrix aug = bases[v].hstack(Matrix::identity(f, d));
    auto piv = aug.rref().pivots;
    if (piv.size() != d || (k > 0 && piv[k - 1] != k - 1))
      throw ValidationError("quotient: subspace basis is not independent");
    Matrix comp(f, d, d - k);
    for (std::size_t i = k; i < d; ++i) comp(piv[i] - k, i - k) = f.one();
    Matrix full = bases[v].hstack(comp);
    Matrix inv = *full.inverse();
    projections.push_back(inv.block(k, 0, d - k, d));
    complements.push_back(std::move(comp));
    dims[v] = d - k;
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    // stability: the image of the subspace must die in the quotient
    if (!(projections[arrow.target] * x.map(a) * bases[arrow.source]).is_zero())
      throw ValidationError("quotient: subspace is not stable under arrow '" + arrow.label + "'");
    maps.push_back(projections[arrow.target] * x.map(a) * complements[arrow.source]);
  }
  Representation quo(x.quiver_ptr(), f, std::move(dims), std::move(maps));
  return Morphism{x, std::move(quo), std::move(projections)};
}

Morphism kernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components) bases.push_back(c.nullspace());
  return subrepresentation(f.source, bases);
}

Morphism image(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components) bases.push_back(c.column_basis());
  return subrepresentation(f.target, bases);
}

Morphism cokernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components) bases.push_back(c.column_basis());
  return quotient(f.target, bases);
}

namespace {

std::vector<Matrix> radical_bases(const Representation& x) {
  const auto& q = x.quiver();
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix span(x.field(), x.dim(v), 0);
    for (auto a : q.in_arrows(v)) span = span.hstack(x.map(a));
    bases.push_back(span.column_basis());
  }
  return bases;
}

}  // namespace

Morphism radical(const Representation& x) { return subrepresentation(x, radical_bases(x)); }
Morphism top(const Representation& x) { return quotient(x, radical_bases(x)); }

Morphism socle(const Representation& x) {
  const auto& q = x.quiver();
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix stack(x.field(), 0, x.dim(v));
    for (auto a : q.out_arrows(v)) stack = stack.vstack(x.map(a));
    bases.push_back(stack.nullspace());
  }
  return subrepresentation(x, bases);
}

QuiverPtr opposite_window(const QuiverPtr& qp) {
  const auto& q = *qp;
  std::vector<TruncatedArrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.target, a.source, a.label});
  std::vector<bool> out(q.vertex_count()), in(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out[v] = q.open_in(v);
    in[v] = q.open_out(v);
  }
  return std::make_shared<const TruncatedQuiver>(q.vertices(), std::move(arrows), q.level(), out, in);
}

namespace {

void require_opposite(const TruncatedQuiver& q, const TruncatedQuiver& op) {
  bool ok = q.vertices() == op.vertices() && q.arrow_count() == op.arrow_count();
  for (std::size_t a = 0; ok && a < q.arrow_count(); ++a)
    ok = q.arrows()[a].source == op.arrows()[a].target && q.arrows()[a].target == op.arrows()[a].source;
  if (!ok) throw ValidationError("dual: window is not the opposite quiver");
}

}  // namespace

Representation dual(const Representation& x, const QuiverPtr& op) {
  require_opposite(x.quiver(), *op);
  std::vector<Matrix> maps;
  for (const auto& m : x.maps()) maps.push_back(m.transpose());
  return Representation(op, x.field(), x.dims(), std::move(maps));
}

Morphism dual(const Morphism& f, const QuiverPtr& op) {
  Morphism d{dual(f.target, op), dual(f.source, op), {}};
  for (const auto& c : f.components) d.components.push_back(c.transpose());
  return d;
}

Representation transport(const Representation& x, const QuiverPtr& window) {
  const auto& from = x.quiver();
  const auto& to = *window;
  DimVector dims(to.vertex_count(), 0);
  for (auto v : x.support()) {
    const auto& name = from.vertices()[v];
    if (!to.contains(name)) throw TruncationError("support vertex " + name + " is outside the target window");
    dims[to.index_of(name)] = x.dim(v);
  }
  std::vector<Matrix> maps;
  for (const auto& arrow : to.arrows()) {
    std::size_t ds = dims[arrow.source], dt = dims[arrow.target];
    if (ds && dt) {
      auto a = from.arrow_index(arrow.label);
      if (!a) throw ValidationError("transport: arrow '" + arrow.label + "' missing in the source window");
      maps.push_back(x.map(*a));
    } else {
      maps.emplace_back(x.field(), dt, ds);
    }
  }
  return Representation(window, x.field(), std::move(dims), std::move(maps));
}

}  // namespace arknit
