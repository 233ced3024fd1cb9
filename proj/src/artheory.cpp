#include "arknit/artheory.hpp"

#include <algorithm>

namespace arknit {

namespace {

void require_acyclic(const Representation& x, const char* what) {
  if (!x.quiver().is_acyclic()) throw PreconditionError(std::string(what) + " needs an acyclic quiver");
}

// The linear map X_p: X_{source} -> X_{target} along a path.
Matrix along(const Representation& x, const Path& p) {
  const auto& q = x.quiver();
  Matrix m = Matrix::identity(x.field(), x.dim(q.index_of(p.source)));
  for (auto a : p.arrows) m = x.map(a) * m;
  return m;
}

std::optional<Representation> closed_projective(const QuiverPtr& q, const VertexId& y, const Field& f) {
  try {
    return projective_rep(q, y, f, true);
  } catch (const TruncationError&) {
    return std::nullopt;
  }
}

std::optional<Representation> closed_injective(const QuiverPtr& q, const VertexId& y, const Field& f) {
  try {
    return injective_rep(q, y, f, true);
  } catch (const TruncationError&) {
    return std::nullopt;
  }
}

// Rank of the pairing (f, g) -> (f . g)_y(0, 0) for g: E -> X, f: X -> E, with End(E) = k.
std::size_t pairing_rank(const std::vector<Morphism>& into, const std::vector<Morphism>& out_of, std::size_t y) {
  if (into.empty() || out_of.empty()) return 0;
  const Field f = into[0].source.field();
  Matrix b(f, out_of.size(), into.size());
  for (std::size_t i = 0; i < out_of.size(); ++i)
    for (std::size_t j = 0; j < into.size(); ++j) b(i, j) = (out_of[i].components[y] * into[j].components[y])(0, 0);
  return b.rank();
}

DimVector add_dims(DimVector a, const DimVector& b, std::size_t times = 1) {
  for (std::size_t v = 0; v < a.size(); ++v) a[v] += times * b[v];
  return a;
}

struct Cover {
  std::vector<VertexId> vertices;
  std::vector<Representation> parts;
  Representation sum;
  Morphism map;  // sum -> X
};

// P_0 -> X sending the generator of each P_v to a lift of a top basis vector at v.
Cover cover_by_projectives(const Representation& x) {
  const auto& q = x.quiver();
  const Field f = x.field();
  Cover c;
  auto t = top(x);
  std::vector<std::pair<std::size_t, std::size_t>> gens;  // (vertex, coordinate)
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (t.target.dim(v) == 0) continue;
    for (auto p : t.components[v].rref().pivots) gens.push_back({v, p});
  }
  if (gens.empty()) {
    c.sum = Representation::zero(x.quiver_ptr(), f);
    c.map = zero_morphism(c.sum, x);
    return c;
  }
  std::vector<Morphism> pieces;
  for (auto [v, coord] : gens) {
    const VertexId& name = q.vertices()[v];
    Representation p = projective_rep(x.quiver_ptr(), name, f, false);
    Morphism m = zero_morphism(p, x);
    for (std::size_t z = 0; z < q.vertex_count(); ++z) {
      if (p.dim(z) == 0) continue;
      auto paths = projective_basis(q, v, z);
      for (std::size_t col = 0; col < paths.size(); ++col) {
        Matrix image = along(x, paths[col]).column(coord);
        for (std::size_t r = 0; r < image.rows(); ++r) m.components[z](r, col) = image(r, 0);
      }
    }
    c.vertices.push_back(name);
    c.parts.push_back(p);
    pieces.push_back(std::move(m));
  }
  c.sum = direct_sum_rep(c.parts);
  c.map = zero_morphism(c.sum, x);
  for (std::size_t z = 0; z < q.vertex_count(); ++z) {
    Matrix m(f, x.dim(z), 0);
    for (const auto& piece : pieces) m = m.hstack(piece.components[z]);
    c.map.components[z] = m;
  }
  return c;
}

// Direct sum of path-basis injectives, with the block offset of each summand at every vertex.
struct InjectiveSum {
  Representation sum;
  std::vector<std::vector<std::size_t>> offset;  // offset[summand][vertex]
};

InjectiveSum injective_sum(const QuiverPtr& qp, const Field& f, const std::vector<VertexId>& verts,
                           bool strict = false) {
  InjectiveSum s;
  const auto& q = *qp;
  std::vector<Representation> parts;
  std::vector<std::size_t> running(q.vertex_count(), 0);
  for (const auto& v : verts) {
    parts.push_back(injective_rep(qp, v, f, strict));
    s.offset.push_back(running);
    for (std::size_t z = 0; z < q.vertex_count(); ++z) running[z] += parts.back().dim(z);
  }
  s.sum = parts.empty() ? Representation::zero(qp, f) : direct_sum_rep(parts);
  return s;
}

std::string summand_list(const std::vector<VertexId>& vs, const char* prefix) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : ", ") + std::string(prefix) + v;
  return out;
}

// On a window of an infinite quiver the computation of tau is exact for X whose support avoids
// the open vertices: the syzygy is then generated inside the window and the truncated
// injectives agree with the true ones there. The result must also avoid the boundary, since a
// truncated tau X would be indistinguishable from a genuine one.
void require_interior(const Representation& x, const char* what) {
  const auto& q = x.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (x.dim(v) && (q.open_in(v) || q.open_out(v)))
      throw TruncationError(std::string(what) + " reaches the open window vertex " + q.vertices()[v] +
                                "; widen the window",
                            q.level() + 1);
}

bool ends_with(const std::vector<std::size_t>& r, const std::vector<std::size_t>& p) {
  return r.size() >= p.size() && std::equal(p.begin(), p.end(), r.end() - static_cast<long>(p.size()));
}

}  // namespace

// ---- projectivity tests ----------------------------------------------------------------

std::size_t projective_multiplicity(const Representation& x, const VertexId& y) {
  require_acyclic(x, "projective_multiplicity");
  if (x.dim(y) == 0) return 0;
  auto p = closed_projective(x.quiver_ptr(), y, x.field());
  if (!p) return 0;
  return pairing_rank(hom_basis(*p, x), hom_basis(x, *p), x.quiver().index_of(y));
}

std::size_t injective_multiplicity(const Representation& x, const VertexId& y) {
  require_acyclic(x, "injective_multiplicity");
  if (x.dim(y) == 0) return 0;
  auto i = closed_injective(x.quiver_ptr(), y, x.field());
  if (!i) return 0;
  return pairing_rank(hom_basis(*i, x), hom_basis(x, *i), x.quiver().index_of(y));
}

std::vector<VertexId> projective_summands(const Representation& x) {
  std::vector<VertexId> out;
  auto t = top(x).target;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) {
    if (t.dim(v) == 0) continue;
    const auto& name = x.quiver().vertices()[v];
    for (std::size_t k = projective_multiplicity(x, name); k > 0; --k) out.push_back(name);
  }
  return out;
}

std::vector<VertexId> injective_summands(const Representation& x) {
  std::vector<VertexId> out;
  auto s = socle(x).source;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) {
    if (s.dim(v) == 0) continue;
    const auto& name = x.quiver().vertices()[v];
    for (std::size_t k = injective_multiplicity(x, name); k > 0; --k) out.push_back(name);
  }
  return out;
}

bool is_projective(const Representation& x) {
  require_acyclic(x, "is_projective");
  auto t = top(x).target;
  DimVector total(x.dims().size(), 0);
  for (std::size_t v = 0; v < total.size(); ++v) {
    if (t.dim(v) == 0) continue;
    auto p = closed_projective(x.quiver_ptr(), x.quiver().vertices()[v], x.field());
    if (!p) return false;
    total = add_dims(total, p->dims(), t.dim(v));
  }
  // the cover is onto, so equal dimensions make it an isomorphism
  return total == x.dims();
}

bool is_injective(const Representation& x) {
  require_acyclic(x, "is_injective");
  auto s = socle(x).source;
  DimVector total(x.dims().size(), 0);
  for (std::size_t v = 0; v < total.size(); ++v) {
    if (s.dim(v) == 0) continue;
    auto i = closed_injective(x.quiver_ptr(), x.quiver().vertices()[v], x.field());
    if (!i) return false;
    total = add_dims(total, i->dims(), s.dim(v));
  }
  return total == x.dims();
}

// ---- presentations and the Nakayama functor ----------------------------------------------

ProjectivePresentation minimal_projective_presentation(const Representation& x) {
  require_acyclic(x, "minimal_projective_presentation");
  const auto& q = x.quiver();
  Cover c0 = cover_by_projectives(x);
  if (!c0.map.is_epi()) throw CrossValidationError("projective cover is not onto for " + x.dimvec_string());
  Morphism k = kernel(c0.map);
  Cover c1 = cover_by_projectives(k.source);
  if (!c1.map.is_iso())
    throw TruncationError("kernel of the projective cover of " + x.dimvec_string() +
                              " is not projective inside the window",
                          q.level() + 1);

  ProjectivePresentation pres;
  pres.p0 = c0.vertices;
  pres.p1 = c1.vertices;
  pres.cover = c0.map;
  pres.syzygy = compose(k, c1.map);

  // path coefficients: the image of the generator of P_{p1[j]} inside (P_0)_{p1[j]}
  std::vector<std::size_t> running(q.vertex_count(), 0);
  for (std::size_t j = 0; j < c1.parts.size(); ++j) {
    std::size_t y = q.index_of(c1.vertices[j]);
    Matrix image = pres.syzygy.components[y].column(running[y]);
    std::vector<std::vector<std::pair<Path, Scalar>>> row(c0.parts.size());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < c0.parts.size(); ++i) {
      auto paths = projective_basis(q, q.index_of(c0.vertices[i]), y);
      for (std::size_t r = 0; r < paths.size(); ++r)
        if (!image(offset + r, 0).is_zero()) row[i].push_back({paths[r], image(offset + r, 0)});
      offset += c0.parts[i].dim(y);
    }
    pres.coefficients.push_back(std::move(row));
    for (std::size_t z = 0; z < q.vertex_count(); ++z) running[z] += c1.parts[j].dim(z);
  }
  return pres;
}

Morphism nakayama_map(const QuiverPtr& qp, const Field& f, const std::vector<VertexId>& sources,
                      const std::vector<VertexId>& targets,
                      const std::vector<std::vector<std::vector<std::pair<Path, Scalar>>>>& coefficients) {
  const auto& q = *qp;
  InjectiveSum src = injective_sum(qp, f, sources), dst = injective_sum(qp, f, targets);
  Morphism m = zero_morphism(src.sum, dst.sum);
  // nu(f_p)(r*) = sum of s* over the factorizations r = s.p
  for (std::size_t j = 0; j < sources.size(); ++j) {
    std::size_t y = q.index_of(sources[j]);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      std::size_t x = q.index_of(targets[i]);
      for (const auto& [p, c] : coefficients[j][i]) {
        for (std::size_t z = 0; z < q.vertex_count(); ++z) {
          auto cols = injective_basis(q, y, z);
          if (cols.empty()) continue;
          auto rows = injective_basis(q, x, z);
          for (std::size_t col = 0; col < cols.size(); ++col) {
            const auto& r = cols[col].arrows;
            if (!ends_with(r, p.arrows)) continue;
            std::vector<std::size_t> s(r.begin(), r.end() - static_cast<long>(p.arrows.size()));
            auto it = std::find_if(rows.begin(), rows.end(), [&](const Path& u) { return u.arrows == s; });
            if (it == rows.end()) throw CrossValidationError("missing dual path in the Nakayama map");
            m.components[z](dst.offset[i][z] + static_cast<std::size_t>(it - rows.begin()), src.offset[j][z] + col) += c;
          }
        }
      }
    }
  }
  return m;
}

Representation nakayama(const Representation& p) {
  if (!is_projective(p)) throw PreconditionError("nakayama: " + p.dimvec_string() + " is not projective");
  auto pres = minimal_projective_presentation(p);
  return injective_sum(p.quiver_ptr(), p.field(), pres.p0, true).sum;
}

// ---- the translate -----------------------------------------------------------------------

Representation tau(const Representation& x) {
  require_acyclic(x, "tau");
  if (x.is_zero()) return x;
  auto proj = projective_summands(x);
  if (!proj.empty()) throw PreconditionError("tau: projective summand " + summand_list(proj, "P_"));
  require_interior(x, "tau: the argument");
  auto pres = minimal_projective_presentation(x);
  Morphism nu = nakayama_map(x.quiver_ptr(), x.field(), pres.p1, pres.p0, pres.coefficients);
  if (!nu.is_intertwining()) throw CrossValidationError("Nakayama image is not a morphism");
  Representation t = kernel(nu).source;
  require_interior(t, "tau: the result");
  if (t.is_zero()) {
    if (x.quiver().closed()) throw CrossValidationError("tau vanished on the non-projective " + x.dimvec_string());
    throw TruncationError("tau vanished on a non-projective inside a truncated window", x.quiver().level() + 1);
  }
  return t;
}

Representation tau_inv(const Representation& x) {
  require_acyclic(x, "tau_inv");
  if (x.is_zero()) return x;
  auto inj = injective_summands(x);
  if (!inj.empty()) throw PreconditionError("tau_inv: injective summand " + summand_list(inj, "I_"));
  QuiverPtr op = opposite_window(x.quiver_ptr());
  return dual(tau(dual(x, op)), x.quiver_ptr());
}

// ---- Serre functor powers ----------------------------------------------------------------

std::string ShiftedObject::describe() const {
  std::string base = projective ? "P_" + *projective : "(" + rep.dimvec_string() + ")";
  return base + "[" + std::to_string(shift) + "]";
}

ShiftedObject symbolic_projective(const QuiverPtr& q, const Field& f, const VertexId& x, int shift) {
  q->index_of(x);
  return {Representation::zero(q, f), shift, x};
}

namespace {

VertexId single_vertex(const Representation& s) {
  auto supp = s.support();
  if (supp.size() != 1) throw CrossValidationError("expected a simple top or socle");
  return s.quiver().vertices()[supp[0]];
}

ShiftedObject serre_step(const ShiftedObject& o, bool forward) {
  const QuiverPtr& q = o.rep.quiver_ptr();
  const Field f = o.rep.field();
  if (o.projective) {
    if (forward) return {injective_rep(q, *o.projective, f, true), o.shift, std::nullopt};
    throw PreconditionError("inverse Serre functor of P_" + *o.projective +
                            ", which is not finite-dimensional in the window");
  }
  if (forward) {
    if (is_projective(o.rep)) return {injective_rep(q, single_vertex(top(o.rep).target), f, true), o.shift, {}};
    return {tau(o.rep), o.shift + 1, std::nullopt};
  }
  if (is_injective(o.rep)) {
    VertexId y = single_vertex(socle(o.rep).source);
    if (auto p = closed_projective(q, y, f)) return {*p, o.shift, std::nullopt};
    return symbolic_projective(q, f, y, o.shift);
  }
  return {tau_inv(o.rep), o.shift - 1, std::nullopt};
}

}  // namespace

void canonical_order(std::vector<ShiftedObject>& xs) {
  std::stable_sort(xs.begin(), xs.end(), [](const ShiftedObject& a, const ShiftedObject& b) {
    if (a.shift != b.shift) return a.shift < b.shift;
    if (a.rep.dims() != b.rep.dims()) return a.rep.dims() < b.rep.dims();
    return a.projective.value_or("") < b.projective.value_or("");
  });
}

std::vector<ShiftedObject> serre_power(const std::vector<ShiftedObject>& xs, int t, const DecompositionOptions&) {
  std::vector<ShiftedObject> out = xs;
  for (auto& o : out)
    for (int k = 0; k < (t < 0 ? -t : t); ++k) o = serre_step(o, t > 0);
  canonical_order(out);
  return out;
}

std::vector<ShiftedObject> serre_power(const Representation& x, int t, const DecompositionOptions& opts) {
  std::vector<ShiftedObject> pieces;
  if (!x.is_zero())
    for (const auto& p : decompose(x, opts).pieces) pieces.push_back({p, 0, std::nullopt});
  return serre_power(pieces, t, opts);
}

bool same_objects(const std::vector<ShiftedObject>& a, const std::vector<ShiftedObject>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].shift != b[i].shift || a[i].projective != b[i].projective) return false;
    if (!a[i].projective && !find_isomorphism(a[i].rep, b[i].rep)) return false;
  }
  return true;
}

std::size_t shifted_hom_dim(const ShiftedObject& x, const ShiftedObject& y) {
  if (y.shift != x.shift && y.shift != x.shift + 1) return 0;
  const bool same_degree = y.shift == x.shift;
  if (x.projective) {
    if (!same_degree) return 0;  // P_x has no extensions
    const auto& q = x.rep.quiver();
    if (y.projective) return count_paths(q, q.index_of(*y.projective), q.index_of(*x.projective));
    return y.rep.dim(*x.projective);
  }
  if (y.projective)
    throw PreconditionError("Hom into P_" + *y.projective + ", which is not finite-dimensional in the window");
  return same_degree ? hom_dim(x.rep, y.rep) : ext1_dim(x.rep, y.rep);
}

// ---- almost split sequences ----------------------------------------------------------------

bool AlmostSplitSequence::is_exact() const {
  if (!inclusion.is_intertwining() || !projection.is_intertwining()) return false;
  if (!inclusion.is_mono() || !projection.is_epi()) return false;
  if (!compose(projection, inclusion).is_zero()) return false;
  return add_dims(left.dims(), right.dims()) == middle.dims();
}

AlmostSplitSequence almost_split_sequence(const Representation& c, const DecompositionOptions& opts) {
  if (!is_indecomposable(c, opts)) throw PreconditionError("almost_split_sequence: " + c.dimvec_string() + " is decomposable");
  if (is_projective(c)) throw PreconditionError("almost_split_sequence: " + c.dimvec_string() + " is projective");
  return almost_split_sequence(c, tau(c), opts);
}

AlmostSplitSequence almost_split_sequence(const Representation& c, const Representation& left,
                                          const DecompositionOptions& opts) {
  if (!is_indecomposable(c, opts)) throw PreconditionError("almost_split_sequence: " + c.dimvec_string() + " is decomposable");
  if (!same_quiver(c, left)) throw PreconditionError("almost_split_sequence: the two ends live on different quivers");
  ExtSpace ext(c, left);
  if (ext.dim() == 0) throw CrossValidationError("Ext^1(C, tau C) vanishes for " + c.dimvec_string());

  // socle of Ext^1(C, tau C) over End(C): classes killed by pulling back along rad End(C)
  auto rad = radical_of_endomorphisms(c);
  const Field f = c.field();
  Matrix conditions(f, 0, ext.dim());
  for (const auto& t : rad) {
    Matrix block(f, ext.dim(), ext.dim());
    for (std::size_t k = 0; k < ext.dim(); ++k) {
      auto eta = ext.basis()[k];
      const auto& arrows = c.quiver().arrows();
      for (std::size_t a = 0; a < arrows.size(); ++a) eta[a] = eta[a] * t.components[arrows[a].source];
      auto coords = ext.coordinates(eta);
      for (std::size_t r = 0; r < coords.size(); ++r) block(r, k) = coords[r];
    }
    conditions = conditions.vstack(block);
  }
  Matrix socle_space = conditions.rows() ? conditions.nullspace() : Matrix::identity(f, ext.dim());
  if (socle_space.cols() == 0) throw CrossValidationError("socle element not found in Ext^1(C, tau C)");
  std::vector<Scalar> coords;
  for (std::size_t r = 0; r < ext.dim(); ++r) coords.push_back(socle_space(r, 0));

  AlmostSplitSequence s;
  s.cocycle = ext.cocycle(coords);
  Extension e = extension(c, left, s.cocycle);
  s.left = left;
  s.middle = e.middle;
  s.right = c;
  s.inclusion = e.inclusion;
  s.projection = e.projection;
  s.certificate.ext_dim = ext.dim();
  s.certificate.coboundary_rank = ext.coboundary_rank();
  s.certificate.augmented_rank = ext.augmented_rank(s.cocycle);
  s.certificate.radical_generators = rad.size();
  if (!s.certificate.nonsplit()) throw CrossValidationError("chosen extension class splits");
  if (!s.is_exact()) throw CrossValidationError("almost split sequence is not exact");
  return s;
}

SerreDualityReport serre_duality_check(const Representation& a, const Representation& b) {
  SerreDualityReport r;
  Representation ta = tau(a);
  r.lhs = ext1_dim(a, b);
  r.rhs = hom_dim(b, ta);
  if (!r.equal())
    throw CrossValidationError("Serre duality fails: dim Ext^1 = " + std::to_string(r.lhs) +
                               ", dim Hom(B, tau A) = " + std::to_string(r.rhs));
  return r;
}

Morphism min_right_almost_split_into_projective(const QuiverPtr& q, const VertexId& x, const Field& f) {
  return radical_of_projective(q, x, f);
}

std::optional<Morphism> factor_through(const Morphism& h, const Morphism& g) {
  if (!same_quiver(h.target, g.target) || !same_quiver(h.source, g.source))
    throw ValidationError("factor_through: different quivers");
  auto basis = hom_basis(h.source, g.source);
  const Field f = h.source.field();
  auto flatten = [&](const Morphism& m) {
    std::vector<Scalar> v;
    for (const auto& c : m.components)
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) v.push_back(c(i, j));
    return v;
  };
  auto target = flatten(h);
  if (basis.empty()) {
    if (h.is_zero()) return zero_morphism(h.source, g.source);
    return std::nullopt;
  }
  Matrix a(f, target.size(), basis.size()), rhs(f, target.size(), 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto col = flatten(compose(g, basis[k]));
    for (std::size_t i = 0; i < col.size(); ++i) a(i, k) = col[i];
  }
  for (std::size_t i = 0; i < target.size(); ++i) rhs(i, 0) = target[i];
  auto sol = a.solve(rhs);
  if (!sol) return std::nullopt;
  std::vector<Scalar> cs;
  for (std::size_t k = 0; k < basis.size(); ++k) cs.push_back((*sol)(k, 0));
  return combine(basis, cs);
}

}  // namespace arknit
