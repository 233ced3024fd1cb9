#include "arknit/replin.hpp"

namespace arknit {

namespace {

struct Layout {
  std::vector<std::size_t> vertex_offset;  // unknowns: f_v, row-major dY_v x dX_v
  std::vector<std::size_t> arrow_offset;   // equations: dY_t x dX_s per arrow
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

Layout layout(const Representation& x, const Representation& y) {
  const auto& q = x.quiver();
  Layout l;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    l.vertex_offset.push_back(l.unknowns);
    l.unknowns += y.dim(v) * x.dim(v);
  }
  for (const auto& a : q.arrows()) {
    l.arrow_offset.push_back(l.equations);
    l.equations += y.dim(a.target) * x.dim(a.source);
  }
  return l;
}

// The map d(f)_a = Y_a f_s - f_t X_a; its kernel is Hom(X, Y) and its cokernel Ext^1(X, Y).
Matrix coboundary_matrix(const Representation& x, const Representation& y, const Layout& l) {
  if (!same_quiver(x, y)) throw ValidationError("Hom/Ext between representations of different quivers");
  if (!(x.field() == y.field())) throw ValidationError("Hom/Ext across different fields");
  const auto& q = x.quiver();
  Matrix d(x.field(), l.equations, l.unknowns);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    const std::size_t s = arrow.source, t = arrow.target;
    const std::size_t dxs = x.dim(s), dxt = x.dim(t), dys = y.dim(s), dyt = y.dim(t);
    const Matrix& ya = y.map(a);
    const Matrix& xa = x.map(a);
    for (std::size_t i = 0; i < dyt; ++i)
      for (std::size_t j = 0; j < dxs; ++j) {
        std::size_t row = l.arrow_offset[a] + i * dxs + j;
        for (std::size_t k = 0; k < dys; ++k)
          if (!ya(i, k).is_zero()) d(row, l.vertex_offset[s] + k * dxs + j) += ya(i, k);
        for (std::size_t k = 0; k < dxt; ++k)
          if (!xa(k, j).is_zero()) d(row, l.vertex_offset[t] + i * dxt + k) -= xa(k, j);
      }
  }
  return d;
}

}  // namespace

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
  Layout l = layout(x, y);
  Matrix d = coboundary_matrix(x, y, l);
  Matrix null = d.nullspace();
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < null.cols(); ++k) {
    Morphism m = zero_morphism(x, y);
    for (std::size_t v = 0; v < x.dims().size(); ++v)
      for (std::size_t i = 0; i < y.dim(v); ++i)
        for (std::size_t j = 0; j < x.dim(v); ++j) m.components[v](i, j) = null(l.vertex_offset[v] + i * x.dim(v) + j, k);
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
  Layout l = layout(x, y);
  if (l.unknowns == 0) return 0;
  return l.unknowns - coboundary_matrix(x, y, l).rank();
}

long euler_form(const TruncatedQuiver& q, const DimVector& dx, const DimVector& dy) {
  long e = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) e += static_cast<long>(dx[v] * dy[v]);
  for (const auto& a : q.arrows()) e -= static_cast<long>(dx[a.source] * dy[a.target]);
  return e;
}

long euler_form(const Representation& x, const Representation& y) {
  if (!same_quiver(x, y)) throw ValidationError("euler_form: different quivers");
  return euler_form(x.quiver(), x.dims(), y.dims());
}

std::size_t ext1_dim(const Representation& x, const Representation& y) {
  long e = static_cast<long>(hom_dim(x, y)) - euler_form(x, y);
  if (e < 0) throw CrossValidationError("negative Ext dimension from the Euler form");
  return static_cast<std::size_t>(e);
}

ExtSpace::ExtSpace(const Representation& x, const Representation& y) : x_(x), y_(y) {
  Layout l = layout(x, y);
  offsets_ = l.arrow_offset;
  delta_ = coboundary_matrix(x, y, l);
  const Field f = x.field();
  // complement of the coboundaries spanned by standard cocycle coordinates
  Matrix aug = delta_.hstack(Matrix::identity(f, l.equations));
  auto piv = aug.rref().pivots;
  std::size_t rank = 0;
  Matrix chosen(f, l.equations, 0);
  for (auto p : piv) {
    if (p < l.unknowns) {
      ++rank;
      continue;
    }
    std::vector<Scalar> e(l.equations, f.zero());
    e[p - l.unknowns] = f.one();
    basis_.push_back(unflatten(e));
    Matrix col(f, l.equations, 1);
    col(p - l.unknowns, 0) = f.one();
    chosen = chosen.hstack(col);
  }
  rank_ = rank;
  delta_and_basis_ = delta_.hstack(chosen);
  std::size_t expected = l.equations - rank_;
  if (basis_.size() != expected) throw CrossValidationError("Ext basis has the wrong size");
}

std::vector<Scalar> ExtSpace::flatten(const std::vector<Matrix>& cocycle) const {
  const auto& q = x_.quiver();
  if (cocycle.size() != q.arrow_count()) throw ValidationError("cocycle needs one matrix per arrow");
  std::vector<Scalar> v(delta_.rows(), x_.field().zero());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    const std::size_t r = y_.dim(arrow.target), c = x_.dim(arrow.source);
    if (cocycle[a].rows() != r || cocycle[a].cols() != c) throw ValidationError("cocycle block has the wrong shape");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) v[offsets_[a] + i * c + j] = cocycle[a](i, j);
  }
  return v;
}

std::vector<Matrix> ExtSpace::unflatten(const std::vector<Scalar>& v) const {
  const auto& q = x_.quiver();
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    const std::size_t r = y_.dim(arrow.target), c = x_.dim(arrow.source);
    Matrix m(x_.field(), r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = v[offsets_[a] + i * c + j];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Scalar> ExtSpace::coordinates(const std::vector<Matrix>& cocycle) const {
  auto v = flatten(cocycle);
  Matrix rhs(x_.field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  auto sol = delta_and_basis_.solve(rhs);
  if (!sol) throw CrossValidationError("cocycle outside the span of coboundaries and the Ext basis");
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < basis_.size(); ++k) c.push_back((*sol)(delta_.cols() + k, 0));
  return c;
}

bool ExtSpace::is_coboundary(const std::vector<Matrix>& cocycle) const {
  auto c = coordinates(cocycle);
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t ExtSpace::augmented_rank(const std::vector<Matrix>& cocycle) const {
  auto v = flatten(cocycle);
  Matrix col(x_.field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  return delta_.hstack(col).rank();
}

std::vector<Matrix> ExtSpace::cocycle(const std::vector<Scalar>& coords) const {
  if (coords.size() != basis_.size()) throw ValidationError("wrong number of Ext coordinates");
  std::vector<Scalar> v(delta_.rows(), x_.field().zero());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    auto b = flatten(basis_[k]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords[k] * b[i];
  }
  return unflatten(v);
}

Extension extension(const Representation& x, const Representation& y, const std::vector<Matrix>& cocycle) {
  if (!same_quiver(x, y)) throw ValidationError("extension: different quivers");
  const auto& q = x.quiver();
  const Field f = x.field();
  DimVector dims(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = y.dim(v) + x.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    m.set_block(0, 0, y.map(a));
    m.set_block(0, y.dim(arrow.source), cocycle[a]);
    m.set_block(y.dim(arrow.target), y.dim(arrow.source), x.map(a));
    maps.push_back(std::move(m));
  }
  Representation e(x.quiver_ptr(), f, dims, std::move(maps));
  Morphism inc = zero_morphism(y, e), proj = zero_morphism(e, x);
  for (std::size_t v = 0; v < dims.size(); ++v) {
    for (std::size_t i = 0; i < y.dim(v); ++i) inc.components[v](i, i) = f.one();
    for (std::size_t i = 0; i < x.dim(v); ++i) proj.components[v](i, y.dim(v) + i) = f.one();
  }
  return {std::move(e), std::move(inc), std::move(proj)};
}

}  // namespace arknit
