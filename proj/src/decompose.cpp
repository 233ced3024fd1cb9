#include "arknit/replin.hpp"

#include <random>

namespace arknit {

namespace {

Matrix power(const Matrix& m, std::size_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * m;
  return r;
}

Matrix as_block(const Morphism& f) { return block_diagonal(f.source.field(), f.components); }

Morphism shifted(const Morphism& f, const Scalar& lambda) {
  Morphism g = f;
  for (auto& c : g.components)
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, i) -= lambda;
  return g;
}

// Span of flattened block-diagonal matrices; returns an independent subset of `ms`.
std::vector<Matrix> independent(const std::vector<Matrix>& ms) {
  if (ms.empty()) return {};
  const std::size_t n = ms[0].rows();
  Matrix stack(ms[0].field(), n * n, ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stack(i * n + j, k) = ms[k](i, j);
  std::vector<Matrix> out;
  for (auto p : stack.rref().pivots) out.push_back(ms[p]);
  return out;
}

// True when the span of `gens` is a nilpotent (non-unital) algebra: J^k = 0 for some k <= n.
bool spans_nilpotent_ideal(const std::vector<Matrix>& gens, std::size_t n) {
  std::vector<Matrix> j = independent(gens);
  std::vector<Matrix> power = j;
  for (std::size_t k = 0; k <= n; ++k) {
    if (power.empty()) return true;
    std::vector<Matrix> next;
    for (const auto& a : power)
      for (const auto& b : j) {
        Matrix p = a * b;
        if (!p.is_zero()) next.push_back(std::move(p));
      }
    power = independent(next);
  }
  return power.empty();
}

struct Eigen {
  bool has_root = false;
  Scalar lambda;
  bool nilpotent_shift = false;
};

Eigen analyse(const Matrix& m) {
  Eigen e;
  auto roots = roots_in_field(minimal_polynomial(m));
  for (const auto& r : roots) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= r;
    e.has_root = true;
    e.lambda = r;
    if (is_nilpotent(shifted)) {
      e.nilpotent_shift = true;
      return e;
    }
    return e;  // a root whose shift is not nilpotent: Fitting split available
  }
  return e;
}

struct Piece {
  Representation rep;
  std::vector<Matrix> inclusion;  // rep_v -> X_v
};

class Splitter {
public:
  Splitter(const DecompositionOptions& opts, const Field& f) : rng_(opts.seed), budget_(opts.candidate_budget), f_(f) {}

  void run(const Piece& p, std::vector<Piece>& out) {
    if (p.rep.is_zero()) return;
    auto end = hom_basis(p.rep, p.rep);
    if (end.size() == 1) {
      out.push_back(p);
      return;
    }
    auto split = find_split(p.rep, end);
    if (!split) {
      out.push_back(p);
      return;
    }
    auto [k, i] = *split;
    for (const Morphism* part : {&k, &i}) {
      Piece child{part->source, {}};
      for (std::size_t v = 0; v < p.inclusion.size(); ++v) child.inclusion.push_back(p.inclusion[v] * part->components[v]);
      run(child, out);
    }
  }

  // Kernel and image inclusions of a Fitting power (f - lambda)^N, or nullopt when End is local.
  std::optional<std::pair<Morphism, Morphism>> find_split(const Representation& x, const std::vector<Morphism>& end) {
    std::vector<Matrix> radical;
    bool all_local = true;
    auto try_candidate = [&](const Morphism& f, bool record) -> std::optional<std::pair<Morphism, Morphism>> {
      Eigen e = analyse(as_block(f));
      if (!e.has_root) {
        all_local = false;
        return std::nullopt;
      }
      Morphism g = shifted(f, e.lambda);
      if (!e.nilpotent_shift) return fitting(g);
      if (record) radical.push_back(as_block(g));
      return std::nullopt;
    };
    for (const auto& f : end)
      if (auto s = try_candidate(f, true)) return s;
    if (all_local && spans_nilpotent_ideal(radical, x.total_dim())) return std::nullopt;
    for (int attempt = 0; attempt < budget_; ++attempt) {
      std::vector<Scalar> cs;
      for (std::size_t i = 0; i < end.size(); ++i) cs.push_back(random_scalar());
      if (auto s = try_candidate(combine(end, cs), false)) return s;
    }
    throw FieldExtensionError(
        "no splitting endomorphism found over " + f_.name() + " (dimension " + x.dimvec_string() +
        "); the endomorphism ring does not split over this field: extend scalars or switch field");
  }

private:
  std::pair<Morphism, Morphism> fitting(const Morphism& g) {
    Morphism gn = g;
    for (std::size_t v = 0; v < g.components.size(); ++v) gn.components[v] = power(g.components[v], g.components[v].rows());
    return {kernel(gn), image(gn)};
  }

  Scalar random_scalar() {
    if (f_.is_rational()) {
      std::uniform_int_distribution<long> d(-4, 4);
      return f_.from_int(d(rng_));
    }
    std::uniform_int_distribution<long> d(0, static_cast<long>(f_.characteristic()) - 1);
    return f_.from_int(d(rng_));
  }

  std::mt19937_64 rng_;
  int budget_;
  Field f_;
};

}  // namespace

std::vector<Scalar> residue_map(const Representation& x, const std::vector<Morphism>& end_basis) {
  std::vector<Scalar> lambdas;
  std::vector<Matrix> radical;
  for (const auto& f : end_basis) {
    Eigen e = analyse(as_block(f));
    if (!e.has_root)
      throw FieldExtensionError("endomorphism without eigenvalue in " + x.field().name() + " for " + x.dimvec_string());
    if (!e.nilpotent_shift) throw PreconditionError("endomorphism ring is not local: " + x.dimvec_string());
    lambdas.push_back(e.lambda);
    radical.push_back(as_block(shifted(f, e.lambda)));
  }
  if (!spans_nilpotent_ideal(radical, x.total_dim()))
    throw PreconditionError("endomorphism ring is not local: " + x.dimvec_string());
  return lambdas;
}

std::vector<Morphism> radical_of_endomorphisms(const Representation& x) {
  auto end = hom_basis(x, x);
  auto lambdas = residue_map(x, end);
  std::vector<Morphism> shiftedv;
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < end.size(); ++i) {
    shiftedv.push_back(shifted(end[i], lambdas[i]));
    blocks.push_back(as_block(shiftedv.back()));
  }
  // keep an independent subset
  std::vector<Morphism> out;
  if (blocks.empty()) return out;
  const std::size_t n = blocks[0].rows();
  Matrix stack(x.field(), n * n, blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stack(i * n + j, k) = blocks[k](i, j);
  for (auto p : stack.rref().pivots) out.push_back(shiftedv[p]);
  return out;
}

std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y) {
  if (!same_quiver(x, y) || x.dims() != y.dims()) return std::nullopt;
  auto basis = hom_basis(x, y);
  for (const auto& f : basis)
    if (f.is_iso()) return f;
  if (basis.size() > 1) {
    // fixed pseudo-generic combinations for decomposable inputs
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<Scalar> cs;
      std::uniform_int_distribution<long> d(1, 97);
      for (std::size_t i = 0; i < basis.size(); ++i) cs.push_back(x.field().from_int(d(rng)));
      Morphism f = combine(basis, cs);
      if (f.is_iso()) return f;
    }
  }
  return std::nullopt;
}

DecompositionReport decompose(const Representation& x, const DecompositionOptions& opts) {
  std::vector<Piece> pieces;
  Piece whole{x, {}};
  for (auto d : x.dims()) whole.inclusion.push_back(Matrix::identity(x.field(), d));
  Splitter(opts, x.field()).run(whole, pieces);

  DecompositionReport r;
  for (auto& p : pieces) {
    std::size_t cls = r.summands.size();
    for (std::size_t c = 0; c < r.summands.size(); ++c)
      if (find_isomorphism(r.summands[c].rep, p.rep)) {
        cls = c;
        break;
      }
    if (cls == r.summands.size())
      r.summands.push_back({p.rep, 1});
    else
      ++r.summands[cls].multiplicity;
    r.class_of.push_back(cls);
    r.pieces.push_back(p.rep);
  }

  if (pieces.empty()) {
    r.from_sum = identity_morphism(x);
    r.to_sum = identity_morphism(x);
    return r;
  }
  Representation sum = direct_sum_rep(r.pieces);
  r.from_sum = zero_morphism(sum, x);
  r.to_sum = zero_morphism(x, sum);
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    Matrix m(x.field(), x.dim(v), 0);
    for (const auto& p : pieces) m = m.hstack(p.inclusion[v]);
    auto inv = m.inverse();
    if (!inv) throw CrossValidationError("decomposition pieces do not span " + x.dimvec_string());
    r.from_sum.components[v] = m;
    r.to_sum.components[v] = *inv;
  }
  if (!r.from_sum.is_intertwining()) throw CrossValidationError("decomposition witness is not a morphism");
  return r;
}

bool is_indecomposable(const Representation& x, const DecompositionOptions& opts) {
  if (x.is_zero()) return false;
  auto end = hom_basis(x, x);
  if (end.size() == 1) return true;
  Splitter s(opts, x.field());
  return !s.find_split(x, end).has_value();
}

bool is_isomorphic(const Representation& x, const Representation& y, const DecompositionOptions& opts) {
  if (!same_quiver(x, y) || x.dims() != y.dims()) return false;
  if (find_isomorphism(x, y)) return true;
  auto dx = decompose(x, opts), dy = decompose(y, opts);
  if (dx.summands.size() != dy.summands.size()) return false;
  std::vector<bool> used(dy.summands.size(), false);
  for (const auto& s : dx.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dy.summands.size() && !matched; ++j) {
      if (used[j] || dy.summands[j].multiplicity != s.multiplicity) continue;
      if (find_isomorphism(s.rep, dy.summands[j].rep)) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace arknit
