#include "arknit/knit.hpp"

namespace arknit {

FormalObject FormalObject::of(const Representation& base, int t) {
  if (t < 0) throw PreconditionError("formal objects need t >= 0");
  if (base.is_zero()) throw PreconditionError("formal objects need a non-zero base");
  return {t, base, std::nullopt};
}

FormalObject FormalObject::symbolic(const QuiverPtr& q, const Field& f, const VertexId& x, int t) {
  if (t < 0) throw PreconditionError("formal objects need t >= 0");
  q->index_of(x);
  return {t, Representation::zero(q, f), x};
}

std::string FormalObject::describe() const {
  std::string b = projective ? "P_" + *projective : "(" + base.dimvec_string() + ")";
  return t == 0 ? b : "tau~^-" + std::to_string(t) + " " + b;
}

FormalObject canonicalize(const FormalObject& a) {
  FormalObject c = a;
  while (c.t > 0 && !c.is_symbolic() && !is_injective(c.base)) {
    c.base = tau_inv(c.base);
    --c.t;
  }
  return c;
}

std::string to_string(FormalClass c) {
  switch (c) {
    case FormalClass::Projective: return "projective";
    case FormalClass::Injective: return "injective";
    case FormalClass::Neither: return "neither";
  }
  return "neither";
}

FormalClass formal_classify(const FormalObject& a0) {
  FormalObject a = canonicalize(a0);
  if (a.t > 0) return FormalClass::Neither;
  if (a.is_symbolic() || is_projective(a.base)) return FormalClass::Projective;
  if (is_injective(a.base)) return FormalClass::Injective;
  return FormalClass::Neither;
}

namespace {

// F^{c-t}(base)[t], summand by summand.
std::vector<ShiftedObject> aligned(const FormalObject& a, int c, const DecompositionOptions& opts) {
  std::vector<ShiftedObject> start;
  if (a.is_symbolic()) {
    start.push_back(symbolic_projective(a.base.quiver_ptr(), a.base.field(), *a.projective, a.t));
  } else {
    for (const auto& p : decompose(a.base, opts).pieces) start.push_back({p, a.t, std::nullopt});
  }
  return serre_power(start, c - a.t, opts);
}

std::size_t hom_at(const FormalObject& a, const FormalObject& b, int c, const DecompositionOptions& opts) {
  std::size_t total = 0;
  auto xs = aligned(a, c, opts), ys = aligned(b, c, opts);
  for (const auto& x : xs)
    for (const auto& y : ys) total += shifted_hom_dim(x, y);
  return total;
}

}  // namespace

FormalHomReport formal_hom(const FormalObject& a, const FormalObject& b, const DecompositionOptions& opts) {
  if (a.base.quiver_ptr() != b.base.quiver_ptr() && !a.base.quiver().same_shape(b.base.quiver()))
    throw PreconditionError("formal objects over different windows");
  // one step beyond max(t) so that no symbolic projective is left as a Hom target
  const int c = std::max(a.t, b.t) + 1;
  FormalHomReport r;
  r.exponent = c;
  r.dim = hom_at(a, b, c, opts);
  std::size_t again = hom_at(a, b, c + 1, opts);
  if (again != r.dim)
    throw CrossValidationError("formal Hom(" + a.describe() + ", " + b.describe() + ") depends on the alignment: " +
                               std::to_string(r.dim) + " at c = " + std::to_string(c) + ", " + std::to_string(again) +
                               " at c = " + std::to_string(c + 1));
  return r;
}

std::size_t formal_hom_dim(const FormalObject& a, const FormalObject& b) { return formal_hom(a, b).dim; }

}  // namespace arknit
