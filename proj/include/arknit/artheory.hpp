#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arknit/replin.hpp"

namespace arknit {

// ---- projectivity tests ----------------------------------------------------------------

/// Multiplicity of P_y as a direct summand of X, from the rank of the pairing
/// Hom(P_y, X) x Hom(X, P_y) -> End(P_y) = k. Zero when P_y is not finite inside the window.
std::size_t projective_multiplicity(const Representation& x, const VertexId& y);
std::size_t injective_multiplicity(const Representation& x, const VertexId& y);

/// Vertices y with P_y (resp. I_y) a direct summand of X, repeated by multiplicity.
std::vector<VertexId> projective_summands(const Representation& x);
std::vector<VertexId> injective_summands(const Representation& x);

bool is_projective(const Representation& x);
bool is_injective(const Representation& x);

// ---- presentations and the Nakayama functor ----------------------------------------------

/// 0 -> P_1 -> P_0 -> X -> 0 with P_0 covering top(X). P_i = (+) P_v over the listed vertices,
/// in path bases. `coefficients[j][i]` is the combination of paths p0[i] ~> p1[j] giving the
/// component P_{p1[j]} -> P_{p0[i]} of `syzygy`.
struct ProjectivePresentation {
  std::vector<VertexId> p0;
  std::vector<VertexId> p1;
  Morphism cover;    // P_0 -> X
  Morphism syzygy;   // P_1 -> P_0
  std::vector<std::vector<std::vector<std::pair<Path, Scalar>>>> coefficients;
};
ProjectivePresentation minimal_projective_presentation(const Representation& x);

/// nu(P) for projective P: the matching sum of injectives.
Representation nakayama(const Representation& p);
/// nu of a map between sums of path-basis projectives, given by path coefficients as in
/// ProjectivePresentation: (+) I_{sources} -> (+) I_{targets}.
Morphism nakayama_map(const QuiverPtr& q, const Field& f, const std::vector<VertexId>& sources,
                      const std::vector<VertexId>& targets,
                      const std::vector<std::vector<std::vector<std::pair<Path, Scalar>>>>& coefficients);

// ---- the translate -----------------------------------------------------------------------

/// tau X = ker(nu P_1 -> nu P_0). Throws PreconditionError when X has a projective summand.
Representation tau(const Representation& x);
/// tau^{-1} X = D tau D X on the opposite quiver. Throws when X has an injective summand.
Representation tau_inv(const Representation& x);

// ---- Serre functor powers ----------------------------------------------------------------

/// An indecomposable object of D^b placed in degree `shift`. `projective` names P_x when that
/// projective is not finite-dimensional inside the window; `rep` is then the zero object.
struct ShiftedObject {
  Representation rep;
  int shift = 0;
  std::optional<VertexId> projective;

  bool is_symbolic() const { return projective.has_value(); }
  std::string describe() const;
};

/// Symbolic P_x for a projective that may be infinite-dimensional.
ShiftedObject symbolic_projective(const QuiverPtr& q, const Field& f, const VertexId& x, int shift = 0);

/// F^t applied summand-wise (F(P_x) = I_x, F(X) = tau X[1]; F^{-1}(I_x) = P_x,
/// F^{-1}(X) = tau^{-1} X[-1]). Output is in canonical order.
std::vector<ShiftedObject> serre_power(const Representation& x, int t, const DecompositionOptions& opts = {});
std::vector<ShiftedObject> serre_power(const std::vector<ShiftedObject>& xs, int t,
                                       const DecompositionOptions& opts = {});
/// Sorts by shift, then dimension vector, then symbolic name.
void canonical_order(std::vector<ShiftedObject>& xs);
/// Same shifts, symbols and isomorphism classes, position by position.
bool same_objects(const std::vector<ShiftedObject>& a, const std::vector<ShiftedObject>& b);

/// dim Hom_{D^b}(X[i], Y[j]): Hom if i = j, Ext^1 if j = i + 1, else 0.
std::size_t shifted_hom_dim(const ShiftedObject& x, const ShiftedObject& y);

// ---- almost split sequences ----------------------------------------------------------------

struct NonsplitCertificate {
  std::size_t ext_dim = 0;          // dim Ext^1(C, tau C)
  std::size_t coboundary_rank = 0;  // rank of the coboundary map
  std::size_t augmented_rank = 0;   // rank after appending the chosen cocycle
  std::size_t radical_generators = 0;  // rad End(C) generators whose pullbacks were checked
  /// augmented > coboundary: the section system for C -> E is unsolvable.
  bool nonsplit() const { return augmented_rank > coboundary_rank; }
};

struct AlmostSplitSequence {
  Representation left;    // tau C
  Representation middle;
  Representation right;   // C
  Morphism inclusion;     // left -> middle
  Morphism projection;    // middle -> right
  std::vector<Matrix> cocycle;
  NonsplitCertificate certificate;

  /// Ranks give exactness at all three places and projection . inclusion = 0.
  bool is_exact() const;
};

AlmostSplitSequence almost_split_sequence(const Representation& c, const DecompositionOptions& opts = {});
/// Same construction with tau C supplied by the caller, for categories where the Nakayama
/// route does not apply (nilpotent representations of oriented cycles).
AlmostSplitSequence almost_split_sequence(const Representation& c, const Representation& left,
                                          const DecompositionOptions& opts = {});

struct SerreDualityReport {
  std::size_t lhs = 0;  // dim Ext^1(A, B)
  std::size_t rhs = 0;  // dim Hom(B, tau A)
  bool equal() const { return lhs == rhs; }
};
/// Throws CrossValidationError when the two sides differ.
SerreDualityReport serre_duality_check(const Representation& a, const Representation& b);

/// The inclusion rad P_x -> P_x.
Morphism min_right_almost_split_into_projective(const QuiverPtr& q, const VertexId& x, const Field& f);

/// A morphism u with g . u = h, if one exists.
std::optional<Morphism> factor_through(const Morphism& h, const Morphism& g);

}  // namespace arknit
