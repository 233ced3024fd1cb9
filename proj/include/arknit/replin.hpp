#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arknit/matrix.hpp"
#include "arknit/quiver.hpp"

namespace arknit {

using DimVector = std::vector<std::size_t>;

/// A finite-dimensional representation of a (truncated) quiver. The matrix of an arrow
/// s -> t has shape dims[t] x dims[s] and acts on column vectors.
class Representation {
public:
  Representation() = default;
  Representation(QuiverPtr quiver, Field field, DimVector dims, std::vector<Matrix> maps);
  static Representation zero(QuiverPtr quiver, Field field);

  const TruncatedQuiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Field& field() const { return field_; }

  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t dim(const VertexId& v) const { return dims_[quiver_->index_of(v)]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  /// Support vertices, in window order.
  std::vector<std::size_t> support() const;
  /// "1:2 3:1"-style listing of non-zero dimensions.
  std::string dimvec_string() const;

  /// Throws ValidationError naming the arrow whose matrix has the wrong shape.
  void validate() const;

private:
  QuiverPtr quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

/// Per-vertex linear maps between two representations of the same quiver.
struct Morphism {
  Representation source;
  Representation target;
  std::vector<Matrix> components;

  bool is_intertwining() const;
  bool is_zero() const;
  bool is_iso() const;
  bool is_mono() const;
  bool is_epi() const;
  /// Total rank of all components.
  std::size_t rank() const;
};

Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism identity_morphism(const Representation& x);
Morphism zero_morphism(const Representation& x, const Representation& y);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Scalar& c);
/// Linear combination sum_i c_i f_i of morphisms with common source and target.
Morphism combine(const std::vector<Morphism>& fs, const std::vector<Scalar>& cs);

/// Two representations live on the same window.
bool same_quiver(const Representation& x, const Representation& y);

// ---- standard objects ----------------------------------------------------------------

/// Path basis of P_x at vertex y: the paths x ~> y (sorted). Strict mode throws
/// TruncationError when the support of P_x leaves the window.
Representation projective_rep(const QuiverPtr& q, const VertexId& x, const Field& f, bool strict = true);
Representation injective_rep(const QuiverPtr& q, const VertexId& x, const Field& f, bool strict = true);
Representation simple_rep(const QuiverPtr& q, const VertexId& x, const Field& f);

/// The paths x ~> y indexing the basis of (P_x)_y, or (dually) y ~> x for (I_x)_y.
std::vector<Path> projective_basis(const TruncatedQuiver& q, std::size_t x, std::size_t y);
std::vector<Path> injective_basis(const TruncatedQuiver& q, std::size_t x, std::size_t y);

/// The morphism P_x -> P_y attached to a linear combination of paths y ~> x. `px`, `py` must be
/// the path-basis projectives returned by projective_rep.
Morphism path_morphism(const Representation& px, const VertexId& x, const Representation& py, const VertexId& y,
                       const std::vector<Path>& paths, const std::vector<Scalar>& coeffs);
/// rad P_x as the direct sum of P_y over arrows x -> y, with its inclusion into P_x.
Morphism radical_of_projective(const QuiverPtr& q, const VertexId& x, const Field& f);

// ---- constructions -------------------------------------------------------------------

struct DirectSum {
  Representation sum;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts);
Representation direct_sum_rep(const std::vector<Representation>& parts);

/// Sub-representation spanned by per-vertex column bases (must be stable under the arrows).
Morphism subrepresentation(const Representation& x, const std::vector<Matrix>& bases);
/// Quotient by a stable per-vertex subspace; returns the projection X -> X/U.
Morphism quotient(const Representation& x, const std::vector<Matrix>& bases);

Morphism kernel(const Morphism& f);    // inclusion ker f -> source
Morphism image(const Morphism& f);     // inclusion im f -> target
Morphism cokernel(const Morphism& f);  // projection target -> coker f

/// rad X = sum of arrow images; top X = X / rad X; soc X = common kernel of outgoing arrows.
Morphism radical(const Representation& x);
Morphism top(const Representation& x);
Morphism socle(const Representation& x);

/// The window with every arrow reversed (boundary flags swapped).
QuiverPtr opposite_window(const QuiverPtr& q);
/// Vector-space dual on the opposite window `op` (arrow matrices transposed).
Representation dual(const Representation& x, const QuiverPtr& op);
/// Dual of a morphism f: X -> Y, as D f: D Y -> D X on the opposite window.
Morphism dual(const Morphism& f, const QuiverPtr& op);

/// Same representation on another window that contains its support (vertex names are matched).
Representation transport(const Representation& x, const QuiverPtr& window);

// ---- Hom and Ext ---------------------------------------------------------------------

/// Basis of Hom(X, Y) from the nullspace of the intertwining system (deterministic).
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

/// sum_v d_X(v) d_Y(v) - sum_{a: s->t} d_X(s) d_Y(t)
long euler_form(const Representation& x, const Representation& y);
long euler_form(const TruncatedQuiver& q, const DimVector& dx, const DimVector& dy);

/// dim Ext^1 via the Euler form: dim Hom - euler.
std::size_t ext1_dim(const Representation& x, const Representation& y);

/// Ext^1(X, Y) as the cokernel of d: (+)_v Hom(X_v, Y_v) -> (+)_a Hom(X_s, Y_t).
/// A cocycle is a list of arrow matrices eta_a: X_s -> Y_t.
class ExtSpace {
public:
  ExtSpace(const Representation& x, const Representation& y);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Matrix>>& basis() const { return basis_; }
  /// Coordinates of a cocycle in the basis (its class).
  std::vector<Scalar> coordinates(const std::vector<Matrix>& cocycle) const;
  bool is_coboundary(const std::vector<Matrix>& cocycle) const;
  std::vector<Matrix> cocycle(const std::vector<Scalar>& coords) const;

  /// Rank of d, and of [d | eta]; equal ranks mean eta is a coboundary.
  std::size_t coboundary_rank() const { return rank_; }
  std::size_t augmented_rank(const std::vector<Matrix>& cocycle) const;

  const Representation& source() const { return x_; }
  const Representation& target() const { return y_; }

private:
  std::vector<Scalar> flatten(const std::vector<Matrix>& cocycle) const;
  std::vector<Matrix> unflatten(const std::vector<Scalar>& v) const;

  Representation x_, y_;
  Matrix delta_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
  std::vector<std::vector<Matrix>> basis_;
  Matrix delta_and_basis_;  // [delta | basis], invertible on the cocycle space
};

/// Middle term of the extension 0 -> Y -> E -> X -> 0 given by a cocycle in Ext^1(X, Y):
/// E_v = Y_v + X_v, E_a = [[Y_a, eta_a], [0, X_a]].
struct Extension {
  Representation middle;
  Morphism inclusion;   // Y -> E
  Morphism projection;  // E -> X
};
Extension extension(const Representation& x, const Representation& y, const std::vector<Matrix>& cocycle);

// ---- decomposition -------------------------------------------------------------------

struct DecompositionOptions {
  std::uint64_t seed = 0;
  int candidate_budget = 200;
};

struct DecompositionReport {
  struct Summand {
    Representation rep;
    std::size_t multiplicity = 1;
  };
  std::vector<Summand> summands;   // isomorphism classes
  std::vector<Representation> pieces;  // all indecomposable pieces, in witness order
  std::vector<std::size_t> class_of;   // piece -> summand index
  Morphism to_sum;    // X -> (+) pieces
  Morphism from_sum;  // (+) pieces -> X
};

DecompositionReport decompose(const Representation& x, const DecompositionOptions& opts = {});
bool is_indecomposable(const Representation& x, const DecompositionOptions& opts = {});

/// The algebra homomorphism End(X) -> k for indecomposable X (value on each hom_basis element).
/// Throws FieldExtensionError when some basis element has no eigenvalue in the field, and
/// PreconditionError when End(X) is not local.
std::vector<Scalar> residue_map(const Representation& x, const std::vector<Morphism>& end_basis);
/// Basis of rad End(X) for indecomposable X.
std::vector<Morphism> radical_of_endomorphisms(const Representation& x);

/// An isomorphism X -> Y if one exists (X, Y indecomposable or with local endomorphism rings:
/// some Hom basis element is then invertible). For general X, Y decompose first.
std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y);
/// Isomorphism test for arbitrary X, Y through decomposition and matching of classes.
bool is_isomorphic(const Representation& x, const Representation& y, const DecompositionOptions& opts = {});

// ---- named family objects ------------------------------------------------------------

/// Symbolic names of indecomposables over the A and D families: A_{n,m}, B_{n,m}, A^{(0)}_m, A^{(1)}_m.
struct FamilyLabel {
  char kind = 'A';   // 'A' or 'B'
  int variant = -1;  // 0 or 1 for A^{(0)}, A^{(1)}; -1 otherwise
  long n = 0;        // unused for the A^{(i)} variants
  long m = 0;

  /// Accepts "A_{n,m}", "B_{n,m}", "A^{(0)}_{m}", "A^{(1)}_m", "A0_m" (spaces ignored).
  static FamilyLabel parse(const std::string& text);
  /// Canonical text; B labels are written with n <= m.
  std::string to_string() const;
  /// B_{n,m} = B_{m,n}: swaps so that n <= m.
  FamilyLabel normalized() const;
  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
  friend auto operator<=>(const FamilyLabel&, const FamilyLabel&) = default;
};

/// Support (vertex indices of the family) of a labelled object; validates ranges.
std::vector<long> family_support(FamilyTag family, const FamilyLabel& label);

/// Realizes a label on a window of the A-infinity, A-infinity-infinity or D-infinity quiver
/// (any orientation; vertex names are the integers). Throws PreconditionError for labels out
/// of range and TruncationError when the support leaves the window.
Representation realize_family_object(const QuiverPtr& q, FamilyTag family, const FamilyLabel& label,
                                     const Field& f);
/// Interval object: dimension 1 at the given vertices, identity along arrows inside.
Representation interval_rep(const QuiverPtr& q, const std::vector<VertexId>& support, const Field& f);

}  // namespace arknit
