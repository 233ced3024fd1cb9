#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arknit/artheory.hpp"

namespace arknit {

// ---- translation quivers -------------------------------------------------------------------

/// A vertex (n, x) of ZQ.
struct Coord {
  long n = 0;
  VertexId x;
  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
  std::string to_string() const;
};

/// The window n_min <= n <= n_max of ZQ over a window of Q: arrows (n,a) -> (n,b) and
/// (n,b) -> (n+1,a) for every arrow a -> b, translation tau(n,a) = (n-1,a).
class TranslationQuiver {
public:
  TranslationQuiver(QuiverPtr base, long n_min, long n_max);

  const QuiverPtr& base() const { return base_; }
  long n_min() const { return n_min_; }
  long n_max() const { return n_max_; }

  const std::vector<Coord>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }
  std::optional<std::size_t> find(const Coord& c) const;
  std::size_t index_of(const Coord& c) const;
  const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return pred_[v]; }
  std::optional<std::size_t> tau(std::size_t v) const;
  std::optional<std::size_t> tau_inv(std::size_t v) const;

  /// Number of paths a ~> b inside the window (finite: n never decreases along arrows).
  std::size_t path_count(std::size_t a, std::size_t b) const;

private:
  QuiverPtr base_;
  long n_min_, n_max_;
  std::vector<Coord> vertices_;
  std::map<Coord, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
  std::vector<std::vector<std::size_t>> succ_, pred_;
};

/// ZQ over the window of `spec` at `level`; requires (P1)(P2).
TranslationQuiver zq(const QuiverSpec& spec, long n_min, long n_max, int level = 0);
/// NQ: the part with n >= 0.
TranslationQuiver nq(const QuiverSpec& spec, long n_max, int level = 0);

/// One vertex per tau-orbit, and for every arrow x -> y (resp. z -> x) of ZQ at a chosen x,
/// y (resp. z) is chosen or tau y (resp. tau^{-1} z) is. Throws TruncationError when a
/// candidate lacks one column of margin inside the window.
bool is_section(const TranslationQuiver& tq, const std::vector<Coord>& candidate);

// ---- component models ------------------------------------------------------------------------

struct ModelVertex {
  std::string component;
  long n = 0;     // column: never decreases along arrows
  VertexId x;     // tau-orbit
  std::string label;
  std::optional<DimVector> dimvec;  // over the model's window, when known
  bool projective = false;
  bool injective = false;
  bool simple = false;
  /// Some predecessor or tau of the full component is missing from the window.
  bool open_in = false;
  /// Some successor or tau^{-1} of the full component is missing from the window.
  bool open_out = false;
  /// The dimension vector and label were derived from complete data.
  bool reliable = true;

  bool boundary() const { return open_in || open_out || !reliable; }
};

/// Finite window of one or more AR components. Every component is shaped like ZS for a quiver
/// S: tau(n, x) = (n-1, x) inside a component.
class ARComponentModel {
public:
  std::string shape;  // "preprojective", "preinjective", "tilted", "ray-grid", ...
  QuiverPtr window;   // quiver whose dimension vectors are recorded (may be null)
  std::optional<FamilyTag> family;
  bool partial = false;  // knitting stopped at the depth limit before halting
  std::vector<std::string> notes;

  std::size_t add_vertex(ModelVertex v);
  void add_arrow(std::size_t from, std::size_t to);

  const std::vector<ModelVertex>& vertices() const { return vertices_; }
  ModelVertex& vertex(std::size_t v) { return vertices_[v]; }
  const ModelVertex& vertex(std::size_t v) const { return vertices_[v]; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return pred_[v]; }

  std::optional<std::size_t> find(const std::string& component, long n, const VertexId& x) const;
  /// Looks up a label, normalizing family labels (B_{n,m} = B_{m,n}).
  std::optional<std::size_t> find_label(const std::string& label) const;
  std::optional<std::size_t> tau(std::size_t v) const;
  std::optional<std::size_t> tau_inv(std::size_t v) const;

  std::vector<std::string> components() const;

private:
  std::vector<ModelVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
  std::vector<std::vector<std::size_t>> succ_, pred_;
  std::map<std::tuple<std::string, long, VertexId>, std::size_t> index_;
  std::map<std::string, std::size_t> labels_;
};

// ---- knitting --------------------------------------------------------------------------------

struct KnitOptions {
  /// Compare every reliable dimension vector with iterated tau^{-1} (tau for preinjectives).
  bool validate = false;
  Field field = Field::rationals();
};

/// The preprojective component as NQ^op: (n, x) = tau^{-n} P_x for 0 <= n <= depth. Dimension
/// vectors follow dim tau^{-1}Z = sum over successors of Z minus dim Z; injectives are marked
/// and not translated.
ARComponentModel knit_preprojective(const QuiverPtr& window, int depth, const KnitOptions& opts = {});
ARComponentModel knit_preprojective(const QuiverSpec& spec, int level, int depth, const KnitOptions& opts = {});
/// The preinjective component: (-k, x) = tau^k I_x, with the same arrow convention as ZQ^op.
ARComponentModel knit_preinjective(const QuiverPtr& window, int depth, const KnitOptions& opts = {});
ARComponentModel knit_preinjective(const QuiverSpec& spec, int level, int depth, const KnitOptions& opts = {});

struct KnitValidation {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // unreliable vertices or windows too small for tau
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
/// Realizes tau^{-n} P_x (or tau^k I_x) by linear algebra and compares dimension vectors and
/// injective (projective) marks.
KnitValidation validate_knit(const ARComponentModel& model, const Field& f = Field::rationals());

/// Vertices where dim(v) + dim(tau v) differs from the sum over the mesh middle.
std::vector<std::string> mesh_additivity_failures(const ARComponentModel& model);

// ---- hammocks --------------------------------------------------------------------------------

struct ClampEvent {
  std::size_t vertex = 0;
  long raw = 0;
};

struct HammockResult {
  std::size_t value = 0;
  std::map<std::size_t, std::size_t> values;  // every vertex on a path X ~> Y
  std::vector<ClampEvent> clamps;
};

/// dim Hom(X, -) by h(X) = 1, h(Z) = sum of h over the mesh middle minus h(tau Z), restricted
/// to vertices on paths X ~> Y, and evaluated at Y. Throws TruncationError when a path could
/// leave the window and come back.
HammockResult hammock(const ARComponentModel& model, std::size_t x, std::size_t y);
/// Same value through dim Hom(-, Y): g(Y) = 1, g(Z) = sum of g over successors minus g(tau^{-1} Z).
HammockResult hammock_backward(const ARComponentModel& model, std::size_t x, std::size_t y);
/// Forward hammock; throws CrossValidationError on any clamp event.
std::size_t hammock_hom_dim(const ARComponentModel& model, std::size_t x, std::size_t y);

/// Vertices on paths x ~> y inside the window.
std::vector<std::size_t> path_interval(const ARComponentModel& model, std::size_t x, std::size_t y);

/// The grid of preprojectives along a ray: column c, row r is tau^{-c} P_{w_{c+r}}; arrows go
/// right and up. The grid is closed under predecessors in the full component.
ARComponentModel ray_grid_model(long columns, long rows);
/// Hom between grid vertices: 1 iff c <= c' and r >= r'.
std::size_t preproj_hom_dim_closed_form(long c, long r, long c2, long r2);

// ---- the formal category rep~(Q) ---------------------------------------------------------------

/// tau~^{-t}(base). A symbolic base stands for a projective P_x that is infinite-dimensional.
struct FormalObject {
  int t = 0;
  Representation base;
  std::optional<VertexId> projective;

  static FormalObject of(const Representation& base, int t = 0);
  static FormalObject symbolic(const QuiverPtr& q, const Field& f, const VertexId& x, int t = 0);
  bool is_symbolic() const { return projective.has_value(); }
  std::string describe() const;
};

/// Lowers t while the base is finite and not injective (tau~^{-1} of it is a module again).
FormalObject canonicalize(const FormalObject& a);

enum class FormalClass { Projective, Injective, Neither };
std::string to_string(FormalClass c);
FormalClass formal_classify(const FormalObject& a);

struct FormalHomReport {
  std::size_t dim = 0;
  int exponent = 0;  // the alignment exponent c used first
};
/// dim Hom(tau~^{-s} A, tau~^{-t} B) = dim Hom(F^{c-s} A [s], F^{c-t} B [t]) for c >= s, t,
/// computed at c and c + 1; CrossValidationError when the two disagree.
FormalHomReport formal_hom(const FormalObject& a, const FormalObject& b, const DecompositionOptions& opts = {});
std::size_t formal_hom_dim(const FormalObject& a, const FormalObject& b);

// ---- the tilted categories and named families ------------------------------------------------

/// Sigma = ZQ^op glued from the preprojective component (n >= 0) and the preinjective one
/// shifted by [-1] (n < 0: tau^{-n-1} I_x [-1]), over the columns [n_min, n_max]. For the
/// zigzag A-infinity-infinity and D-infinity families the ZA-infinity components are added
/// (columns [n_min, n_max], quasi-lengths 1..rows). Throws PreconditionError for Dynkin quivers.
ARComponentModel tilt_join(const QuiverSpec& spec, int level, long n_min, long n_max, long rows = 0);

struct SimpleReport {
  std::size_t tau_orbits = 0;
  std::vector<std::size_t> marked;  // model vertices marked simple
};
/// Marks the simples of the tilted A-infinity-infinity / D-infinity categories: the mouths of
/// the ZA-infinity components. Throws PreconditionError for other models.
SimpleReport mark_simples(ARComponentModel& model);

/// Component of an indecomposable of rep(Q) for the zigzag A-infinity-infinity,
/// D-infinity and A-infinity families: "preprojective", "preinjective", "ZA-inf#1",
/// "ZA-inf#2" (A-infinity-infinity) or "ZA-inf" (D-infinity).
std::string component_membership(FamilyTag family, const FamilyLabel& label);

/// Family label of an indecomposable with the given dimension vector over a family window.
std::optional<FamilyLabel> label_of_dimvec(FamilyTag family, const TruncatedQuiver& window, const DimVector& d);

/// Quasi-simple label at mouth position p of a ZA-infinity component, and the label at (p, r).
FamilyLabel za_inf_label(FamilyTag family, int which, long p, long r);

/// True when the underlying graph is a simply laced Dynkin diagram.
bool is_dynkin(const FiniteQuiver& q);

}  // namespace arknit
