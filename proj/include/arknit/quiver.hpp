#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "arknit/error.hpp"

namespace arknit {

using VertexId = std::string;

struct Arrow {
  VertexId source;
  VertexId target;
  std::string label;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver. Arrows x -> y correspond to irreducible maps P_y -> P_x.
struct FiniteQuiver {
  std::vector<VertexId> vertices;
  std::vector<Arrow> arrows;
  friend bool operator==(const FiniteQuiver&, const FiniteQuiver&) = default;
};

enum class FamilyTag { AInf, ABiInf, DInf, CycleTilde, Comb };

/// Closed set of orientation rules. `Zigzag` carries a phase: with `even_sources` the even
/// vertices are sources (the convention used by the A-infinity-infinity and D-infinity models).
enum class Orientation { LinearRight, LinearLeft, Zigzag };

/// Infinite (or cyclic) families described by a tag and an orientation rule.
///
/// Vertex naming is `prefix + index`:
///  - AInf:        indices start, start+1, ...; LinearRight is x_i -> x_{i+1}.
///  - ABiInf:      all integers; LinearRight is i -> i+1.
///  - DInf:        0, 1 (the fork) and 2, 3, ...; both 0 and 1 are adjacent to 2.
///                 LinearRight is 0 -> 2, 1 -> 2, i -> i+1.
///  - CycleTilde:  0 .. n-1 with i -> i+1 mod n (LinearRight); never satisfies (P2).
///  - Comb:        spine prefix+"x"+i -> prefix+"x"+(i+1) with one tooth prefix+"y"+i per
///                 spine vertex. LinearRight teeth point out (x_i -> y_i), LinearLeft point in.
/// Zigzag is only defined for AInf, ABiInf and DInf. In DInf the fork vertices 0, 1 count as odd.
struct FamilySpec {
  FamilyTag tag = FamilyTag::AInf;
  Orientation orientation = Orientation::LinearRight;
  bool even_sources = true;
  int cycle_length = 1;
  int start = 0;
  std::string prefix;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A ray attach -> v1 -> v2 -> ... with vertices prefix + (first_index + k).
struct Ray {
  VertexId attach;
  std::string prefix = "r";
  int first_index = 1;
  friend bool operator==(const Ray&, const Ray&) = default;
};

struct CompositeSpec {
  FiniteQuiver base;
  std::vector<Ray> rays;
  friend bool operator==(const CompositeSpec&, const CompositeSpec&) = default;
};

class TruncatedQuiver;

/// A finite quiver or a finite description of an infinite one.
class QuiverSpec {
public:
  using Body = std::variant<FiniteQuiver, FamilySpec, CompositeSpec>;

  QuiverSpec() = default;
  QuiverSpec(FiniteQuiver q);
  QuiverSpec(FamilySpec f);
  QuiverSpec(CompositeSpec c);

  const Body& body() const { return body_; }
  bool is_finite() const;
  std::string kind_name() const;

  /// Throws ValidationError naming the offending arrow or ray.
  void validate() const;

  friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;

private:
  Body body_;
};

/// Convenience constructors.
QuiverSpec finite_quiver(std::vector<VertexId> vertices,
                         std::vector<std::pair<VertexId, VertexId>> arrows);
QuiverSpec linear_a(int n);                               // 1 -> 2 -> ... -> n
QuiverSpec family(FamilyTag tag, Orientation o, std::string prefix = "");
QuiverSpec zigzag_a_biinf();                              // A-infinity-infinity, even sources
QuiverSpec zigzag_d_inf();                                // D-infinity, even sources
QuiverSpec cyclic_quiver(int n);
QuiverSpec comb_quiver(bool teeth_out = true);

struct TruncatedArrow {
  std::size_t source;
  std::size_t target;
  std::string label;
  friend bool operator==(const TruncatedArrow&, const TruncatedArrow&) = default;
};

/// Finite window of a QuiverSpec: the ball of radius `level` around the anchor set.
/// Vertices with arrows crossing the window boundary are flagged open.
class TruncatedQuiver {
public:
  TruncatedQuiver() = default;
  TruncatedQuiver(std::vector<VertexId> vertices, std::vector<TruncatedArrow> arrows, int level = 0,
                  std::vector<bool> open_out = {}, std::vector<bool> open_in = {});

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<TruncatedArrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  int level() const { return level_; }

  bool contains(const VertexId& v) const { return index_.count(v) > 0; }
  /// Throws PreconditionError for unknown vertices.
  std::size_t index_of(const VertexId& v) const;
  std::optional<std::size_t> arrow_index(const std::string& label) const;

  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_[v]; }

  /// The vertex has an outgoing (incoming) arrow of the full quiver leaving (entering) the window.
  bool open_out(std::size_t v) const { return open_out_[v]; }
  bool open_in(std::size_t v) const { return open_in_[v]; }
  bool closed() const;

  bool is_acyclic() const;
  /// Vertex indices in an order where every arrow goes forward.
  std::vector<std::size_t> topological_order() const;

  /// Same vertices and arrows (levels and open flags ignored).
  bool same_shape(const TruncatedQuiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

  FiniteQuiver as_finite() const;

private:
  std::vector<VertexId> vertices_;
  std::vector<TruncatedArrow> arrows_;
  int level_ = 0;
  std::vector<bool> open_out_;
  std::vector<bool> open_in_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

using QuiverPtr = std::shared_ptr<const TruncatedQuiver>;

/// Finite window of `spec` at radius `level`; deterministic and monotone in `level`.
TruncatedQuiver truncate(const QuiverSpec& spec, int level);
QuiverPtr truncate_ptr(const QuiverSpec& spec, int level);
/// Finite quivers wrapped as closed windows.
QuiverPtr make_quiver(const FiniteQuiver& q);

/// Graph distance of a vertex from the anchor set, or nullopt for unknown vertex names.
std::optional<int> anchor_distance(const QuiverSpec& spec, const VertexId& v);

struct Path {
  VertexId source;
  VertexId target;
  std::vector<std::size_t> arrows;  // indices into the window's arrow list
  std::size_t length() const { return arrows.size(); }
};

/// Condition (P2): no infinite path ... -> x2 -> x1 -> x0 ends at a vertex.
bool check_p2(const QuiverSpec& spec);
/// Condition (P1): local finiteness. Always true for this grammar; kept as an explicit check.
bool check_p1(const QuiverSpec& spec);

/// All paths from -> to (trivial path included when from == to), ordered lexicographically
/// by arrow labels. Throws PreconditionError when a cycle makes the set infinite.
std::vector<Path> enumerate_paths(const TruncatedQuiver& q, const VertexId& from, const VertexId& to);
std::size_t count_paths(const TruncatedQuiver& q, std::size_t from, std::size_t to);

struct StabilizedCount {
  std::size_t count = 0;
  int stable_level = 0;   // first level from which the count no longer changes
  int checked_level = 0;  // level at which stability was confirmed
};

inline constexpr int kDefaultLevelBudget = 64;

/// Number of paths ending at x (trivial path included), stabilized over increasing levels.
/// Throws TruncationError("possible (P2) violation") when no stabilization within budget.
StabilizedCount count_paths_ending_at(const QuiverSpec& spec, const VertexId& x,
                                      int level_budget = kDefaultLevelBudget);
/// Same for paths starting at x.
StabilizedCount count_paths_starting_at(const QuiverSpec& spec, const VertexId& x,
                                        int level_budget = kDefaultLevelBudget);

bool is_connected(const QuiverSpec& spec);
bool is_strongly_locally_finite(const QuiverSpec& spec);

struct StarDecision {
  bool is_star = false;
  /// Strongly locally finite core (may itself be an infinite family).
  std::optional<QuiverSpec> core;
  std::vector<Ray> rays;
  /// Human-readable obstruction for non-stars.
  std::string obstruction;
};

/// Decides whether a connected (P1)(P2) quiver is a star: a strongly locally finite core with
/// finitely many rays attached. Throws PreconditionError for (P1)/(P2) violations or
/// disconnected input.
StarDecision is_star(const QuiverSpec& spec);
/// Re-assembles core + rays into a Composite (or the core itself when there are no rays).
QuiverSpec assemble_star(const StarDecision& d);

/// The opposite quiver of a finite quiver.
FiniteQuiver opposite(const FiniteQuiver& q);

}  // namespace arknit
