#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arknit/artheory.hpp"

namespace arknit {

/// Connected finite-length hereditary category with Serre duality: nilpotent representations
/// of the oriented n-cycle 0 -> 1 -> ... -> n-1 -> 0 (rank n), or of A-infinity-infinity with
/// every arrow i -> i+1 (rank infinity).
class TubeCategory {
public:
  static TubeCategory of_rank(int n);
  static TubeCategory infinite();

  bool is_infinite() const { return !rank_; }
  /// Throws PreconditionError for the infinite rank.
  int rank() const;
  std::string rank_string() const;  // "3" or "inf"

  /// Index of a simple in canonical form (reduced mod n).
  long simple(long i) const;
  /// tau S_i = S_{v(i)}.
  long v(long i) const { return simple(i + 1); }
  long v_inv(long i) const { return simple(i - 1); }

  friend bool operator==(const TubeCategory&, const TubeCategory&) = default;

private:
  std::optional<int> rank_;
};

/// T_{i,m}: the uniserial object of length m with top (cosocle) S_i. Its composition factors
/// from the top are S_i, S_{i+1}, ..., S_{i+m-1}.
struct TubeObject {
  long top = 0;
  long length = 1;

  std::string to_string() const;
  friend bool operator==(const TubeObject&, const TubeObject&) = default;
  friend auto operator<=>(const TubeObject&, const TubeObject&) = default;
};

/// Canonical form (top reduced mod n); throws PreconditionError for length < 1.
TubeObject normalize(const TubeCategory& c, TubeObject t);

TubeObject tau_tube(const TubeCategory& c, const TubeObject& t);
TubeObject tau_inv_tube(const TubeCategory& c, const TubeObject& t);

struct TubeSequence {
  TubeObject left;                 // tau T
  std::vector<TubeObject> middle;  // canonical order
  TubeObject right;                // T
};

/// 0 -> T_{v(i),m} -> T_{i,m+1} (+) T_{v(i),m-1} -> T_{i,m} -> 0; the second middle summand is
/// absent for m = 1.
TubeSequence ass_tube(const TubeCategory& c, const TubeObject& t);

/// Number of k in 1..min(m, m') such that the length-k quotient of X equals the length-k
/// subobject of Y.
std::size_t hom_dim_tube(const TubeCategory& c, const TubeObject& x, const TubeObject& y);

/// The quiver used for realizations: the n-cycle (one loop for n = 1), or a window of the
/// linear A-infinity-infinity at `level` for the infinite rank.
QuiverPtr tube_quiver(const TubeCategory& c, int level = 0);

/// The uniserial nilpotent representation of T on tube_quiver(c, level). For the infinite
/// rank the window must contain the support i .. i+m-1 (TruncationError otherwise).
Representation realize_tube_object(const TubeCategory& c, const TubeObject& t, const Field& f, int level = 0);

/// Recognizes a uniserial nilpotent representation: its radical series must drop by one each
/// step. Throws PreconditionError otherwise.
TubeObject identify_tube_object(const TubeCategory& c, const Representation& x);

/// Finite-length category descriptor for the taxonomy.
struct FiniteLengthDescriptor {
  std::optional<long> simples;  // nullopt: infinitely many
  bool connected = true;
};
/// "tube(n)" or "A-inf-inf-nilpotent"; PreconditionError when disconnected or with no simples.
std::string classify_finite_length(const FiniteLengthDescriptor& d);

}  // namespace arknit
