#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "arknit/error.hpp"

namespace arknit {

class Scalar;

/// Base field descriptor: the rationals or a prime field F_p.
class Field {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  Field() = default;
  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(long num, long den) const;
  /// Parses "3", "-2/5" (rationals) or an integer residue (prime fields).
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact scalar. Rationals live in `q_`; prime-field residues in `r_`.
class Scalar {
public:
  Scalar() = default;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "3/2", "-1", or the canonical residue in [0, p).
  std::string to_string() const;

  /// Rational value (only for rational fields).
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

private:
  friend class Field;
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;

  void check_same(const Scalar& o) const;
};

}  // namespace arknit
