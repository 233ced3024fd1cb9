#include "arknit/field.hpp"

#include <charconv>

namespace arknit {

namespace {

std::uint64_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > (1u << 31)) throw ValidationError("prime too large (must be < 2^31)");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  Scalar s;
  s.field_ = *this;
  if (is_rational())
    s.q_ = v;
  else
    s.r_ = reduce(v, p_);
  return s;
}

Scalar Field::from_rational(long num, long den) const {
  if (den == 0) throw ValidationError("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view text) const {
  std::string t(text);
  if (t.empty()) throw ValidationError("empty scalar");
  if (is_rational()) {
    Scalar s;
    s.field_ = *this;
    if (s.q_.set_str(t, 10) != 0) throw ValidationError("bad rational scalar '" + t + "'");
    if (s.q_.get_den() == 0) throw ValidationError("zero denominator in '" + t + "'");
    s.q_.canonicalize();
    return s;
  }
  long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ValidationError("bad residue '" + t + "' for " + name());
  return from_int(v);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw ValidationError("arithmetic across different fields");
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = (r_ * o.r_) % field_.characteristic();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return field_.zero() - *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace arknit
