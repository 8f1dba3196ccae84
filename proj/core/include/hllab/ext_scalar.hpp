#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hllab {

using Rational = boost::multiprecision::cpp_rational;

/// Nonnegative exact rational extended with +inf.
///
/// Used both for exponents (p, t, s, r, q, ...) and for their reciprocals.
/// `reciprocal()` follows the conventions 1/inf = 0 and 1/0 = inf, so it is
/// an involution on the whole set.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit ExtScalar(Rational value);
  ExtScalar(std::int64_t num, std::int64_t den);

  static ExtScalar infinity();

  bool is_inf() const noexcept { return inf_; }
  bool is_zero() const noexcept { return !inf_ && value_ == 0; }
  bool is_finite() const noexcept { return !inf_; }

  /// Finite value; throws for +inf.
  const Rational& value() const;

  ExtScalar reciprocal() const;

  /// Nearest double (inf maps to +infinity).
  double to_double() const;

  /// "inf", "7" or "10/3".
  std::string to_string() const;

  /// Accepts "inf", "∞", integers, "a/b" and finite decimals such as "0.01".
  static ExtScalar parse(std::string_view text);

  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  /// Saturating at zero is not applied: a - b with b > a throws.
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
  /// 0 * inf throws.
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);

  ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) noexcept;
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) noexcept;

 private:
  Rational value_{0};
  bool inf_{false};
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& x);

/// Decimal rendering with `digits` places, truncated toward zero ("inf" for +inf).
std::string truncated_decimal(const ExtScalar& x, int digits);

/// Signed rational as "-3/4" or "2".
std::string rational_text(const Rational& x);

}  // namespace hllab
