#include "hllab/ext_scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "hllab/errors.hpp"

namespace hllab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Regime: return "regime";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Format: return "format";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

ExtScalar::ExtScalar(std::int64_t value) : value_(value) {
  if (value < 0) throw Error(ErrorKind::Domain, "ExtScalar must be nonnegative");
}

ExtScalar::ExtScalar(Rational value) : value_(std::move(value)) {
  if (value_ < 0) throw Error(ErrorKind::Domain, "ExtScalar must be nonnegative");
}

ExtScalar::ExtScalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
  value_ = Rational(num, den);
  if (value_ < 0) throw Error(ErrorKind::Domain, "ExtScalar must be nonnegative");
}

ExtScalar ExtScalar::infinity() {
  ExtScalar x;
  x.inf_ = true;
  return x;
}

const Rational& ExtScalar::value() const {
  if (inf_) throw Error(ErrorKind::Domain, "value() of infinity");
  return value_;
}

ExtScalar ExtScalar::reciprocal() const {
  if (inf_) return ExtScalar{0};
  if (value_ == 0) return infinity();
  return ExtScalar{Rational(1) / value_};
}

double ExtScalar::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return value_.convert_to<double>();
}

std::string ExtScalar::to_string() const {
  if (inf_) return "inf";
  const auto num = boost::multiprecision::numerator(value_);
  const auto den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

using BigInt = boost::multiprecision::cpp_int;

}  // namespace

ExtScalar ExtScalar::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity" || s == "∞") return infinity();
  const auto bad = [&] { return Error(ErrorKind::Format, "cannot parse exact value '" + std::string(text) + "'"); };

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const BigInt d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::Domain, "zero denominator in '" + std::string(text) + "'");
    return ExtScalar{Rational(BigInt(std::string(num)), d)};
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw bad();
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    num = num * scale + (frac.empty() ? BigInt(0) : BigInt(std::string(frac)));
    return ExtScalar{Rational(num, scale)};
  }
  if (!all_digits(s)) throw bad();
  return ExtScalar{Rational(BigInt(std::string(s)))};
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  if (a.inf_ || b.inf_) return ExtScalar::infinity();
  return ExtScalar{a.value_ + b.value_};
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
  if (b.inf_) throw Error(ErrorKind::Domain, "subtracting infinity");
  if (a.inf_) return ExtScalar::infinity();
  if (b.value_ > a.value_) throw Error(ErrorKind::Domain, "negative ExtScalar difference");
  return ExtScalar{a.value_ - b.value_};
}

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  if (a.inf_ || b.inf_) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::Domain, "0 * inf is undefined");
    return ExtScalar::infinity();
  }
  return ExtScalar{a.value_ * b.value_};
}

bool operator==(const ExtScalar& a, const ExtScalar& b) noexcept {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) noexcept {
  if (a.inf_ || b.inf_) {
    if (a.inf_ == b.inf_) return std::strong_ordering::equal;
    return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.to_string(); }

std::string truncated_decimal(const ExtScalar& x, int digits) {
  if (x.is_inf()) return "inf";
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = x.value() * scale;
  const BigInt q = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  const BigInt whole = q / scale;
  BigInt frac = q % scale;
  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

std::string rational_text(const Rational& x) {
  if (x < 0) return "-" + ExtScalar(Rational(-x)).to_string();
  return ExtScalar(x).to_string();
}

}  // namespace hllab
