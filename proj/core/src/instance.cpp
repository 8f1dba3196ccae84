#include "hllab/instance.hpp"

#include <cmath>
#include <sstream>

#include "hllab/errors.hpp"

namespace hllab {

HLInstance::HLInstance(std::vector<ExtScalar> p, std::optional<ExtScalar> r, std::optional<ExtScalar> q)
    : p_(std::move(p)), r_(std::move(r)), q_(std::move(q)) {
  if (p_.size() < 2) throw Error(ErrorKind::Domain, "degree m must be at least 2");
  for (const auto& pk : p_) {
    if (pk < ExtScalar{1}) throw Error(ErrorKind::Domain, "space exponent " + pk.to_string() + " < 1");
  }
  if (r_ && *r_ < ExtScalar{1}) throw Error(ErrorKind::Parameter, "r must be >= 1");
  if (q_ && *q_ < ExtScalar{1}) throw Error(ErrorKind::Parameter, "q must be >= 1");
  if (r_ && q_ && *r_ > *q_) throw Error(ErrorKind::Parameter, "r must not exceed q");

  tails_.assign(p_.size(), Rational(0));
  Rational acc = 0;
  for (std::size_t i = p_.size(); i-- > 0;) {
    acc += p_[i].reciprocal().value();
    tails_[i] = acc;
  }
}

HLInstance HLInstance::isotropic(int m, const ExtScalar& p) {
  if (m < 2) throw Error(ErrorKind::Domain, "degree m must be at least 2");
  return HLInstance(std::vector<ExtScalar>(static_cast<std::size_t>(m), p));
}

Rational HLInstance::tail(int k) const {
  if (k < 1 || k > m()) {
    throw Error(ErrorKind::Precondition, "tail index " + std::to_string(k) + " outside 1.." + std::to_string(m()));
  }
  return tails_[static_cast<std::size_t>(k - 1)];
}

std::string HLInstance::describe() const {
  std::ostringstream os;
  os << "m=" << m() << ", p=(";
  for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
  os << ")";
  if (r_) os << ", r=" << *r_;
  if (q_) os << ", q=" << *q_;
  return os.str();
}

std::string to_string(Source s) {
  switch (s) {
    case Source::Main: return "main";
    case Source::AlbuquerqueRezende: return "ar";
    case Source::Aron: return "aron";
    case Source::Dimant: return "dimant";
    case Source::OsikiewiczTonge: return "ot";
    case Source::Vector: return "vector";
    case Source::VectorIsotropic: return "vector-isotropic";
    case Source::Critical: return "critical";
    case Source::CriticalIso: return "critical-iso";
    case Source::Paulino: return "paulino";
    case Source::Praciano: return "praciano";
    case Source::RegularityShift: return "regularity-shift";
    case Source::User: return "user";
  }
  return "user";
}

Source source_from_string(const std::string& s) {
  for (Source src : {Source::Main, Source::AlbuquerqueRezende, Source::Aron, Source::Dimant,
                     Source::OsikiewiczTonge, Source::Vector, Source::VectorIsotropic, Source::Critical,
                     Source::CriticalIso, Source::Paulino, Source::Praciano, Source::RegularityShift,
                     Source::User}) {
    if (to_string(src) == s) return src;
  }
  throw Error(ErrorKind::Format, "unknown tuple source '" + s + "'");
}

double PowerOfTwo::to_double() const { return std::exp2(exponent.convert_to<double>()); }

std::string PowerOfTwo::to_string() const {
  if (exponent == 0) return "1";
  return "2^(" + ExtScalar(exponent).to_string() + ")";
}

bool ExponentTuple::weakly_decreasing() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) return false;
  }
  return true;
}

ExponentTuple make_tuple(std::vector<ExtScalar> values, Source source) {
  ExponentTuple t;
  t.values = std::move(values);
  t.source = source;
  return t;
}

std::string to_string(const ExponentTuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? ", " : "") << t.values[i];
  os << ")";
  return os.str();
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Subcritical: return "Subcritical";
    case Regime::Intermediate: return "Intermediate";
    case Regime::Critical: return "Critical";
    case Regime::Supercritical: return "Supercritical";
  }
  return "?";
}

bool RegimeClass::contains(Regime r) const noexcept {
  switch (r) {
    case Regime::Subcritical: return subcritical;
    case Regime::Intermediate: return intermediate;
    case Regime::Critical: return critical;
    case Regime::Supercritical: return supercritical;
  }
  return false;
}

std::string RegimeClass::to_string() const {
  std::string out;
  for (Regime r : {Regime::Subcritical, Regime::Intermediate, Regime::Critical, Regime::Supercritical}) {
    if (!contains(r)) continue;
    if (!out.empty()) out += "+";
    out += hllab::to_string(r);
  }
  return out + " (sum 1/p = " + ExtScalar(sum).to_string() + ")";
}

RegimeClass classify_regime(const HLInstance& inst) {
  RegimeClass c;
  c.sum = inst.recip_sum();
  const Rational half(1, 2);
  c.subcritical = c.sum <= half;
  c.intermediate = c.sum >= half && c.sum < 1;
  c.critical = c.sum == 1;
  c.supercritical = c.sum > 1;
  return c;
}

ExtScalar conjugate(const ExtScalar& p) {
  if (p < ExtScalar{1}) throw Error(ErrorKind::Domain, "conjugate of " + p.to_string() + " < 1");
  if (p.is_inf()) return ExtScalar{1};
  const Rational inv = Rational(1) - Rational(1) / p.value();
  return ExtScalar{inv}.reciprocal();
}

Rational recip_tail_sum(const HLInstance& inst, int k) { return inst.tail(k); }

int k0(const HLInstance& inst, const Rational& threshold) {
  for (int t = inst.m(); t >= 1; --t) {
    if (inst.tail(t) >= threshold) return t;
  }
  throw Error(ErrorKind::Precondition,
              "no index t has tail sum >= " + ExtScalar(threshold).to_string() + " (" + inst.describe() + ")");
}

}  // namespace hllab
