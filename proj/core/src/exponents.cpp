#include "hllab/exponents.hpp"

#include "hllab/errors.hpp"

namespace hllab {

namespace {

const Rational kHalf(1, 2);

// [x]^{-1} for a rational x ≥ 0 (1/0 = ∞).
ExtScalar inv(const Rational& x) {
  if (x < 0) throw Error(ErrorKind::Regime, "negative reciprocal exponent");
  return ExtScalar{x}.reciprocal();
}

// "Subcritical (sum 1/p = 1/4)"
std::string sum_text(const HLInstance& inst) {
  return classify_regime(inst).to_string();
}

void require_intermediate(const HLInstance& inst, const char* what) {
  const Rational s = inst.recip_sum();
  if (s < kHalf || s >= 1) {
    throw Error(ErrorKind::Regime, std::string(what) + " needs 1/2 <= sum 1/p < 1, got " + sum_text(inst) +
                                       ", " + inst.describe());
  }
}

ExponentTuple repeated(const ExtScalar& v, int m, Source src) {
  return make_tuple(std::vector<ExtScalar>(static_cast<std::size_t>(m), v), src);
}

}  // namespace

ExtScalar mu_praciano(const HLInstance& inst) {
  const Rational s = inst.recip_sum();
  if (s > kHalf) {
    throw Error(ErrorKind::Regime, "mu needs sum 1/p <= 1/2, got " + sum_text(inst));
  }
  const int m = inst.m();
  return ExtScalar{Rational(2 * m) / (Rational(m + 1) - 2 * s)};
}

ExponentTuple praciano_tuple(const HLInstance& inst) {
  return repeated(mu_praciano(inst), inst.m(), Source::Praciano);
}

ExtScalar lambda_dimant(const HLInstance& inst) {
  require_intermediate(inst, "lambda");
  return inv(1 - inst.recip_sum());
}

ExponentTuple dimant_tuple(const HLInstance& inst) {
  return repeated(lambda_dimant(inst), inst.m(), Source::Dimant);
}

ExponentTuple exponents_main(const HLInstance& inst) {
  require_intermediate(inst, "main theorem");
  const int m = inst.m();
  const int cut = k0(inst, kHalf);
  ExponentTuple t;
  t.source = Source::Main;
  t.k0 = cut;
  for (int k = 1; k <= m; ++k) {
    t.values.push_back(k <= cut ? inv(1 - inst.tail(k)) : ExtScalar{2});
  }
  t.constant = PowerOfTwo{Rational(m - cut, 2)};
  return t;
}

ExponentTuple exponents_ar(const HLInstance& inst) {
  const int m = inst.m();
  const ExtScalar upper{2 * m};
  for (const auto& pk : inst.p()) {
    if (pk <= ExtScalar{1} || pk > upper) {
      throw Error(ErrorKind::Domain, "Albuquerque-Rezende exponents need every p_k in (1, " +
                                         std::to_string(2 * m) + "], got " + pk.to_string());
    }
  }
  require_intermediate(inst, "Albuquerque-Rezende exponents");
  ExponentTuple t;
  t.source = Source::AlbuquerqueRezende;
  for (int k = 1; k <= m; ++k) {
    t.values.push_back(inv(kHalf + Rational(m - k + 1, 2 * m) - inst.tail(k)));
  }
  return t;
}

ExponentTuple exponents_aron(const HLInstance& inst) {
  const int m = inst.m();
  for (int k = 1; k < m; ++k) {
    if (inst.p(k) <= ExtScalar{1}) {
      throw Error(ErrorKind::Domain, "Aron et al. exponents need p_1..p_{m-1} in (1, inf], got p_" +
                                         std::to_string(k) + " = " + inst.p(k).to_string());
    }
  }
  if (inst.p(m) <= ExtScalar{1} || inst.p(m) > ExtScalar{2}) {
    throw Error(ErrorKind::Domain, "Aron et al. exponents need p_m in (1, 2], got " + inst.p(m).to_string());
  }
  require_intermediate(inst, "Aron et al. exponents");
  ExponentTuple t;
  t.source = Source::Aron;
  for (int k = 1; k <= m; ++k) t.values.push_back(inv(1 - inst.tail(k)));
  t.constant = PowerOfTwo{0};
  return t;
}

ExponentTuple exponents_ot(const ExtScalar& p1, const ExtScalar& p2) {
  if (p1 <= ExtScalar{2}) {
    throw Error(ErrorKind::Domain, "Osikiewicz-Tonge needs p1 in (2, inf], got " + p1.to_string());
  }
  if (p2 <= ExtScalar{1} || p2 > ExtScalar{2}) {
    throw Error(ErrorKind::Domain, "Osikiewicz-Tonge needs p2 in (1, 2], got " + p2.to_string());
  }
  const HLInstance inst({p1, p2});
  require_intermediate(inst, "Osikiewicz-Tonge");
  ExponentTuple t;
  t.source = Source::OsikiewiczTonge;
  t.values = {inv(1 - inst.recip_sum()), conjugate(p2)};
  t.constant = PowerOfTwo{0};
  return t;
}

ExponentTuple exponents_vector(const HLInstance& inst) {
  if (!inst.r() || !inst.q()) throw Error(ErrorKind::Parameter, "vector exponents need both r and q");
  const ExtScalar& r = *inst.r();
  const ExtScalar& q = *inst.q();
  if (r > q) throw Error(ErrorKind::Parameter, "r must not exceed q");
  const Rational inv_r = r.reciprocal().value();
  const Rational threshold = inv_r - q.reciprocal().value();
  const Rational s = inst.recip_sum();
  const int m = inst.m();

  if (s < threshold || s > inv_r) {
    throw Error(ErrorKind::Regime, "vector exponents need 1/r - 1/q <= sum 1/p <= 1/r, got " + sum_text(inst));
  }
  if (s == inv_r) {
    const Rational rest = inst.tail(2);
    if (rest < threshold || rest >= inv_r) {
      throw Error(ErrorKind::Regime,
                  "at sum 1/p = 1/r the vector exponents need 1/r - 1/q <= sum_{k>=2} 1/p < 1/r, got " +
                      ExtScalar(rest).to_string());
    }
  }

  const int cut = k0(inst, threshold);
  ExponentTuple t;
  t.source = Source::Vector;
  t.k0 = cut;
  for (int k = 1; k <= m; ++k) t.values.push_back(k <= cut ? inv(inv_r - inst.tail(k)) : q);
  return t;
}

ExponentTuple vector_isotropic_tuple(const HLInstance& inst) {
  if (!inst.r() || !inst.q()) throw Error(ErrorKind::Parameter, "vector exponents need both r and q");
  const Rational inv_r = inst.r()->reciprocal().value();
  const Rational threshold = inv_r - inst.q()->reciprocal().value();
  const Rational s = inst.recip_sum();
  if (s < threshold || s >= inv_r) {
    throw Error(ErrorKind::Regime, "isotropic vector exponent needs 1/r - 1/q <= sum 1/p < 1/r, got " + sum_text(inst));
  }
  return repeated(inv(inv_r - s), inst.m(), Source::VectorIsotropic);
}

ExponentTuple exponents_critical(const HLInstance& inst) {
  if (inst.recip_sum() != 1) {
    throw Error(ErrorKind::Regime, "critical exponents need sum 1/p = 1, got " + sum_text(inst));
  }
  const Rational rest = inst.tail(2);
  if (rest < kHalf || rest >= 1) {
    throw Error(ErrorKind::Regime,
                "critical exponents need 1/2 <= sum_{k>=2} 1/p < 1, got " + ExtScalar(rest).to_string());
  }
  const int m = inst.m();
  const int cut = k0(inst, kHalf);
  ExponentTuple t;
  t.source = Source::Critical;
  t.k0 = cut;
  t.values.push_back(ExtScalar::infinity());
  for (int k = 2; k <= m; ++k) t.values.push_back(k <= cut ? inv(1 - inst.tail(k)) : ExtScalar{2});
  return t;
}

ExponentTuple exponents_critical_iso(int m) {
  if (m < 2) throw Error(ErrorKind::Domain, "degree m must be at least 2");
  const int cut = (m + 2) / 2;
  ExponentTuple t;
  t.source = Source::CriticalIso;
  t.k0 = cut;
  t.values.push_back(ExtScalar::infinity());
  for (int k = 2; k <= m; ++k) t.values.push_back(k <= cut ? ExtScalar(m, k - 1) : ExtScalar{2});
  return t;
}

ExponentTuple exponents_paulino(int m) {
  if (m < 2) throw Error(ErrorKind::Domain, "degree m must be at least 2");
  ExponentTuple t;
  t.source = Source::Paulino;
  t.values.push_back(ExtScalar::infinity());
  for (int k = 2; k <= m; ++k) {
    t.values.push_back(ExtScalar(2LL * m * (m - 1), static_cast<long long>(m) * k - 2LL * k + 2));
  }
  return t;
}

PowerOfTwo constant_bound(const HLInstance& inst) {
  require_intermediate(inst, "constant bound");
  return PowerOfTwo{Rational(inst.m() - k0(inst, kHalf), 2)};
}

}  // namespace hllab
