#pragma once

// Exponent formulas for Hardy–Littlewood inequalities of m-linear forms on
// ℓ_{p_1}^n × ... × ℓ_{p_m}^n. All arithmetic is exact; every function
// checks its own hypotheses and throws hllab::Error (Regime or Domain) when
// they fail.

#include "hllab/instance.hpp"

namespace hllab {

/// μ = 2m / (m + 1 - 2Σ1/p), for Σ1/p ≤ 1/2.
ExtScalar mu_praciano(const HLInstance& inst);
/// (μ, ..., μ).
ExponentTuple praciano_tuple(const HLInstance& inst);

/// λ = [1 - Σ1/p]^{-1}, for 1/2 ≤ Σ1/p < 1.
ExtScalar lambda_dimant(const HLInstance& inst);
/// (λ, ..., λ).
ExponentTuple dimant_tuple(const HLInstance& inst);

/// Globally sharp tuple for 1/2 ≤ Σ1/p < 1: s_k = [1 - tail_k]^{-1} up to k0, then 2.
/// Carries k0 and the constant bound 2^{(m-k0)/2}.
ExponentTuple exponents_main(const HLInstance& inst);

/// s_k = [1/2 + (m-k+1)/(2m) - tail_k]^{-1}; requires every p_k in (1, 2m].
ExponentTuple exponents_ar(const HLInstance& inst);

/// s_k = [1 - tail_k]^{-1}; requires p_1..p_{m-1} in (1, ∞] and p_m in (1, 2]. Constant 1.
ExponentTuple exponents_aron(const HLInstance& inst);

/// Bilinear (λ, p₂*) with 1/λ = 1 - 1/p₁ - 1/p₂ on (2, ∞] × (1, 2]. Constant 1.
ExponentTuple exponents_ot(const ExtScalar& p1, const ExtScalar& p2);

/// Vector-valued tuple for (r, q): s_k = [1/r - tail_k]^{-1} up to k0 (threshold
/// 1/r - 1/q), then q. At Σ1/p = 1/r the leading exponent is ∞ and Σ_{k≥2} must
/// lie in [1/r - 1/q, 1/r).
ExponentTuple exponents_vector(const HLInstance& inst);

/// (λ_r, ..., λ_r) with 1/λ_r = 1/r - Σ1/p, for 1/r - 1/q ≤ Σ1/p < 1/r.
ExponentTuple vector_isotropic_tuple(const HLInstance& inst);

/// Critical case Σ1/p = 1 with 1/2 ≤ Σ_{k≥2}1/p < 1: (∞, s_2, ..., s_m).
ExponentTuple exponents_critical(const HLInstance& inst);

/// Critical isotropic case p_1 = ... = p_m = m: s_k = m/(k-1) up to k0 = ⌊(m+2)/2⌋, then 2.
ExponentTuple exponents_critical_iso(int m);

/// (∞, s_2, ..., s_m) with s_k = 2m(m-1)/(mk - 2k + 2), for p_1 = ... = p_m = m.
ExponentTuple exponents_paulino(int m);

/// 2^{(m-k0)/2} for an instance in the intermediate regime.
PowerOfTwo constant_bound(const HLInstance& inst);

}  // namespace hllab
