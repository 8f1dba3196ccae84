#pragma once

#include <optional>
#include <vector>

#include "hllab/instance.hpp"

namespace hllab {

struct RegularityShift {
  /// 1/s_k for every k; may be negative when the positivity condition fails.
  std::vector<Rational> reciprocals;
  /// Present when every 1/s_k ≥ 0.
  std::optional<ExponentTuple> s;
  /// 1/r - Σ1/p + Σ1/q > 0 and every s_k ≥ 1.
  bool valid{false};
};

/// Solves 1/s_k - Σ_{j≥k} 1/q_j = 1/r - Σ_{j≥k} 1/p_j for all k.
/// Requires q_k ≥ p_k componentwise and r ≥ 1.
RegularityShift regularity_shift(const ExtScalar& r, const std::vector<ExtScalar>& p,
                                 const std::vector<ExtScalar>& q);

/// α = p₁p₂ / (2p₁ - p₂), for 1 ≤ p₁ ≤ p₂ < 2p₁.
ExtScalar rp_alpha(const ExtScalar& p1, const ExtScalar& p2);

/// δ = 2εp₁ / (p₁ - ε), for 0 < ε < p₁. Satisfies p₁ + δ = rp_alpha(p₁, p₁ + ε).
ExtScalar rp_delta(const ExtScalar& p1, const ExtScalar& eps);

}  // namespace hllab
