#pragma once

// Operator norm ‖A‖ = sup |A(z1, ..., zm)| over ‖z_k‖_{p_k} ≤ 1 of the form
// with coefficient tensor T.
//
// alternating_ascent / estimate_norm give lower bounds: each block update is
// solved exactly by Hölder duality, so the objective never decreases. exact_norm
// enumerates the extreme points of ℓ∞ balls (sign vectors) and ℓ1 balls (±e_j)
// for all slots but the last, which is closed by duality.
//
// Slot indices in this header are 0-based.

#include <cstdint>
#include <span>
#include <vector>

#include "hllab/ext_scalar.hpp"
#include "hllab/tensor.hpp"

namespace hllab {

struct BallSpec {
  std::vector<ExtScalar> p;

  std::vector<double> as_doubles() const;
};

struct NormEstimate {
  double value{0.0};
  std::vector<std::vector<double>> witnesses;
  int restarts_used{0};
  int iterations{0};  // sweeps of the best ascent, or enumerated states for the oracle
  bool converged{false};
  bool exact{false};
  /// Objective after each sweep of the reported ascent.
  std::vector<double> history;
};

/// c_j = A(x1, ..., e_j at `slot`, ..., xm). `vectors` has one entry per slot;
/// the entry at `slot` is ignored.
std::vector<double> contract_all_but(const CoefficientTensor& T, int slot,
                                     std::span<const std::vector<double>> vectors);

/// A(x1, ..., xm).
double evaluate_form(const CoefficientTensor& T, std::span<const std::vector<double>> vectors);

struct DualSolution {
  double value{0.0};
  std::vector<double> z;
};

/// sup_{‖z‖_p ≤ 1} <c, z> = ‖c‖_{p*} with a maximizer z. p = 1 picks the
/// largest |c_j| (lowest index on ties); p = ∞ uses sign(c) with sign(0) = +1;
/// c = 0 gives value 0 and z = e_1.
DualSolution dual_maximizer(std::span<const double> c, double p);

struct AscentOptions {
  double tol{1e-12};
  int max_iter{500};
};

NormEstimate alternating_ascent(const CoefficientTensor& T, const BallSpec& ball,
                                std::vector<std::vector<double>> init, const AscentOptions& opts = {});

struct MultistartOptions {
  int restarts{50};
  std::uint64_t seed{0};
  AscentOptions ascent{};
};

/// Best of one ascent from the normalized all-ones start (index 0) and
/// `restarts` ascents from seeded random points of the unit spheres. Ties go
/// to the lowest start index.
NormEstimate estimate_norm(const CoefficientTensor& T, const BallSpec& ball, const MultistartOptions& opts = {});

inline constexpr double kDefaultOracleBudget = 16777216.0;  // 2^24

/// Π over enumerated slots of (2^n for ∞ slots, 2n for 1 slots); +inf when the
/// ball pattern is unsupported by the oracle.
double oracle_cost(const CoefficientTensor& T, const BallSpec& ball);

/// Throws Infeasible for unsupported patterns or when oracle_cost exceeds budget.
NormEstimate exact_norm(const CoefficientTensor& T, const BallSpec& ball, double budget = kDefaultOracleBudget);

/// Random unit vector of ℓ_p^n from symmetric uniform coordinates, drawn from
/// raw mt19937_64 output so it is reproducible across standard libraries.
std::vector<double> random_unit_vector(std::size_t n, double p, std::uint64_t seed);

}  // namespace hllab
