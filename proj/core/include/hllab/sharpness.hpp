#pragma once

// Growth experiments: how the ratio mixed_norm(A, t) / ‖A‖ over random ±1
// forms scales with the dimension n, plus exact perturbation scans and region
// lattices built on classify_tuple.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hllab/admissibility.hpp"
#include "hllab/norm_estimation.hpp"
#include "hllab/tensor.hpp"

namespace hllab {

enum class NormMethod {
  Auto,        // oracle when the ball pattern and budget allow, else multistart
  Oracle,
  Multistart,
};

std::string to_string(NormMethod m);
NormMethod norm_method_from_string(const std::string& s);

/// Multistart gives a lower bound on ‖A‖, hence an upper bound on the ratio;
/// bounded-ratio comparisons on multistart rows allow this relative slack.
inline constexpr double kMultistartSlack = 0.02;

struct GrowthExperiment {
  int m{2};
  BallSpec p;
  MixedNormSpec t;
  std::vector<std::size_t> n_list;
  int trials{20};
  std::uint64_t seed{0};
  NormMethod method{NormMethod::Auto};
  int restarts{50};
  double budget{kDefaultOracleBudget};

  void validate() const;
};

struct TrialResult {
  std::uint64_t seed{0};
  double mixed{0.0};
  double norm{0.0};
  double ratio{0.0};
};

struct GrowthRow {
  std::size_t n{0};
  NormMethod method{NormMethod::Oracle};  // method actually used at this n
  double max_ratio{0.0};
  double mean_ratio{0.0};
  std::vector<TrialResult> trials;
};

enum class Verdict { Bounded, Growing, Inconclusive };
std::string to_string(Verdict v);

struct SlopeFit {
  double slope{0.0};
  double stderr_slope{0.0};
  double intercept{0.0};
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  SlopeFit fit;
  Verdict verdict{Verdict::Inconclusive};
  std::optional<Rational> predicted_slope;
};

/// Seed of trial `trial` at dimension n: derive_seed(base, n, trial).
std::uint64_t trial_seed(std::uint64_t base, std::size_t n, int trial) noexcept;

/// Runs the experiment; the slope is fitted on max-over-trials ratios.
GrowthReport ratio_curve(const GrowthExperiment& exp, double growth_threshold = 0.05);

/// Σ1/t_k - (m+1)/2 + Σ1/p_k; requires every p_k ≥ 2.
Rational predicted_slope(const std::vector<ExtScalar>& t, const std::vector<ExtScalar>& p);

/// Ordinary least squares of log(ratio) on log(n). Needs ≥ 3 distinct n and positive ratios.
SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points);

/// Growing if slope - 2σ > threshold, Bounded if slope + 2σ < threshold, else Inconclusive.
Verdict verdict(const SlopeFit& fit, double growth_threshold = 0.05);

enum class Direction { Decrease, Increase };

struct PerturbRow {
  int coordinate{1};  // 1-based
  ExtScalar eps;
  Direction direction{Direction::Decrease};
  std::optional<ExponentTuple> perturbed;  // empty when the decrease leaves [1, ∞]
  Classification classification;
  std::optional<Verdict> empirical;
};

/// Template for the optional empirical check in perturb_scan: p and t are
/// taken from the instance and the perturbed tuple.
struct EmpiricalCheck {
  std::vector<std::size_t> n_list;
  int trials{20};
  std::uint64_t seed{0};
  NormMethod method{NormMethod::Auto};
  int restarts{50};
  double budget{kDefaultOracleBudget};
  double growth_threshold{0.05};
};

/// For every coordinate j and ε: classify s with s_j decreased by ε and with
/// s_j increased by ε. An infinite coordinate decreases to the finite value 1/ε.
std::vector<PerturbRow> perturb_scan(const ExponentTuple& s, const HLInstance& inst,
                                     const std::vector<ExtScalar>& eps_list,
                                     const std::optional<EmpiricalCheck>& empirical = std::nullopt);

struct RegionPoint {
  std::vector<ExtScalar> t;
  Admissibility label{Admissibility::Unknown};
};

struct RegionSample {
  std::vector<RegionPoint> points;  // t1 outermost, t3 fastest
};

/// Classification lattice over axes[0] × axes[1] × axes[2]; m must be 3.
RegionSample region_grid(const HLInstance& inst, const std::vector<std::vector<ExtScalar>>& axes);

/// Rational grid lo, lo+step, ..., ≤ hi.
std::vector<ExtScalar> linear_axis(const ExtScalar& lo, const ExtScalar& hi, const ExtScalar& step);

}  // namespace hllab
