#include "hllab/sharpness.hpp"

#include <algorithm>
#include <cmath>

#include "hllab/errors.hpp"
#include "hllab/ksz.hpp"

namespace hllab {

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::Auto: return "auto";
    case NormMethod::Oracle: return "oracle";
    case NormMethod::Multistart: return "multistart";
  }
  return "auto";
}

NormMethod norm_method_from_string(const std::string& s) {
  if (s == "auto") return NormMethod::Auto;
  if (s == "oracle") return NormMethod::Oracle;
  if (s == "multistart") return NormMethod::Multistart;
  throw Error(ErrorKind::Format, "unknown norm method '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded: return "Bounded";
    case Verdict::Growing: return "Growing";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

void GrowthExperiment::validate() const {
  if (m < 1) throw Error(ErrorKind::Parameter, "m must be >= 1");
  if (p.p.size() != static_cast<std::size_t>(m)) throw Error(ErrorKind::Dimension, "ball must have m slots");
  if (t.t.size() != static_cast<std::size_t>(m)) throw Error(ErrorKind::Dimension, "mixed norm must have m exponents");
  if (trials < 1) throw Error(ErrorKind::Parameter, "trials must be >= 1");
  if (restarts < 1) throw Error(ErrorKind::Parameter, "restarts must be >= 1");
  if (n_list.empty()) throw Error(ErrorKind::Parameter, "n_list is empty");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] == 0) throw Error(ErrorKind::Parameter, "n must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw Error(ErrorKind::Parameter, "n_list must be strictly increasing");
  }
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t n, int trial) noexcept {
  return derive_seed(base, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
}

GrowthReport ratio_curve(const GrowthExperiment& exp, double growth_threshold) {
  exp.validate();
  GrowthReport report;
  std::vector<std::pair<double, double>> points;

  for (std::size_t n : exp.n_list) {
    GrowthRow row;
    row.n = n;
    const auto probe = CoefficientTensor::zeros(std::vector<std::size_t>(static_cast<std::size_t>(exp.m), n));
    const double cost = oracle_cost(probe, exp.p);
    const bool oracle_ok = cost <= exp.budget && !std::isinf(cost);
    switch (exp.method) {
      case NormMethod::Oracle:
        if (!oracle_ok) {
          throw Error(ErrorKind::Infeasible, "exact oracle infeasible at n=" + std::to_string(n) + ": cost " +
                                                 std::to_string(cost) + " exceeds budget " + std::to_string(exp.budget));
        }
        row.method = NormMethod::Oracle;
        break;
      case NormMethod::Multistart: row.method = NormMethod::Multistart; break;
      case NormMethod::Auto: row.method = oracle_ok ? NormMethod::Oracle : NormMethod::Multistart; break;
    }

    double sum = 0.0;
    for (int trial = 0; trial < exp.trials; ++trial) {
      TrialResult tr;
      tr.seed = trial_seed(exp.seed, n, trial);
      const auto T = ksz_sample(exp.m, n, tr.seed);
      tr.mixed = mixed_norm(T, exp.t);
      if (row.method == NormMethod::Oracle) {
        tr.norm = exact_norm(T, exp.p, exp.budget).value;
      } else {
        MultistartOptions opts;
        opts.restarts = exp.restarts;
        opts.seed = derive_seed(tr.seed, 1, 0);
        tr.norm = estimate_norm(T, exp.p, opts).value;
      }
      tr.ratio = tr.mixed / tr.norm;
      sum += tr.ratio;
      row.max_ratio = std::max(row.max_ratio, tr.ratio);
      row.trials.push_back(tr);
    }
    row.mean_ratio = sum / exp.trials;
    points.emplace_back(static_cast<double>(n), row.max_ratio);
    report.rows.push_back(std::move(row));
  }

  if (points.size() >= 3) {
    report.fit = fit_slope(points);
    report.verdict = verdict(report.fit, growth_threshold);
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  try {
    report.predicted_slope = predicted_slope(exp.t.t, exp.p.p);
  } catch (const Error&) {
    // prediction only covers p_k ≥ 2
  }
  return report;
}

Rational predicted_slope(const std::vector<ExtScalar>& t, const std::vector<ExtScalar>& p) {
  if (t.size() != p.size() || t.empty()) throw Error(ErrorKind::Dimension, "t and p must have the same length");
  Rational acc = -Rational(static_cast<long long>(t.size()) + 1, 2);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (p[k] < ExtScalar{2}) {
      throw Error(ErrorKind::NotApplicable, "slope prediction needs p_k >= 2, got " + p[k].to_string());
    }
    if (t[k].is_zero()) throw Error(ErrorKind::Domain, "norm exponent 0");
    acc += t[k].reciprocal().value() + p[k].reciprocal().value();
  }
  return acc;
}

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points) {
  std::vector<double> xs;
  for (const auto& [n, ratio] : points) {
    if (!(ratio > 0.0)) throw Error(ErrorKind::Domain, "ratios must be positive for a log-log fit");
    if (!(n > 0.0)) throw Error(ErrorKind::Domain, "n must be positive");
    if (std::find(xs.begin(), xs.end(), n) == xs.end()) xs.push_back(n);
  }
  if (xs.size() < 3) throw Error(ErrorKind::Precondition, "slope fit needs at least 3 distinct n");

  const double count = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [n, ratio] : points) {
    mx += std::log(n);
    my += std::log(ratio);
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [n, ratio] : points) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(ratio) - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (const auto& [n, ratio] : points) {
    const double r = std::log(ratio) - (fit.intercept + fit.slope * std::log(n));
    ssr += r * r;
  }
  fit.stderr_slope = points.size() > 2 ? std::sqrt(ssr / (count - 2.0) / sxx) : 0.0;
  return fit;
}

Verdict verdict(const SlopeFit& fit, double growth_threshold) {
  if (fit.slope - 2.0 * fit.stderr_slope > growth_threshold) return Verdict::Growing;
  if (fit.slope + 2.0 * fit.stderr_slope < growth_threshold) return Verdict::Bounded;
  return Verdict::Inconclusive;
}

std::vector<PerturbRow> perturb_scan(const ExponentTuple& s, const HLInstance& inst,
                                     const std::vector<ExtScalar>& eps_list,
                                     const std::optional<EmpiricalCheck>& empirical) {
  if (s.m() != inst.m()) throw Error(ErrorKind::Dimension, "tuple length does not match m");
  std::vector<PerturbRow> rows;
  for (int j = 1; j <= s.m(); ++j) {
    for (const auto& eps : eps_list) {
      if (eps.is_zero() || eps.is_inf()) throw Error(ErrorKind::Domain, "eps must be positive and finite");
      for (Direction dir : {Direction::Decrease, Direction::Increase}) {
        PerturbRow row;
        row.coordinate = j;
        row.eps = eps;
        row.direction = dir;
        ExponentTuple t = s;
        t.source = Source::User;
        t.k0.reset();
        t.constant.reset();
        auto& v = t.values[static_cast<std::size_t>(j - 1)];
        if (dir == Direction::Increase) {
          v = v + eps;
        } else if (v.is_inf()) {
          v = eps.reciprocal();
        } else if (v.value() - eps.value() >= 1) {
          v = ExtScalar{v.value() - eps.value()};
        } else {
          row.classification = {Admissibility::Unknown, "decrease leaves [1, inf]"};
          rows.push_back(std::move(row));
          continue;
        }
        row.classification = classify_tuple(t, inst);
        if (empirical) {
          GrowthExperiment exp;
          exp.m = inst.m();
          exp.p = BallSpec{inst.p()};
          exp.t = MixedNormSpec{t.values};
          exp.n_list = empirical->n_list;
          exp.trials = empirical->trials;
          exp.seed = empirical->seed;
          exp.method = empirical->method;
          exp.restarts = empirical->restarts;
          exp.budget = empirical->budget;
          row.empirical = ratio_curve(exp, empirical->growth_threshold).verdict;
        }
        row.perturbed = std::move(t);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

RegionSample region_grid(const HLInstance& inst, const std::vector<std::vector<ExtScalar>>& axes) {
  if (inst.m() != 3) throw Error(ErrorKind::Domain, "region grids are only defined for m = 3");
  if (axes.size() != 3) throw Error(ErrorKind::Dimension, "need three axes");
  RegionSample out;
  for (const auto& a : axes[0]) {
    for (const auto& b : axes[1]) {
      for (const auto& c : axes[2]) {
        RegionPoint pt;
        pt.t = {a, b, c};
        pt.label = classify_tuple(make_tuple(pt.t), inst).label;
        out.points.push_back(std::move(pt));
      }
    }
  }
  return out;
}

std::vector<ExtScalar> linear_axis(const ExtScalar& lo, const ExtScalar& hi, const ExtScalar& step) {
  if (lo.is_inf() || hi.is_inf() || step.is_inf() || step.is_zero()) {
    throw Error(ErrorKind::Domain, "axis bounds and step must be finite, step positive");
  }
  std::vector<ExtScalar> out;
  for (Rational x = lo.value(); x <= hi.value(); x += step.value()) out.emplace_back(x);
  return out;
}

}  // namespace hllab
