#include "hllab/norm_estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "hllab/errors.hpp"
#include "hllab/ksz.hpp"

namespace hllab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

void check_ball(const CoefficientTensor& T, const BallSpec& ball) {
  if (ball.p.size() != static_cast<std::size_t>(T.order())) {
    throw Error(ErrorKind::Dimension, "ball has " + std::to_string(ball.p.size()) + " slots for an order " +
                                          std::to_string(T.order()) + " tensor");
  }
}

// Contract axis `axis` of a row-major array of shape `dims` with x.
std::vector<double> contract_axis(std::span<const double> a, std::vector<std::size_t>& dims, std::size_t axis,
                                  std::span<const double> x) {
  std::size_t outer = 1;
  std::size_t inner = 1;
  for (std::size_t i = 0; i < axis; ++i) outer *= dims[i];
  for (std::size_t i = axis + 1; i < dims.size(); ++i) inner *= dims[i];
  const std::size_t d = dims[axis];
  std::vector<double> out(outer * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o) {
    const double* src = a.data() + o * d * inner;
    double* dst = out.data() + o * inner;
    for (std::size_t j = 0; j < d; ++j) {
      const double w = x[j];
      if (w == 0.0) continue;
      const double* row = src + j * inner;
      for (std::size_t i = 0; i < inner; ++i) dst[i] += w * row[i];
    }
  }
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(axis));
  return out;
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<double> BallSpec::as_doubles() const {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& pk : p) {
    if (pk < ExtScalar{1}) throw Error(ErrorKind::Domain, "ball exponent " + pk.to_string() + " < 1");
    out.push_back(pk.to_double());
  }
  return out;
}

std::vector<double> contract_all_but(const CoefficientTensor& T, int slot,
                                     std::span<const std::vector<double>> vectors) {
  const int m = T.order();
  if (slot < 0 || slot >= m) throw Error(ErrorKind::Dimension, "slot out of range");
  if (vectors.size() != static_cast<std::size_t>(m)) throw Error(ErrorKind::Dimension, "need one vector per slot");
  for (int i = 0; i < m; ++i) {
    if (i != slot && vectors[static_cast<std::size_t>(i)].size() != T.dims()[static_cast<std::size_t>(i)]) {
      throw Error(ErrorKind::Dimension, "vector " + std::to_string(i) + " has the wrong length");
    }
  }
  std::vector<std::size_t> dims = T.dims();
  std::vector<double> work(T.entries().begin(), T.entries().end());
  // Trailing axes first so that the remaining axis positions stay valid.
  for (int i = m - 1; i >= 0; --i) {
    if (i == slot) continue;
    work = contract_axis(work, dims, static_cast<std::size_t>(i), vectors[static_cast<std::size_t>(i)]);
  }
  return work;
}

double evaluate_form(const CoefficientTensor& T, std::span<const std::vector<double>> vectors) {
  const auto c = contract_all_but(T, 0, vectors);
  const auto& x = vectors[0];
  if (x.size() != c.size()) throw Error(ErrorKind::Dimension, "vector 0 has the wrong length");
  double acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * x[j];
  return acc;
}

DualSolution dual_maximizer(std::span<const double> c, double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::Domain, "ball exponent below 1");
  if (c.empty()) throw Error(ErrorKind::Dimension, "empty coefficient vector");
  DualSolution out;
  out.z.assign(c.size(), 0.0);

  double peak = 0.0;
  std::size_t arg = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (std::abs(c[j]) > peak) {
      peak = std::abs(c[j]);
      arg = j;
    }
  }
  if (peak == 0.0) {
    out.z[0] = 1.0;
    return out;
  }

  if (p == 1.0) {
    out.value = peak;
    out.z[arg] = c[arg] < 0 ? -1.0 : 1.0;
    return out;
  }
  if (std::isinf(p)) {
    out.value = lp_norm(c, 1.0);
    for (std::size_t j = 0; j < c.size(); ++j) out.z[j] = c[j] < 0 ? -1.0 : 1.0;
    return out;
  }
  const double q = conjugate_exponent(p);
  const double norm = lp_norm(c, q);
  out.value = norm;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double r = std::abs(c[j]) / norm;
    const double mag = q == 2.0 ? r : std::pow(r, q - 1.0);
    out.z[j] = c[j] < 0 ? -mag : mag;
  }
  return out;
}

NormEstimate alternating_ascent(const CoefficientTensor& T, const BallSpec& ball,
                                std::vector<std::vector<double>> init, const AscentOptions& opts) {
  check_ball(T, ball);
  const auto p = ball.as_doubles();
  const int m = T.order();
  if (init.size() != static_cast<std::size_t>(m)) throw Error(ErrorKind::Dimension, "need one start vector per slot");
  for (int k = 0; k < m; ++k) {
    const auto& x = init[static_cast<std::size_t>(k)];
    if (x.size() != T.dims()[static_cast<std::size_t>(k)]) throw Error(ErrorKind::Dimension, "start vector length");
    const double nrm = lp_norm(x, p[static_cast<std::size_t>(k)]);
    if (std::abs(nrm - 1.0) > 1e-9) throw Error(ErrorKind::Domain, "start vectors must have unit norm");
  }

  NormEstimate est;
  est.witnesses = std::move(init);
  est.restarts_used = 1;

  double previous = std::abs(evaluate_form(T, est.witnesses));
  est.converged = false;
  for (int sweep = 0; sweep < opts.max_iter; ++sweep) {
    double current = 0.0;
    for (int k = 0; k < m; ++k) {
      const auto c = contract_all_but(T, k, est.witnesses);
      auto sol = dual_maximizer(c, p[static_cast<std::size_t>(k)]);
      est.witnesses[static_cast<std::size_t>(k)] = std::move(sol.z);
      current = sol.value;
    }
    est.history.push_back(current);
    ++est.iterations;
    if (current == 0.0 || current - previous <= opts.tol * std::max(previous, 1e-300)) {
      est.converged = true;
      break;
    }
    previous = current;
  }
  est.value = std::abs(evaluate_form(T, est.witnesses));
  return est;
}

std::vector<double> random_unit_vector(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> x(n);
  double nrm = 0.0;
  while (nrm == 0.0) {
    for (auto& v : x) v = 2.0 * uniform01(gen) - 1.0;
    nrm = lp_norm(x, p);
  }
  for (auto& v : x) v /= nrm;
  return x;
}

NormEstimate estimate_norm(const CoefficientTensor& T, const BallSpec& ball, const MultistartOptions& opts) {
  check_ball(T, ball);
  if (opts.restarts < 1) throw Error(ErrorKind::Parameter, "restarts must be >= 1");
  const auto p = ball.as_doubles();
  const auto m = static_cast<std::size_t>(T.order());

  NormEstimate best;
  bool have = false;
  for (int start = 0; start <= opts.restarts; ++start) {
    std::vector<std::vector<double>> init(m);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t n = T.dims()[k];
      if (start == 0) {
        init[k].assign(n, 1.0);
        const double nrm = lp_norm(init[k], p[k]);
        for (auto& v : init[k]) v /= nrm;
      } else {
        init[k] = random_unit_vector(n, p[k], derive_seed(opts.seed, static_cast<std::uint64_t>(start), k));
      }
    }
    NormEstimate run = alternating_ascent(T, ball, std::move(init), opts.ascent);
    if (!have || run.value > best.value) {
      best = std::move(run);
      have = true;
    }
  }
  best.restarts_used = opts.restarts + 1;
  return best;
}

double oracle_cost(const CoefficientTensor& T, const BallSpec& ball) {
  check_ball(T, ball);
  const auto p = ball.as_doubles();
  double cost = 1.0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const double n = static_cast<double>(T.dims()[k]);
    if (std::isinf(p[k])) {
      cost *= std::exp2(n);
    } else if (p[k] == 1.0) {
      cost *= 2.0 * n;
    } else {
      return kInf;
    }
  }
  return cost;
}

NormEstimate exact_norm(const CoefficientTensor& T, const BallSpec& ball, double budget) {
  const double cost = oracle_cost(T, ball);
  if (std::isinf(cost)) {
    throw Error(ErrorKind::Infeasible, "enumeration oracle needs every slot but the last in {1, inf}");
  }
  if (cost > budget) {
    throw Error(ErrorKind::Infeasible, "enumeration cost " + std::to_string(cost) + " exceeds budget " +
                                           std::to_string(budget));
  }
  const auto p = ball.as_doubles();
  const int m = T.order();
  const double p_last = p.back();
  for (int k = 0; k + 1 < m; ++k) {
    if (std::isinf(p[static_cast<std::size_t>(k)]) && T.dims()[static_cast<std::size_t>(k)] >= 63) {
      throw Error(ErrorKind::Infeasible, "sign enumeration limited to dimensions below 63");
    }
  }

  NormEstimate best;
  best.exact = true;
  best.converged = true;
  best.restarts_used = 0;

  if (m == 1) {
    auto sol = dual_maximizer(T.entries(), p_last);
    best.witnesses = {std::move(sol.z)};
    best.value = std::abs(evaluate_form(T, best.witnesses));
    best.iterations = 1;
    return best;
  }

  // Outer slots 0..m-3 run through an odometer over their extreme points;
  // slot m-2 is enumerated incrementally; slot m-1 is closed by duality.
  const int outer_slots = m - 2;
  std::vector<std::size_t> choice(static_cast<std::size_t>(std::max(outer_slots, 0)), 0);
  const auto choices_for = [&](int k) -> std::size_t {
    const std::size_t n = T.dims()[static_cast<std::size_t>(k)];
    return std::isinf(p[static_cast<std::size_t>(k)]) ? (std::size_t{1} << n) : n;
  };
  const auto extreme_point = [&](int k, std::size_t idx) {
    const std::size_t n = T.dims()[static_cast<std::size_t>(k)];
    std::vector<double> x(n, 0.0);
    if (std::isinf(p[static_cast<std::size_t>(k)])) {
      for (std::size_t j = 0; j < n; ++j) x[j] = ((idx >> j) & 1U) ? -1.0 : 1.0;
    } else {
      x[idx] = 1.0;  // the sign of a 1-slot point only flips the overall sign
    }
    return x;
  };

  const std::size_t rows = T.dims()[static_cast<std::size_t>(m - 2)];
  const std::size_t cols = T.dims()[static_cast<std::size_t>(m - 1)];
  const bool inner_inf = std::isinf(p[static_cast<std::size_t>(m - 2)]);
  const double q_last = conjugate_exponent(p_last);

  double best_val = -1.0;
  std::vector<std::vector<double>> best_outer;
  std::vector<double> best_inner;
  long long states = 0;

  for (;;) {
    std::vector<std::vector<double>> outer;
    std::vector<std::size_t> dims = T.dims();
    std::vector<double> M(T.entries().begin(), T.entries().end());
    for (int k = 0; k < outer_slots; ++k) outer.push_back(extreme_point(k, choice[static_cast<std::size_t>(k)]));
    for (int k = outer_slots - 1; k >= 0; --k) {
      M = contract_axis(M, dims, static_cast<std::size_t>(k), outer[static_cast<std::size_t>(k)]);
    }
    // M is rows x cols.
    const auto consider = [&](std::span<const double> c, const std::vector<double>& x) {
      ++states;
      const double v = lp_norm(c, q_last);
      if (v > best_val) {
        best_val = v;
        best_outer = outer;
        best_inner = x;
      }
    };

    if (inner_inf) {
      // Gray code over the first rows-1 signs; the last sign is fixed to +1
      // because x and -x close to the same norm.
      std::vector<double> x(rows, 1.0);
      std::vector<double> c(cols, 0.0);
      const auto recompute = [&] {
        std::fill(c.begin(), c.end(), 0.0);
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j) c[j] += x[i] * M[i * cols + j];
      };
      recompute();
      consider(c, x);
      const std::size_t free_bits = rows - 1;
      const std::size_t total = std::size_t{1} << free_bits;
      for (std::size_t g = 1; g < total; ++g) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(g));
        x[bit] = -x[bit];
        if ((g & 1023U) == 0) {
          recompute();
        } else {
          const double w = 2.0 * x[bit];
          for (std::size_t j = 0; j < cols; ++j) c[j] += w * M[bit * cols + j];
        }
        consider(c, x);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        std::vector<double> x(rows, 0.0);
        x[i] = 1.0;
        consider(std::span<const double>(M).subspan(i * cols, cols), x);
      }
    }

    int k = outer_slots - 1;
    while (k >= 0) {
      auto& ck = choice[static_cast<std::size_t>(k)];
      if (++ck < choices_for(k)) break;
      ck = 0;
      --k;
    }
    if (k < 0) break;
  }

  best.witnesses = best_outer;
  best.witnesses.push_back(best_inner);
  best.witnesses.push_back({});
  const auto c = contract_all_but(T, m - 1, best.witnesses);
  best.witnesses.back() = dual_maximizer(c, p_last).z;
  best.value = std::abs(evaluate_form(T, best.witnesses));
  best.iterations = static_cast<int>(std::min<long long>(states, std::numeric_limits<int>::max()));
  return best;
}

}  // namespace hllab
