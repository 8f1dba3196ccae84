#include <cmath>

#include "doctest.h"
#include "hllab/errors.hpp"
#include "hllab/exponents.hpp"
#include "hllab/sharpness.hpp"

using namespace hllab;

namespace {

const ExtScalar kInf = ExtScalar::infinity();

std::vector<std::pair<double, double>> power_law(double c, double a) {
  std::vector<std::pair<double, double>> pts;
  for (double n : {4.0, 8.0, 16.0, 32.0}) pts.emplace_back(n, c * std::pow(n, a));
  return pts;
}

GrowthExperiment bilinear(Rational t, std::vector<std::size_t> ns, int trials) {
  GrowthExperiment e;
  e.m = 2;
  e.p = BallSpec{{kInf, kInf}};
  e.t = MixedNormSpec{{ExtScalar(t), ExtScalar(t)}};
  e.n_list = std::move(ns);
  e.trials = trials;
  e.seed = 2024;
  return e;
}

}  // namespace

TEST_CASE("slope fit") {
  const auto a = fit_slope(power_law(1.0, 0.5));
  CHECK(a.slope == doctest::Approx(0.5));
  CHECK(a.stderr_slope == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fit_slope(power_law(3.0, 0.0)).slope == doctest::Approx(0.0));
  const auto b = fit_slope(power_law(2.0, 1.0));
  CHECK(b.slope == doctest::Approx(1.0));
  CHECK(b.intercept == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(fit_slope({{4, 1}, {8, 0}, {16, 1}}), Error);
  CHECK_THROWS_AS(fit_slope({{4, 1}, {4, 2}, {8, 1}}), Error);
}

TEST_CASE("verdicts") {
  CHECK(verdict({0.5, 0.02, 0}) == Verdict::Growing);
  CHECK(verdict({0.0, 0.01, 0}) == Verdict::Bounded);
  CHECK(verdict({0.06, 0.05, 0}) == Verdict::Inconclusive);
}

TEST_CASE("predicted slopes") {
  const std::vector<ExtScalar> inf2{kInf, kInf};
  CHECK(predicted_slope({ExtScalar{1}, ExtScalar{1}}, inf2) == Rational(1, 2));
  CHECK(predicted_slope({ExtScalar(4, 3), ExtScalar(4, 3)}, inf2) == 0);
  CHECK(predicted_slope({ExtScalar{4}, ExtScalar{2}, ExtScalar{2}}, std::vector<ExtScalar>(3, ExtScalar{4})) == 0);
  CHECK_THROWS_AS(predicted_slope({ExtScalar{1}, ExtScalar{1}}, {ExtScalar(3, 2), kInf}), Error);
}

TEST_CASE("ratio curve on the bilinear l2 tuple stays below one") {
  const auto r = ratio_curve(bilinear(2, {2, 4, 8}, 5));
  for (const auto& row : r.rows) CHECK(row.max_ratio <= 1.0 + 1e-6);
  CHECK(r.rows.size() == 3);
  CHECK(r.rows[0].method == NormMethod::Oracle);
}

TEST_CASE("ratio curve is deterministic") {
  const auto a = ratio_curve(bilinear(1, {2, 4, 6}, 3));
  const auto b = ratio_curve(bilinear(1, {2, 4, 6}, 3));
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].max_ratio == b.rows[i].max_ratio);
  CHECK(a.rows[1].trials[0].seed == trial_seed(2024, 4, 0));
}

TEST_CASE("ratio curve validation") {
  auto e = bilinear(1, {4, 4}, 2);
  CHECK_THROWS_AS(ratio_curve(e), Error);
  e = bilinear(1, {40, 50, 60}, 1);
  e.method = NormMethod::Oracle;
  try {
    ratio_curve(e);
    FAIL("expected infeasible");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Infeasible);
    CHECK(std::string(err.what()).find("n=40") != std::string::npos);
  }
}

TEST_CASE("perturbation scan on the main tuple") {
  const auto in = HLInstance::isotropic(3, ExtScalar{4});
  const auto rows = perturb_scan(exponents_main(in), in, {ExtScalar(1, 100), ExtScalar(1, 10)});
  CHECK(rows.size() == 12);
  for (const auto& r : rows) {
    if (r.direction == Direction::Decrease) {
      CHECK(r.classification.label == Admissibility::NonAdmissible);
    } else {
      CHECK(r.classification.label == Admissibility::Admissible);
    }
  }
}

TEST_CASE("perturbation scan in the critical case") {
  const auto in = HLInstance::isotropic(10, ExtScalar{10});
  const auto rows = perturb_scan(exponents_critical_iso(10), in, {ExtScalar(1, 10)});
  for (const auto& r : rows) {
    if (r.coordinate <= 2 && r.direction == Direction::Decrease) {
      CHECK(r.classification.label == Admissibility::NonAdmissible);
    }
    if (r.direction == Direction::Increase) CHECK(r.classification.label == Admissibility::Admissible);
  }
  CHECK(rows.front().perturbed->values.front() == ExtScalar{10});
}

TEST_CASE("perturbation scan of the m=9 main tuple, coordinate 6") {
  const auto in = HLInstance::isotropic(9, ExtScalar{10});
  const auto rows = perturb_scan(exponents_main(in), in, {ExtScalar(1, 10)});
  for (const auto& r : rows) {
    if (r.coordinate == 6 && r.direction == Direction::Decrease) {
      CHECK(r.classification.label == Admissibility::NonAdmissible);
    }
  }
}

TEST_CASE("decrease below one is reported as unknown") {
  const auto in = HLInstance::isotropic(2, kInf);
  const auto t = make_tuple({ExtScalar(4, 3), ExtScalar(4, 3)});
  const auto rows = perturb_scan(t, in, {ExtScalar(1, 2)});
  CHECK(rows[0].classification.label == Admissibility::Unknown);
  CHECK_FALSE(rows[0].perturbed);
}

TEST_CASE("region lattice") {
  const auto in = HLInstance::isotropic(3, ExtScalar{4});
  const auto axis = linear_axis(ExtScalar{1}, ExtScalar{5}, ExtScalar(1, 4));
  CHECK(axis.size() == 17);
  const auto r = region_grid(in, {axis, axis, axis});
  CHECK(r.points.size() == 17 * 17 * 17);
  bool seen = false;
  for (const auto& pt : r.points) {
    if (pt.t == std::vector<ExtScalar>{ExtScalar{4}, ExtScalar{2}, ExtScalar{2}}) {
      CHECK(pt.label == Admissibility::Admissible);
      seen = true;
    }
    if (pt.t == std::vector<ExtScalar>{ExtScalar{4}, ExtScalar{2}, ExtScalar(7, 4)}) {
      CHECK(pt.label == Admissibility::NonAdmissible);
    }
  }
  CHECK(seen);
  CHECK_THROWS_AS(region_grid(HLInstance::isotropic(2, ExtScalar{4}), {axis, axis}), Error);
}
