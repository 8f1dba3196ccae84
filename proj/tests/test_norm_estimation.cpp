#include <cmath>
#include <random>

#include "doctest.h"
#include "hllab/errors.hpp"
#include "hllab/ksz.hpp"
#include "hllab/norm_estimation.hpp"
#include "oracle/oracle.hpp"

using namespace hllab;

namespace {

const ExtScalar kInf = ExtScalar::infinity();

BallSpec ball(std::initializer_list<ExtScalar> p) { return BallSpec{std::vector<ExtScalar>(p)}; }

std::vector<double> vec(std::initializer_list<double> x) { return x; }

}  // namespace

TEST_CASE("contract all but one slot") {
  std::vector<std::vector<double>> v{vec({1, 0}), {}};
  CHECK(contract_all_but(CoefficientTensor::identity(2), 1, v) == vec({1, 0}));
  v[0] = vec({1, 1});
  CHECK(contract_all_but(CoefficientTensor::filled({2, 2}, 1.0), 1, v) == vec({2, 2}));
  v[0] = vec({1, -1});
  CHECK(contract_all_but(CoefficientTensor::hadamard2(), 1, v) == vec({0, 2}));
  v[0] = vec({1, 0, 0});
  CHECK_THROWS_AS(contract_all_but(CoefficientTensor::identity(2), 1, v), Error);
}

TEST_CASE("dual maximizer") {
  const std::vector<double> c1{3, 4};
  const auto a = dual_maximizer(c1, 2.0);
  CHECK(a.value == doctest::Approx(5));
  CHECK(a.z[0] == doctest::Approx(0.6));
  CHECK(a.z[1] == doctest::Approx(0.8));
  const std::vector<double> c2{1, -2};
  const auto b = dual_maximizer(c2, INFINITY);
  CHECK(b.value == 3);
  CHECK(b.z == vec({1, -1}));
  const std::vector<double> c3{1, 1};
  const auto c = dual_maximizer(c3, 1.0);
  CHECK(c.value == 1);
  CHECK(c.z == vec({1, 0}));
  const std::vector<double> zero{0, 0, 0};
  const auto d = dual_maximizer(zero, 3.0);
  CHECK(d.value == 0);
  CHECK(d.z == vec({1, 0, 0}));
}

TEST_CASE("dual maximizer attains Hoelder equality") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> g;
  for (double p : {1.25, 1.5, 3.0, 7.0}) {
    std::vector<double> c(6);
    for (auto& x : c) x = g(gen);
    const auto s = dual_maximizer(c, p);
    double dot = 0;
    for (std::size_t j = 0; j < c.size(); ++j) dot += c[j] * s.z[j];
    CHECK(dot == doctest::Approx(s.value).epsilon(1e-12));
    CHECK(lp_norm(s.z, p) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("alternating ascent examples") {
  auto e1 = CoefficientTensor::zeros({3, 3, 3});
  std::vector<double> entries(27, 0.0);
  entries[0] = 1.0;
  const CoefficientTensor rank_one({3, 3, 3}, entries);
  MultistartOptions opts;
  opts.restarts = 5;
  CHECK(estimate_norm(rank_one, ball({ExtScalar{2}, ExtScalar{3}, kInf}), opts).value == doctest::Approx(1.0));

  const auto J = CoefficientTensor::filled({4, 4}, 1.0);
  std::vector<std::vector<double>> ones{std::vector<double>(4, 1.0), std::vector<double>(4, 1.0)};
  CHECK(alternating_ascent(J, ball({kInf, kInf}), ones).value == doctest::Approx(16.0));
  std::vector<std::vector<double>> unit{std::vector<double>(4, 0.5), std::vector<double>(4, 0.5)};
  CHECK(alternating_ascent(J, ball({ExtScalar{2}, ExtScalar{2}}), unit).value == doctest::Approx(4.0));

  const auto Z = alternating_ascent(e1, ball({kInf, kInf, kInf}),
                                    {std::vector<double>(3, 1.0), std::vector<double>(3, 1.0), std::vector<double>(3, 1.0)});
  CHECK(Z.value == 0.0);
  CHECK(Z.converged);

  CHECK_THROWS_AS(alternating_ascent(J, ball({kInf, kInf}), unit), Error);
}

TEST_CASE("ascent history never decreases") {
  const auto T = ksz_sample(3, 5, 77);
  MultistartOptions opts;
  opts.restarts = 3;
  const auto est = estimate_norm(T, ball({ExtScalar{3}, ExtScalar{2}, ExtScalar(3, 2)}), opts);
  for (std::size_t i = 1; i < est.history.size(); ++i) CHECK(est.history[i] >= est.history[i - 1] - 1e-12);
  CHECK(est.restarts_used == 4);
}

TEST_CASE("multistart examples") {
  MultistartOptions opts;
  opts.restarts = 10;
  CHECK(estimate_norm(CoefficientTensor::hadamard2(), ball({kInf, kInf}), opts).value == doctest::Approx(2.0));
  CHECK(estimate_norm(CoefficientTensor::identity(5), ball({ExtScalar{2}, ExtScalar{2}}), opts).value ==
        doctest::Approx(1.0));
  CHECK(estimate_norm(CoefficientTensor::identity(2), ball({kInf, kInf}), opts).value == doctest::Approx(2.0));
}

TEST_CASE("multistart is reproducible") {
  const auto T = ksz_sample(2, 6, 3);
  MultistartOptions opts;
  opts.restarts = 7;
  opts.seed = 99;
  const auto a = estimate_norm(T, ball({ExtScalar{3}, ExtScalar{4}}), opts);
  const auto b = estimate_norm(T, ball({ExtScalar{3}, ExtScalar{4}}), opts);
  CHECK(a.value == b.value);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("exact oracle examples") {
  CHECK(exact_norm(CoefficientTensor::hadamard2(), ball({kInf, kInf})).value == 2.0);
  CHECK(exact_norm(CoefficientTensor::hadamard2(), ball({kInf, ExtScalar{2}})).value == doctest::Approx(2.0));
  const auto T = CoefficientTensor::from_rows({{1, -7, 2}, {3, 0.5, -4}});
  CHECK(exact_norm(T, ball({ExtScalar{1}, ExtScalar{1}})).value == 7.0);
  CHECK(exact_norm(T, ball({ExtScalar{1}, ExtScalar{1}})).exact);
}

TEST_CASE("exact oracle agrees with full sign enumeration") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g;
    const std::vector<std::size_t> dims = seed % 2 ? std::vector<std::size_t>{3, 4} : std::vector<std::size_t>{2, 3, 3};
    std::vector<double> a(dims.size() == 2 ? 12 : 18);
    for (auto& x : a) x = g(gen);
    const CoefficientTensor T(dims, a);
    const BallSpec b{std::vector<ExtScalar>(dims.size(), kInf)};
    CHECK(exact_norm(T, b).value == doctest::Approx(oracle::sign_norm(dims, a)).epsilon(1e-12));
  }
}

TEST_CASE("exact oracle preconditions") {
  const auto T = ksz_sample(2, 4, 1);
  CHECK_THROWS_AS(exact_norm(T, ball({ExtScalar{2}, ExtScalar{2}})), Error);
  CHECK(std::isinf(oracle_cost(T, ball({ExtScalar{2}, kInf}))));
  CHECK(oracle_cost(T, ball({kInf, ExtScalar{3}})) == 16.0);
  CHECK(oracle_cost(ksz_sample(3, 4, 1), ball({ExtScalar{1}, kInf, kInf})) == 8.0 * 16.0);
  try {
    exact_norm(ksz_sample(2, 30, 1), ball({kInf, kInf}));
    FAIL("expected an infeasible error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
}

TEST_CASE("multistart never exceeds the exact oracle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto T = ksz_sample(2, 6, seed);
    MultistartOptions opts;
    opts.restarts = 10;
    opts.seed = seed;
    const double exact = exact_norm(T, ball({kInf, kInf})).value;
    CHECK(estimate_norm(T, ball({kInf, kInf}), opts).value <= exact + 1e-12);
  }
}

TEST_CASE("random unit vectors") {
  const auto x = random_unit_vector(7, 3.0, 4);
  CHECK(lp_norm(x, 3.0) == doctest::Approx(1.0));
  CHECK(random_unit_vector(7, 3.0, 4) == x);
}
