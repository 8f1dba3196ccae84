#include "doctest.h"
#include "hllab/errors.hpp"
#include "hllab/exponents.hpp"
#include "hllab/regularity.hpp"

using namespace hllab;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no hllab::Error thrown");
  return ErrorKind::Format;
}

}  // namespace

TEST_CASE("shift with q = p returns r everywhere") {
  const std::vector<ExtScalar> p{ExtScalar{3}, ExtScalar(5, 2), ExtScalar{7}};
  const auto res = regularity_shift(ExtScalar{2}, p, p);
  REQUIRE(res.s);
  CHECK(res.s->values == std::vector<ExtScalar>(3, ExtScalar{2}));
  CHECK(res.valid);
}

TEST_CASE("shift reproducing the bilinear main tuple") {
  const auto res = regularity_shift(ExtScalar{2}, {ExtScalar{1}, ExtScalar{2}}, {ExtScalar(4, 3), ExtScalar{2}});
  REQUIRE(res.s);
  CHECK(res.s->values == std::vector<ExtScalar>{ExtScalar{4}, ExtScalar{2}});
  CHECK(res.valid);
  CHECK(res.s->source == Source::RegularityShift);
}

TEST_CASE("shift with p = q = 1") {
  const auto res = regularity_shift(ExtScalar{2}, {ExtScalar{1}, ExtScalar{1}}, {ExtScalar{1}, ExtScalar{1}});
  REQUIRE(res.s);
  CHECK(res.s->values == std::vector<ExtScalar>{ExtScalar{2}, ExtScalar{2}});
  CHECK(res.valid);
}

TEST_CASE("shift preconditions") {
  CHECK(kind_of([] { regularity_shift(ExtScalar{2}, {ExtScalar{2}, ExtScalar{2}}, {ExtScalar{1}, ExtScalar{2}}); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([] { regularity_shift(ExtScalar(1, 2), {ExtScalar{2}}, {ExtScalar{2}}); }) == ErrorKind::Domain);
}

TEST_CASE("shift reports negative reciprocals") {
  // 1/r - tail_p + tail_q at k = 1: 1 - 2 + 1/4 < 0
  const auto res = regularity_shift(ExtScalar{1}, {ExtScalar{1}, ExtScalar{1}}, {ExtScalar{8}, ExtScalar{8}});
  CHECK_FALSE(res.valid);
  CHECK_FALSE(res.s);
  CHECK(res.reciprocals.front() == Rational(-3, 4));
}

TEST_CASE("alpha and delta") {
  CHECK(rp_alpha(ExtScalar{1}, ExtScalar{1}) == ExtScalar{1});
  CHECK(rp_alpha(ExtScalar{1}, ExtScalar(3, 2)) == ExtScalar{3});
  CHECK(rp_alpha(ExtScalar{2}, ExtScalar{3}) == ExtScalar{6});
  CHECK(kind_of([] { rp_alpha(ExtScalar{1}, ExtScalar{2}); }) == ErrorKind::Domain);
  CHECK(rp_delta(ExtScalar{1}, ExtScalar(1, 2)) == ExtScalar{2});
  CHECK(rp_delta(ExtScalar{2}, ExtScalar{1}) == ExtScalar{4});
  CHECK(kind_of([] { rp_delta(ExtScalar{1}, ExtScalar{1}); }) == ErrorKind::Domain);
  CHECK(kind_of([] { rp_delta(ExtScalar{1}, ExtScalar{0}); }) == ErrorKind::Domain);
}
