#include "hllab/ksz.hpp"

#include <cmath>
#include <random>

#include "hllab/errors.hpp"

namespace hllab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) noexcept {
  return splitmix64(splitmix64(splitmix64(base) ^ a) ^ b);
}

CoefficientTensor ksz_sample(int m, std::size_t n, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::Domain, "order m must be at least 1");
  if (n < 1) throw Error(ErrorKind::Domain, "dimension n must be at least 1");
  std::vector<std::size_t> dims(static_cast<std::size_t>(m), n);
  std::size_t count = 1;
  for (auto d : dims) count *= d;
  std::mt19937_64 gen(seed);
  std::vector<double> e(count);
  for (auto& x : e) x = (gen() >> 63) ? -1.0 : 1.0;
  return CoefficientTensor(std::move(dims), std::move(e), seed);
}

double KszBound::n_power(std::size_t n) const {
  return std::pow(static_cast<double>(n), exponent.convert_to<double>());
}

KszBound ksz_bound(std::span<const ExtScalar> p) {
  if (p.empty()) throw Error(ErrorKind::Dimension, "empty exponent list");
  KszBound b{Rational(1, 2)};
  for (const auto& pk : p) {
    if (pk < ExtScalar{2}) throw Error(ErrorKind::Domain, "random-sign bound needs p_k >= 2, got " + pk.to_string());
    b.exponent += Rational(1, 2) - pk.reciprocal().value();
  }
  return b;
}

}  // namespace hllab
