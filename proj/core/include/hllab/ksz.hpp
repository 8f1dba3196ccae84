#pragma once

// Random ±1 multilinear forms.
//
// Generator: std::mt19937_64 seeded directly with the 64-bit seed (the
// engine's output sequence is fixed by the C++ standard). Entries are drawn in
// row-major order; an entry is -1 when the top bit of the draw is set and +1
// otherwise. Per-trial seeds come from derive_seed (SplitMix64 finalizer).

#include <cstdint>
#include <span>

#include "hllab/tensor.hpp"

namespace hllab {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// splitmix64(splitmix64(splitmix64(base) ^ a) ^ b).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) noexcept;

/// m-way n × ... × n tensor of independent uniform ±1 entries; bit-reproducible per (m, n, seed).
CoefficientTensor ksz_sample(int m, std::size_t n, std::uint64_t seed);

struct KszBound {
  /// 1/2 + Σ(1/2 - 1/p_k). The constant K_m is not modelled.
  Rational exponent;
  double n_power(std::size_t n) const;
};

/// Exponent of n in the random-sign operator norm bound; every p_k must be ≥ 2.
KszBound ksz_bound(std::span<const ExtScalar> p);

}  // namespace hllab
