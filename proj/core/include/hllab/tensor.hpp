#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hllab/ext_scalar.hpp"

namespace hllab {

/// Dense coefficient array A(e_{j1}, ..., e_{jm}) of a real m-linear form.
///
/// Entries are stored row-major on (j1, ..., jm): j_m varies fastest and j1 is
/// the outermost level of a mixed norm.
class CoefficientTensor {
 public:
  CoefficientTensor(std::vector<std::size_t> dims, std::vector<double> entries,
                    std::optional<std::uint64_t> seed = std::nullopt);

  static CoefficientTensor zeros(std::vector<std::size_t> dims);
  static CoefficientTensor filled(std::vector<std::size_t> dims, double value);
  static CoefficientTensor identity(std::size_t n);
  /// 2x2 [[1, 1], [1, -1]].
  static CoefficientTensor hadamard2();
  static CoefficientTensor from_rows(const std::vector<std::vector<double>>& rows);

  int order() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }

  /// 0-based multi-index.
  double at(std::span<const std::size_t> index) const;
  std::size_t offset(std::span<const std::size_t> index) const;

  CoefficientTensor scaled(double c) const;

  friend bool operator==(const CoefficientTensor&, const CoefficientTensor&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> entries_;
  std::optional<std::uint64_t> seed_;
};

/// Exponents (t_1, ..., t_m) of the nested ℓ_{t1}(ℓ_{t2}(...ℓ_{tm})) norm.
struct MixedNormSpec {
  std::vector<ExtScalar> t;
};

/// Nested mixed norm; the innermost index j_m is reduced first and ∞ levels
/// take the supremum. Finite levels rescale by the block maximum and use
/// compensated summation.
double mixed_norm(const CoefficientTensor& T, const MixedNormSpec& spec);
double mixed_norm(const CoefficientTensor& T, std::span<const double> t);

/// ℓ_t norm of a vector (t in [1, ∞], +inf allowed).
double lp_norm(std::span<const double> x, double t);

/// Order m tensor whose leading k indices have size n: R[0,...,0, j] = T[j]
/// and R vanishes whenever a leading index is nonzero.
CoefficientTensor lift_form(const CoefficientTensor& T, int k, std::size_t n);

}  // namespace hllab
