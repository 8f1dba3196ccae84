#include "hllab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hllab/errors.hpp"

namespace hllab {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_{0.0};
  double comp_{0.0};
};

double to_norm_exponent(const ExtScalar& t) {
  if (t < ExtScalar{1}) throw Error(ErrorKind::Domain, "norm exponent " + t.to_string() + " < 1");
  return t.to_double();
}

}  // namespace

CoefficientTensor::CoefficientTensor(std::vector<std::size_t> dims, std::vector<double> entries,
                                     std::optional<std::uint64_t> seed)
    : dims_(std::move(dims)), entries_(std::move(entries)), seed_(seed) {
  if (dims_.empty()) throw Error(ErrorKind::Dimension, "tensor order must be at least 1");
  for (auto d : dims_) {
    if (d == 0) throw Error(ErrorKind::Dimension, "tensor dimensions must be positive");
  }
  if (entries_.size() != product(dims_)) {
    throw Error(ErrorKind::Dimension, "entry count " + std::to_string(entries_.size()) +
                                          " does not match product of dims " + std::to_string(product(dims_)));
  }
}

CoefficientTensor CoefficientTensor::zeros(std::vector<std::size_t> dims) { return filled(std::move(dims), 0.0); }

CoefficientTensor CoefficientTensor::filled(std::vector<std::size_t> dims, double value) {
  const std::size_t n = product(dims);
  return CoefficientTensor(std::move(dims), std::vector<double>(n, value));
}

CoefficientTensor CoefficientTensor::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return CoefficientTensor({n, n}, std::move(e));
}

CoefficientTensor CoefficientTensor::hadamard2() { return from_rows({{1.0, 1.0}, {1.0, -1.0}}); }

CoefficientTensor CoefficientTensor::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::Dimension, "no rows");
  const std::size_t cols = rows.front().size();
  std::vector<double> e;
  e.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::Dimension, "ragged rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return CoefficientTensor({rows.size(), cols}, std::move(e));
}

std::size_t CoefficientTensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw Error(ErrorKind::Dimension, "index arity does not match tensor order");
  std::size_t off = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) throw Error(ErrorKind::Dimension, "index out of range");
    off = off * dims_[k] + index[k];
  }
  return off;
}

double CoefficientTensor::at(std::span<const std::size_t> index) const { return entries_[offset(index)]; }

CoefficientTensor CoefficientTensor::scaled(double c) const {
  std::vector<double> e(entries_);
  for (auto& x : e) x *= c;
  return CoefficientTensor(dims_, std::move(e), seed_);
}

double lp_norm(std::span<const double> x, double t) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (std::isinf(t) || peak == 0.0) return peak;
  CompensatedSum acc;
  if (t == 1.0) {
    for (double v : x) acc.add(std::abs(v));
    return acc.value();
  }
  for (double v : x) {
    const double r = std::abs(v) / peak;
    acc.add(t == 2.0 ? r * r : std::pow(r, t));
  }
  return peak * std::pow(acc.value(), 1.0 / t);
}

double mixed_norm(const CoefficientTensor& T, std::span<const double> t) {
  if (t.size() != static_cast<std::size_t>(T.order())) {
    throw Error(ErrorKind::Dimension, "mixed norm has " + std::to_string(t.size()) + " exponents for an order " +
                                          std::to_string(T.order()) + " tensor");
  }
  for (double tk : t) {
    if (!(tk >= 1.0)) throw Error(ErrorKind::Domain, "norm exponent below 1");
  }
  std::vector<double> level(T.entries().begin(), T.entries().end());
  for (std::size_t k = t.size(); k-- > 0;) {
    const std::size_t block = T.dims()[k];
    const std::size_t blocks = level.size() / block;
    std::vector<double> next(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      next[b] = lp_norm(std::span<const double>(level).subspan(b * block, block), t[k]);
    }
    level = std::move(next);
  }
  return level.front();
}

double mixed_norm(const CoefficientTensor& T, const MixedNormSpec& spec) {
  std::vector<double> t;
  t.reserve(spec.t.size());
  for (const auto& tk : spec.t) t.push_back(to_norm_exponent(tk));
  return mixed_norm(T, t);
}

CoefficientTensor lift_form(const CoefficientTensor& T, int k, std::size_t n) {
  if (k < 1) throw Error(ErrorKind::Domain, "lift needs k >= 1");
  if (n == 0) throw Error(ErrorKind::Dimension, "lift needs n >= 1");
  std::vector<std::size_t> dims(static_cast<std::size_t>(k), n);
  dims.insert(dims.end(), T.dims().begin(), T.dims().end());
  std::vector<double> e(product(dims), 0.0);
  // Leading indices all zero select the first T.size() row-major slots.
  std::copy(T.entries().begin(), T.entries().end(), e.begin());
  return CoefficientTensor(std::move(dims), std::move(e));
}

}  // namespace hllab
