#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hllab/ext_scalar.hpp"

namespace hllab {

/// Degree m, space exponents p_1..p_m and optional vector-valued parameters.
///
/// (r, q) are only read by the vector-valued theorems: r is the summing
/// parameter of the operator v and q the cotype of its target space.
class HLInstance {
 public:
  HLInstance(std::vector<ExtScalar> p, std::optional<ExtScalar> r = std::nullopt,
             std::optional<ExtScalar> q = std::nullopt);

  static HLInstance isotropic(int m, const ExtScalar& p);

  int m() const noexcept { return static_cast<int>(p_.size()); }
  const std::vector<ExtScalar>& p() const noexcept { return p_; }
  const ExtScalar& p(int k) const { return p_.at(static_cast<std::size_t>(k - 1)); }  // 1-based
  const std::optional<ExtScalar>& r() const noexcept { return r_; }
  const std::optional<ExtScalar>& q() const noexcept { return q_; }

  /// Σ_{j=k}^{m} 1/p_j, with 1 ≤ k ≤ m.
  Rational tail(int k) const;
  /// Σ_{j=1}^{m} 1/p_j.
  Rational recip_sum() const { return tail(1); }

  std::string describe() const;

 private:
  std::vector<ExtScalar> p_;
  std::optional<ExtScalar> r_;
  std::optional<ExtScalar> q_;
  std::vector<Rational> tails_;  // tails_[k-1] = Σ_{j≥k} 1/p_j
};

/// Which theorem produced a tuple.
enum class Source {
  Main,             // globally sharp tuple for 1/2 ≤ Σ1/p < 1
  AlbuquerqueRezende,
  Aron,
  Dimant,           // isotropic λ
  OsikiewiczTonge,  // bilinear (λ, p₂*)
  Vector,           // vector-valued, threshold 1/r - 1/q
  VectorIsotropic,  // isotropic λ_r
  Critical,         // Σ1/p = 1
  CriticalIso,      // p_1 = ... = p_m = m
  Paulino,
  Praciano,         // isotropic μ for Σ1/p ≤ 1/2
  RegularityShift,
  User,
};

std::string to_string(Source s);
Source source_from_string(const std::string& s);

/// 2^exponent, kept symbolic so the exact layer never holds an irrational.
struct PowerOfTwo {
  Rational exponent;
  double to_double() const;
  std::string to_string() const;
  friend bool operator==(const PowerOfTwo&, const PowerOfTwo&) = default;
};

struct ExponentTuple {
  std::vector<ExtScalar> values;
  Source source{Source::User};
  std::optional<int> k0;                // 1-based cutoff index
  std::optional<PowerOfTwo> constant;   // known bound on C_m, when the theorem gives one

  int m() const noexcept { return static_cast<int>(values.size()); }
  const ExtScalar& operator[](int k) const { return values.at(static_cast<std::size_t>(k - 1)); }  // 1-based

  bool weakly_decreasing() const;
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

ExponentTuple make_tuple(std::vector<ExtScalar> values, Source source = Source::User);

std::string to_string(const ExponentTuple& t);

enum class Regime { Subcritical, Intermediate, Critical, Supercritical };

std::string to_string(Regime r);

/// Exact regime of Σ1/p. At Σ = 1/2 both Subcritical and Intermediate hold.
struct RegimeClass {
  Rational sum;
  bool subcritical{false};
  bool intermediate{false};
  bool critical{false};
  bool supercritical{false};

  bool contains(Regime r) const noexcept;
  bool on_half_boundary() const noexcept { return subcritical && intermediate; }
  std::string to_string() const;
};

RegimeClass classify_regime(const HLInstance& inst);

ExtScalar conjugate(const ExtScalar& p);

/// Same as HLInstance::tail but range-checked with a precondition error.
Rational recip_tail_sum(const HLInstance& inst, int k);

/// Largest t with Σ_{j≥t} 1/p_j ≥ threshold (inclusive at equality).
int k0(const HLInstance& inst, const Rational& threshold);

}  // namespace hllab
