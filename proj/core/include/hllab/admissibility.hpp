#pragma once

#include <span>
#include <string>

#include "hllab/instance.hpp"

namespace hllab {

/// Outcome of an exact inequality lhs ≤ rhs.
struct Condition {
  bool holds{false};
  bool tight{false};  // lhs == rhs
  ExtScalar lhs;      // may be +inf when some exponent is 0
  Rational rhs;

  explicit operator bool() const noexcept { return holds; }
};

/// Σ1/t_k ≤ (m+1)/2 - Σ1/p_k for Σ1/p ≤ 1/2 and every t_k in ([1-Σ1/p]^{-1}, 2].
/// The right end 2 of the window is accepted (closed), see README.
Condition check_sufficient_211(const ExponentTuple& t, const HLInstance& inst);

/// Necessary condition from random ±1 forms, valid when every p_k ≥ 2:
/// Σ1/t_k ≤ (m+1)/2 - Σ1/p_k. Throws NotApplicable when some p_k < 2.
Condition check_necessary_ksz(const ExponentTuple& t, const HLInstance& inst);

/// Same condition on raw spans (the degree may be 1); used for suffix scans.
Condition ksz_condition(std::span<const ExtScalar> t, std::span<const ExtScalar> p);

/// Necessary condition from the diagonal form Σ_j z^{(k)}_j ⋯ z^{(m)}_j on every
/// trailing block: 1/t_k ≤ 1 - Σ_{j≥k}1/p_j when that tail is < 1, and t_k = ∞
/// otherwise. Valid for all p in [1, ∞]. `violated_at` is 0 when it holds.
struct DiagonalCheck {
  bool holds{true};
  int violated_at{0};
};
DiagonalCheck check_necessary_diagonal(const ExponentTuple& t, const HLInstance& inst);

enum class Admissibility { Admissible, NonAdmissible, Unknown };

std::string to_string(Admissibility a);

struct Classification {
  Admissibility label{Admissibility::Unknown};
  /// Proven tuple that is dominated, or the violated necessary condition.
  std::string reason;
};

/// Admissible when t dominates coordinatewise a tuple from an applicable proven
/// theorem; NonAdmissible when a trailing suffix violates a necessary condition;
/// Unknown otherwise.
Classification classify_tuple(const ExponentTuple& t, const HLInstance& inst);

/// Coordinatewise t ≥ base.
bool dominates(const ExponentTuple& t, const ExponentTuple& base);

}  // namespace hllab
