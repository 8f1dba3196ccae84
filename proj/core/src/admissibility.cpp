#include "hllab/admissibility.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hllab/errors.hpp"
#include "hllab/exponents.hpp"

namespace hllab {

namespace {

ExtScalar recip_sum(std::span<const ExtScalar> xs) {
  ExtScalar acc{0};
  for (const auto& x : xs) acc += x.reciprocal();
  return acc;
}

Condition compare(ExtScalar lhs, Rational rhs) {
  Condition c;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  if (c.lhs.is_inf()) return c;
  c.holds = c.lhs.value() <= c.rhs;
  c.tight = c.lhs.value() == c.rhs;
  return c;
}

void require_same_length(const ExponentTuple& t, const HLInstance& inst) {
  if (t.m() != inst.m()) {
    throw Error(ErrorKind::Dimension,
                "tuple has " + std::to_string(t.m()) + " entries but m = " + std::to_string(inst.m()));
  }
}

std::string suffix_text(int k, int m) {
  return k == 1 ? std::string("full tuple") : "suffix k=" + std::to_string(k) + ".." + std::to_string(m);
}

}  // namespace

Condition check_sufficient_211(const ExponentTuple& t, const HLInstance& inst) {
  require_same_length(t, inst);
  const Rational s = inst.recip_sum();
  if (s > Rational(1, 2)) {
    throw Error(ErrorKind::Regime, "sufficient condition needs sum 1/p <= 1/2, got " + ExtScalar(s).to_string());
  }
  const ExtScalar lower = ExtScalar{Rational(1) - s}.reciprocal();
  for (int k = 1; k <= t.m(); ++k) {
    if (t[k] <= lower || t[k] > ExtScalar{2}) {
      throw Error(ErrorKind::Domain, "t_" + std::to_string(k) + " = " + t[k].to_string() + " outside window (" +
                                         lower.to_string() + ", 2]");
    }
  }
  return compare(recip_sum(t.values), Rational(inst.m() + 1, 2) - s);
}

Condition ksz_condition(std::span<const ExtScalar> t, std::span<const ExtScalar> p) {
  if (t.size() != p.size() || t.empty()) throw Error(ErrorKind::Dimension, "t and p must have the same length");
  for (const auto& pk : p) {
    if (pk < ExtScalar{2}) {
      throw Error(ErrorKind::NotApplicable, "random-sign necessary condition needs every p_k >= 2, got " + pk.to_string());
    }
  }
  const ExtScalar psum = recip_sum(p);
  return compare(recip_sum(t), Rational(static_cast<long long>(t.size()) + 1, 2) - psum.value());
}

Condition check_necessary_ksz(const ExponentTuple& t, const HLInstance& inst) {
  require_same_length(t, inst);
  return ksz_condition(t.values, inst.p());
}

DiagonalCheck check_necessary_diagonal(const ExponentTuple& t, const HLInstance& inst) {
  require_same_length(t, inst);
  for (int k = 1; k <= inst.m(); ++k) {
    const Rational tail = inst.tail(k);
    const ExtScalar inv_t = t[k].reciprocal();
    const bool ok = tail >= 1 ? t[k].is_inf() : (inv_t.is_finite() && inv_t.value() <= 1 - tail);
    if (!ok) return DiagonalCheck{false, k};
  }
  return {};
}

std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return "Admissible";
    case Admissibility::NonAdmissible: return "NonAdmissible";
    case Admissibility::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool dominates(const ExponentTuple& t, const ExponentTuple& base) {
  if (t.m() != base.m()) return false;
  for (int k = 1; k <= t.m(); ++k) {
    if (t[k] < base[k]) return false;
  }
  return true;
}

Classification classify_tuple(const ExponentTuple& t, const HLInstance& inst) {
  require_same_length(t, inst);
  const int m = inst.m();

  std::string refutation;
  if (const auto diag = check_necessary_diagonal(t, inst); !diag.holds) {
    refutation = "diagonal form violated at k=" + std::to_string(diag.violated_at);
  } else {
    const auto& p = inst.p();
    for (int k = 1; k <= m && refutation.empty(); ++k) {
      const auto first = p.begin() + (k - 1);
      if (std::any_of(first, p.end(), [](const ExtScalar& x) { return x < ExtScalar{2}; })) continue;
      const auto tail_t = std::span<const ExtScalar>(t.values).subspan(static_cast<std::size_t>(k - 1));
      const auto tail_p = std::span<const ExtScalar>(p).subspan(static_cast<std::size_t>(k - 1));
      const Condition c = ksz_condition(tail_t, tail_p);
      if (!c.holds) refutation = "random-sign condition violated on " + suffix_text(k, m);
    }
  }

  std::string proof;
  const auto try_theorem = [&](const std::function<ExponentTuple()>& build) {
    if (!proof.empty()) return;
    try {
      const ExponentTuple base = build();
      if (dominates(t, base)) proof = "dominates " + to_string(base.source) + " " + to_string(base);
    } catch (const Error&) {
      // hypotheses of this theorem do not hold
    }
  };
  try_theorem([&] { return exponents_main(inst); });
  try_theorem([&] { return exponents_aron(inst); });
  try_theorem([&] { return exponents_ar(inst); });
  try_theorem([&] { return dimant_tuple(inst); });
  try_theorem([&] { return praciano_tuple(inst); });
  try_theorem([&] { return exponents_critical(inst); });
  if (proof.empty() && inst.recip_sum() <= Rational(1, 2)) {
    // Any tuple dominating a point of the closed window satisfying the
    // sufficient condition is admissible; min(t_k, 2) is the smallest candidate.
    ExponentTuple clamped = t;
    for (auto& v : clamped.values) v = std::min(v, ExtScalar{2});
    try {
      if (check_sufficient_211(clamped, inst).holds) proof = "sufficient condition holds on min(t, 2)";
    } catch (const Error&) {
    }
  }

  if (!proof.empty() && !refutation.empty()) {
    throw std::logic_error("tuple " + to_string(t) + " both proven (" + proof + ") and refuted (" + refutation + ")");
  }
  if (!proof.empty()) return {Admissibility::Admissible, proof};
  if (!refutation.empty()) return {Admissibility::NonAdmissible, refutation};
  return {Admissibility::Unknown, "no applicable theorem or necessary condition decides it"};
}

}  // namespace hllab
