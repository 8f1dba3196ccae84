#include "hllab/regularity.hpp"

#include "hllab/errors.hpp"

namespace hllab {

RegularityShift regularity_shift(const ExtScalar& r, const std::vector<ExtScalar>& p,
                                 const std::vector<ExtScalar>& q) {
  if (p.size() != q.size() || p.empty()) {
    throw Error(ErrorKind::Dimension, "p and q must be nonempty lists of the same length");
  }
  if (r < ExtScalar{1}) throw Error(ErrorKind::Domain, "r must be >= 1");
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < ExtScalar{1}) throw Error(ErrorKind::Domain, "p_k must be >= 1");
    if (q[k] < p[k]) {
      throw Error(ErrorKind::Domain, "need q_k >= p_k, got q_" + std::to_string(k + 1) + " = " + q[k].to_string() +
                                         " < p_" + std::to_string(k + 1) + " = " + p[k].to_string());
    }
  }

  const std::size_t m = p.size();
  const Rational inv_r = r.reciprocal().value();
  RegularityShift out;
  out.reciprocals.assign(m, Rational(0));
  Rational tail_p = 0;
  Rational tail_q = 0;
  for (std::size_t k = m; k-- > 0;) {
    tail_p += p[k].reciprocal().value();
    tail_q += q[k].reciprocal().value();
    out.reciprocals[k] = inv_r - tail_p + tail_q;
  }

  bool nonnegative = true;
  bool at_least_one = true;
  for (const auto& x : out.reciprocals) {
    if (x < 0) nonnegative = false;
    if (x > 1) at_least_one = false;
  }
  if (nonnegative) {
    ExponentTuple s;
    s.source = Source::RegularityShift;
    for (const auto& x : out.reciprocals) s.values.push_back(ExtScalar{x}.reciprocal());
    out.s = std::move(s);
  }
  // reciprocals[0] is exactly 1/r - Σ1/p + Σ1/q.
  out.valid = out.reciprocals[0] > 0 && nonnegative && at_least_one;
  return out;
}

ExtScalar rp_alpha(const ExtScalar& p1, const ExtScalar& p2) {
  if (p1.is_inf() || p2.is_inf()) throw Error(ErrorKind::Domain, "regularity principle needs finite p1, p2");
  if (p1 < ExtScalar{1} || p2 < p1) throw Error(ErrorKind::Domain, "need 1 <= p1 <= p2");
  const Rational& a = p1.value();
  const Rational& b = p2.value();
  if (b >= 2 * a) {
    throw Error(ErrorKind::Domain, "need p2 < 2 p1, got p1 = " + p1.to_string() + ", p2 = " + p2.to_string());
  }
  return ExtScalar{a * b / (2 * a - b)};
}

ExtScalar rp_delta(const ExtScalar& p1, const ExtScalar& eps) {
  if (p1.is_inf() || eps.is_inf()) throw Error(ErrorKind::Domain, "regularity principle needs finite p1, eps");
  if (eps.is_zero() || eps >= p1) {
    throw Error(ErrorKind::Domain, "need 0 < eps < p1, got eps = " + eps.to_string() + ", p1 = " + p1.to_string());
  }
  const Rational& a = p1.value();
  const Rational& e = eps.value();
  return ExtScalar{2 * e * a / (a - e)};
}

}  // namespace hllab
