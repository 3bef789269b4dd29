#include "ksq/crossover.hpp"

namespace ksq {

BigInt cauchy_root_bound(const IntPoly& w) {
  if (w.is_zero() || w.leading() < 0)
    throw std::invalid_argument("cauchy_root_bound: positive leading coefficient required");
  BigInt maxc = 0;
  for (int i = 0; i < w.degree(); ++i) {
    BigInt a = abs(w[static_cast<size_t>(i)]);
    if (a > maxc) maxc = a;
  }
  BigInt quo, rem;
  mpz_cdiv_q(quo.get_mpz_t(), maxc.get_mpz_t(), w.leading().get_mpz_t());
  return quo + 1;
}

namespace {

// all shift coefficients nonnegative and the value itself positive
bool shift_positive(const IntPoly& w, const BigInt& a) {
  IntPoly s = taylor_shift(w, a);
  if (s.is_zero()) return false;
  for (const auto& c : s.coeffs())
    if (c < 0) return false;
  return s[0] > 0;  // constant term is W(a)
}

}  // namespace

CrossoverCert crossover_general(const IntPoly& v, const IntPoly& rhs, const BigInt& qmin) {
  IntPoly w = v - rhs;
  if (w.is_zero() || w.degree() < 1 || w.leading() < 0)
    throw DegreeTooLow("crossover: V - RHS must have positive leading term and degree >= 1");
  CrossoverCert cert;
  cert.cauchy = cauchy_root_bound(w);
  BigInt hi = cert.cauchy > qmin ? cert.cauchy : qmin;
  // beyond the Cauchy bound every derivative is positive, so the shift test
  // holds at hi; shift positivity is monotone upward, so binary search works
  BigInt lo = qmin;
  if (shift_positive(w, lo)) {
    cert.qstar = lo;
  } else {
    while (!shift_positive(w, hi)) hi *= 2;  // qmin above Cauchy edge case
    while (lo + 1 < hi) {
      BigInt mid = (lo + hi) / 2;
      if (shift_positive(w, mid))
        hi = mid;
      else
        lo = mid;
    }
    cert.qstar = hi;
  }
  if (!shift_positive(w, cert.qstar))
    throw std::logic_error("crossover: certification failed at qstar");
  cert.tight = cert.qstar > qmin && w.eval(cert.qstar - 1) <= 0;
  return cert;
}

CrossoverCert crossover_bound(const IntPoly& v, const IntPoly& d, const BigInt& qmin) {
  if (v.degree() <= 2 * d.degree())
    throw DegreeTooLow("crossover_bound: deg V must exceed 2 deg D");
  return crossover_general(v, d * d, qmin);
}

}  // namespace ksq
