// Integer Bezout certificates: P*A + Q*B = c as a polynomial identity,
// witnessing gcd(A(n), B(n)) | c for every integer n.

#ifndef KSQ_BEZOUT_HPP_
#define KSQ_BEZOUT_HPP_

#include "ksq/poly.hpp"

namespace ksq {

struct NotCoprime : std::runtime_error {
  explicit NotCoprime(const std::string& m) : std::runtime_error(m) {}
};

struct BezoutCertificate {
  IntPoly p_coeffs;  // deg < deg B
  IntPoly q_coeffs;  // deg < deg A
  BigInt constant;   // positive

  // exact symbolic check of p*A + q*B == constant
  bool verify(const IntPoly& a, const IntPoly& b) const;
};

// Minimal positive constant of the ideal (A,B) n Z, computed from the unique
// degree-reduced rational cofactors; constant = lcm of their coefficient
// denominators. Throws NotCoprime when gcd(A,B) is nonconstant.
// Remainders are kept primitive during the Euclid walk so coefficients stay
// subresultant-sized (naive QQ-Euclid blows up on the E8 inputs).
BezoutCertificate xgcd_min_constant(const IntPoly& a, const IntPoly& b);

// gcd of A, B as polynomials over Q, returned primitive over Z
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace ksq

#endif
