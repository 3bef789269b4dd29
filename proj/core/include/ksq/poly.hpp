// Dense integer-coefficient univariate polynomials in q, exact everywhere.

#ifndef KSQ_POLY_HPP_
#define KSQ_POLY_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksq {

using BigInt = mpz_class;
using Rat = mpq_class;

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& m) : std::runtime_error(m) {}
};
struct NotMonic : std::runtime_error {
  explicit NotMonic(const std::string& m) : std::runtime_error(m) {}
};

// coeffs[i] is the coefficient of q^i; leading coefficient nonzero unless zero poly.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(BigInt c) { if (c != 0) c_.push_back(std::move(c)); }
  explicit IntPoly(long c) : IntPoly(BigInt(c)) {}
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }
  static IntPoly from_coeffs(std::vector<BigInt> coeffs) {
    IntPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }
  // q^n with integer coefficient
  static IntPoly monomial(unsigned n, BigInt coeff = 1) {
    IntPoly p;
    if (coeff != 0) {
      p.c_.assign(n + 1, BigInt(0));
      p.c_[n] = std::move(coeff);
    }
    return p;
  }
  // q^n - 1 and friends come up constantly
  static IntPoly qpow_minus_one(unsigned n) {
    IntPoly p = monomial(n);
    p.c_[0] = -1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& leading() const {
    if (is_zero()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
  }
  const BigInt& operator[](size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_monic() const { return !is_zero() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  BigInt constant_value() const { return c_.empty() ? BigInt(0) : c_[0]; }

  BigInt eval(const BigInt& n) const;          // Horner
  Rat eval_rat(const Rat& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const BigInt& s);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a) { return a * s; }
  IntPoly pow(unsigned e) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  // sum of |coeff|*q^i; useful for magnitude caps
  IntPoly abs_coeffs() const;
  // largest m with q^m | this (zero poly -> 0)
  unsigned q_valuation() const;

  std::string str() const;  // human form, e.g. "q^4 - q^2 + 1"

 private:
  std::vector<BigInt> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  friend struct PolyDiv;
};

// quotient/remainder helpers (free functions, exact semantics)

// exact division: Q with Q*B == A, throws NotDivisible otherwise
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// remainder of A mod monic M, deg R < deg M, integer coefficients; throws NotMonic
IntPoly poly_rem_monic(const IntPoly& a, const IntPoly& m);

// divide with remainder by monic M: A = Q*M + R
void poly_divrem_monic(const IntPoly& a, const IntPoly& m, IntPoly* quo, IntPoly* rem);

inline BigInt poly_eval(const IntPoly& p, const BigInt& n) { return p.eval(n); }

// coefficients of P(q + a), exact Taylor shift
IntPoly taylor_shift(const IntPoly& p, const BigInt& a);

// parse "q^2*(q^2+1)*(q-1)"-style plain products is the DSL's job; this one
// only prints. See formula.hpp for parsing.
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace ksq

#endif
