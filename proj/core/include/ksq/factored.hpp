// Factored expressions: rational prefactor * q-power * polynomial factors *
// unresolved gcd-terms. The faithful carrier for order formulas like
// (1/d) q^36 prod(q^n_i - 1).

#ifndef KSQ_FACTORED_HPP_
#define KSQ_FACTORED_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksq/bezout.hpp"
#include "ksq/poly.hpp"

namespace ksq {

struct GcdTerm {
  unsigned modulus = 1;  // the m in gcd(m, A(q))
  IntPoly arg;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const GcdTerm&, const GcdTerm&) = default;
};

class FactoredExpr {
 public:
  FactoredExpr() = default;
  explicit FactoredExpr(Rat c) : constant_(std::move(c)) { constant_.canonicalize(); }
  static FactoredExpr from_poly(const IntPoly& p, int mult = 1);
  static FactoredExpr q_power_expr(unsigned k) {
    FactoredExpr e;
    e.q_power_ = k;
    return e;
  }

  const Rat& constant() const { return constant_; }
  unsigned q_power() const { return q_power_; }
  const std::vector<std::pair<IntPoly, int>>& factors() const { return factors_; }
  const std::vector<GcdTerm>& gcd_terms() const { return gcd_terms_; }
  bool has_gcd_terms() const { return !gcd_terms_.empty(); }

  void mul_const(const Rat& c) {
    constant_ *= c;
    constant_.canonicalize();
  }
  void mul_qpower(unsigned k) { q_power_ += k; }
  void mul_factor(const IntPoly& p, int mult = 1);
  void mul_gcd_term(GcdTerm t);
  FactoredExpr& operator*=(const FactoredExpr& o);
  friend FactoredExpr operator*(FactoredExpr a, const FactoredExpr& b) { return a *= b; }
  FactoredExpr pow(unsigned e) const;

  // exact division; factor-cancels where possible, otherwise expands and
  // requires polynomial divisibility. gcd-terms must cancel syntactically.
  FactoredExpr divide_exact(const FactoredExpr& o) const;

  // exact rational value at q (gcd-terms evaluated numerically)
  Rat eval_rat(const BigInt& q) const;
  // integer value; throws if the result is not integral
  BigInt eval_int(const BigInt& q) const;
  bool eval_is_integral(const BigInt& q) const;

  // expanded polynomial form: expr = poly / den. Requires no gcd-terms.
  std::pair<IntPoly, BigInt> expanded() const;
  // den * (expr - k): the denominator-cleared form used for congruence facts
  IntPoly cleared_minus(const BigInt& k) const;

  int total_degree() const;  // degree of the expanded numerator
  void sort_factors();       // canonical order, merge equal factors

  std::string str() const;

  friend bool operator==(const FactoredExpr&, const FactoredExpr&) = default;

 private:
  Rat constant_ = 1;
  unsigned q_power_ = 0;
  std::vector<std::pair<IntPoly, int>> factors_;   // multiplicity != 0
  std::vector<GcdTerm> gcd_terms_;
};

// Sound divisor bound: D with gcd(FA(q), FB(q)) | D(q) for every q >= 2 where
// both values are integers. Shared factors enter at min multiplicity, cross
// pairs contribute per-prime caps certified by Bezout constants plus finite
// residue checks of p-adic valuations. Both inputs must be gcd-term free.
FactoredExpr factored_gcd_bound(const FactoredExpr& fa, const FactoredExpr& fb);

// certified cap u with v_p(F(n)) <= u for all integers n, or nullopt if no cap
// <= max_u exists (checked over all residues mod p^{u+1})
std::optional<unsigned> padic_value_cap(const IntPoly& f, const BigInt& p, unsigned max_u = 6);

}  // namespace ksq

#endif
