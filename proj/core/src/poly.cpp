#include "ksq/poly.hpp"

#include <ostream>
#include <sstream>

namespace ksq {

BigInt IntPoly::eval(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Rat IntPoly::eval_rat(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly::from_coeffs(std::move(r));
}

IntPoly operator*(const IntPoly& a, const BigInt& s) {
  if (s == 0) return IntPoly();
  IntPoly r = a;
  for (auto& v : r.c_) v *= s;
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

IntPoly IntPoly::abs_coeffs() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = abs(v);
  return r;
}

unsigned IntPoly::q_valuation() const {
  if (is_zero()) return 0;
  unsigned v = 0;
  while (v < c_.size() && c_[v] == 0) ++v;
  return v;
}

struct PolyDiv {
  // generic long division; only valid when every leading-coefficient division
  // below is exact (callers enforce monic or check the remainder).
  static bool divide(const IntPoly& a, const IntPoly& b, IntPoly* quo, IntPoly* rem) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<BigInt> r = a.c_;
    int db = b.degree();
    std::vector<BigInt> qc;
    if (a.degree() >= db) qc.assign(a.degree() - db + 1, BigInt(0));
    const BigInt& lead = b.c_.back();
    for (int i = a.degree(); i >= db; --i) {
      BigInt& top = r[i];
      if (top == 0) continue;
      BigInt t, rr;
      mpz_tdiv_qr(t.get_mpz_t(), rr.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
      if (rr != 0) return false;  // non-exact head division
      qc[i - db] = t;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.c_[j];
    }
    if (quo) *quo = IntPoly::from_coeffs(std::move(qc));
    if (rem) *rem = IntPoly::from_coeffs(std::move(r));
    return true;
  }
};

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divexact: zero divisor");
  if (a.is_zero()) return IntPoly();
  IntPoly quo, rem;
  if (!PolyDiv::divide(a, b, &quo, &rem))
    throw NotDivisible("poly_divexact: head division not exact");
  if (!rem.is_zero())
    throw NotDivisible("poly_divexact: nonzero remainder");
  return quo;
}

void poly_divrem_monic(const IntPoly& a, const IntPoly& m, IntPoly* quo, IntPoly* rem) {
  if (m.is_zero() || m.degree() < 1)
    throw NotMonic("poly_rem_monic: modulus must have degree >= 1");
  if (!m.is_monic()) throw NotMonic("poly_rem_monic: modulus not monic");
  PolyDiv::divide(a, m, quo, rem);  // monic head divisions are always exact
}

IntPoly poly_rem_monic(const IntPoly& a, const IntPoly& m) {
  IntPoly rem;
  poly_divrem_monic(a, m, nullptr, &rem);
  return rem;
}

IntPoly taylor_shift(const IntPoly& p, const BigInt& a) {
  // synthetic division chain: repeatedly divide by (q - (-a)) ... classic O(n^2)
  std::vector<BigInt> c = p.coeffs();
  size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return IntPoly::from_coeffs(std::move(c));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = (*this)[static_cast<size_t>(i)];
    if (a == 0) continue;
    BigInt mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

}  // namespace ksq
