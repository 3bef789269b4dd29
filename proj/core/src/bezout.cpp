#include "ksq/bezout.hpp"

#include <algorithm>

namespace ksq {

namespace {

// minimal rational-coefficient polynomial just for the Euclid walk
struct QPoly {
  std::vector<Rat> c;

  static QPoly from(const IntPoly& p) {
    QPoly r;
    r.c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) r.c.emplace_back(v);
    return r;
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  QPoly operator*(const QPoly& o) const {
    if (zero() || o.zero()) return {};
    QPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  void scale(const Rat& s) {
    for (auto& v : c) v *= s;
  }
};

void qdivrem(const QPoly& a, const QPoly& b, QPoly* quo, QPoly* rem) {
  QPoly r = a;
  QPoly qq;
  int db = b.deg();
  if (a.deg() >= db) qq.c.assign(a.deg() - db + 1, Rat(0));
  const Rat& lead = b.c.back();
  for (int i = a.deg(); i >= db; --i) {
    if (static_cast<size_t>(i) >= r.c.size() || r.c[i] == 0) continue;
    Rat t = r.c[i] / lead;
    qq.c[i - db] = t;
    for (int j = 0; j <= db; ++j) r.c[i - db + j] -= t * b.c[j];
  }
  r.trim();
  qq.trim();
  if (quo) *quo = std::move(qq);
  if (rem) *rem = std::move(r);
}

// scalar that makes p a primitive integer polynomial with positive lead
Rat primitive_scale(const QPoly& p) {
  BigInt den = 1, num_gcd = 0;
  for (const auto& v : p.c) {
    BigInt d = v.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  for (const auto& v : p.c) {
    BigInt n = v.get_num() * (den / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return Rat(1);
  Rat s(den, num_gcd);
  s.canonicalize();
  if (p.c.back() < 0) s = -s;
  return s;
}

IntPoly to_intpoly_scaled(const QPoly& p, BigInt* denom_lcm) {
  // p has rational coeffs; returns (lcm of denominators) * p and reports the lcm
  BigInt den = 1;
  for (const auto& v : p.c) {
    BigInt d = v.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(p.c.size());
  for (const auto& v : p.c) out.push_back(v.get_num() * (den / v.get_den()));
  if (denom_lcm) *denom_lcm = den;
  return IntPoly::from_coeffs(std::move(out));
}

}  // namespace

bool BezoutCertificate::verify(const IntPoly& a, const IntPoly& b) const {
  IntPoly lhs = p_coeffs * a + q_coeffs * b;
  return lhs == IntPoly(constant);
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QPoly r0 = QPoly::from(a), r1 = QPoly::from(b);
  while (!r1.zero()) {
    QPoly rem;
    qdivrem(r0, r1, nullptr, &rem);
    if (!rem.zero()) rem.scale(primitive_scale(rem));
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  r0.scale(primitive_scale(r0));
  std::vector<BigInt> out;
  for (const auto& v : r0.c) out.emplace_back(v.get_num());
  return IntPoly::from_coeffs(std::move(out));
}

BezoutCertificate xgcd_min_constant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("xgcd_min_constant: zero input");
  QPoly r0 = QPoly::from(a), r1 = QPoly::from(b);
  QPoly s0, s1, t0, t1;
  s0.c = {Rat(1)};
  t1.c = {Rat(1)};
  // invariant: s*A + t*B = r, with each remainder rescaled to primitive form
  while (!r1.zero()) {
    QPoly quo, rem;
    qdivrem(r0, r1, &quo, &rem);
    QPoly s2 = s0, t2 = t0;
    s2 -= quo * s1;
    t2 -= quo * t1;
    if (!rem.zero()) {
      Rat sc = primitive_scale(rem);
      rem.scale(sc);
      s2.scale(sc);
      t2.scale(sc);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.deg() > 0)
    throw NotCoprime("xgcd_min_constant: inputs share the polynomial factor gcd");
  Rat gamma = r0.c.empty() ? Rat(0) : r0.c[0];
  if (gamma == 0) throw NotCoprime("xgcd_min_constant: zero gcd");
  s0.scale(Rat(1) / gamma);
  t0.scale(Rat(1) / gamma);
  // degree-reduce: P := s0 mod B, Q := t0 + (s0 div B)*A; yields the unique
  // pair with deg P < deg B, deg Q < deg A
  QPoly qb = QPoly::from(b), qa = QPoly::from(a);
  if (s0.deg() >= qb.deg()) {
    QPoly quo, rem;
    qdivrem(s0, qb, &quo, &rem);
    s0 = std::move(rem);
    QPoly add = quo * qa;
    QPoly t = t0;
    for (size_t i = 0; i < add.c.size(); ++i) {
      if (i >= t.c.size()) t.c.resize(i + 1, Rat(0));
      t.c[i] += add.c[i];
    }
    t.trim();
    t0 = std::move(t);
  }
  BigInt dp = 1, dq = 1;
  IntPoly P = to_intpoly_scaled(s0, &dp);
  IntPoly Q = to_intpoly_scaled(t0, &dq);
  BigInt c;
  mpz_lcm(c.get_mpz_t(), dp.get_mpz_t(), dq.get_mpz_t());
  BezoutCertificate cert;
  cert.constant = c;
  cert.p_coeffs = P * (c / dp);
  cert.q_coeffs = Q * (c / dq);
  if (!cert.verify(a, b))
    throw std::logic_error("xgcd_min_constant: certificate identity failed");
  return cert;
}

}  // namespace ksq
