#include "ksq/numutil.hpp"

#include <sstream>
#include <stdexcept>

namespace ksq {

PAdicSplit p_adic_split(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("p_adic_split: n must be nonzero");
  if (p < 2) throw std::invalid_argument("p_adic_split: p must be prime");
  PAdicSplit s;
  BigInt m = n;
  if (m < 0) m = -m;
  BigInt rest = m;
  BigInt r, quo;
  while (rest != 0) {
    mpz_tdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    rest = quo;
    ++s.valuation;
  }
  mpz_pow_ui(s.p_part.get_mpz_t(), p.get_mpz_t(), s.valuation);
  s.p_prime_part = m / s.p_part;
  return s;
}

unsigned p_adic_valuation(const BigInt& n, const BigInt& p) { return p_adic_split(n, p).valuation; }
BigInt p_part(const BigInt& n, const BigInt& p) { return p_adic_split(n, p).p_part; }
BigInt p_prime_part(const BigInt& n, const BigInt& p) { return p_adic_split(n, p).p_prime_part; }

std::optional<BigInt> perfect_square_root(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("perfect_square_root: negative input");
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem == 0) return root;
  return std::nullopt;
}

bool is_prime_u64(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<unsigned long, unsigned>> prime_power_decompose(unsigned long n) {
  if (n < 2) return std::nullopt;
  unsigned long p = 0;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(n, 1u);  // n prime
  unsigned e = 0;
  unsigned long m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::vector<unsigned long> prime_powers_in(unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> out;
  for (unsigned long n = lo < 2 ? 2 : lo; n <= hi; ++n)
    if (prime_power_decompose(n)) out.push_back(n);
  return out;
}

Factorization factorize(BigInt n, unsigned long bound) {
  if (n <= 0) throw std::invalid_argument("factorize: positive input expected");
  Factorization f;
  BigInt rest = n;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    BigInt quo, r;
    for (;;) {
      mpz_tdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      if (r != 0) break;
      rest = quo;
      ++e;
    }
    if (e) f.factors.emplace_back(p, e);
  };
  strip(2);
  for (BigInt p = 3; p * p <= rest && p <= static_cast<unsigned long>(bound); p += 2)
    strip(p);
  if (rest > 1) {
    // leftover is prime if below bound^2
    BigInt b2;
    BigInt b = static_cast<unsigned long>(bound);
    b2 = b * b;
    if (rest <= b2) {
      f.factors.emplace_back(rest, 1);
    } else {
      f.complete = false;
      f.unfactored = rest;
    }
  }
  return f;
}

std::string Factorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (!complete) os << (first ? "" : " * ") << "<unfactored " << unfactored.get_str() << ">";
  if (first && complete) os << "1";
  return os.str();
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v * unfactored;
}

bool Factorization::is_square() const {
  if (!complete) return false;
  for (const auto& [p, e] : factors)
    if (e % 2) return false;
  return true;
}

}  // namespace ksq
