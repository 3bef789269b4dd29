// Exact integer utilities: p-adic parts, perfect squares, prime powers,
// small-prime factorization for trace output.

#ifndef KSQ_NUMUTIL_HPP_
#define KSQ_NUMUTIL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksq/poly.hpp"

namespace ksq {

struct PAdicSplit {
  unsigned valuation = 0;
  BigInt p_part = 1;        // p^valuation
  BigInt p_prime_part = 1;  // n / p_part, coprime to p
};

// n != 0, p prime
PAdicSplit p_adic_split(const BigInt& n, const BigInt& p);
unsigned p_adic_valuation(const BigInt& n, const BigInt& p);
BigInt p_part(const BigInt& n, const BigInt& p);
BigInt p_prime_part(const BigInt& n, const BigInt& p);

// root when n is a perfect square (n >= 0)
std::optional<BigInt> perfect_square_root(const BigInt& n);
inline bool is_perfect_square(const BigInt& n) { return perfect_square_root(n).has_value(); }

// exact trial division; fine for the tiny values this project meets
bool is_prime_u64(unsigned long n);
// (p, e) with n = p^e, or nullopt
std::optional<std::pair<unsigned long, unsigned>> prime_power_decompose(unsigned long n);

// ascending prime powers p^e in [lo, hi] (inclusive) subject to a predicate on (p, e)
std::vector<unsigned long> prime_powers_in(unsigned long lo, unsigned long hi);

struct Factorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  bool complete = true;  // false if a cofactor resisted the trial bound
  BigInt unfactored = 1;
  std::string str() const;   // "2^8 * 3^3 * 13"
  BigInt value() const;
  bool is_square() const;
};

// trial division up to `bound` (default covers every value in the catalog)
Factorization factorize(BigInt n, unsigned long bound = 1u << 20);

}  // namespace ksq

#endif
