#include "ksq/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace ksq {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> lo, hi;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

const IntPoly& cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n >= 1 required");
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // fill divisors bottom-up so each Phi_d is one exact division
  for (unsigned d : divisors(n)) {
    if (cache.count(d)) continue;
    IntPoly rest(1);
    for (unsigned e : divisors(d))
      if (e != d) rest = rest * cache.at(e);
    cache.emplace(d, poly_divexact(IntPoly::qpow_minus_one(d), rest));
  }
  return cache.at(n);
}

std::vector<IntPoly> cyclotomic_factors(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_factors: n >= 1 required");
  std::vector<IntPoly> out;
  for (unsigned d : divisors(n)) out.push_back(cyclotomic(d));
  return out;
}

}  // namespace ksq
