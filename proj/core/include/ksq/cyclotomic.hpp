// Cyclotomic polynomials Phi_d and the factorization q^n - 1 = prod_{d|n} Phi_d.

#ifndef KSQ_CYCLOTOMIC_HPP_
#define KSQ_CYCLOTOMIC_HPP_

#include <vector>

#include "ksq/poly.hpp"

namespace ksq {

// Phi_n(q), computed by exact division and cached
const IntPoly& cyclotomic(unsigned n);

// the irreducible integer factors of q^n - 1, i.e. Phi_d for d | n ascending
std::vector<IntPoly> cyclotomic_factors(unsigned n);

// divisors of n, ascending
std::vector<unsigned> divisors(unsigned n);

}  // namespace ksq

#endif
