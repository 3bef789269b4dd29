// Certified polynomial crossovers: the smallest q* with V(q) > D(q)^2 for all
// real q >= q*, witnessed by a Cauchy root bound plus Taylor-shift positivity.

#ifndef KSQ_CROSSOVER_HPP_
#define KSQ_CROSSOVER_HPP_

#include "ksq/poly.hpp"

namespace ksq {

struct DegreeTooLow : std::runtime_error {
  explicit DegreeTooLow(const std::string& m) : std::runtime_error(m) {}
};

struct CrossoverCert {
  BigInt qstar;        // V > RHS for all real q >= qstar (certified)
  BigInt cauchy;       // the initial root bound used
  bool tight = false;  // V(qstar-1) <= RHS(qstar-1), i.e. integer-tight
};

// 1 + max |c_i| / c_lead, rounded up
BigInt cauchy_root_bound(const IntPoly& w);

// general form: smallest certified a >= qmin with V - RHS positive on [a, inf)
CrossoverCert crossover_general(const IntPoly& v, const IntPoly& rhs, const BigInt& qmin = 2);

// spec form: RHS = D^2, requires deg V > 2 deg D
CrossoverCert crossover_bound(const IntPoly& v, const IntPoly& d, const BigInt& qmin = 2);

}  // namespace ksq

#endif
