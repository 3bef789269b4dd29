#include "ksq/factored.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ksq {

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    size_t k = static_cast<size_t>(i);
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

}  // namespace

FactoredExpr FactoredExpr::from_poly(const IntPoly& p, int mult) {
  FactoredExpr e;
  e.mul_factor(p, mult);
  return e;
}

void FactoredExpr::mul_factor(const IntPoly& p, int mult) {
  if (mult == 0) return;
  if (p.is_zero()) throw std::invalid_argument("FactoredExpr: zero factor");
  if (p.is_constant()) {
    Rat c(p.constant_value());
    for (int i = 0; i < std::abs(mult); ++i) constant_ = mult > 0 ? constant_ * c : constant_ / c;
    constant_.canonicalize();
    return;
  }
  unsigned qv = p.q_valuation();
  IntPoly core = p;
  if (qv > 0) {
    core = poly_divexact(p, IntPoly::monomial(qv));
    q_power_ += qv * static_cast<unsigned>(mult > 0 ? mult : 0);
    if (mult < 0) throw std::invalid_argument("FactoredExpr: negative power of q factor");
  }
  if (core.is_constant()) {
    mul_factor(core, mult);
    return;
  }
  if (core.leading() < 0) {
    core = -core;
    if (mult % 2) constant_ = -constant_;
  }
  for (auto& [f, m] : factors_) {
    if (f == core) {
      m += mult;
      if (m == 0) {
        factors_.erase(std::find_if(factors_.begin(), factors_.end(),
                                    [&](const auto& pr) { return pr.second == 0; }));
      }
      return;
    }
  }
  factors_.emplace_back(core, mult);
}

void FactoredExpr::mul_gcd_term(GcdTerm t) {
  for (auto& g : gcd_terms_) {
    if (g.modulus == t.modulus && g.arg == t.arg) {
      g.exponent += t.exponent;
      if (g.exponent == 0)
        gcd_terms_.erase(std::find_if(gcd_terms_.begin(), gcd_terms_.end(),
                                      [](const GcdTerm& x) { return x.exponent == 0; }));
      return;
    }
  }
  gcd_terms_.push_back(std::move(t));
}

FactoredExpr& FactoredExpr::operator*=(const FactoredExpr& o) {
  constant_ *= o.constant_;
  constant_.canonicalize();
  q_power_ += o.q_power_;
  for (const auto& [f, m] : o.factors_) mul_factor(f, m);
  for (const auto& g : o.gcd_terms_) mul_gcd_term(g);
  return *this;
}

FactoredExpr FactoredExpr::pow(unsigned e) const {
  FactoredExpr r(Rat(1));
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

FactoredExpr FactoredExpr::divide_exact(const FactoredExpr& o) const {
  if (!gcd_terms_.empty() || !o.gcd_terms_.empty()) {
    // only syntactic cancellation is supported for gcd-terms
    FactoredExpr lhs = *this;
    for (const auto& g : o.gcd_terms_) {
      GcdTerm inv = g;
      inv.exponent = -g.exponent;
      lhs.mul_gcd_term(inv);
    }
    FactoredExpr rhs = o;
    rhs.gcd_terms_.clear();
    return lhs.divide_exact(rhs);
  }
  FactoredExpr num = *this;
  FactoredExpr den = o;
  num.constant_ /= den.constant_;
  num.constant_.canonicalize();
  den.constant_ = 1;
  if (den.q_power_ > num.q_power_)
    throw NotDivisible("FactoredExpr::divide_exact: q-power deficit");
  num.q_power_ -= den.q_power_;
  den.q_power_ = 0;
  // cancel common factor occurrences first
  for (auto& [g, gm] : den.factors_) {
    for (auto& [f, fm] : num.factors_) {
      if (f == g) {
        int cancel = std::min(fm, gm);
        fm -= cancel;
        gm -= cancel;
      }
    }
  }
  auto prune = [](std::vector<std::pair<IntPoly, int>>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const auto& p) { return p.second == 0; }),
            v.end());
  };
  prune(num.factors_);
  prune(den.factors_);
  if (den.factors_.empty()) return num;
  // leftover: expand and divide exactly
  IntPoly np(1), dp(1);
  for (const auto& [f, m] : num.factors_) {
    if (m < 0) throw NotDivisible("divide_exact: negative multiplicity");
    np = np * f.pow(static_cast<unsigned>(m));
  }
  for (const auto& [f, m] : den.factors_) {
    if (m < 0) throw NotDivisible("divide_exact: negative multiplicity");
    dp = dp * f.pow(static_cast<unsigned>(m));
  }
  IntPoly quo = poly_divexact(np, dp);
  FactoredExpr res(num.constant_);
  res.q_power_ = num.q_power_;
  res.mul_factor(quo, 1);
  return res;
}

Rat FactoredExpr::eval_rat(const BigInt& q) const {
  Rat v = constant_;
  BigInt qp;
  mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), q_power_);
  v *= Rat(qp);
  for (const auto& [f, m] : factors_) {
    BigInt fv = f.eval(q);
    if (m >= 0) {
      for (int i = 0; i < m; ++i) v *= Rat(fv);
    } else {
      if (fv == 0) throw std::domain_error("eval: division by zero factor");
      for (int i = 0; i < -m; ++i) v /= Rat(fv);
    }
  }
  for (const auto& g : gcd_terms_) {
    BigInt av = abs(g.arg.eval(q));
    BigInt gv;
    BigInt mod = static_cast<unsigned long>(g.modulus);
    mpz_gcd(gv.get_mpz_t(), mod.get_mpz_t(), av.get_mpz_t());
    if (g.exponent >= 0)
      for (int i = 0; i < g.exponent; ++i) v *= Rat(gv);
    else
      for (int i = 0; i < -g.exponent; ++i) v /= Rat(gv);
  }
  v.canonicalize();
  return v;
}

BigInt FactoredExpr::eval_int(const BigInt& q) const {
  Rat v = eval_rat(q);
  if (v.get_den() != 1) throw std::domain_error("eval_int: value not integral at q=" + q.get_str());
  return v.get_num();
}

bool FactoredExpr::eval_is_integral(const BigInt& q) const { return eval_rat(q).get_den() == 1; }

std::pair<IntPoly, BigInt> FactoredExpr::expanded() const {
  if (!gcd_terms_.empty())
    throw std::logic_error("expanded(): unresolved gcd-terms present");
  IntPoly p = IntPoly::monomial(q_power_, constant_.get_num());
  for (const auto& [f, m] : factors_) {
    if (m < 0) throw NotDivisible("expanded(): negative multiplicity");
    p = p * f.pow(static_cast<unsigned>(m));
  }
  return {p, constant_.get_den()};
}

IntPoly FactoredExpr::cleared_minus(const BigInt& k) const {
  auto [p, den] = expanded();
  return p - IntPoly(k * den);
}

int FactoredExpr::total_degree() const {
  int d = static_cast<int>(q_power_);
  for (const auto& [f, m] : factors_) d += f.degree() * m;
  return d;
}

void FactoredExpr::sort_factors() {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
}

std::string FactoredExpr::str() const {
  std::ostringstream os;
  bool lead = false;
  if (constant_ != 1 || (q_power_ == 0 && factors_.empty() && gcd_terms_.empty())) {
    os << constant_.get_str();
    lead = true;
  }
  if (q_power_ > 0) {
    if (lead) os << " * ";
    os << "q";
    if (q_power_ > 1) os << "^" << q_power_;
    lead = true;
  }
  for (const auto& [f, m] : factors_) {
    if (lead) os << " * ";
    os << "(" << f.str() << ")";
    if (m != 1) os << "^" << m;
    lead = true;
  }
  for (const auto& g : gcd_terms_) {
    if (lead) os << " * ";
    os << "gcd(" << g.modulus << ", " << g.arg.str() << ")";
    if (g.exponent != 1) os << "^" << g.exponent;
    lead = true;
  }
  return os.str();
}

std::optional<unsigned> padic_value_cap(const IntPoly& f, const BigInt& p, unsigned max_u) {
  for (unsigned u = 0; u <= max_u; ++u) {
    BigInt mod;
    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), u + 1);
    bool ok = true;
    for (BigInt x = 0; x < mod; ++x) {
      BigInt val = f.eval(x) % mod;
      if (val == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  return std::nullopt;
}

namespace {

struct FlatSide {
  BigInt cnum;  // |numerator| of the rational constant
  unsigned qpow = 0;
  std::vector<std::pair<IntPoly, int>> fac;
};

FlatSide flatten(const FactoredExpr& e, const char* who) {
  if (e.has_gcd_terms())
    throw std::logic_error(std::string("factored_gcd_bound: unresolved gcd-terms in ") + who);
  FlatSide s;
  s.cnum = abs(e.constant().get_num());
  s.qpow = e.q_power();
  s.fac = e.factors();
  for (const auto& [f, m] : s.fac)
    if (m < 0) throw std::logic_error("factored_gcd_bound: negative multiplicity");
  return s;
}

// split factor lists until every cross pair is equal or coprime over Q
void refine(FlatSide& a, FlatSide& b) {
  bool again = true;
  while (again) {
    again = false;
    for (auto& [f, fm] : a.fac) {
      for (auto& [g, gm] : b.fac) {
        if (f == g) continue;
        IntPoly h = poly_gcd(f, g);
        if (h.degree() < 1) continue;
        IntPoly f2 = poly_divexact(f, h);
        IntPoly g2 = poly_divexact(g, h);
        int fmult = fm, gmult = gm;
        // replace in place, append cofactors
        f = h;
        g = h;
        if (f2.degree() >= 1 || f2.constant_value() != 1) a.fac.emplace_back(f2, fmult);
        if (g2.degree() >= 1 || g2.constant_value() != 1) b.fac.emplace_back(g2, gmult);
        again = true;
        break;
      }
      if (again) break;
    }
  }
  // constants may have been appended as degree-0 "factors"
  auto absorb = [](FlatSide& s) {
    for (auto it = s.fac.begin(); it != s.fac.end();) {
      if (it->first.is_constant()) {
        BigInt c = abs(it->first.constant_value());
        for (int i = 0; i < it->second; ++i) s.cnum *= c;
        it = s.fac.erase(it);
      } else {
        ++it;
      }
    }
  };
  absorb(a);
  absorb(b);
}

}  // namespace

FactoredExpr factored_gcd_bound(const FactoredExpr& fa, const FactoredExpr& fb) {
  FlatSide a = flatten(fa, "FA"), b = flatten(fb, "FB");
  refine(a, b);

  FactoredExpr bound(Rat(1));
  bound.mul_qpower(std::min(a.qpow, b.qpow));

  // shared polynomial factors at min multiplicity
  std::vector<bool> used_b(b.fac.size(), false);
  std::vector<int> a_shared(a.fac.size(), 0), b_shared(b.fac.size(), 0);
  for (size_t i = 0; i < a.fac.size(); ++i) {
    for (size_t j = 0; j < b.fac.size(); ++j) {
      if (used_b[j] || !(a.fac[i].first == b.fac[j].first)) continue;
      used_b[j] = true;
      int m = std::min(a.fac[i].second, b.fac[j].second);
      bound.mul_factor(a.fac[i].first, m);
      a_shared[i] = m;
      b_shared[j] = m;
      break;
    }
  }

  // residual q-powers act as cross-pair factors against the other side
  unsigned shared_q = std::min(a.qpow, b.qpow);
  if (a.qpow > shared_q) a.fac.emplace_back(IntPoly::monomial(1), static_cast<int>(a.qpow - shared_q));
  if (b.qpow > shared_q) b.fac.emplace_back(IntPoly::monomial(1), static_cast<int>(b.qpow - shared_q));
  if (a_shared.size() < a.fac.size()) a_shared.resize(a.fac.size(), 0);
  if (b_shared.size() < b.fac.size()) b_shared.resize(b.fac.size(), 0);

  // cross-pair Bezout constants -> candidate primes with loose fallback caps
  std::map<BigInt, unsigned> cand;  // prime -> fallback exponent
  auto note_primes = [&](BigInt c, unsigned mult) {
    if (c < 0) c = -c;
    for (BigInt p = 2; p * p <= c; p += (p == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (c % p == 0) {
        c /= p;
        ++e;
      }
      if (e) cand[p] += e * mult;
    }
    if (c > 1) cand[c] += mult;
  };
  for (size_t i = 0; i < a.fac.size(); ++i) {
    int ma = a.fac[i].second - a_shared[i];
    if (ma == 0) continue;
    for (size_t j = 0; j < b.fac.size(); ++j) {
      int mb = b.fac[j].second - b_shared[j];
      if (mb == 0) continue;
      if (a.fac[i].first == b.fac[j].first) continue;
      BezoutCertificate cert = xgcd_min_constant(a.fac[i].first, b.fac[j].first);
      if (cert.constant != 1)
        note_primes(cert.constant, static_cast<unsigned>(std::max(ma, mb)));
    }
  }
  // constant-part primes: each may meet every part of the other side once
  unsigned parts_a = static_cast<unsigned>(a.fac.size()) + 1;
  unsigned parts_b = static_cast<unsigned>(b.fac.size()) + 1;
  note_primes(a.cnum, parts_b);
  note_primes(b.cnum, parts_a);

  BigInt const_bound = 1;
  for (const auto& [p, fallback] : cand) {
    // UB on v_p of each full side: v_p(const) + sum m_i * cap(F_i)
    auto side_ub = [&](const FlatSide& s) -> std::optional<unsigned> {
      unsigned ub = s.cnum == 0 ? 0 : p_adic_valuation(s.cnum, p);
      for (const auto& [f, m] : s.fac) {
        auto cap = padic_value_cap(f, p);
        if (!cap) return std::nullopt;
        ub += static_cast<unsigned>(m) * *cap;
      }
      return ub;
    };
    auto ua = side_ub(a), ub = side_ub(b);
    unsigned e = fallback;
    if (ua) e = std::min(e, *ua);
    if (ub) e = std::min(e, *ub);
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    const_bound *= pe;
  }
  bound.mul_const(Rat(const_bound));
  bound.sort_factors();
  return bound;
}

}  // namespace ksq
