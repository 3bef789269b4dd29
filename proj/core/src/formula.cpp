#include "ksq/formula.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace ksq {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  FormulaPtr make(Formula f) { return std::make_shared<Formula>(std::move(f)); }

  FormulaPtr parse_uint() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw SyntaxError("expected integer", pos);
    Formula f;
    f.kind = Formula::Kind::Integer;
    f.value = BigInt(s.substr(start, pos - start));
    return make(std::move(f));
  }

  unsigned parse_plain_uint(const char* what) {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw SyntaxError(std::string("expected ") + what, pos);
    return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
  }

  FormulaPtr atom() {
    skip();
    if (pos >= s.size()) throw SyntaxError("unexpected end of formula", pos);
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_uint();
    if (c == '(') {
      ++pos;
      FormulaPtr e = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string id = s.substr(start, pos - start);
      if (id == "q") {
        Formula f;
        f.kind = Formula::Kind::Var;
        return make(std::move(f));
      }
      if (id == "eps") {
        Formula f;
        f.kind = Formula::Kind::Eps;
        return make(std::move(f));
      }
      if (id == "gcd") {
        if (!eat('(')) throw SyntaxError("expected '(' after gcd", pos);
        unsigned m = parse_plain_uint("gcd modulus");
        if (!eat(',')) throw SyntaxError("expected ',' in gcd", pos);
        FormulaPtr arg = expr();
        if (!eat(')')) throw SyntaxError("expected ')' closing gcd", pos);
        if (m == 0) throw SyntaxError("gcd modulus must be positive", pos);
        Formula f;
        f.kind = Formula::Kind::Gcd;
        f.modulus = m;
        f.rhs = arg;
        return make(std::move(f));
      }
      throw UnknownIdentifier("unknown identifier '" + id + "'");
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }

  FormulaPtr power() {
    FormulaPtr base = atom();
    if (eat('^')) {
      unsigned e = parse_plain_uint("exponent");
      Formula f;
      f.kind = Formula::Kind::Pow;
      f.exponent = e;
      f.lhs = base;
      return make(std::move(f));
    }
    return base;
  }

  FormulaPtr term() {
    FormulaPtr left = power();
    for (;;) {
      if (eat('*')) {
        Formula f;
        f.kind = Formula::Kind::Mul;
        f.lhs = left;
        f.rhs = power();
        left = make(std::move(f));
      } else if (eat('/')) {
        Formula f;
        f.kind = Formula::Kind::Div;
        f.lhs = left;
        f.rhs = power();
        left = make(std::move(f));
      } else {
        return left;
      }
    }
  }

  FormulaPtr expr() {
    FormulaPtr left = term();
    for (;;) {
      if (eat('+')) {
        Formula f;
        f.kind = Formula::Kind::Add;
        f.lhs = left;
        f.rhs = term();
        left = make(std::move(f));
      } else if (eat('-')) {
        Formula f;
        f.kind = Formula::Kind::Sub;
        f.lhs = left;
        f.rhs = term();
        left = make(std::move(f));
      } else {
        return left;
      }
    }
  }
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Add:
    case Formula::Kind::Sub:
      return 1;
    case Formula::Kind::Mul:
    case Formula::Kind::Div:
      return 2;
    case Formula::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

void print(const FormulaPtr& f, std::ostream& os, int parent_prec) {
  int prec = precedence(f->kind);
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  switch (f->kind) {
    case Formula::Kind::Integer:
      os << f->value.get_str();
      break;
    case Formula::Kind::Var:
      os << "q";
      break;
    case Formula::Kind::Eps:
      os << "eps";
      break;
    case Formula::Kind::Gcd:
      os << "gcd(" << f->modulus << ",";
      print(f->rhs, os, 0);
      os << ")";
      break;
    case Formula::Kind::Add:
      print(f->lhs, os, prec);
      os << "+";
      print(f->rhs, os, prec + 1);
      break;
    case Formula::Kind::Sub:
      print(f->lhs, os, prec);
      os << "-";
      print(f->rhs, os, prec + 1);
      break;
    case Formula::Kind::Mul:
      print(f->lhs, os, prec);
      os << "*";
      print(f->rhs, os, prec + 1);
      break;
    case Formula::Kind::Div:
      print(f->lhs, os, prec);
      os << "/";
      print(f->rhs, os, prec + 1);
      break;
    case Formula::Kind::Pow:
      print(f->lhs, os, prec + 1);
      os << "^" << f->exponent;
      break;
  }
  if (paren) os << ")";
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p{text};
  p.skip();
  if (p.pos >= text.size()) throw SyntaxError("empty formula", 0);
  FormulaPtr f = p.expr();
  p.skip();
  if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
  return f;
}

std::string pretty(const FormulaPtr& f) {
  std::ostringstream os;
  print(f, os, 0);
  return os.str();
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind || a->value != b->value || a->modulus != b->modulus ||
      a->exponent != b->exponent)
    return false;
  return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
}

Rat eval_formula(const FormulaPtr& f, const BigInt& q, int eps) {
  switch (f->kind) {
    case Formula::Kind::Integer:
      return Rat(f->value);
    case Formula::Kind::Var:
      return Rat(q);
    case Formula::Kind::Eps:
      return Rat(eps);
    case Formula::Kind::Gcd: {
      Rat a = eval_formula(f->rhs, q, eps);
      if (a.get_den() != 1) throw std::domain_error("gcd argument not integral");
      BigInt g, m(static_cast<unsigned long>(f->modulus)), av = abs(a.get_num());
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), av.get_mpz_t());
      return Rat(g);
    }
    case Formula::Kind::Add:
      return eval_formula(f->lhs, q, eps) + eval_formula(f->rhs, q, eps);
    case Formula::Kind::Sub:
      return eval_formula(f->lhs, q, eps) - eval_formula(f->rhs, q, eps);
    case Formula::Kind::Mul:
      return eval_formula(f->lhs, q, eps) * eval_formula(f->rhs, q, eps);
    case Formula::Kind::Div: {
      Rat d = eval_formula(f->rhs, q, eps);
      if (d == 0) throw std::domain_error("division by zero in formula");
      return eval_formula(f->lhs, q, eps) / d;
    }
    case Formula::Kind::Pow: {
      Rat b = eval_formula(f->lhs, q, eps);
      Rat r(1);
      for (unsigned i = 0; i < f->exponent; ++i) r *= b;
      return r;
    }
  }
  throw std::logic_error("eval_formula: bad node");
}

namespace {

// polynomial (over Z, with denominator) view of a gcd-free expression
struct PolyForm {
  IntPoly num;
  BigInt den = 1;
};

PolyForm to_polyform(const FactoredExpr& e, const char* ctx) {
  if (e.has_gcd_terms())
    throw UnresolvedGcd(std::string("gcd-term not resolvable inside ") + ctx);
  auto [p, den] = e.expanded();
  return {p, den};
}

}  // namespace

FactoredExpr resolve(const FormulaPtr& f, int eps, std::optional<Residue> assumption,
                     bool require_full) {
  switch (f->kind) {
    case Formula::Kind::Integer:
      return FactoredExpr(Rat(f->value));
    case Formula::Kind::Var:
      return FactoredExpr::q_power_expr(1);
    case Formula::Kind::Eps:
      return FactoredExpr(Rat(eps));
    case Formula::Kind::Pow:
      return resolve(f->lhs, eps, assumption, require_full).pow(f->exponent);
    case Formula::Kind::Mul: {
      FactoredExpr a = resolve(f->lhs, eps, assumption, require_full);
      return a * resolve(f->rhs, eps, assumption, require_full);
    }
    case Formula::Kind::Div: {
      FactoredExpr a = resolve(f->lhs, eps, assumption, require_full);
      FactoredExpr b = resolve(f->rhs, eps, assumption, require_full);
      return a.divide_exact(b);
    }
    case Formula::Kind::Add:
    case Formula::Kind::Sub: {
      PolyForm a = to_polyform(resolve(f->lhs, eps, assumption, require_full), "a sum");
      PolyForm b = to_polyform(resolve(f->rhs, eps, assumption, require_full), "a sum");
      BigInt den;
      mpz_lcm(den.get_mpz_t(), a.den.get_mpz_t(), b.den.get_mpz_t());
      IntPoly pa = a.num * (den / a.den);
      IntPoly pb = b.num * (den / b.den);
      IntPoly sum = f->kind == Formula::Kind::Add ? pa + pb : pa - pb;
      FactoredExpr r(Rat(BigInt(1), den));
      if (!sum.is_zero()) r.mul_factor(sum, 1);
      else r = FactoredExpr(Rat(0));
      return r;
    }
    case Formula::Kind::Gcd: {
      FactoredExpr argex = resolve(f->rhs, eps, assumption, require_full);
      PolyForm arg = to_polyform(argex, "a gcd argument");
      if (arg.den != 1)
        throw UnresolvedGcd("gcd argument has a nontrivial denominator");
      BigInt m(static_cast<unsigned long>(f->modulus));
      if (arg.num.is_constant()) {
        BigInt g, av = abs(arg.num.constant_value());
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), av.get_mpz_t());
        return FactoredExpr(Rat(g));
      }
      if (assumption) {
        // decidable iff gcd(m, arg(q)) is constant over the residue class
        unsigned M = assumption->modulus;
        unsigned lcm = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(
            M, f->modulus));
        std::optional<BigInt> common;
        bool decidable = true;
        for (unsigned x = assumption->value % M; x < lcm; x += M) {
          BigInt val = abs(arg.num.eval(BigInt(static_cast<unsigned long>(x))));
          BigInt g;
          mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), val.get_mpz_t());
          if (!common)
            common = g;
          else if (*common != g) {
            decidable = false;
            break;
          }
        }
        if (decidable && common) return FactoredExpr(Rat(*common));
      }
      if (require_full)
        throw UnresolvedGcd("gcd(" + std::to_string(f->modulus) +
                            ", ...) not decided by the residue assumption");
      FactoredExpr r(Rat(1));
      r.mul_gcd_term(GcdTerm{f->modulus, arg.num, 1});
      return r;
    }
  }
  throw std::logic_error("resolve: bad node");
}

}  // namespace ksq
