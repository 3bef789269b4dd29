// The order-formula language used by catalog data files.
// Grammar (normative for catalog files):
//   expr := term (('+'|'-') term)*
//   term := pow (('*'|'/') pow)*
//   pow  := atom ('^' uint)?
//   atom := uint | 'q' | 'eps' | 'gcd' '(' uint ',' expr ')' | '(' expr ')'

#ifndef KSQ_FORMULA_HPP_
#define KSQ_FORMULA_HPP_

#include <memory>
#include <optional>
#include <string>

#include "ksq/factored.hpp"

namespace ksq {

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& m, size_t pos)
      : std::runtime_error(m + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownIdentifier : std::runtime_error {
  explicit UnknownIdentifier(const std::string& m) : std::runtime_error(m) {}
};
struct UnresolvedGcd : std::runtime_error {
  explicit UnresolvedGcd(const std::string& m) : std::runtime_error(m) {}
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Integer, Var, Eps, Gcd, Add, Sub, Mul, Div, Pow };
  Kind kind;
  BigInt value;          // Integer
  unsigned modulus = 0;  // Gcd: gcd(modulus, rhs)
  unsigned exponent = 0; // Pow: lhs ^ exponent
  FormulaPtr lhs, rhs;
};

FormulaPtr parse_formula(const std::string& text);
std::string pretty(const FormulaPtr& f);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// exact rational value with eps in {+1,-1}
Rat eval_formula(const FormulaPtr& f, const BigInt& q, int eps);

// q === value (mod modulus)
struct Residue {
  unsigned modulus = 1;
  unsigned value = 0;
};

// Expand to a FactoredExpr with eps fixed. gcd-terms decidable under the
// residue assumption are replaced by their constant value; without an
// assumption they stay symbolic unless require_full is set, in which case
// UnresolvedGcd is thrown.
FactoredExpr resolve(const FormulaPtr& f, int eps, std::optional<Residue> assumption = {},
                     bool require_full = false);

}  // namespace ksq

#endif
