// The data layer: group families, the large-maximal-subgroup case rows with
// their exclusion routes, subdegree divisor rows, and fixed numeric cases.
// Built-ins ship as a text catalog in the formula DSL; user files load and
// merge over them.

#ifndef KSQ_CATALOG_HPP_
#define KSQ_CATALOG_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksq/formula.hpp"
#include "ksq/numutil.hpp"

namespace ksq {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& m, int ln)
      : std::runtime_error(m + " (line " + std::to_string(ln) + ")"), line(ln) {}
};
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};
struct UnknownCase : std::runtime_error {
  explicit UnknownCase(const std::string& m) : std::runtime_error(m) {}
};

enum class Route {
  Numeric,
  Subfield,
  GcdCongruence,
  SubdegreeTable2,
  SubdegreeExplicit,
  PPrimeBound,
  DiophantineG2,
  ParabolicValuation,
  ParabolicE6,
  PPowerSubdegree,
};
std::string route_name(Route r);
std::optional<Route> route_from_name(const std::string& s);

// |Out(X)| as a function of (p, e, d)
enum class OutKind { E, TwoE, ThreeE, DE, TwoDE, TwoEIfP3ElseE, TwoEIfP2ElseE };
std::string out_name(OutKind k);
std::optional<OutKind> out_from_name(const std::string& s);

// cap kinds for the socle-extension constant c
enum class CCapKind { None, CE, TwoE2, FourE2 };
std::string ccap_name(CCapKind k);
std::optional<CCapKind> ccap_from_name(const std::string& s);

// admissibility predicates on q = p^e (and eps where relevant)
struct Conds {
  unsigned long qmin = 2;
  std::vector<unsigned long> q_only;                      // nonempty: q restricted to set
  std::vector<unsigned long> q_excl;
  unsigned p_eq = 0;                                      // 0 = unconstrained
  unsigned p_ne = 0;
  bool p_odd = false;
  bool e_odd = false;
  bool eps_plus = true, eps_minus = true;
  std::vector<std::pair<int, unsigned long>> pair_excl;   // (eps, q) combinations ruled out

  bool admits(unsigned long p, unsigned e, unsigned long q, int eps) const;
  std::vector<std::string> to_fields() const;  // canonical key=value dump
};

struct Fact {
  enum class Kind { StripQ, Rem, Div, DivRem, Xgcd, Keep, V2Cap, QVal, DividesV };
  Kind kind = Kind::Keep;
  std::string factor_src;
  FormulaPtr factor;
  unsigned mult = 1;
  BigInt constant = 0;  // expected |remainder| / xgcd constant / inner constant
  unsigned t = 0;       // V2Cap: v2(v-1) <= t; QVal: q-part of v-1 is q^t
  std::string str() const;
};
Fact parse_fact(const std::string& text, int line);

struct Branch {
  std::string label = "main";
  bool eps_plus = true, eps_minus = true;
  unsigned res_mod = 1;
  std::vector<unsigned> res_vals{0};
  Conds conds;  // extra conditions (e.g. q>2 for a Table-2 row)
  std::vector<Fact> facts;
  std::vector<std::string> sub_srcs;  // subdegree divisor formulas, f-free
  std::vector<FormulaPtr> subs;
  std::vector<std::string> subrefs;   // Table-2 row ids, parallel to subs when given
  std::string bound_src;              // claimed k+1 divisor bound, f- and c-free
  FormulaPtr bound;

  bool matches(unsigned long p, unsigned e, unsigned long q, int eps) const;
};

struct ExpectedSurvivor {
  int eps = +1;
  unsigned long q = 0;
  std::string factorization;  // e.g. 2^8*3^3*13
  std::string note;           // records paper misprints when the audit differs
};

struct SubgroupCase {
  std::string id, family, stab, note, provenance;
  Route route = Route::GcdCongruence;
  Conds conds;
  std::string order_src, v_src;
  FormulaPtr order, v;
  bool v_fc = false;     // v carries an implicit f/c prefactor
  unsigned fmul = 1;     // power of f in the claimed bound
  unsigned cmul = 0;     // power of c in the claimed bound
  CCapKind ccap = CCapKind::None;
  std::string fsqcap_src, csqcap_src;  // monomial caps f^2 <= q^j, c^2 <= q^j
  FormulaPtr fsqcap, csqcap;
  bool pstrip = true;
  std::vector<Branch> branches;
  std::vector<ExpectedSurvivor> expects;
  std::vector<unsigned long> extra_check;  // forced survivor candidates
  // subfield route
  unsigned sub_r = 0;
  int eps_big = +1, eps_sub = +1;
  // parabolic / p-power routes
  unsigned val_base = 0;      // 2 or 3
  std::string parab_kind;     // P1 | P3
  std::string vminus1p_src;   // ingested |v-1|_p formula (PPowerSubdegree)
  FormulaPtr vminus1p;
};

struct GroupFamily {
  std::string name;
  std::string order_src, d_src, paper_fcap, fsqcap_src;
  FormulaPtr order, d, fsqcap;
  OutKind out = OutKind::E;
  Conds conds;
  bool has_eps = false;
};

struct SubdegreeRow {
  std::string id, family, h0, k, div_src, note;
  FormulaPtr divisor;
  Conds conds;
};

struct NumericCase {
  std::string id, family, stab;
  int eps = +1;
  unsigned long q = 0;
  BigInt order_value, v_value;
};

struct Catalog {
  std::vector<GroupFamily> groups;
  std::vector<SubgroupCase> cases;
  std::vector<SubdegreeRow> subdegrees;
  std::vector<NumericCase> numerics;

  const GroupFamily* group(const std::string& name) const;
  const GroupFamily& group_checked(const std::string& name) const;
  const SubgroupCase* find_case(const std::string& id) const;
  const SubdegreeRow* find_subdegree(const std::string& family, const std::string& h0,
                                     const std::string& k) const;
  const NumericCase* find_numeric(const std::string& family, unsigned long q,
                                  const std::string& stab) const;
};

Catalog load_builtin_catalog();
const std::string& builtin_catalog_text();
Catalog parse_catalog(const std::string& text, const std::string& srcname = "<memory>");
Catalog load_catalog_file(const std::string& path);
// overlay records replace same-id records, new ids append
void merge_catalog(Catalog& base, const Catalog& overlay);
std::string dump_catalog(const Catalog& c);

struct Violation {
  std::string where, what;
};
std::vector<Violation> validate_catalog(const Catalog& c);

// FNV-1a 64 of the canonical dump, hex
std::string catalog_checksum(const Catalog& c);

// largest f with f | |Out(X(q))| under the family's out-kind
BigInt out_order(const GroupFamily& fam, unsigned long p, unsigned e, const BigInt& q, int eps);
// cap on the socle-extension constant c for a case
BigInt c_cap_value(CCapKind k, unsigned long p, unsigned e);

// iterate admissible prime powers q in [lo, hi] for (family, case, eps)
void for_admissible_q(const GroupFamily& fam, const Conds& extra, int eps, unsigned long lo,
                      unsigned long hi,
                      const std::function<void(unsigned long q, unsigned long p, unsigned e)>& fn);

}  // namespace ksq

#endif
