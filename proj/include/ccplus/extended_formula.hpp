#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ccplus/formula.hpp"
#include "ccplus/signature.hpp"

namespace ccplus {

// A term of an extended atom: a constant of the signature, a value, or a
// variable.
struct Term {
  enum class Kind : std::uint8_t { kConstant, kValue, kVariable };

  Kind kind = Kind::kValue;
  std::uint32_t constant = 0;  // kConstant
  std::string name;            // kValue, kVariable

  static Term of_constant(std::uint32_t c) { return Term{Kind::kConstant, c, {}}; }
  static Term of_value(std::string v) { return Term{Kind::kValue, 0, std::move(v)}; }
  static Term of_variable(std::string x) { return Term{Kind::kVariable, 0, std::move(x)}; }

  bool operator==(const Term&) const = default;
};

// Propositional combinations of extended atoms t1=t2 with ∀/∃ over the one
// shared domain of the signature.
//
// The atom form is slightly more permissive than "term = value": either side
// may be any term, so `c=x` and `x=c` are both accepted. A constant-constant
// atom c=d grounds to the disjunction over the domain of c=v ∧ d=v.
struct ExtendedFormula {
  enum class Kind : std::uint8_t {
    kAtom, kTop, kBottom, kNot, kAnd, kOr, kImplies, kEquiv, kForall, kExists
  };

  Kind kind = Kind::kTop;
  Term lhs;
  Term rhs;
  std::string variable;
  std::vector<ExtendedFormula> children;

  static ExtendedFormula atom(Term lhs, Term rhs);
  static ExtendedFormula top();
  static ExtendedFormula bottom();
  static ExtendedFormula negation(ExtendedFormula f);
  static ExtendedFormula binary(Kind kind, ExtendedFormula lhs, ExtendedFormula rhs);
  static ExtendedFormula forall(std::string variable, ExtendedFormula body);
  static ExtendedFormula exists(std::string variable, ExtendedFormula body);
  // Lifts a quantifier-free formula.
  static ExtendedFormula from_formula(const Signature& sig, const Formula& f);

  bool operator==(const ExtendedFormula&) const = default;
};

std::set<std::string> free_variables(const ExtendedFormula& f);
bool is_closed(const ExtendedFormula& f);

// Replaces free occurrences of `variable` by the value term `value`.
ExtendedFormula substitute(const ExtendedFormula& f, const std::string& variable,
                           const std::string& value);

// Quantifier elimination over `domain` followed by evaluation of value-value
// atoms: ∀x G becomes the conjunction of G(v), ∃x G the disjunction, v=v
// becomes ⊤ and v1=v2 becomes ⊥. Throws PreconditionError when `f` is not
// closed and SignatureError when a constant-value atom is outside the
// signature.
Formula ground(const Signature& sig, const ExtendedFormula& f,
               const std::vector<std::string>& domain);

// The single domain shared by every constant of `sig`; throws
// PreconditionError when the constants disagree or `sig` is empty.
std::vector<std::string> shared_domain(const Signature& sig);

std::string to_string(const Signature& sig, const ExtendedFormula& f);

}  // namespace ccplus
