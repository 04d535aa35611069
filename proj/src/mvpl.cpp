#include "ccplus/mvpl.hpp"

#include "ccplus/solver.hpp"

namespace ccplus {

bool satisfies(const Interpretation& interp, const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: {
      Atom a = f.as_atom();
      return interp[a.constant] == a.value;
    }
    case Connective::kTop:
      return true;
    case Connective::kBottom:
      return false;
    case Connective::kNot:
      return !satisfies(interp, f.lhs());
    case Connective::kAnd:
      return satisfies(interp, f.lhs()) && satisfies(interp, f.rhs());
    case Connective::kOr:
      return satisfies(interp, f.lhs()) || satisfies(interp, f.rhs());
    case Connective::kImplies:
      return !satisfies(interp, f.lhs()) || satisfies(interp, f.rhs());
    case Connective::kEquiv:
      return satisfies(interp, f.lhs()) == satisfies(interp, f.rhs());
  }
  return false;
}

bool satisfies_all(const Interpretation& interp, std::span<const Formula> formulas) {
  for (const auto& f : formulas) {
    if (!satisfies(interp, f)) return false;
  }
  return true;
}

std::vector<Interpretation> models(const Signature& sig, std::span<const Formula> formulas) {
  return enumerate_models(sig, formulas).models;
}

std::vector<Interpretation> naive_models(const Signature& sig,
                                         std::span<const Formula> formulas) {
  std::vector<Interpretation> out;
  for_each_interpretation(sig, [&](const Interpretation& i) {
    if (satisfies_all(i, formulas)) out.push_back(i);
    return true;
  });
  return out;
}

bool entails(const Signature& sig, std::span<const Formula> formulas, const Formula& f) {
  std::vector<Formula> with_negation(formulas.begin(), formulas.end());
  with_negation.push_back(!f);
  return !find_model(sig, with_negation).has_value();
}

bool naive_entails(const Signature& sig, std::span<const Formula> formulas, const Formula& f) {
  bool holds = true;
  for_each_interpretation(sig, [&](const Interpretation& i) {
    if (satisfies_all(i, formulas) && !satisfies(i, f)) holds = false;
    return holds;
  });
  return holds;
}

}  // namespace ccplus
