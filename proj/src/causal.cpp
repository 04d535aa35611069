#include "ccplus/causal.hpp"

#include <algorithm>

#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"
#include "ccplus/solver.hpp"

namespace ccplus {

CausalTheory::CausalTheory(Signature sig, std::vector<CausalLaw> laws) : sig_(std::move(sig)) {
  laws_.reserve(laws.size());
  for (auto& law : laws) {
    check_well_formed(sig_, law.antecedent);
    check_well_formed(sig_, law.consequent);
    if (std::find(laws_.begin(), laws_.end(), law) == laws_.end()) {
      laws_.push_back(std::move(law));
    }
  }
}

std::vector<Formula> reduct(const CausalTheory& theory, const Interpretation& interp) {
  std::vector<Formula> out;
  for (const auto& law : theory.laws()) {
    if (!satisfies(interp, law.antecedent)) continue;
    if (std::find(out.begin(), out.end(), law.consequent) == out.end()) {
      out.push_back(law.consequent);
    }
  }
  return out;
}

bool is_causally_explained(const CausalTheory& theory, const Interpretation& interp) {
  return is_unique_model(theory.signature(), reduct(theory, interp), interp);
}

std::vector<Interpretation> causally_explained_interpretations(const CausalTheory& theory) {
  if (is_definite(theory)) return models(theory.signature(), completion(theory).formulas);
  std::vector<Interpretation> out;
  for_each_interpretation(theory.signature(), [&](const Interpretation& i) {
    if (is_causally_explained(theory, i)) out.push_back(i);
    return true;
  });
  return out;
}

std::vector<Interpretation> causally_explained_brute_force(const CausalTheory& theory) {
  const Signature& sig = theory.signature();
  std::vector<Interpretation> out;
  for_each_interpretation(sig, [&](const Interpretation& i) {
    const auto caused = reduct(theory, i);
    if (!satisfies_all(i, caused)) return true;
    bool unique = true;
    for_each_interpretation(sig, [&](const Interpretation& j) {
      if (j != i && satisfies_all(j, caused)) unique = false;
      return unique;
    });
    if (unique) out.push_back(i);
    return true;
  });
  return out;
}

DefiniteCheck is_definite(const CausalTheory& theory) {
  const Signature& sig = theory.signature();
  for (std::uint32_t c = 0; c < sig.size(); ++c) {
    if (sig.domain_size(c) == 1) {
      return {false, "constant '" + sig.name(c) + "' has a singleton domain"};
    }
  }
  for (std::size_t i = 0; i < theory.laws().size(); ++i) {
    const auto& law = theory.laws()[i];
    if (!law.consequent.is_atom() && !law.consequent.is_bottom()) {
      return {false, "law " + std::to_string(i + 1) + " (" + to_string(sig, law) +
                         ") has a consequent that is neither an atom nor false"};
    }
  }
  return {};
}

Completion completion(const CausalTheory& theory) {
  if (auto check = is_definite(theory); !check) {
    throw PreconditionError("completion requires a definite theory: " + check.diagnostic);
  }
  const Signature& sig = theory.signature();
  Completion out;
  out.formulas.reserve(sig.atom_count());
  for (Atom a : sig.atoms()) {
    std::vector<Formula> antecedents;
    for (const auto& law : theory.laws()) {
      if (law.consequent.is_atom() && law.consequent.as_atom() == a) {
        antecedents.push_back(law.antecedent);
      }
    }
    out.formulas.push_back(Formula::equivalence(Formula::atom(a), disjoin(antecedents)));
  }
  for (const auto& law : theory.laws()) {
    if (law.consequent.is_bottom()) out.formulas.push_back(!law.antecedent);
  }
  return out;
}

std::string to_string(const Signature& sig, const CausalLaw& law) {
  return to_string(sig, law.antecedent) + " => " + to_string(sig, law.consequent);
}

}  // namespace ccplus
