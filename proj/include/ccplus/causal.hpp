#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccplus/formula.hpp"
#include "ccplus/interpretation.hpp"
#include "ccplus/signature.hpp"

namespace ccplus {

// F ⇒ G: "if F then G is caused". Not the material conditional.
struct CausalLaw {
  Formula antecedent;
  Formula consequent;

  bool operator==(const CausalLaw&) const = default;
};

// A signature with a finite set of causal laws. Syntactically identical laws
// are dropped on construction, keeping the first occurrence.
class CausalTheory {
 public:
  CausalTheory() = default;
  // Throws SignatureError when a law mentions an atom outside `sig`.
  CausalTheory(Signature sig, std::vector<CausalLaw> laws);

  [[nodiscard]] const Signature& signature() const { return sig_; }
  [[nodiscard]] const std::vector<CausalLaw>& laws() const { return laws_; }

 private:
  Signature sig_;
  std::vector<CausalLaw> laws_;
};

// T^I: consequents of the laws whose antecedent I satisfies, without
// duplicates, in law order.
std::vector<Formula> reduct(const CausalTheory& theory, const Interpretation& interp);

// I is the unique model of T^I.
bool is_causally_explained(const CausalTheory& theory, const Interpretation& interp);

// All causally explained interpretations in canonical order. Definite theories
// go through the completion; others are scanned interpretation by
// interpretation with the solver checking uniqueness.
std::vector<Interpretation> causally_explained_interpretations(const CausalTheory& theory);

// Reference scan: for every interpretation, enumerate the models of T^I
// naively. Independent of the solver and of completion.
std::vector<Interpretation> causally_explained_brute_force(const CausalTheory& theory);

struct DefiniteCheck {
  bool definite = true;
  // Empty when definite; otherwise names the first violating constant or law.
  std::string diagnostic;

  explicit operator bool() const { return definite; }
};

// No singleton domain, and every consequent is an atom or ⊥. Finite theories
// cannot have an atom as the consequent of infinitely many laws, so that
// condition is never reported.
DefiniteCheck is_definite(const CausalTheory& theory);

struct Completion {
  // One A ≡ (F1 ∨ ... ∨ Fn) per atom in canonical order (A ≡ ⊥ when n = 0),
  // followed by ¬F for every law F ⇒ ⊥ in law order.
  std::vector<Formula> formulas;
};

// Multi-valued completion. Throws PreconditionError when `theory` is not
// definite.
Completion completion(const CausalTheory& theory);

std::string to_string(const Signature& sig, const CausalLaw& law);

}  // namespace ccplus
