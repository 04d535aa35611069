#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ccplus/causal.hpp"
#include "ccplus/formula.hpp"
#include "ccplus/interpretation.hpp"
#include "ccplus/signature.hpp"

namespace ccplus {

// σ = σ^fl ∪ σ^act. Formulas of an action description are built against the
// combined signature, where fluent i has index i and action j has index
// |σ^fl| + j. A state (an interpretation of σ^fl) can therefore evaluate any
// state formula directly, and join(s, a) evaluates formulas of σ.
class ActionSignature {
 public:
  ActionSignature() = default;
  // Throws SignatureError when a name is both a fluent and an action.
  ActionSignature(Signature fluents, Signature actions);

  [[nodiscard]] const Signature& fluents() const { return fluents_; }
  [[nodiscard]] const Signature& actions() const { return actions_; }
  [[nodiscard]] const Signature& combined() const { return combined_; }

  [[nodiscard]] std::uint32_t fluent_count() const {
    return static_cast<std::uint32_t>(fluents_.size());
  }
  [[nodiscard]] bool is_fluent(std::uint32_t combined_index) const {
    return combined_index < fluent_count();
  }
  [[nodiscard]] std::uint32_t action_index(std::uint32_t action) const {
    return fluent_count() + action;
  }

  bool operator==(const ActionSignature& other) const {
    return fluents_ == other.fluents_ && actions_ == other.actions_;
  }

 private:
  Signature fluents_;
  Signature actions_;
  Signature combined_;
};

// caused F if G             (static, no `after`)
// caused F if G after H     (dynamic)
struct Proposition {
  enum class Kind : std::uint8_t { kStatic, kDynamic };

  Kind kind = Kind::kStatic;
  Formula head;
  Formula condition;
  Formula after;  // ⊤ for static laws, unused

  static Proposition static_law(Formula head, Formula condition);
  static Proposition dynamic_law(Formula head, Formula condition, Formula after);

  [[nodiscard]] bool is_static() const { return kind == Kind::kStatic; }

  bool operator==(const Proposition&) const = default;
};

// α1,...,αk causes F [if H]
struct CausesLaw {
  std::vector<std::uint32_t> actions;  // combined indices of Boolean actions
  Formula effect;
  std::optional<Formula> condition;
};

// nonexecutable α1,...,αk [if H]
struct NonexecutableLaw {
  std::vector<std::uint32_t> actions;
  std::optional<Formula> condition;
};

struct InertialLaw {
  Formula fluent_formula;
};

struct NeverLaw {
  Formula state_formula;
};

using Abbreviation = std::variant<Proposition, CausesLaw, NonexecutableLaw, InertialLaw, NeverLaw>;

// Expands an abbreviation into the proposition it stands for. Throws
// PreconditionError when a causes/nonexecutable list names a non-Boolean
// constant or a fluent.
Proposition desugar(const ActionSignature& sig, const Abbreviation& abbreviation);

// A finite set of propositions. Duplicate propositions are dropped.
class ActionDescription {
 public:
  ActionDescription() = default;
  // Throws SignatureError for atoms outside σ, or a head or `if` condition
  // that mentions an action constant.
  ActionDescription(ActionSignature sig, std::vector<Proposition> propositions);

  [[nodiscard]] const ActionSignature& signature() const { return sig_; }
  [[nodiscard]] const std::vector<Proposition>& propositions() const { return propositions_; }

 private:
  ActionSignature sig_;
  std::vector<Proposition> propositions_;
};

struct Transition {
  Interpretation from;
  Interpretation action;
  Interpretation to;

  auto operator<=>(const Transition&) const = default;
};

struct TransitionDiagram {
  std::vector<Interpretation> states;
  std::vector<Transition> edges;  // ordered by (from, action, to)
};

// Interpretations of σ^fl satisfying G ⊃ F for every static law.
bool is_state(const ActionDescription& d, const Interpretation& s);
std::vector<Interpretation> states(const ActionDescription& d);

// Formulas caused in ⟨s, a, s'⟩: heads of static laws with s' ⊨ G and of
// dynamic laws with s' ⊨ G and s ∪ a ⊨ H. Duplicate heads appear once.
std::vector<Formula> caused_formulas(const ActionDescription& d, const Interpretation& s,
                                     const Interpretation& a, const Interpretation& s_next);

struct TransitionCheck {
  bool explained = false;
  std::string diagnostic;  // set when s or s' is not a state

  explicit operator bool() const { return explained; }
};

// s' is the only interpretation of σ^fl satisfying the caused formulas. Uniqueness
// is checked against every fluent interpretation, not only against states.
TransitionCheck is_causally_explained_transition(const ActionDescription& d,
                                                 const Interpretation& s,
                                                 const Interpretation& a,
                                                 const Interpretation& s_next);

// Nodes are the states; edges every causally explained ⟨s, a, s'⟩, found by
// enumerating states × actions × states.
TransitionDiagram transition_diagram(const ActionDescription& d);

DefiniteCheck is_definite_description(const ActionDescription& d);

// The causal theory ct(D) over σ(0) ∪ σ^fl(1). Constant c at time n is
// spelled "c@n". Laws: A ⇒ A for every atom of σ(0) in signature order, then
// G(0) ⇒ F(0) for the static laws, then G(1) ⇒ F(1), then H(0) ∧ G(1) ⇒ F(1)
// for the dynamic laws.
CausalTheory ct(const ActionDescription& d);

// Indices into the ct(D) signature.
std::uint32_t ct_index(const ActionSignature& sig, std::uint32_t combined_index,
                       unsigned step);
// F(n) for a formula F of σ (n = 0) or a state formula (n = 0, 1).
Formula at_step(const ActionSignature& sig, const Formula& f, unsigned step);

// s(0) ∪ a(0) ∪ s'(1)
Interpretation compose_ct(const Transition& t);
// Inverse of compose_ct for an interpretation of the ct(D) signature.
Transition decompose_ct(const ActionSignature& sig, const Interpretation& interp);

// Shortest path in the transition diagram from a state satisfying `init` to a
// state satisfying `goal`, at most `max_steps` long. Breadth-first; start
// states, actions and successors are tried in canonical order. An empty plan
// means some initial state already satisfies the goal.
std::optional<std::vector<Transition>> path_search(const TransitionDiagram& diagram,
                                                   const Formula& init, const Formula& goal,
                                                   std::size_t max_steps);
std::optional<std::vector<Transition>> path_search(const ActionDescription& d,
                                                   const Formula& init, const Formula& goal,
                                                   std::size_t max_steps);

std::string to_string(const ActionSignature& sig, const Proposition& p);

}  // namespace ccplus
