#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccplus/causal.hpp"
#include "ccplus/cplus.hpp"
#include "ccplus/formula.hpp"
#include "ccplus/interpretation.hpp"
#include "ccplus/signature.hpp"

namespace ccplus {

// Name of the Boolean constant standing for c=v: "c!v".
std::string replacement_name(const std::string& constant, const std::string& value);

// The map σ → σ_c replacing constant c by Boolean constants c!v, one per
// value, placed where c was.
class EliminationTarget {
 public:
  // Throws SignatureError when c is not in `sig` or a c!v name is taken.
  EliminationTarget(Signature sig, std::uint32_t constant);
  EliminationTarget(Signature sig, std::string_view constant_name);

  [[nodiscard]] const Signature& source() const { return source_; }
  [[nodiscard]] const Signature& target() const { return target_; }
  [[nodiscard]] std::uint32_t constant() const { return constant_; }
  [[nodiscard]] std::size_t domain_size() const { return source_.domain_size(constant_); }

  // Index in σ_c of a constant other than c.
  [[nodiscard]] std::uint32_t map_constant(std::uint32_t c) const;
  // Index in σ_c of c!v.
  [[nodiscard]] std::uint32_t replacement(std::uint32_t value) const { return constant_ + value; }

  // F_c: each c=v becomes c!v=tt; other atoms are re-indexed.
  [[nodiscard]] Formula rename(const Formula& f) const;
  // I_c
  [[nodiscard]] Interpretation correspond(const Interpretation& interp) const;
  // The I with I_c = `interp`, if any.
  [[nodiscard]] std::optional<Interpretation> decode(const Interpretation& interp) const;

  // elim_c: the disjunction of the c!v=tt, conjoined with (c!v=ff | c!v'=ff)
  // for every pair v before v' in domain order.
  [[nodiscard]] Formula elim_formula() const;

 private:
  Signature source_;
  Signature target_;
  std::uint32_t constant_;
};

// {F_c : F ∈ X} ∪ {elim_c}
std::vector<Formula> eliminate_from_formulas(const EliminationTarget& target,
                                             std::span<const Formula> formulas);

// Renames every law and adds ⊤ ⇒ elim_c.
CausalTheory eliminate_causal_general(const CausalTheory& theory, std::uint32_t constant);

// Renames every law and adds c!v=tt ⇒ c!v'=ff for v ≠ v', and
// ⋀_v c!v=ff ⇒ ⊥. Throws PreconditionError unless Dom(c) has at least two
// values and every consequent mentioning c is an atom.
CausalTheory eliminate_causal_definite(const CausalTheory& theory, std::uint32_t constant);

// Targets restricted to one half of an action signature, for mapping states
// (s ↦ s_c) and actions (a ↦ a_c). `constant` is a combined index.
EliminationTarget fluent_target(const ActionSignature& sig, std::uint32_t constant);
EliminationTarget action_target(const ActionSignature& sig, std::uint32_t constant);

// Renames and adds the static law `caused elim_c if true`.
ActionDescription eliminate_cplus_fluent_general(const ActionDescription& d,
                                                 std::uint32_t fluent);

// Renames and adds `caused c!v=ff if c!v'=tt` for v ≠ v' and
// `caused false if ⋀_v c!v=ff`. Throws PreconditionError unless Dom(c) has at
// least two values and every head mentioning c is an atom.
ActionDescription eliminate_cplus_fluent_definite(const ActionDescription& d,
                                                  std::uint32_t fluent);

// Renames and adds the dynamic law `caused false if true after -elim_c`.
// `action` is a combined index.
ActionDescription eliminate_cplus_action(const ActionDescription& d, std::uint32_t action);

enum class EliminationMethod : std::uint8_t { kGeneral, kDefinite };

// Whether the definite method's hypotheses hold for `constant`.
bool definite_elimination_applies(const CausalTheory& theory, std::uint32_t constant);
bool definite_elimination_applies(const ActionDescription& d, std::uint32_t fluent);

struct EliminationStep {
  std::string constant;
  bool is_fluent = true;
  EliminationMethod method = EliminationMethod::kGeneral;
  // Exactly one is set: the map on states for a fluent, on actions otherwise.
  std::optional<EliminationTarget> states;
  std::optional<EliminationTarget> actions;
};

struct EliminationChain {
  ActionDescription result;
  std::vector<EliminationStep> steps;

  // Maps a state / action of the original description through every step.
  [[nodiscard]] Interpretation map_state(Interpretation s) const;
  [[nodiscard]] Interpretation map_action(Interpretation a) const;
};

// Eliminates every non-Boolean constant one at a time in signature order,
// using the definite method for fluents where it applies and the general
// method otherwise.
EliminationChain eliminate_all(const ActionDescription& d);

}  // namespace ccplus
