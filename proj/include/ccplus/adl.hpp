#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccplus/cplus.hpp"
#include "ccplus/extended_formula.hpp"
#include "ccplus/interpretation.hpp"

namespace ccplus {

// Precondition and update formulas over fluents that all share one finite
// domain, with Boolean action symbols only. Extended formulas refer to
// fluents by their index in the fluent signature.
class AdlDescription {
 public:
  // The free variable of update formulas.
  static constexpr const char* kUpdateVariable = "x";

  AdlDescription() = default;
  // `preconditions` has one entry per action; `updates[a][c]` is the update
  // formula of action a for fluent c. Throws PreconditionError when the
  // fluents do not share a domain, an action is not Boolean, a precondition
  // is not closed or an update has a free variable other than x.
  AdlDescription(ActionSignature sig, std::vector<ExtendedFormula> preconditions,
                 std::vector<std::vector<ExtendedFormula>> updates);

  [[nodiscard]] const ActionSignature& signature() const { return sig_; }
  [[nodiscard]] const std::vector<std::string>& domain() const { return domain_; }
  [[nodiscard]] const ExtendedFormula& precondition(std::uint32_t action) const {
    return preconditions_.at(action);
  }
  [[nodiscard]] const ExtendedFormula& update(std::uint32_t action, std::uint32_t fluent) const {
    return updates_.at(action).at(fluent);
  }

  // Precond^α as a formula of σ^fl.
  [[nodiscard]] Formula grounded_precondition(std::uint32_t action) const;
  // Update^α_c(v) with x replaced by the value of index `value`, grounded.
  [[nodiscard]] Formula grounded_update(std::uint32_t action, std::uint32_t fluent,
                                        std::uint32_t value) const;

 private:
  ActionSignature sig_;
  std::vector<std::string> domain_;
  std::vector<ExtendedFormula> preconditions_;
  std::vector<std::vector<ExtendedFormula>> updates_;
};

struct InconsistencyWitness {
  std::uint32_t action = 0;
  std::uint32_t fluent = 0;
  std::uint32_t first_value = 0;
  std::uint32_t second_value = 0;
  Interpretation state;  // satisfies Precond and both updates
};

struct ConsistencyReport {
  bool consistent = true;
  std::optional<InconsistencyWitness> counterexample;

  explicit operator bool() const { return consistent; }
};

// Precond^α ⊨ ¬(Update^α_c(v1) ∧ Update^α_c(v2)) for all α, c and v1 ≠ v2.
ConsistencyReport check_consistent(const AdlDescription& d);

std::string describe(const AdlDescription& d, const InconsistencyWitness& w);

// An ADL description that passed check_consistent, with every formula
// grounded once.
class ConsistentAdl {
 public:
  // Throws PreconditionError naming the counterexample if `d` is inconsistent.
  explicit ConsistentAdl(AdlDescription d);

  [[nodiscard]] const AdlDescription& description() const { return d_; }

  // The result of executing `action` in `s`, or nothing when the precondition
  // fails. Throws std::logic_error if the update case split is not exclusive,
  // which consistency rules out.
  [[nodiscard]] std::optional<Interpretation> result(const Interpretation& s,
                                                     std::uint32_t action) const;

 private:
  AdlDescription d_;
  std::vector<Formula> preconditions_;
  std::vector<std::vector<std::vector<Formula>>> updates_;  // [action][fluent][value]
};

// The action that maps `action` to tt and every other action symbol to ff.
Interpretation single_action(const ActionSignature& sig, std::uint32_t action);

// The C+ counterpart: inertial c=v for every fluent c and value v;
// nonexecutable α if ¬Precond^α for every action; α causes c=v if
// Update^α_c(v) for every action, fluent and value. Grounds once.
ActionDescription to_cplus(const AdlDescription& d);

}  // namespace ccplus
