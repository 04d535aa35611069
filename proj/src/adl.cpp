#include "ccplus/adl.hpp"

#include <stdexcept>

#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"
#include "ccplus/solver.hpp"

namespace ccplus {

AdlDescription::AdlDescription(ActionSignature sig, std::vector<ExtendedFormula> preconditions,
                               std::vector<std::vector<ExtendedFormula>> updates)
    : sig_(std::move(sig)),
      preconditions_(std::move(preconditions)),
      updates_(std::move(updates)) {
  const Signature& fluents = sig_.fluents();
  const Signature& actions = sig_.actions();
  domain_ = shared_domain(fluents);
  for (std::uint32_t a = 0; a < actions.size(); ++a) {
    if (!actions.is_boolean(a)) {
      throw PreconditionError("ADL action '" + actions.name(a) + "' is not Boolean");
    }
  }
  if (preconditions_.size() != actions.size() || updates_.size() != actions.size()) {
    throw PreconditionError("ADL description needs one precondition and update row per action");
  }
  for (std::uint32_t a = 0; a < actions.size(); ++a) {
    if (!is_closed(preconditions_[a])) {
      throw PreconditionError("precondition of '" + actions.name(a) + "' is not closed");
    }
    if (updates_[a].size() != fluents.size()) {
      throw PreconditionError("ADL description needs one update per action and fluent");
    }
    for (std::uint32_t c = 0; c < fluents.size(); ++c) {
      for (const auto& var : free_variables(updates_[a][c])) {
        if (var != kUpdateVariable) {
          throw PreconditionError("update of '" + fluents.name(c) + "' by '" + actions.name(a) +
                                  "' has free variable '" + var + "'");
        }
      }
    }
  }
}

Formula AdlDescription::grounded_precondition(std::uint32_t action) const {
  return ground(sig_.fluents(), preconditions_.at(action), domain_);
}

Formula AdlDescription::grounded_update(std::uint32_t action, std::uint32_t fluent,
                                        std::uint32_t value) const {
  return ground(sig_.fluents(),
                substitute(updates_.at(action).at(fluent), kUpdateVariable, domain_.at(value)),
                domain_);
}

ConsistencyReport check_consistent(const AdlDescription& d) {
  const Signature& fluents = d.signature().fluents();
  const auto n_values = static_cast<std::uint32_t>(d.domain().size());
  for (std::uint32_t a = 0; a < d.signature().actions().size(); ++a) {
    const Formula pre = d.grounded_precondition(a);
    for (std::uint32_t c = 0; c < fluents.size(); ++c) {
      std::vector<Formula> grounded;
      for (std::uint32_t v = 0; v < n_values; ++v) grounded.push_back(d.grounded_update(a, c, v));
      for (std::uint32_t v1 = 0; v1 < n_values; ++v1) {
        for (std::uint32_t v2 = v1 + 1; v2 < n_values; ++v2) {
          const Formula both[] = {pre, grounded[v1], grounded[v2]};
          if (auto witness = find_model(fluents, both)) {
            return {false, InconsistencyWitness{a, c, v1, v2, *witness}};
          }
        }
      }
    }
  }
  return {};
}

std::string describe(const AdlDescription& d, const InconsistencyWitness& w) {
  const auto& sig = d.signature();
  return "action '" + sig.actions().name(w.action) + "' updates '" +
         sig.fluents().name(w.fluent) + "' to both " + d.domain()[w.first_value] + " and " +
         d.domain()[w.second_value] + " in state " + to_string(sig.fluents(), w.state);
}

ConsistentAdl::ConsistentAdl(AdlDescription d) : d_(std::move(d)) {
  if (auto report = check_consistent(d_); !report) {
    throw PreconditionError("inconsistent ADL description: " +
                            describe(d_, *report.counterexample));
  }
  const auto& sig = d_.signature();
  const auto n_values = static_cast<std::uint32_t>(d_.domain().size());
  for (std::uint32_t a = 0; a < sig.actions().size(); ++a) {
    preconditions_.push_back(d_.grounded_precondition(a));
    auto& per_fluent = updates_.emplace_back();
    for (std::uint32_t c = 0; c < sig.fluents().size(); ++c) {
      auto& per_value = per_fluent.emplace_back();
      for (std::uint32_t v = 0; v < n_values; ++v) per_value.push_back(d_.grounded_update(a, c, v));
    }
  }
}

std::optional<Interpretation> ConsistentAdl::result(const Interpretation& s,
                                                    std::uint32_t action) const {
  if (!satisfies(s, preconditions_.at(action))) return std::nullopt;
  Interpretation next = s;
  const auto& per_fluent = updates_[action];
  for (std::size_t c = 0; c < per_fluent.size(); ++c) {
    bool updated = false;
    for (std::uint32_t v = 0; v < per_fluent[c].size(); ++v) {
      if (!satisfies(s, per_fluent[c][v])) continue;
      if (updated) throw std::logic_error("ADL update is not functional despite consistency");
      next.values[c] = v;
      updated = true;
    }
  }
  return next;
}

Interpretation single_action(const ActionSignature& sig, std::uint32_t action) {
  Interpretation a{std::vector<std::uint32_t>(sig.actions().size(), kFalseIndex)};
  a.values.at(action) = kTrueIndex;
  return a;
}

ActionDescription to_cplus(const AdlDescription& d) {
  const ActionSignature& sig = d.signature();
  const Signature& fluents = sig.fluents();
  const auto n_values = static_cast<std::uint32_t>(d.domain().size());
  std::vector<Proposition> props;
  for (std::uint32_t c = 0; c < fluents.size(); ++c) {
    for (std::uint32_t v = 0; v < n_values; ++v) {
      props.push_back(desugar(sig, InertialLaw{Formula::atom(Atom{c, v})}));
    }
  }
  for (std::uint32_t a = 0; a < sig.actions().size(); ++a) {
    props.push_back(desugar(
        sig, NonexecutableLaw{{sig.action_index(a)}, !d.grounded_precondition(a)}));
  }
  for (std::uint32_t a = 0; a < sig.actions().size(); ++a) {
    for (std::uint32_t c = 0; c < fluents.size(); ++c) {
      for (std::uint32_t v = 0; v < n_values; ++v) {
        props.push_back(desugar(sig, CausesLaw{{sig.action_index(a)},
                                               Formula::atom(Atom{c, v}),
                                               d.grounded_update(a, c, v)}));
      }
    }
  }
  return ActionDescription(sig, std::move(props));
}

}  // namespace ccplus
