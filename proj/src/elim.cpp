#include "ccplus/elim.hpp"

#include "ccplus/error.hpp"

namespace ccplus {

std::string replacement_name(const std::string& constant, const std::string& value) {
  return constant + "!" + value;
}

EliminationTarget::EliminationTarget(Signature sig, std::uint32_t constant)
    : source_(std::move(sig)), constant_(constant) {
  if (constant_ >= source_.size()) throw SignatureError("elimination target out of range");
  std::vector<ConstantDecl> decls;
  for (std::uint32_t c = 0; c < source_.size(); ++c) {
    const auto& decl = source_.constant(c);
    if (c != constant_) {
      decls.push_back(decl);
      continue;
    }
    for (const auto& v : decl.domain) {
      decls.push_back({replacement_name(decl.name, v), boolean_domain()});
    }
  }
  target_ = Signature::validate(std::move(decls));
}

EliminationTarget::EliminationTarget(Signature sig, std::string_view constant_name)
    : EliminationTarget(sig, sig.index_of(constant_name)) {}

std::uint32_t EliminationTarget::map_constant(std::uint32_t c) const {
  if (c < constant_) return c;
  if (c == constant_) throw SignatureError("the eliminated constant has no single image");
  return c - 1 + static_cast<std::uint32_t>(domain_size());
}

Formula EliminationTarget::rename(const Formula& f) const {
  return map_atoms(f, [this](Atom a) {
    if (a.constant == constant_) return Formula::atom(Atom{replacement(a.value), kTrueIndex});
    return Formula::atom(Atom{map_constant(a.constant), a.value});
  });
}

Interpretation EliminationTarget::correspond(const Interpretation& interp) const {
  Interpretation out;
  out.values.reserve(target_.size());
  for (std::uint32_t c = 0; c < interp.size(); ++c) {
    if (c != constant_) {
      out.values.push_back(interp[c]);
      continue;
    }
    for (std::uint32_t v = 0; v < domain_size(); ++v) {
      out.values.push_back(interp[c] == v ? kTrueIndex : kFalseIndex);
    }
  }
  return out;
}

std::optional<Interpretation> EliminationTarget::decode(const Interpretation& interp) const {
  Interpretation out;
  std::optional<std::uint32_t> chosen;
  for (std::uint32_t v = 0; v < domain_size(); ++v) {
    if (interp[replacement(v)] != kTrueIndex) continue;
    if (chosen) return std::nullopt;
    chosen = v;
  }
  if (!chosen) return std::nullopt;
  for (std::uint32_t c = 0; c < source_.size(); ++c) {
    out.values.push_back(c == constant_ ? *chosen : interp[map_constant(c)]);
  }
  return out;
}

Formula EliminationTarget::elim_formula() const {
  const auto n = static_cast<std::uint32_t>(domain_size());
  std::vector<Formula> some;
  for (std::uint32_t v = 0; v < n; ++v) {
    some.push_back(Formula::atom(Atom{replacement(v), kTrueIndex}));
  }
  std::vector<Formula> at_most_one;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w = v + 1; w < n; ++w) {
      at_most_one.push_back(Formula::atom(Atom{replacement(v), kFalseIndex}) ||
                            Formula::atom(Atom{replacement(w), kFalseIndex}));
    }
  }
  if (at_most_one.empty()) return disjoin(some);
  return disjoin(some) && conjoin(at_most_one);
}

std::vector<Formula> eliminate_from_formulas(const EliminationTarget& target,
                                             std::span<const Formula> formulas) {
  std::vector<Formula> out;
  out.reserve(formulas.size() + 1);
  for (const auto& f : formulas) out.push_back(target.rename(f));
  out.push_back(target.elim_formula());
  return out;
}

namespace {

std::vector<CausalLaw> renamed_laws(const EliminationTarget& target, const CausalTheory& theory) {
  std::vector<CausalLaw> laws;
  for (const auto& law : theory.laws()) {
    laws.push_back({target.rename(law.antecedent), target.rename(law.consequent)});
  }
  return laws;
}

Formula replacement_atom(const EliminationTarget& target, std::uint32_t value, bool truth) {
  return Formula::atom(Atom{target.replacement(value), truth ? kTrueIndex : kFalseIndex});
}

// The "at most one" and "at least one" halves used by both definite methods:
// pairs (c!v=ff, c!v'=tt) for v ≠ v', and the conjunction of all c!v=ff.
std::vector<std::pair<Formula, Formula>> exclusion_pairs(const EliminationTarget& target) {
  std::vector<std::pair<Formula, Formula>> out;
  const auto n = static_cast<std::uint32_t>(target.domain_size());
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w = 0; w < n; ++w) {
      if (v != w) out.emplace_back(replacement_atom(target, v, true), replacement_atom(target, w, false));
    }
  }
  return out;
}

Formula none_chosen(const EliminationTarget& target) {
  std::vector<Formula> parts;
  for (std::uint32_t v = 0; v < target.domain_size(); ++v) {
    parts.push_back(replacement_atom(target, v, false));
  }
  return conjoin(parts);
}

std::vector<Proposition> renamed_propositions(const EliminationTarget& target,
                                              const ActionDescription& d) {
  std::vector<Proposition> out;
  for (const auto& p : d.propositions()) {
    Proposition q = p;
    q.head = target.rename(p.head);
    q.condition = target.rename(p.condition);
    q.after = target.rename(p.after);
    out.push_back(std::move(q));
  }
  return out;
}

ActionSignature split(const EliminationTarget& combined, std::size_t fluent_count) {
  const auto& all = combined.target().constants();
  std::vector<ConstantDecl> fluents(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(fluent_count));
  std::vector<ConstantDecl> actions(all.begin() + static_cast<std::ptrdiff_t>(fluent_count), all.end());
  return ActionSignature(Signature::validate(std::move(fluents)),
                         Signature::validate(std::move(actions)));
}

EliminationTarget combined_target(const ActionDescription& d, std::uint32_t constant) {
  return EliminationTarget(d.signature().combined(), constant);
}

void require_fluent(const ActionSignature& sig, std::uint32_t c) {
  if (c >= sig.combined().size() || !sig.is_fluent(c)) {
    throw PreconditionError("constant index is not a fluent");
  }
}

}  // namespace

CausalTheory eliminate_causal_general(const CausalTheory& theory, std::uint32_t constant) {
  EliminationTarget target(theory.signature(), constant);
  auto laws = renamed_laws(target, theory);
  laws.push_back({Formula::top(), target.elim_formula()});
  return CausalTheory(target.target(), std::move(laws));
}

bool definite_elimination_applies(const CausalTheory& theory, std::uint32_t constant) {
  if (theory.signature().domain_size(constant) < 2) return false;
  for (const auto& law : theory.laws()) {
    if (mentions(law.consequent, constant) && !law.consequent.is_atom()) return false;
  }
  return true;
}

CausalTheory eliminate_causal_definite(const CausalTheory& theory, std::uint32_t constant) {
  const Signature& sig = theory.signature();
  if (sig.domain_size(constant) < 2) {
    throw PreconditionError("definite elimination needs at least two values in the domain of '" +
                            sig.name(constant) + "'");
  }
  for (const auto& law : theory.laws()) {
    if (mentions(law.consequent, constant) && !law.consequent.is_atom()) {
      throw PreconditionError("definite elimination of '" + sig.name(constant) +
                              "': consequent of law " + to_string(sig, law) + " is not an atom");
    }
  }
  EliminationTarget target(sig, constant);
  auto laws = renamed_laws(target, theory);
  for (auto& [cause, effect] : exclusion_pairs(target)) laws.push_back({cause, effect});
  laws.push_back({none_chosen(target), Formula::bottom()});
  return CausalTheory(target.target(), std::move(laws));
}

EliminationTarget fluent_target(const ActionSignature& sig, std::uint32_t constant) {
  require_fluent(sig, constant);
  return EliminationTarget(sig.fluents(), constant);
}

EliminationTarget action_target(const ActionSignature& sig, std::uint32_t constant) {
  if (constant >= sig.combined().size() || sig.is_fluent(constant)) {
    throw PreconditionError("constant index is not an action");
  }
  return EliminationTarget(sig.actions(), constant - sig.fluent_count());
}

ActionDescription eliminate_cplus_fluent_general(const ActionDescription& d,
                                                 std::uint32_t fluent) {
  require_fluent(d.signature(), fluent);
  EliminationTarget target = combined_target(d, fluent);
  auto props = renamed_propositions(target, d);
  props.push_back(Proposition::static_law(target.elim_formula(), Formula::top()));
  const std::size_t nf = d.signature().fluent_count() - 1 + target.domain_size();
  return ActionDescription(split(target, nf), std::move(props));
}

bool definite_elimination_applies(const ActionDescription& d, std::uint32_t fluent) {
  if (d.signature().combined().domain_size(fluent) < 2) return false;
  for (const auto& p : d.propositions()) {
    if (mentions(p.head, fluent) && !p.head.is_atom()) return false;
  }
  return true;
}

ActionDescription eliminate_cplus_fluent_definite(const ActionDescription& d,
                                                  std::uint32_t fluent) {
  const ActionSignature& sig = d.signature();
  require_fluent(sig, fluent);
  const Signature& combined = sig.combined();
  if (combined.domain_size(fluent) < 2) {
    throw PreconditionError("definite elimination needs at least two values in the domain of '" +
                            combined.name(fluent) + "'");
  }
  for (const auto& p : d.propositions()) {
    if (mentions(p.head, fluent) && !p.head.is_atom()) {
      throw PreconditionError("definite elimination of '" + combined.name(fluent) +
                              "': head of " + to_string(sig, p) + " is not an atom");
    }
  }
  EliminationTarget target = combined_target(d, fluent);
  auto props = renamed_propositions(target, d);
  for (auto& [cause, effect] : exclusion_pairs(target)) {
    props.push_back(Proposition::static_law(effect, cause));
  }
  props.push_back(Proposition::static_law(Formula::bottom(), none_chosen(target)));
  const std::size_t nf = sig.fluent_count() - 1 + target.domain_size();
  return ActionDescription(split(target, nf), std::move(props));
}

ActionDescription eliminate_cplus_action(const ActionDescription& d, std::uint32_t action) {
  const ActionSignature& sig = d.signature();
  if (action >= sig.combined().size() || sig.is_fluent(action)) {
    throw PreconditionError("constant index is not an action");
  }
  EliminationTarget target = combined_target(d, action);
  auto props = renamed_propositions(target, d);
  props.push_back(
      Proposition::dynamic_law(Formula::bottom(), Formula::top(), !target.elim_formula()));
  return ActionDescription(split(target, sig.fluent_count()), std::move(props));
}

Interpretation EliminationChain::map_state(Interpretation s) const {
  for (const auto& step : steps) {
    if (step.states) s = step.states->correspond(s);
  }
  return s;
}

Interpretation EliminationChain::map_action(Interpretation a) const {
  for (const auto& step : steps) {
    if (step.actions) a = step.actions->correspond(a);
  }
  return a;
}

EliminationChain eliminate_all(const ActionDescription& d) {
  EliminationChain chain{d, {}};
  std::vector<std::string> names;
  for (const auto& c : d.signature().combined().constants()) names.push_back(c.name);
  for (const auto& name : names) {
    const ActionSignature& sig = chain.result.signature();
    const std::uint32_t c = sig.combined().index_of(name);
    if (sig.combined().is_boolean(c)) continue;
    EliminationStep step{name, sig.is_fluent(c), EliminationMethod::kGeneral, {}, {}};
    if (step.is_fluent) {
      step.states = fluent_target(sig, c);
      if (definite_elimination_applies(chain.result, c)) {
        step.method = EliminationMethod::kDefinite;
        chain.result = eliminate_cplus_fluent_definite(chain.result, c);
      } else {
        chain.result = eliminate_cplus_fluent_general(chain.result, c);
      }
    } else {
      step.actions = action_target(sig, c);
      chain.result = eliminate_cplus_action(chain.result, c);
    }
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

}  // namespace ccplus
