#include "ccplus/cplus.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"
#include "ccplus/solver.hpp"

namespace ccplus {

ActionSignature::ActionSignature(Signature fluents, Signature actions)
    : fluents_(std::move(fluents)), actions_(std::move(actions)) {
  combined_ = fluents_.concat(actions_);
}

Proposition Proposition::static_law(Formula head, Formula condition) {
  return Proposition{Kind::kStatic, std::move(head), std::move(condition), Formula::top()};
}

Proposition Proposition::dynamic_law(Formula head, Formula condition, Formula after) {
  return Proposition{Kind::kDynamic, std::move(head), std::move(condition), std::move(after)};
}

namespace {

Formula action_conjunction(const ActionSignature& sig, const std::vector<std::uint32_t>& actions,
                           const std::optional<Formula>& condition) {
  std::vector<Formula> parts;
  for (std::uint32_t a : actions) {
    if (sig.is_fluent(a) || a >= sig.combined().size()) {
      throw PreconditionError("causes/nonexecutable lists must name action constants");
    }
    if (!sig.combined().is_boolean(a)) {
      throw PreconditionError("action '" + sig.combined().name(a) +
                              "' in a causes/nonexecutable list is not Boolean");
    }
    parts.push_back(Formula::atom(Atom{a, kTrueIndex}));
  }
  if (condition) parts.push_back(*condition);
  return conjoin(parts);
}

}  // namespace

Proposition desugar(const ActionSignature& sig, const Abbreviation& abbreviation) {
  struct Visitor {
    const ActionSignature& sig;
    Proposition operator()(const Proposition& p) const { return p; }
    Proposition operator()(const CausesLaw& law) const {
      return Proposition::dynamic_law(law.effect, Formula::top(),
                                      action_conjunction(sig, law.actions, law.condition));
    }
    Proposition operator()(const NonexecutableLaw& law) const {
      return Proposition::dynamic_law(Formula::bottom(), Formula::top(),
                                      action_conjunction(sig, law.actions, law.condition));
    }
    Proposition operator()(const InertialLaw& law) const {
      return Proposition::dynamic_law(law.fluent_formula, law.fluent_formula, law.fluent_formula);
    }
    Proposition operator()(const NeverLaw& law) const {
      return Proposition::static_law(Formula::bottom(), law.state_formula);
    }
  };
  return std::visit(Visitor{sig}, abbreviation);
}

ActionDescription::ActionDescription(ActionSignature sig, std::vector<Proposition> propositions)
    : sig_(std::move(sig)) {
  const Signature& combined = sig_.combined();
  for (auto& p : propositions) {
    check_well_formed(combined, p.head);
    check_well_formed(combined, p.condition);
    check_well_formed(combined, p.after);
    if (!atoms_below(p.head, sig_.fluent_count()) ||
        !atoms_below(p.condition, sig_.fluent_count())) {
      throw SignatureError("head and if-condition must be state formulas: " +
                           to_string(sig_, p));
    }
    if (p.is_static()) p.after = Formula::top();
    if (std::find(propositions_.begin(), propositions_.end(), p) == propositions_.end()) {
      propositions_.push_back(std::move(p));
    }
  }
}

bool is_state(const ActionDescription& d, const Interpretation& s) {
  if (!is_interpretation_of(d.signature().fluents(), s)) return false;
  for (const auto& p : d.propositions()) {
    if (p.is_static() && satisfies(s, p.condition) && !satisfies(s, p.head)) return false;
  }
  return true;
}

namespace {

std::vector<Formula> state_constraints(const ActionDescription& d) {
  std::vector<Formula> out;
  for (const auto& p : d.propositions()) {
    if (p.is_static()) out.push_back(Formula::implication(p.condition, p.head));
  }
  return out;
}

void add_unique(std::vector<Formula>& out, const Formula& f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

}  // namespace

std::vector<Interpretation> states(const ActionDescription& d) {
  return models(d.signature().fluents(), state_constraints(d));
}

std::vector<Formula> caused_formulas(const ActionDescription& d, const Interpretation& s,
                                     const Interpretation& a, const Interpretation& s_next) {
  const Interpretation before = join(s, a);
  std::vector<Formula> out;
  for (const auto& p : d.propositions()) {
    if (!satisfies(s_next, p.condition)) continue;
    if (!p.is_static() && !satisfies(before, p.after)) continue;
    add_unique(out, p.head);
  }
  return out;
}

TransitionCheck is_causally_explained_transition(const ActionDescription& d,
                                                 const Interpretation& s,
                                                 const Interpretation& a,
                                                 const Interpretation& s_next) {
  const ActionSignature& sig = d.signature();
  if (!is_state(d, s)) return {false, "initial interpretation is not a state"};
  if (!is_state(d, s_next)) return {false, "resulting interpretation is not a state"};
  if (!is_interpretation_of(sig.actions(), a)) {
    return {false, "action is not an interpretation of the action signature"};
  }
  const auto caused = caused_formulas(d, s, a, s_next);
  return {is_unique_model(sig.fluents(), caused, s_next), {}};
}

TransitionDiagram transition_diagram(const ActionDescription& d) {
  const ActionSignature& sig = d.signature();
  TransitionDiagram diagram;
  diagram.states = states(d);
  const auto actions = all_interpretations(sig.actions());

  std::vector<const Proposition*> statics;
  std::vector<const Proposition*> dynamics;
  for (const auto& p : d.propositions()) (p.is_static() ? statics : dynamics).push_back(&p);

  std::vector<const Proposition*> active;
  std::vector<Formula> caused;
  for (const auto& s : diagram.states) {
    for (const auto& a : actions) {
      const Interpretation before = join(s, a);
      active.clear();
      for (const Proposition* p : dynamics) {
        if (satisfies(before, p->after)) active.push_back(p);
      }
      for (const auto& s_next : diagram.states) {
        caused.clear();
        for (const Proposition* p : statics) {
          if (satisfies(s_next, p->condition)) add_unique(caused, p->head);
        }
        for (const Proposition* p : active) {
          if (satisfies(s_next, p->condition)) add_unique(caused, p->head);
        }
        if (is_unique_model(sig.fluents(), caused, s_next)) {
          diagram.edges.push_back(Transition{s, a, s_next});
        }
      }
    }
  }
  return diagram;
}

DefiniteCheck is_definite_description(const ActionDescription& d) {
  const ActionSignature& sig = d.signature();
  const Signature& combined = sig.combined();
  for (std::uint32_t c = 0; c < combined.size(); ++c) {
    if (combined.domain_size(c) == 1) {
      return {false, "constant '" + combined.name(c) + "' has a singleton domain"};
    }
  }
  for (std::size_t i = 0; i < d.propositions().size(); ++i) {
    const auto& p = d.propositions()[i];
    if (!p.head.is_atom() && !p.head.is_bottom()) {
      return {false, "proposition " + std::to_string(i + 1) + " (" + to_string(sig, p) +
                         ") has a head that is neither an atom nor false"};
    }
  }
  return {};
}

std::uint32_t ct_index(const ActionSignature& sig, std::uint32_t combined_index,
                       unsigned step) {
  if (step == 0) return combined_index;
  return static_cast<std::uint32_t>(sig.combined().size()) + combined_index;
}

Formula at_step(const ActionSignature& sig, const Formula& f, unsigned step) {
  if (step == 0) return f;
  return map_atoms(f, [&](Atom a) {
    return Formula::atom(Atom{ct_index(sig, a.constant, step), a.value});
  });
}

CausalTheory ct(const ActionDescription& d) {
  const ActionSignature& sig = d.signature();
  std::vector<ConstantDecl> decls;
  for (const auto& c : sig.combined().constants()) decls.push_back({c.name + "@0", c.domain});
  for (const auto& c : sig.fluents().constants()) decls.push_back({c.name + "@1", c.domain});
  Signature ct_sig = Signature::validate(std::move(decls));

  std::vector<CausalLaw> laws;
  for (Atom a : sig.combined().atoms()) {
    laws.push_back({Formula::atom(a), Formula::atom(a)});
  }
  for (unsigned n : {0U, 1U}) {
    for (const auto& p : d.propositions()) {
      if (p.is_static()) laws.push_back({at_step(sig, p.condition, n), at_step(sig, p.head, n)});
    }
  }
  for (const auto& p : d.propositions()) {
    if (p.is_static()) continue;
    laws.push_back({Formula::conjunction(at_step(sig, p.after, 0), at_step(sig, p.condition, 1)),
                    at_step(sig, p.head, 1)});
  }
  return CausalTheory(std::move(ct_sig), std::move(laws));
}

Interpretation compose_ct(const Transition& t) { return join(join(t.from, t.action), t.to); }

Transition decompose_ct(const ActionSignature& sig, const Interpretation& interp) {
  const std::size_t nf = sig.fluents().size();
  const std::size_t n = sig.combined().size();
  if (interp.size() != n + nf) throw SignatureError("not an interpretation of ct(D)");
  const auto& v = interp.values;
  return Transition{Interpretation{{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nf)}},
                    Interpretation{{v.begin() + static_cast<std::ptrdiff_t>(nf),
                                    v.begin() + static_cast<std::ptrdiff_t>(n)}},
                    Interpretation{{v.begin() + static_cast<std::ptrdiff_t>(n), v.end()}}};
}

std::optional<std::vector<Transition>> path_search(const TransitionDiagram& diagram,
                                                   const Formula& init, const Formula& goal,
                                                   std::size_t max_steps) {
  const auto& nodes = diagram.states;
  std::map<Interpretation, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  std::vector<std::vector<std::size_t>> outgoing(nodes.size());
  for (std::size_t e = 0; e < diagram.edges.size(); ++e) {
    outgoing[index.at(diagram.edges[e].from)].push_back(e);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(nodes.size(), kNone);  // edge that reached the node
  std::vector<std::size_t> depth(nodes.size(), kNone);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (satisfies(nodes[i], init)) {
      depth[i] = 0;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    if (satisfies(nodes[node], goal)) {
      std::vector<Transition> plan;
      for (std::size_t at = node; via[at] != kNone; at = index.at(diagram.edges[via[at]].from)) {
        plan.push_back(diagram.edges[via[at]]);
      }
      std::reverse(plan.begin(), plan.end());
      return plan;
    }
    if (depth[node] == max_steps) continue;
    for (std::size_t e : outgoing[node]) {
      const std::size_t next = index.at(diagram.edges[e].to);
      if (depth[next] != kNone) continue;
      depth[next] = depth[node] + 1;
      via[next] = e;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Transition>> path_search(const ActionDescription& d,
                                                   const Formula& init, const Formula& goal,
                                                   std::size_t max_steps) {
  return path_search(transition_diagram(d), init, goal, max_steps);
}

std::string to_string(const ActionSignature& sig, const Proposition& p) {
  const Signature& combined = sig.combined();
  std::string out = "caused " + to_string(combined, p.head) + " if " +
                    to_string(combined, p.condition);
  if (!p.is_static()) out += " after " + to_string(combined, p.after);
  return out;
}

}  // namespace ccplus
