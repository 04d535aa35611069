#include "ccplus/dsl/run.hpp"

#include <chrono>
#include <ostream>

#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"

namespace ccplus::dsl {

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::kModels, "models"},
    {Command::kExplain, "explain"},
    {Command::kCompletion, "completion"},
    {Command::kDefiniteCheck, "definite-check"},
    {Command::kStates, "states"},
    {Command::kTransitions, "transitions"},
    {Command::kDiagram, "diagram"},
    {Command::kTranslateCt, "translate-ct"},
    {Command::kAdl2Cplus, "adl2cplus"},
    {Command::kEliminate, "eliminate"},
    {Command::kPlan, "plan"},
};

std::string domain_text(const Signature& sig, std::uint32_t c) {
  if (sig.is_boolean(c)) return "boolean";
  std::string out = "{";
  const auto& domain = sig.constant(c).domain;
  for (std::size_t i = 0; i < domain.size(); ++i) out += (i > 0 ? ", " : "") + domain[i];
  return out + "}";
}

void declare(Report& r, const char* section, const Signature& sig, std::uint32_t first, std::uint32_t end,
             const char* role) {
  if (first == end) return;
  r.lines.emplace_back(std::string(section) + ":");
  for (std::uint32_t c = first; c < end; ++c) {
    r.lines.push_back("  " + sig.name(c) + " : " + domain_text(sig, c));
    r.records.push_back({{"constant", sig.name(c)}, {"domain", sig.constant(c).domain}, {"role", role}});
  }
}

void theory_source(Report& r, const CausalTheory& t, const std::vector<Formula>& formulas = {}) {
  const Signature& sig = t.signature();
  declare(r, "constants", sig, 0, static_cast<std::uint32_t>(sig.size()), "constant");
  if (!t.laws().empty()) r.lines.emplace_back("laws:");
  for (const auto& law : t.laws()) {
    r.lines.push_back("  " + to_string(sig, law));
    r.records.push_back({{"law", to_string(sig, law)}});
  }
  if (!formulas.empty()) r.lines.emplace_back("formulas:");
  for (const auto& f : formulas) {
    r.lines.push_back("  " + to_string(sig, f));
    r.records.push_back({{"formula", to_string(sig, f)}});
  }
  r.noun = "laws";
  r.count = t.laws().size();
}

void description_source(Report& r, const ActionDescription& d) {
  const ActionSignature& sig = d.signature();
  const Signature& all = sig.combined();
  declare(r, "fluents", all, 0, sig.fluent_count(), "fluent");
  declare(r, "actions", all, sig.fluent_count(), static_cast<std::uint32_t>(all.size()), "action");
  if (!d.propositions().empty()) r.lines.emplace_back("laws:");
  for (const auto& p : d.propositions()) {
    r.lines.push_back("  " + to_string(sig, p));
    r.records.push_back({{"law", to_string(sig, p)}});
  }
  r.noun = "laws";
  r.count = d.propositions().size();
}

void list_interpretations(Report& r, const Signature& sig, const std::vector<Interpretation>& xs,
                          std::optional<std::size_t> limit) {
  const std::size_t n = limit ? std::min(*limit, xs.size()) : xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.lines.push_back(to_string(sig, xs[i]));
    r.records.push_back(to_record(sig, xs[i]));
  }
  r.count = n;
}

std::string transition_text(const ActionSignature& sig, const Transition& t) {
  return to_string(sig.fluents(), t.from) + " --" + to_string(sig.actions(), t.action) + "--> " +
         to_string(sig.fluents(), t.to);
}

nlohmann::json transition_record(const ActionSignature& sig, const Transition& t) {
  return {{"from", to_record(sig.fluents(), t.from)},
          {"action", to_record(sig.actions(), t.action)},
          {"to", to_record(sig.fluents(), t.to)}};
}

const ActionDescription& need_description(const Expanded& unit, Command c) {
  if (unit.kind == UnitKind::kCausalTheory) {
    throw SemanticError(std::string(command_name(c)) + " needs an action description or an ADL description");
  }
  return unit.description;
}

const CausalTheory& need_theory(const Expanded& unit, Command c) {
  if (unit.kind != UnitKind::kCausalTheory) {
    throw SemanticError(std::string(command_name(c)) + " needs a causal theory (a constants: section)");
  }
  return unit.theory;
}

// Explained interpretations of a theory; through the completion when
// definite so the solver's counters are available.
std::vector<Interpretation> explained(const CausalTheory& t, SearchStats& stats) {
  if (is_definite(t)) {
    auto result = enumerate_models(t.signature(), completion(t).formulas);
    stats += result.stats;
    return result.models;
  }
  return causally_explained_interpretations(t);
}

std::vector<Formula> static_constraints(const ActionDescription& d) {
  std::vector<Formula> out;
  for (const auto& p : d.propositions()) {
    if (p.is_static()) out.push_back(Formula::implication(p.condition, p.head));
  }
  return out;
}

CausalTheory eliminate_theory(const CausalTheory& t, const QuerySpec& q, std::vector<Formula>& formulas) {
  auto step = [&](const CausalTheory& in, std::uint32_t c) {
    EliminationTarget target(in.signature(), c);
    if (!formulas.empty()) formulas = eliminate_from_formulas(target, formulas);
    const bool definite = q.method ? *q.method == EliminationMethod::kDefinite
                                   : definite_elimination_applies(in, c);
    return definite ? eliminate_causal_definite(in, c) : eliminate_causal_general(in, c);
  };
  if (q.eliminate) {
    auto idx = t.signature().find(*q.eliminate);
    if (!idx) throw SemanticError("unknown constant " + *q.eliminate);
    return step(t, *idx);
  }
  CausalTheory out = t;
  for (std::uint32_t c = 0; c < out.signature().size();) {
    if (out.signature().is_boolean(c)) {
      ++c;
      continue;
    }
    const std::size_t width = out.signature().domain_size(c);
    out = step(out, c);
    c += static_cast<std::uint32_t>(width);
  }
  return out;
}

ActionDescription eliminate_description(const ActionDescription& d, const QuerySpec& q) {
  if (!q.eliminate) {
    if (q.method) throw SemanticError("--method needs --eliminate; without it every constant is eliminated");
    return eliminate_all(d).result;
  }
  const ActionSignature& sig = d.signature();
  auto idx = sig.combined().find(*q.eliminate);
  if (!idx) throw SemanticError("unknown constant " + *q.eliminate);
  if (!sig.is_fluent(*idx)) {
    if (q.method == EliminationMethod::kDefinite) {
      throw SemanticError("action constants have a single elimination method; drop --method definite");
    }
    return eliminate_cplus_action(d, *idx);
  }
  const bool definite = q.method ? *q.method == EliminationMethod::kDefinite
                                 : definite_elimination_applies(d, *idx);
  return definite ? eliminate_cplus_fluent_definite(d, *idx) : eliminate_cplus_fluent_general(d, *idx);
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& c : kCommands) {
    if (name == c.name) return c.command;
  }
  return std::nullopt;
}

const char* command_name(Command command) {
  for (const auto& c : kCommands) {
    if (c.command == command) return c.name;
  }
  return "?";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kCommands) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

nlohmann::json to_record(const Signature& sig, const Interpretation& interp) {
  nlohmann::json out = nlohmann::json::object();
  for (std::uint32_t c = 0; c < sig.size(); ++c) out[sig.name(c)] = sig.value_name(Atom{c, interp[c]});
  return out;
}

Report run(const Expanded& unit, const QuerySpec& q) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = q.command;
  switch (q.command) {
    case Command::kModels: {
      const CausalTheory& t = need_theory(unit, q.command);
      auto result = enumerate_models(t.signature(), unit.formulas, q.limit);
      r.stats = result.stats;
      list_interpretations(r, t.signature(), result.models, std::nullopt);
      r.noun = "models";
      break;
    }
    case Command::kExplain: {
      CausalTheory t = unit.kind == UnitKind::kCausalTheory ? unit.theory : ct(unit.description);
      list_interpretations(r, t.signature(), explained(t, r.stats), q.limit);
      r.noun = "explained interpretations";
      break;
    }
    case Command::kCompletion: {
      CausalTheory t = unit.kind == UnitKind::kCausalTheory ? unit.theory : ct(unit.description);
      for (const auto& f : completion(t).formulas) {
        r.lines.push_back(to_string(t.signature(), f));
        r.records.push_back({{"formula", r.lines.back()}});
      }
      r.count = r.lines.size();
      r.noun = "formulas";
      break;
    }
    case Command::kDefiniteCheck: {
      DefiniteCheck check =
          unit.kind == UnitKind::kCausalTheory ? is_definite(unit.theory) : is_definite_description(unit.description);
      r.lines.push_back(check.definite ? "definite" : "not definite: " + check.diagnostic);
      r.records.push_back({{"definite", check.definite}, {"diagnostic", check.diagnostic}});
      r.count = check.definite ? 1 : 0;
      r.noun = "definite";
      break;
    }
    case Command::kStates: {
      const ActionDescription& d = need_description(unit, q.command);
      auto result = enumerate_models(d.signature().fluents(), static_constraints(d), q.limit);
      r.stats = result.stats;
      list_interpretations(r, d.signature().fluents(), result.models, std::nullopt);
      r.noun = "states";
      break;
    }
    case Command::kTransitions:
    case Command::kDiagram: {
      const ActionDescription& d = need_description(unit, q.command);
      const ActionSignature& sig = d.signature();
      TransitionDiagram diagram = transition_diagram(d);
      if (q.command == Command::kDiagram) {
        for (const auto& s : diagram.states) {
          r.lines.push_back("state " + to_string(sig.fluents(), s));
          r.records.push_back({{"state", to_record(sig.fluents(), s)}});
        }
      }
      const std::size_t n = q.limit ? std::min(*q.limit, diagram.edges.size()) : diagram.edges.size();
      for (std::size_t i = 0; i < n; ++i) {
        r.lines.push_back(transition_text(sig, diagram.edges[i]));
        r.records.push_back(transition_record(sig, diagram.edges[i]));
      }
      r.count = n;
      r.noun = "transitions";
      r.action_signature = sig;
      if (q.command == Command::kDiagram) r.diagram = std::move(diagram);
      break;
    }
    case Command::kTranslateCt:
      theory_source(r, ct(need_description(unit, q.command)));
      break;
    case Command::kAdl2Cplus: {
      if (unit.kind != UnitKind::kAdl) throw SemanticError("adl2cplus needs an adl: section");
      ConsistencyReport report = check_consistent(*unit.adl);
      if (!report) throw PreconditionError("inconsistent ADL description: " + describe(*unit.adl, *report.counterexample));
      description_source(r, unit.description);
      break;
    }
    case Command::kEliminate: {
      if (unit.kind == UnitKind::kCausalTheory) {
        std::vector<Formula> formulas = unit.formulas;
        CausalTheory t = eliminate_theory(unit.theory, q, formulas);
        theory_source(r, t, formulas);
      } else {
        description_source(r, eliminate_description(unit.description, q));
      }
      break;
    }
    case Command::kPlan: {
      const ActionDescription& d = need_description(unit, q.command);
      if (!unit.init || !unit.goal) throw SemanticError("plan needs init and goal in the query: section");
      auto plan = path_search(d, *unit.init, *unit.goal, q.max_steps);
      const ActionSignature& sig = d.signature();
      if (!plan) {
        r.lines.push_back("no plan within " + std::to_string(q.max_steps) + " steps");
      } else {
        for (std::size_t i = 0; i < plan->size(); ++i) {
          const Transition& t = (*plan)[i];
          r.lines.push_back("step " + std::to_string(i + 1) + ": " + transition_text(sig, t));
          nlohmann::json rec = transition_record(sig, t);
          rec["step"] = i + 1;
          r.records.push_back(std::move(rec));
        }
      }
      r.count = plan ? plan->size() : 0;
      r.noun = plan ? "steps" : "steps (no plan)";
      break;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void emit(const Report& r, Format format, std::ostream& out, bool with_stats) {
  nlohmann::json stats = {{"conflicts", r.stats.conflicts},
                          {"decisions", r.stats.decisions},
                          {"models_found", r.stats.models_found},
                          {"propagations", r.stats.propagations},
                          {"seconds", r.seconds}};
  switch (format) {
    case Format::kText:
      for (const auto& line : r.lines) out << line << "\n";
      out << "# " << r.count << " " << r.noun << "\n";
      if (with_stats) out << "# stats " << stats.dump() << "\n";
      break;
    case Format::kRecords: {
      for (const auto& rec : r.records) out << rec.dump() << "\n";
      nlohmann::json summary = {{"count", r.count}, {"query", command_name(r.command)}};
      if (with_stats) summary["stats"] = stats;
      out << nlohmann::json{{"#summary", summary}}.dump() << "\n";
      break;
    }
    case Format::kDot: {
      if (!r.diagram) throw SemanticError("dot output is only available for the diagram query");
      const Signature& fluents = r.action_signature.fluents();
      auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
      out << "digraph transitions {\n";
      for (const auto& s : r.diagram->states) out << "  " << quote(to_string(fluents, s)) << ";\n";
      for (const auto& e : r.diagram->edges) {
        out << "  " << quote(to_string(fluents, e.from)) << " -> " << quote(to_string(fluents, e.to))
            << " [label=" << quote(to_string(r.action_signature.actions(), e.action)) << "];\n";
      }
      out << "}\n";
      break;
    }
  }
}

}  // namespace ccplus::dsl
