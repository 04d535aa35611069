#include "ccplus/dsl/expand.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ccplus/error.hpp"

namespace ccplus::dsl {

namespace {

using Env = std::map<std::string, std::string>;

[[noreturn]] void fail(const SourcePos& pos, const std::string& message) {
  throw SemanticError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message);
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i > 0 ? sep : "") + xs[i];
  return out;
}

class Expander {
 public:
  explicit Expander(const SourceUnit& unit) : u_(unit) {}

  Expanded run() {
    declare_sorts();
    declare_vars();
    Expanded out;
    if (!u_.adl.empty()) {
      out.kind = UnitKind::kAdl;
    } else if (!u_.fluents.empty() || !u_.actions.empty()) {
      out.kind = UnitKind::kActionDescription;
    } else {
      out.kind = UnitKind::kCausalTheory;
    }
    kind_ = out.kind;

    if (kind_ == UnitKind::kCausalTheory) {
      if (u_.constants.empty()) throw SemanticError("nothing to do: no constants, fluents or actions declared");
      sig_ = Signature::validate(declare(u_.constants));
      out.theory = CausalTheory(sig_, causal_laws(out.law_instances));
      for (const auto& item : u_.formulas) {
        for_each_instance({&item.formula}, {}, item.guards,
                          [&](const Env& env) { out.formulas.push_back(formula(item.formula, env)); });
      }
    } else {
      if (!u_.constants.empty()) fail(u_.constants.front().pos, "constants: cannot be mixed with fluents: and actions:");
      if (!u_.formulas.empty()) fail(u_.formulas.front().pos, "formulas: needs a constants: section");
      Signature fluents = Signature::validate(declare(u_.fluents));
      Signature actions = Signature::validate(declare(u_.actions));
      asig_ = ActionSignature(fluents, actions);
      sig_ = asig_.combined();
      if (kind_ == UnitKind::kAdl) {
        if (!u_.laws.empty()) fail(u_.laws.front().pos, "laws: cannot be mixed with adl:");
        out.adl = adl();
        out.description = to_cplus(*out.adl);
      } else {
        out.description = ActionDescription(asig_, propositions(out.law_instances));
      }
    }

    for (const auto& q : u_.queries) {
      std::optional<Formula>& slot = q.key == "init" ? out.init : out.goal;
      if (slot) fail(q.pos, "duplicate '" + q.key + "' query");
      Formula f = formula(q.formula, {});
      if (kind_ != UnitKind::kCausalTheory) require_fluent_only(f, q.pos, "query formulas");
      slot = f;
    }
    return out;
  }

 private:
  const SourceUnit& u_;
  UnitKind kind_ = UnitKind::kCausalTheory;
  std::map<std::string, std::vector<std::string>> sorts_;
  std::map<std::string, std::string> object_sort_;
  std::map<std::string, std::string> var_sort_;
  std::vector<std::string> var_order_;
  std::map<std::string, std::set<std::size_t>> arities_;  // base name -> argument counts
  Signature sig_;
  ActionSignature asig_;

  void declare_sorts() {
    for (const auto& s : u_.sorts) {
      if (!sorts_.emplace(s.name, std::vector<std::string>{}).second) fail(s.pos, "sort " + s.name + " declared twice");
    }
    for (const auto& o : u_.objects) {
      auto it = sorts_.find(o.sort);
      if (it == sorts_.end()) fail(o.pos, "unknown sort " + o.sort);
      for (const auto& name : o.objects) {
        if (!object_sort_.emplace(name, o.sort).second) fail(o.pos, "object " + name + " declared twice");
        it->second.push_back(name);
      }
    }
    for (const auto& s : u_.sorts) {
      if (sorts_.at(s.name).empty()) fail(s.pos, "sort " + s.name + " has no objects");
    }
  }

  void declare_vars() {
    for (const auto& v : u_.vars) {
      if (sorts_.count(v.sort) == 0) fail(v.pos, "unknown sort " + v.sort);
      for (const auto& name : v.names) {
        if (object_sort_.count(name) != 0) fail(v.pos, "variable " + name + " is also an object");
        if (!var_sort_.emplace(name, v.sort).second) fail(v.pos, "variable " + name + " declared twice");
        var_order_.push_back(name);
      }
    }
  }

  [[nodiscard]] bool is_var(const std::string& name, const std::set<std::string>& bound) const {
    return bound.count(name) == 0 && var_sort_.count(name) != 0;
  }

  std::vector<ConstantDecl> declare(const std::vector<ConstantDeclAst>& decls) {
    std::vector<ConstantDecl> out;
    std::set<std::string> seen;
    for (const auto& d : decls) {
      std::vector<std::string> domain;
      for (const auto& part : d.domain) {
        switch (part.kind) {
          case DomainPart::Kind::kBoolean:
            if (d.domain.size() != 1) fail(d.pos, "boolean cannot be combined with other values");
            domain = boolean_domain();
            break;
          case DomainPart::Kind::kName: {
            auto it = sorts_.find(part.values.front());
            if (it != sorts_.end()) {
              domain.insert(domain.end(), it->second.begin(), it->second.end());
            } else {
              domain.push_back(part.values.front());
            }
            break;
          }
          case DomainPart::Kind::kValues:
            domain.insert(domain.end(), part.values.begin(), part.values.end());
            break;
        }
      }
      std::set<std::string> values;
      for (const auto& v : domain) {
        if (!values.insert(v).second) fail(d.pos, "value " + v + " appears twice in a domain");
      }
      for (const auto& entry : d.entries) {
        arities_[entry.base].insert(entry.args.size());
        // Arguments naming a sort range over its objects.
        std::vector<std::vector<std::string>> choices;
        for (const auto& arg : entry.args) {
          if (is_var(arg, {})) fail(entry.pos, "declarations take sorts or objects, not variable " + arg);
          auto it = sorts_.find(arg);
          choices.push_back(it != sorts_.end() ? it->second : std::vector<std::string>{arg});
        }
        std::vector<std::string> picked(choices.size());
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
          if (k == choices.size()) {
            NameRef ground = entry;
            ground.args = picked;
            const std::string name = ground_name(ground, {}, {});
            if (!seen.insert(name).second) {
              fail(entry.pos, "constant " + name + " declared twice");
            }
            out.push_back({name, domain});
            return;
          }
          for (const auto& o : choices[k]) {
            picked[k] = o;
            rec(k + 1);
          }
        };
        rec(0);
      }
    }
    return out;
  }

  std::string substitute(const std::string& name, const Env& env) const {
    auto it = env.find(name);
    return it == env.end() ? name : it->second;
  }

  std::string ground_name(const NameRef& n, const Env& env, const std::set<std::string>& bound) const {
    std::string out = n.base;
    if (n.has_args) {
      std::vector<std::string> args;
      for (const auto& a : n.args) args.push_back(bound.count(a) != 0 ? a : substitute(a, env));
      out += "(" + join(args, ",") + ")";
    }
    for (const auto& s : n.suffixes) out += s.marker + (bound.count(s.name) != 0 ? s.name : substitute(s.name, env));
    return out;
  }

  std::uint32_t constant(const NameRef& n, const Env& env) const {
    const std::string name = ground_name(n, env, {});
    if (auto idx = sig_.find(name)) return *idx;
    auto it = arities_.find(n.base);
    if (it != arities_.end() && it->second.count(n.args.size()) == 0) {
      fail(n.pos, n.base + " takes " + std::to_string(*it->second.begin()) + " argument(s), not " +
                      std::to_string(n.args.size()));
    }
    fail(n.pos, "unknown constant " + name);
  }

  Formula formula(const Expr& e, const Env& env) const {
    switch (e.kind) {
      case Expr::Kind::kTop: return Formula::top();
      case Expr::Kind::kBottom: return Formula::bottom();
      case Expr::Kind::kNot: return Formula::negation(formula(e.children[0], env));
      case Expr::Kind::kAnd: return Formula::conjunction(formula(e.children[0], env), formula(e.children[1], env));
      case Expr::Kind::kOr: return Formula::disjunction(formula(e.children[0], env), formula(e.children[1], env));
      case Expr::Kind::kImplies:
        return Formula::implication(formula(e.children[0], env), formula(e.children[1], env));
      case Expr::Kind::kEquiv:
        return Formula::equivalence(formula(e.children[0], env), formula(e.children[1], env));
      case Expr::Kind::kForall:
      case Expr::Kind::kExists:
        fail(e.pos, "quantifiers are only allowed in adl: items");
      case Expr::Kind::kAtom: break;
    }
    const std::uint32_t c = constant(e.lhs, env);
    if (!e.rhs) {
      if (!sig_.is_boolean(c)) fail(e.pos, sig_.name(c) + " is not Boolean; write " + sig_.name(c) + "=value");
      return Formula::atom(Atom{c, kTrueIndex});
    }
    if (!e.rhs->plain()) fail(e.rhs->pos, "expected a value after '='");
    const std::string value = substitute(e.rhs->base, env);
    auto v = sig_.find_value(c, value);
    if (!v) fail(e.rhs->pos, "unknown value " + value + " for " + sig_.name(c));
    return Formula::atom(Atom{c, *v});
  }

  void require_fluent_only(const Formula& f, const SourcePos& pos, const char* what) const {
    for (std::uint32_t a = 0; a < asig_.actions().size(); ++a) {
      if (mentions(f, asig_.action_index(a))) {
        fail(pos, std::string(what) + " may not mention action " + asig_.actions().name(a));
      }
    }
  }

  void collect(const NameRef& n, const std::set<std::string>& bound, std::set<std::string>& vars) const {
    if (n.plain() && is_var(n.base, bound)) vars.insert(n.base);
    for (const auto& a : n.args) {
      if (is_var(a, bound)) vars.insert(a);
    }
    for (const auto& s : n.suffixes) {
      if (is_var(s.name, bound)) vars.insert(s.name);
    }
  }

  void collect(const Expr& e, std::set<std::string> bound, std::set<std::string>& vars) const {
    if (e.kind == Expr::Kind::kAtom) {
      collect(e.lhs, bound, vars);
      if (e.rhs) collect(*e.rhs, bound, vars);
      return;
    }
    if (e.kind == Expr::Kind::kForall || e.kind == Expr::Kind::kExists) bound.insert(e.variable);
    for (const auto& c : e.children) collect(c, bound, vars);
  }

  // Calls fn once per guard-respecting assignment to the schema variables
  // occurring in `exprs` and `names`.
  std::size_t for_each_instance(const std::vector<const Expr*>& exprs,
                                const std::vector<const NameRef*>& names, const std::vector<Guard>& guards,
                                const std::function<void(const Env&)>& fn,
                                const std::set<std::string>& bound = {}) const {
    std::set<std::string> used;
    for (const Expr* e : exprs) collect(*e, bound, used);
    for (const NameRef* n : names) collect(*n, bound, used);
    for (const auto& g : guards) {
      for (const auto& v : {g.lhs, g.rhs}) {
        if (var_sort_.count(v) == 0) fail(g.pos, v + " is not a variable");
        if (used.count(v) == 0) fail(g.pos, "guard variable " + v + " does not occur in the law");
      }
      if (var_sort_.at(g.lhs) != var_sort_.at(g.rhs)) fail(g.pos, "guard compares variables of different sorts");
    }
    std::vector<std::string> order;
    for (const auto& v : var_order_) {
      if (used.count(v) != 0) order.push_back(v);
    }
    std::size_t count = 0;
    Env env;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == order.size()) {
        for (const auto& g : guards) {
          if (env.at(g.lhs) == env.at(g.rhs)) return;
        }
        fn(env);
        ++count;
        return;
      }
      for (const auto& o : sorts_.at(var_sort_.at(order[k]))) {
        env[order[k]] = o;
        rec(k + 1);
      }
      env.erase(order[k]);
    };
    rec(0);
    return count;
  }

  static std::vector<const Expr*> parts(const LawAst& law) {
    std::vector<const Expr*> out;
    for (const auto* e : {&law.head, &law.condition, &law.after}) {
      if (*e) out.push_back(&**e);
    }
    return out;
  }

  std::vector<CausalLaw> causal_laws(std::vector<std::size_t>& counts) const {
    std::vector<CausalLaw> out;
    for (const auto& law : u_.laws) {
      if (law.kind != LawAst::Kind::kCausal) {
        fail(law.pos, "C+ laws need fluents: and actions: sections; a causal theory uses F => G");
      }
      counts.push_back(for_each_instance(parts(law), {}, law.guards, [&](const Env& env) {
        out.push_back({formula(*law.condition, env), formula(*law.head, env)});
      }));
    }
    return out;
  }

  std::vector<std::uint32_t> action_indices(const std::vector<NameRef>& names, const Env& env) const {
    std::vector<std::uint32_t> out;
    for (const auto& n : names) {
      const std::uint32_t c = constant(n, env);
      if (asig_.is_fluent(c)) fail(n.pos, sig_.name(c) + " is a fluent, not an action");
      if (!sig_.is_boolean(c)) fail(n.pos, "action " + sig_.name(c) + " is not Boolean");
      out.push_back(c);
    }
    return out;
  }

  std::vector<Proposition> propositions(std::vector<std::size_t>& counts) const {
    std::vector<Proposition> out;
    for (const auto& law : u_.laws) {
      std::vector<const NameRef*> names;
      for (const auto& n : law.actions) names.push_back(&n);
      auto opt = [&](const std::optional<Expr>& e, const Env& env) -> std::optional<Formula> {
        if (!e) return std::nullopt;
        return formula(*e, env);
      };
      counts.push_back(for_each_instance(parts(law), names, law.guards, [&](const Env& env) {
        Abbreviation abbr;
        switch (law.kind) {
          case LawAst::Kind::kCaused: {
            Formula head = formula(*law.head, env);
            Formula cond = opt(law.condition, env).value_or(Formula::top());
            require_fluent_only(head, law.head->pos, "heads");
            require_fluent_only(cond, law.condition ? law.condition->pos : law.pos, "if conditions");
            abbr = law.after ? Proposition::dynamic_law(head, cond, formula(*law.after, env))
                             : Proposition::static_law(head, cond);
            break;
          }
          case LawAst::Kind::kCauses: {
            Formula effect = formula(*law.head, env);
            require_fluent_only(effect, law.head->pos, "effects");
            abbr = CausesLaw{action_indices(law.actions, env), effect, opt(law.condition, env)};
            break;
          }
          case LawAst::Kind::kNonexecutable:
            abbr = NonexecutableLaw{action_indices(law.actions, env), opt(law.condition, env)};
            break;
          case LawAst::Kind::kInertial: {
            Formula f = formula(*law.head, env);
            require_fluent_only(f, law.head->pos, "inertial formulas");
            abbr = InertialLaw{f};
            break;
          }
          case LawAst::Kind::kNever: {
            Formula f = formula(*law.head, env);
            require_fluent_only(f, law.head->pos, "never formulas");
            abbr = NeverLaw{f};
            break;
          }
          case LawAst::Kind::kCausal:
            fail(law.pos, "F => G laws belong to causal theories; use caused F if G");
        }
        out.push_back(desugar(asig_, abbr));
      }));
    }
    return out;
  }

  Term term(const NameRef& n, const Env& env, const std::set<std::string>& bound,
            const std::vector<std::string>& domain) const {
    if (n.plain()) {
      if (bound.count(n.base) != 0) return Term::of_variable(n.base);
      const std::string name = substitute(n.base, env);
      if (auto idx = asig_.fluents().find(name)) return Term::of_constant(*idx);
      if (std::find(domain.begin(), domain.end(), name) == domain.end()) {
        fail(n.pos, "unknown fluent or value " + name);
      }
      return Term::of_value(name);
    }
    const std::string name = ground_name(n, env, bound);
    if (auto idx = asig_.fluents().find(name)) return Term::of_constant(*idx);
    fail(n.pos, "unknown fluent " + name);
  }

  ExtendedFormula extended(const Expr& e, const Env& env, std::set<std::string> bound,
                           const std::vector<std::string>& domain) const {
    using K = ExtendedFormula::Kind;
    auto sub = [&](std::size_t i) { return extended(e.children[i], env, bound, domain); };
    switch (e.kind) {
      case Expr::Kind::kTop: return ExtendedFormula::top();
      case Expr::Kind::kBottom: return ExtendedFormula::bottom();
      case Expr::Kind::kNot: return ExtendedFormula::negation(sub(0));
      case Expr::Kind::kAnd: return ExtendedFormula::binary(K::kAnd, sub(0), sub(1));
      case Expr::Kind::kOr: return ExtendedFormula::binary(K::kOr, sub(0), sub(1));
      case Expr::Kind::kImplies: return ExtendedFormula::binary(K::kImplies, sub(0), sub(1));
      case Expr::Kind::kEquiv: return ExtendedFormula::binary(K::kEquiv, sub(0), sub(1));
      case Expr::Kind::kForall:
      case Expr::Kind::kExists: {
        bound.insert(e.variable);
        ExtendedFormula body = extended(e.children[0], env, bound, domain);
        return e.kind == Expr::Kind::kForall ? ExtendedFormula::forall(e.variable, std::move(body))
                                             : ExtendedFormula::exists(e.variable, std::move(body));
      }
      case Expr::Kind::kAtom: break;
    }
    Term lhs = term(e.lhs, env, bound, domain);
    if (!e.rhs) {
      if (lhs.kind != Term::Kind::kConstant || !asig_.fluents().is_boolean(lhs.constant)) {
        fail(e.pos, "a bare name must be a Boolean fluent");
      }
      return ExtendedFormula::atom(lhs, Term::of_value(std::string(kTrueValue)));
    }
    return ExtendedFormula::atom(lhs, term(*e.rhs, env, bound, domain));
  }

  AdlDescription adl() const {
    const Signature& fluents = asig_.fluents();
    if (fluents.size() == 0) throw SemanticError("adl: needs at least one fluent");
    const std::vector<std::string> domain = fluents.constant(0).domain;
    const std::size_t n_actions = asig_.actions().size();
    std::vector<std::optional<ExtendedFormula>> pre(n_actions);
    std::vector<std::vector<std::optional<ExtendedFormula>>> upd(
        n_actions, std::vector<std::optional<ExtendedFormula>>(fluents.size()));

    for (const auto& item : u_.adl) {
      std::set<std::string> bound;
      if (item.kind == AdlItem::Kind::kUpdate) bound.insert(AdlDescription::kUpdateVariable);
      std::vector<const NameRef*> names{&item.action};
      if (item.fluent) names.push_back(&*item.fluent);
      for_each_instance(
          {&item.formula}, names, item.guards,
          [&](const Env& env) {
            const std::uint32_t a = constant(item.action, env);
            if (asig_.is_fluent(a)) fail(item.action.pos, sig_.name(a) + " is a fluent, not an action");
            const std::uint32_t action = a - asig_.fluent_count();
            ExtendedFormula f = extended(item.formula, env, bound, domain);
            if (item.kind == AdlItem::Kind::kPrecondition) {
              if (pre[action]) fail(item.pos, "second precondition for " + sig_.name(a));
              pre[action] = std::move(f);
            } else {
              const std::uint32_t c = constant(*item.fluent, env);
              if (!asig_.is_fluent(c)) fail(item.fluent->pos, sig_.name(c) + " is not a fluent");
              if (upd[action][c]) fail(item.pos, "second update for " + sig_.name(a) + " and " + sig_.name(c));
              upd[action][c] = std::move(f);
            }
          },
          bound);
    }
    std::vector<ExtendedFormula> preconditions;
    std::vector<std::vector<ExtendedFormula>> updates(n_actions);
    for (std::size_t a = 0; a < n_actions; ++a) {
      preconditions.push_back(pre[a].value_or(ExtendedFormula::top()));
      for (std::size_t c = 0; c < fluents.size(); ++c) updates[a].push_back(upd[a][c].value_or(ExtendedFormula::bottom()));
    }
    return AdlDescription(asig_, std::move(preconditions), std::move(updates));
  }
};

}  // namespace

const Signature& Expanded::signature() const {
  return kind == UnitKind::kCausalTheory ? theory.signature() : description.signature().combined();
}

Expanded expand_schemas(const SourceUnit& unit) { return Expander(unit).run(); }

}  // namespace ccplus::dsl
