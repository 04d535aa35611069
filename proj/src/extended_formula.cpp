#include "ccplus/extended_formula.hpp"

#include "ccplus/error.hpp"

namespace ccplus {

using Kind = ExtendedFormula::Kind;

ExtendedFormula ExtendedFormula::atom(Term lhs, Term rhs) {
  ExtendedFormula f;
  f.kind = Kind::kAtom;
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  return f;
}

ExtendedFormula ExtendedFormula::top() { return ExtendedFormula{}; }

ExtendedFormula ExtendedFormula::bottom() {
  ExtendedFormula f;
  f.kind = Kind::kBottom;
  return f;
}

ExtendedFormula ExtendedFormula::negation(ExtendedFormula g) {
  ExtendedFormula f;
  f.kind = Kind::kNot;
  f.children.push_back(std::move(g));
  return f;
}

ExtendedFormula ExtendedFormula::binary(Kind kind, ExtendedFormula lhs, ExtendedFormula rhs) {
  ExtendedFormula f;
  f.kind = kind;
  f.children.push_back(std::move(lhs));
  f.children.push_back(std::move(rhs));
  return f;
}

ExtendedFormula ExtendedFormula::forall(std::string variable, ExtendedFormula body) {
  ExtendedFormula f;
  f.kind = Kind::kForall;
  f.variable = std::move(variable);
  f.children.push_back(std::move(body));
  return f;
}

ExtendedFormula ExtendedFormula::exists(std::string variable, ExtendedFormula body) {
  ExtendedFormula f;
  f.kind = Kind::kExists;
  f.variable = std::move(variable);
  f.children.push_back(std::move(body));
  return f;
}

ExtendedFormula ExtendedFormula::from_formula(const Signature& sig, const Formula& g) {
  switch (g.kind()) {
    case Connective::kAtom: {
      Atom a = g.as_atom();
      return atom(Term::of_constant(a.constant), Term::of_value(sig.value_name(a)));
    }
    case Connective::kTop:
      return top();
    case Connective::kBottom:
      return bottom();
    case Connective::kNot:
      return negation(from_formula(sig, g.lhs()));
    case Connective::kAnd:
      return binary(Kind::kAnd, from_formula(sig, g.lhs()), from_formula(sig, g.rhs()));
    case Connective::kOr:
      return binary(Kind::kOr, from_formula(sig, g.lhs()), from_formula(sig, g.rhs()));
    case Connective::kImplies:
      return binary(Kind::kImplies, from_formula(sig, g.lhs()), from_formula(sig, g.rhs()));
    case Connective::kEquiv:
      return binary(Kind::kEquiv, from_formula(sig, g.lhs()), from_formula(sig, g.rhs()));
  }
  return top();
}

namespace {

void collect_free(const ExtendedFormula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind) {
    case Kind::kAtom:
      for (const Term* t : {&f.lhs, &f.rhs}) {
        if (t->kind == Term::Kind::kVariable && !bound.contains(t->name)) out.insert(t->name);
      }
      return;
    case Kind::kForall:
    case Kind::kExists: {
      const bool fresh = bound.insert(f.variable).second;
      collect_free(f.children.front(), bound, out);
      if (fresh) bound.erase(f.variable);
      return;
    }
    default:
      for (const auto& child : f.children) collect_free(child, bound, out);
  }
}

}  // namespace

std::set<std::string> free_variables(const ExtendedFormula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const ExtendedFormula& f) { return free_variables(f).empty(); }

ExtendedFormula substitute(const ExtendedFormula& f, const std::string& variable,
                           const std::string& value) {
  switch (f.kind) {
    case Kind::kAtom: {
      ExtendedFormula out = f;
      for (Term* t : {&out.lhs, &out.rhs}) {
        if (t->kind == Term::Kind::kVariable && t->name == variable) *t = Term::of_value(value);
      }
      return out;
    }
    case Kind::kForall:
    case Kind::kExists:
      if (f.variable == variable) return f;  // shadowed
      [[fallthrough]];
    default: {
      ExtendedFormula out = f;
      for (auto& child : out.children) child = substitute(child, variable, value);
      return out;
    }
  }
}

namespace {

Formula ground_atom(const Signature& sig, const Term& lhs, const Term& rhs,
                    const std::vector<std::string>& domain) {
  using TK = Term::Kind;
  if (lhs.kind == TK::kVariable || rhs.kind == TK::kVariable) {
    const std::string& name = lhs.kind == TK::kVariable ? lhs.name : rhs.name;
    throw PreconditionError("unbound variable '" + name + "' in extended formula");
  }
  if (lhs.kind == TK::kValue && rhs.kind == TK::kValue) {
    return lhs.name == rhs.name ? Formula::top() : Formula::bottom();
  }
  if (lhs.kind == TK::kConstant && rhs.kind == TK::kConstant) {
    std::vector<Formula> cases;
    for (const auto& v : domain) {
      cases.push_back(Formula::atom(sig.atom(lhs.constant, v)) &&
                      Formula::atom(sig.atom(rhs.constant, v)));
    }
    return disjoin(cases);
  }
  const Term& c = lhs.kind == TK::kConstant ? lhs : rhs;
  const Term& v = lhs.kind == TK::kConstant ? rhs : lhs;
  return Formula::atom(sig.atom(c.constant, v.name));
}

// Quantifier expansion keeps value-value atoms; they are resolved in
// ground_atom once every variable has been replaced.
Formula ground_closed(const Signature& sig, const ExtendedFormula& f,
                      const std::vector<std::string>& domain) {
  switch (f.kind) {
    case Kind::kAtom:
      return ground_atom(sig, f.lhs, f.rhs, domain);
    case Kind::kTop:
      return Formula::top();
    case Kind::kBottom:
      return Formula::bottom();
    case Kind::kNot:
      return Formula::negation(ground_closed(sig, f.children[0], domain));
    case Kind::kAnd:
      return Formula::conjunction(ground_closed(sig, f.children[0], domain),
                                  ground_closed(sig, f.children[1], domain));
    case Kind::kOr:
      return Formula::disjunction(ground_closed(sig, f.children[0], domain),
                                  ground_closed(sig, f.children[1], domain));
    case Kind::kImplies:
      return Formula::implication(ground_closed(sig, f.children[0], domain),
                                  ground_closed(sig, f.children[1], domain));
    case Kind::kEquiv:
      return Formula::equivalence(ground_closed(sig, f.children[0], domain),
                                  ground_closed(sig, f.children[1], domain));
    case Kind::kForall:
    case Kind::kExists: {
      std::vector<Formula> instances;
      instances.reserve(domain.size());
      for (const auto& v : domain) {
        instances.push_back(ground_closed(sig, substitute(f.children[0], f.variable, v), domain));
      }
      return f.kind == Kind::kForall ? conjoin(instances) : disjoin(instances);
    }
  }
  return Formula::top();
}

}  // namespace

Formula ground(const Signature& sig, const ExtendedFormula& f,
               const std::vector<std::string>& domain) {
  auto free = free_variables(f);
  if (!free.empty()) {
    throw PreconditionError("unbound variable '" + *free.begin() + "' in extended formula");
  }
  return ground_closed(sig, f, domain);
}

std::vector<std::string> shared_domain(const Signature& sig) {
  if (sig.empty()) throw PreconditionError("no constants to take a shared domain from");
  const auto& domain = sig.constant(0).domain;
  for (const auto& c : sig.constants()) {
    if (c.domain != domain) {
      throw PreconditionError("constant '" + c.name + "' does not share the common domain");
    }
  }
  return domain;
}

namespace {

std::string term_string(const Signature& sig, const Term& t) {
  return t.kind == Term::Kind::kConstant ? sig.name(t.constant) : t.name;
}

void render(const Signature& sig, const ExtendedFormula& f, std::string& out) {
  switch (f.kind) {
    case Kind::kAtom:
      out += term_string(sig, f.lhs) + "=" + term_string(sig, f.rhs);
      return;
    case Kind::kTop:
      out += "true";
      return;
    case Kind::kBottom:
      out += "false";
      return;
    case Kind::kNot:
      out += "-(";
      render(sig, f.children[0], out);
      out += ")";
      return;
    case Kind::kForall:
    case Kind::kExists:
      out += f.kind == Kind::kForall ? "forall " : "exists ";
      out += f.variable + " (";
      render(sig, f.children[0], out);
      out += ")";
      return;
    default: {
      const char* op = f.kind == Kind::kAnd       ? " & "
                       : f.kind == Kind::kOr      ? " | "
                       : f.kind == Kind::kImplies ? " -> "
                                                  : " <-> ";
      out += "(";
      render(sig, f.children[0], out);
      out += op;
      render(sig, f.children[1], out);
      out += ")";
    }
  }
}

}  // namespace

std::string to_string(const Signature& sig, const ExtendedFormula& f) {
  std::string out;
  render(sig, f, out);
  return out;
}

}  // namespace ccplus
