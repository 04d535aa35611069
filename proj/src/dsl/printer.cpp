#include <sstream>

#include "ccplus/dsl/ast.hpp"

namespace ccplus::dsl {

namespace {

int precedence(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::kEquiv: return 1;
    case Expr::Kind::kImplies: return 2;
    case Expr::Kind::kOr: return 3;
    case Expr::Kind::kAnd: return 4;
    case Expr::Kind::kNot:
    case Expr::Kind::kForall:
    case Expr::Kind::kExists: return 5;
    default: return 6;
  }
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i];
  }
  return out;
}

std::string print_name(const NameRef& n) {
  std::string out = n.base;
  if (n.has_args) out += "(" + join(n.args, ",") + ")";
  for (const auto& s : n.suffixes) out += s.marker + s.name;
  return out;
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

std::string print_guards(const std::vector<Guard>& guards) {
  if (guards.empty()) return "";
  std::vector<std::string> parts;
  for (const auto& g : guards) parts.push_back(g.lhs + " <> " + g.rhs);
  return " where " + join(parts, ", ");
}

std::string print_names(const std::vector<NameRef>& names) {
  std::vector<std::string> parts;
  for (const auto& n : names) parts.push_back(print_name(n));
  return join(parts, ", ");
}

std::string print_decl(const ConstantDeclAst& d) {
  std::vector<std::string> entries;
  for (const auto& e : d.entries) entries.push_back(print_name(e));
  std::vector<std::string> parts;
  for (const auto& p : d.domain) {
    switch (p.kind) {
      case DomainPart::Kind::kBoolean: parts.emplace_back("boolean"); break;
      case DomainPart::Kind::kName: parts.push_back(p.values.front()); break;
      case DomainPart::Kind::kValues: parts.push_back("{" + join(p.values, ", ") + "}"); break;
    }
  }
  return join(entries, ", ") + " : " + join(parts, " + ");
}

std::string print_law(const LawAst& law) {
  std::string out;
  auto opt = [](const char* kw, const std::optional<Expr>& e) {
    return e ? std::string(" ") + kw + " " + print(*e) : std::string();
  };
  switch (law.kind) {
    case LawAst::Kind::kCaused:
      out = "caused " + print(*law.head) + opt("if", law.condition) + opt("after", law.after);
      break;
    case LawAst::Kind::kCauses:
      out = print_names(law.actions) + " causes " + print(*law.head) + opt("if", law.condition);
      break;
    case LawAst::Kind::kNonexecutable:
      out = "nonexecutable " + print_names(law.actions) + opt("if", law.condition);
      break;
    case LawAst::Kind::kInertial:
      out = "inertial " + print(*law.head);
      break;
    case LawAst::Kind::kNever:
      out = "never " + print(*law.head);
      break;
    case LawAst::Kind::kCausal:
      out = print(*law.condition) + " => " + print(*law.head);
      break;
  }
  return out + print_guards(law.guards);
}

}  // namespace

std::string print(const Expr& e) {
  const int p = precedence(e.kind);
  switch (e.kind) {
    case Expr::Kind::kAtom:
      return e.rhs ? print_name(e.lhs) + "=" + print_name(*e.rhs) : print_name(e.lhs);
    case Expr::Kind::kTop: return "true";
    case Expr::Kind::kBottom: return "false";
    case Expr::Kind::kNot: return "-" + wrap(e.children[0], precedence(e.children[0].kind) < p);
    case Expr::Kind::kForall:
    case Expr::Kind::kExists:
      return std::string(e.kind == Expr::Kind::kForall ? "forall " : "exists ") + e.variable + " " +
             wrap(e.children[0], precedence(e.children[0].kind) < p);
    case Expr::Kind::kAnd:
    case Expr::Kind::kOr: {
      const char* op = e.kind == Expr::Kind::kAnd ? " & " : " | ";
      return wrap(e.children[0], precedence(e.children[0].kind) < p) + op +
             wrap(e.children[1], precedence(e.children[1].kind) <= p);
    }
    case Expr::Kind::kImplies:
    case Expr::Kind::kEquiv: {
      const char* op = e.kind == Expr::Kind::kImplies ? " -> " : " <-> ";
      return wrap(e.children[0], precedence(e.children[0].kind) <= p) + op +
             wrap(e.children[1], precedence(e.children[1].kind) < p);
    }
  }
  return "";
}

std::string print(const SourceUnit& unit) {
  std::ostringstream out;
  auto section = [&](const char* name, bool nonempty) {
    if (nonempty) out << name << ":\n";
    return nonempty;
  };
  if (section("sorts", !unit.sorts.empty())) {
    for (const auto& s : unit.sorts) out << "  " << s.name << "\n";
  }
  if (section("objects", !unit.objects.empty())) {
    for (const auto& o : unit.objects) out << "  " << join(o.objects, ", ") << " : " << o.sort << "\n";
  }
  for (const auto& v : unit.vars) out << "var " << join(v.names, ", ") << " : " << v.sort << "\n";
  if (section("constants", !unit.constants.empty())) {
    for (const auto& d : unit.constants) out << "  " << print_decl(d) << "\n";
  }
  if (section("fluents", !unit.fluents.empty())) {
    for (const auto& d : unit.fluents) out << "  " << print_decl(d) << "\n";
  }
  if (section("actions", !unit.actions.empty())) {
    for (const auto& d : unit.actions) out << "  " << print_decl(d) << "\n";
  }
  if (section("laws", !unit.laws.empty())) {
    for (const auto& l : unit.laws) out << "  " << print_law(l) << "\n";
  }
  if (section("formulas", !unit.formulas.empty())) {
    for (const auto& f : unit.formulas) out << "  " << print(f.formula) << print_guards(f.guards) << "\n";
  }
  if (section("adl", !unit.adl.empty())) {
    for (const auto& item : unit.adl) {
      out << "  ";
      if (item.kind == AdlItem::Kind::kPrecondition) {
        out << "precond " << print_name(item.action);
      } else {
        out << "update " << print_name(item.action) << " " << print_name(*item.fluent);
      }
      out << " : " << print(item.formula) << print_guards(item.guards) << "\n";
    }
  }
  if (section("query", !unit.queries.empty())) {
    for (const auto& q : unit.queries) out << "  " << q.key << " : " << print(q.formula) << "\n";
  }
  return out.str();
}

}  // namespace ccplus::dsl
