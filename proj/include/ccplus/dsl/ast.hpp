#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccplus::dsl {

// Positions are 1-based; columns count code points. They are carried for
// diagnostics only and never take part in AST equality.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
  bool operator==(const SourcePos&) const { return true; }
};

// Loc(b), c@0, Loc(B1)!L2. Each suffix is '@' or '!' followed by a name.
struct NameRef {
  struct Suffix {
    char marker = '@';
    std::string name;
    bool operator==(const Suffix&) const = default;
  };
  std::string base;
  std::vector<std::string> args;
  bool has_args = false;  // Loc() is an error; this separates Loc from Loc(...)
  std::vector<Suffix> suffixes;
  SourcePos pos;
  [[nodiscard]] bool plain() const { return !has_args && suffixes.empty(); }
  bool operator==(const NameRef&) const = default;
};

struct Expr {
  enum class Kind { kAtom, kTop, kBottom, kNot, kAnd, kOr, kImplies, kEquiv, kForall, kExists };
  Kind kind = Kind::kTop;
  NameRef lhs;                 // atoms
  std::optional<NameRef> rhs;  // absent for a bare Boolean name
  std::string variable;        // quantifiers
  std::vector<Expr> children;
  SourcePos pos;
  bool operator==(const Expr&) const = default;
};

struct Guard {
  std::string lhs;
  std::string rhs;
  SourcePos pos;
  bool operator==(const Guard&) const = default;
};

struct DomainPart {
  enum class Kind { kBoolean, kName, kValues };
  Kind kind = Kind::kName;
  std::vector<std::string> values;  // one entry for kName
  bool operator==(const DomainPart&) const = default;
};

struct SortDecl {
  std::string name;
  SourcePos pos;
  bool operator==(const SortDecl&) const = default;
};

struct ObjectDecl {
  std::vector<std::string> objects;
  std::string sort;
  SourcePos pos;
  bool operator==(const ObjectDecl&) const = default;
};

struct VarDecl {
  std::vector<std::string> names;
  std::string sort;
  SourcePos pos;
  bool operator==(const VarDecl&) const = default;
};

// Loc(Box), Move(Box) : Location + {None}
// An argument naming a sort is expanded over its objects; any other argument
// is copied into the constant's name as written.
struct ConstantDeclAst {
  std::vector<NameRef> entries;
  std::vector<DomainPart> domain;
  SourcePos pos;
  bool operator==(const ConstantDeclAst&) const = default;
};

struct LawAst {
  enum class Kind { kCaused, kCauses, kNonexecutable, kInertial, kNever, kCausal };
  Kind kind = Kind::kCaused;
  // caused: head; causes: effect; inertial/never: the formula;
  // causal (F => G): the consequent G.
  std::optional<Expr> head;
  std::optional<Expr> condition;  // `if`; the antecedent F of F => G
  std::optional<Expr> after;
  std::vector<NameRef> actions;   // causes / nonexecutable
  std::vector<Guard> guards;
  SourcePos pos;
  bool operator==(const LawAst&) const = default;
};

struct AdlItem {
  enum class Kind { kPrecondition, kUpdate };
  Kind kind = Kind::kPrecondition;
  NameRef action;
  std::optional<NameRef> fluent;
  Expr formula;
  std::vector<Guard> guards;
  SourcePos pos;
  bool operator==(const AdlItem&) const = default;
};

struct QueryItem {
  std::string key;  // init | goal
  Expr formula;
  SourcePos pos;
  bool operator==(const QueryItem&) const = default;
};

struct FormulaItem {
  Expr formula;
  std::vector<Guard> guards;
  SourcePos pos;
  bool operator==(const FormulaItem&) const = default;
};

struct SourceUnit {
  std::vector<SortDecl> sorts;
  std::vector<ObjectDecl> objects;
  std::vector<VarDecl> vars;
  std::vector<ConstantDeclAst> constants;
  std::vector<ConstantDeclAst> fluents;
  std::vector<ConstantDeclAst> actions;
  std::vector<LawAst> laws;
  std::vector<FormulaItem> formulas;
  std::vector<AdlItem> adl;
  std::vector<QueryItem> queries;
  bool operator==(const SourceUnit&) const = default;
};

// Throws ParseError with the line and column of the offending token.
SourceUnit parse(std::string_view text);
Expr parse_formula(std::string_view text);

// Canonical rendering that parses back to an equal SourceUnit.
std::string print(const SourceUnit& unit);
std::string print(const Expr& e);

}  // namespace ccplus::dsl
