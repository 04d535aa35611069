#include <set>
#include <string>

#include "ccplus/dsl/ast.hpp"
#include "ccplus/error.hpp"
#include "lexer.hpp"

namespace ccplus::dsl {

namespace {

const std::set<std::string, std::less<>> kReserved{
    "caused", "if",     "after",  "causes",  "nonexecutable", "inertial", "never", "where",
    "var",    "true",   "false",  "forall",  "exists",        "precond",  "update", "boolean"};

const std::set<std::string, std::less<>> kSections{"sorts", "objects", "constants", "fluents", "actions",
                                                   "laws",  "formulas", "adl",      "query"};

bool continues(const Token& t) {
  switch (t.kind) {
    case Tok::kAnd:
    case Tok::kOr:
    case Tok::kImplies:
    case Tok::kEquiv:
    case Tok::kArrow:
    case Tok::kComma:
      return true;
    case Tok::kIdent:
      return t.text == "if" || t.text == "after" || t.text == "where" || t.text == "causes";
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceUnit unit() {
    SourceUnit out;
    std::string section;
    skip_newlines();
    while (!at(Tok::kEnd)) {
      if (at_section_header()) {
        section = peek().text;
        pos_ += 2;
        end_statement();
        continue;
      }
      if (is_word("var")) {
        out.vars.push_back(var_decl());
      } else if (section.empty()) {
        fail("expected a section header such as 'fluents:'");
      } else if (section == "sorts") {
        for (const auto& [name, p] : name_list()) out.sorts.push_back(SortDecl{name, p});
      } else if (section == "objects") {
        out.objects.push_back(object_decl());
      } else if (section == "constants") {
        out.constants.push_back(constant_decl());
      } else if (section == "fluents") {
        out.fluents.push_back(constant_decl());
      } else if (section == "actions") {
        out.actions.push_back(constant_decl());
      } else if (section == "laws") {
        out.laws.push_back(law());
      } else if (section == "formulas") {
        FormulaItem item;
        item.pos = peek().pos;
        item.formula = formula();
        item.guards = guards();
        out.formulas.push_back(std::move(item));
      } else if (section == "adl") {
        out.adl.push_back(adl_item());
      } else {
        out.queries.push_back(query_item());
      }
      end_statement();
    }
    return out;
  }

  Expr lone_formula() {
    skip_newlines();
    Expr e = formula();
    skip_newlines();
    expect(Tok::kEnd);
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  [[nodiscard]] bool at(Tok kind) const { return peek().kind == kind; }
  [[nodiscard]] bool is_word(std::string_view w) const { return at(Tok::kIdent) && peek().text == w; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string near = t.kind == Tok::kIdent ? "'" + t.text + "'" : describe(t.kind);
    throw ParseError(message + " at " + near, t.pos.line, t.pos.column);
  }

  const Token& take() { return toks_[pos_++]; }

  const Token& expect(Tok kind) {
    if (!at(kind)) fail(std::string("expected ") + describe(kind));
    return take();
  }

  std::string word(const char* what) {
    if (!at(Tok::kIdent)) fail(std::string("expected ") + what);
    if (kReserved.count(peek().text) != 0) fail(std::string("expected ") + what + ", found keyword");
    return take().text;
  }

  void keyword(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'");
    ++pos_;
  }

  void skip_newlines() {
    while (at(Tok::kNewline)) ++pos_;
  }

  // A newline followed by an operator or a law keyword continues the
  // statement.
  void join_continuation() {
    std::size_t k = pos_;
    while (toks_[k].kind == Tok::kNewline) ++k;
    if (k != pos_ && continues(toks_[k])) pos_ = k;
  }

  void end_statement() {
    if (at(Tok::kEnd)) return;
    if (!at(Tok::kNewline)) fail("expected end of line");
    skip_newlines();
  }

  [[nodiscard]] bool at_section_header() const {
    return at(Tok::kIdent) && kSections.count(peek().text) != 0 && peek(1).kind == Tok::kColon &&
           (peek(2).kind == Tok::kNewline || peek(2).kind == Tok::kEnd);
  }

  std::vector<std::pair<std::string, SourcePos>> name_list() {
    std::vector<std::pair<std::string, SourcePos>> out;
    do {
      SourcePos p = peek().pos;
      out.emplace_back(word("a name"), p);
    } while (accept(Tok::kComma));
    return out;
  }

  bool accept(Tok kind) {
    if (kind != Tok::kNewline) join_continuation();
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  bool accept_word(std::string_view w) {
    join_continuation();
    if (!is_word(w)) return false;
    ++pos_;
    return true;
  }

  VarDecl var_decl() {
    VarDecl d;
    d.pos = peek().pos;
    keyword("var");
    for (auto& [name, p] : name_list()) d.names.push_back(name);
    expect(Tok::kColon);
    d.sort = word("a sort name");
    return d;
  }

  ObjectDecl object_decl() {
    ObjectDecl d;
    d.pos = peek().pos;
    for (auto& [name, p] : name_list()) d.objects.push_back(name);
    expect(Tok::kColon);
    d.sort = word("a sort name");
    return d;
  }

  ConstantDeclAst constant_decl() {
    ConstantDeclAst d;
    d.pos = peek().pos;
    do {
      d.entries.push_back(name_ref());
    } while (accept(Tok::kComma));
    expect(Tok::kColon);
    do {
      DomainPart part;
      if (is_word("boolean")) {
        ++pos_;
        part.kind = DomainPart::Kind::kBoolean;
      } else if (accept(Tok::kLBrace)) {
        part.kind = DomainPart::Kind::kValues;
        do {
          part.values.push_back(word("a value"));
        } while (accept(Tok::kComma));
        expect(Tok::kRBrace);
      } else {
        part.kind = DomainPart::Kind::kName;
        part.values.push_back(word("a domain"));
      }
      d.domain.push_back(std::move(part));
    } while (accept(Tok::kPlus));
    return d;
  }

  NameRef name_ref() {
    NameRef n;
    n.pos = peek().pos;
    n.base = word("a name");
    if (at(Tok::kLParen) && peek().glued) {
      ++pos_;
      n.has_args = true;
      do {
        n.args.push_back(word("an argument"));
      } while (accept(Tok::kComma));
      expect(Tok::kRParen);
    }
    while ((at(Tok::kAt) || at(Tok::kBang)) && peek().glued) {
      const char marker = take().kind == Tok::kAt ? '@' : '!';
      if (!at(Tok::kIdent) || !peek().glued) fail(std::string("expected a name after '") + marker + "'");
      n.suffixes.push_back({marker, take().text});
    }
    return n;
  }

  std::vector<Guard> guards() {
    std::vector<Guard> out;
    if (!accept_word("where")) return out;
    do {
      Guard g;
      g.pos = peek().pos;
      g.lhs = word("a variable");
      expect(Tok::kNeq);
      g.rhs = word("a variable");
      out.push_back(std::move(g));
    } while (accept(Tok::kComma));
    return out;
  }

  // equiv := implies ['<->' equiv]; implies := or ['->' implies]
  Expr formula() { return equiv(); }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.pos = lhs.pos;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr equiv() {
    Expr lhs = implies();
    if (accept(Tok::kEquiv)) {
      skip_newlines();
      return binary(Expr::Kind::kEquiv, std::move(lhs), equiv());
    }
    return lhs;
  }

  Expr implies() {
    Expr lhs = disjunction();
    if (accept(Tok::kImplies)) {
      skip_newlines();
      return binary(Expr::Kind::kImplies, std::move(lhs), implies());
    }
    return lhs;
  }

  Expr disjunction() {
    Expr lhs = conjunction();
    while (accept(Tok::kOr)) {
      skip_newlines();
      lhs = binary(Expr::Kind::kOr, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = unary();
    while (accept(Tok::kAnd)) {
      skip_newlines();
      lhs = binary(Expr::Kind::kAnd, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    Expr e;
    e.pos = peek().pos;
    if (accept(Tok::kNot)) {
      e.kind = Expr::Kind::kNot;
      e.children.push_back(unary());
      return e;
    }
    if (is_word("forall") || is_word("exists")) {
      e.kind = take().text == "forall" ? Expr::Kind::kForall : Expr::Kind::kExists;
      e.variable = word("a variable");
      e.children.push_back(unary());
      return e;
    }
    return primary();
  }

  Expr primary() {
    Expr e;
    e.pos = peek().pos;
    if (accept(Tok::kLParen)) {
      Expr inner = formula();
      expect(Tok::kRParen);
      return inner;
    }
    if (is_word("true") || is_word("false")) {
      e.kind = take().text == "true" ? Expr::Kind::kTop : Expr::Kind::kBottom;
      return e;
    }
    if (!at(Tok::kIdent) || kReserved.count(peek().text) != 0) fail("expected a formula");
    e.kind = Expr::Kind::kAtom;
    e.lhs = name_ref();
    if (at(Tok::kEq)) {
      ++pos_;
      e.rhs = name_ref();
    }
    return e;
  }

  std::vector<NameRef> action_list() {
    std::vector<NameRef> out;
    do {
      out.push_back(name_ref());
    } while (accept(Tok::kComma));
    return out;
  }

  LawAst law() {
    LawAst law;
    law.pos = peek().pos;
    if (is_word("caused")) {
      ++pos_;
      law.kind = LawAst::Kind::kCaused;
      law.head = formula();
      if (accept_word("if")) law.condition = formula();
      if (accept_word("after")) law.after = formula();
    } else if (is_word("inertial") || is_word("never")) {
      law.kind = take().text == "inertial" ? LawAst::Kind::kInertial : LawAst::Kind::kNever;
      law.head = formula();
    } else if (is_word("nonexecutable")) {
      ++pos_;
      law.kind = LawAst::Kind::kNonexecutable;
      law.actions = action_list();
      if (accept_word("if")) law.condition = formula();
    } else {
      // Either "A, B causes F [if H]" or "F => G".
      const std::size_t start = pos_;
      bool causes = false;
      try {
        law.actions = action_list();
        causes = accept_word("causes");
      } catch (const ParseError&) {
        causes = false;
      }
      if (causes) {
        law.kind = LawAst::Kind::kCauses;
        law.head = formula();
        if (accept_word("if")) law.condition = formula();
      } else {
        pos_ = start;
        law.actions.clear();
        law.kind = LawAst::Kind::kCausal;
        law.condition = formula();
        if (!accept(Tok::kArrow)) fail("expected '=>' or 'causes'");
        skip_newlines();
        law.head = formula();
      }
    }
    law.guards = guards();
    return law;
  }

  AdlItem adl_item() {
    AdlItem item;
    item.pos = peek().pos;
    if (accept_word("precond")) {
      item.kind = AdlItem::Kind::kPrecondition;
      item.action = name_ref();
    } else if (accept_word("update")) {
      item.kind = AdlItem::Kind::kUpdate;
      item.action = name_ref();
      item.fluent = name_ref();
    } else {
      fail("expected 'precond' or 'update'");
    }
    expect(Tok::kColon);
    item.formula = formula();
    item.guards = guards();
    return item;
  }

  QueryItem query_item() {
    QueryItem item;
    item.pos = peek().pos;
    if (!is_word("init") && !is_word("goal")) fail("expected 'init' or 'goal'");
    item.key = take().text;
    expect(Tok::kColon);
    item.formula = formula();
    return item;
  }
};

}  // namespace

SourceUnit parse(std::string_view text) { return Parser(lex(text)).unit(); }

Expr parse_formula(std::string_view text) { return Parser(lex(text)).lone_formula(); }

}  // namespace ccplus::dsl
