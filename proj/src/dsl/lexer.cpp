#include "lexer.hpp"

#include <cctype>

#include "ccplus/error.hpp"

namespace ccplus::dsl {

namespace {

bool ident_char(unsigned char ch) { return std::isalnum(ch) != 0 || ch == '_' || ch == '\''; }

struct Alias {
  std::string_view utf8;
  Tok kind;
  const char* text;
};

constexpr Alias kAliases[] = {
    {"¬", Tok::kNot, "-"},       {"∧", Tok::kAnd, "&"},
    {"∨", Tok::kOr, "|"},        {"⊃", Tok::kImplies, "->"},
    {"→", Tok::kImplies, "->"},  {"≡", Tok::kEquiv, "<->"},
    {"↔", Tok::kEquiv, "<->"},   {"⇒", Tok::kArrow, "=>"},
    {"≠", Tok::kNeq, "<>"},      {"⊤", Tok::kIdent, "true"},
    {"⊥", Tok::kIdent, "false"},
};

struct Symbol {
  std::string_view text;
  Tok kind;
};

// Longest spellings first.
constexpr Symbol kSymbols[] = {
    {"<->", Tok::kEquiv}, {"->", Tok::kImplies}, {"=>", Tok::kArrow}, {"<>", Tok::kNeq},
    {"(", Tok::kLParen},  {")", Tok::kRParen},   {"{", Tok::kLBrace}, {"}", Tok::kRBrace},
    {",", Tok::kComma},   {":", Tok::kColon},    {"=", Tok::kEq},     {"-", Tok::kNot},
    {"&", Tok::kAnd},     {"|", Tok::kOr},       {"+", Tok::kPlus},   {"@", Tok::kAt},
    {"!", Tok::kBang},
};

}  // namespace

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "name";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kComma: return "','";
    case Tok::kColon: return "':'";
    case Tok::kEq: return "'='";
    case Tok::kNeq: return "'<>'";
    case Tok::kArrow: return "'=>'";
    case Tok::kNot: return "'-'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImplies: return "'->'";
    case Tok::kEquiv: return "'<->'";
    case Tok::kPlus: return "'+'";
    case Tok::kAt: return "'@'";
    case Tok::kBang: return "'!'";
    case Tok::kNewline: return "end of line";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  int depth = 0;
  bool glued = false;

  auto push = [&](Tok kind, std::string s, SourcePos pos) {
    if (kind == Tok::kNewline && (depth > 0 || out.empty() || out.back().kind == Tok::kNewline)) return;
    out.push_back(Token{kind, std::move(s), pos, glued});
    glued = true;
  };
  auto advance = [&](std::size_t bytes) {
    // Column counts code points: skip UTF-8 continuation bytes.
    for (std::size_t k = 0; k < bytes; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0U) != 0x80U) ++column;
    }
    i += bytes;
  };

  while (i < text.size()) {
    const auto ch = static_cast<unsigned char>(text[i]);
    const SourcePos pos{line, column};
    if (ch == '\n') {
      push(Tok::kNewline, "\n", pos);
      ++i;
      ++line;
      column = 1;
      glued = false;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      advance(1);
      glued = false;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      glued = false;
      continue;
    }
    if (ident_char(ch)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      push(Tok::kIdent, std::move(word), pos);
      continue;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (text.substr(i, alias.utf8.size()) == alias.utf8) {
        advance(alias.utf8.size());
        push(alias.kind, alias.text, pos);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const auto& sym : kSymbols) {
      if (text.substr(i, sym.text.size()) == sym.text) {
        if (sym.kind == Tok::kLParen || sym.kind == Tok::kLBrace) ++depth;
        if ((sym.kind == Tok::kRParen || sym.kind == Tok::kRBrace) && depth > 0) --depth;
        advance(sym.text.size());
        push(sym.kind, std::string(sym.text), pos);
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t len = 1;
      if (ch >= 0xC0) len = ch >= 0xF0 ? 4 : ch >= 0xE0 ? 3 : 2;
      throw ParseError("unexpected character '" + std::string(text.substr(i, len)) + "'", line, column);
    }
  }
  push(Tok::kNewline, "\n", SourcePos{line, column});
  out.push_back(Token{Tok::kEnd, "", SourcePos{line, column}, false});
  return out;
}

}  // namespace ccplus::dsl
