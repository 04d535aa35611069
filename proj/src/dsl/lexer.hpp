#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccplus/dsl/ast.hpp"

namespace ccplus::dsl {

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kComma,
  kColon,
  kEq,
  kNeq,      // <>
  kArrow,    // =>
  kNot,      // -
  kAnd,
  kOr,
  kImplies,  // ->
  kEquiv,    // <->
  kPlus,
  kAt,
  kBang,
  kNewline,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourcePos pos;
  bool glued = false;  // no whitespace since the previous token
};

// Newlines inside parentheses or braces are dropped; consecutive newlines
// collapse. Comments run from '#' to the end of the line.
std::vector<Token> lex(std::string_view text);

const char* describe(Tok kind);

}  // namespace ccplus::dsl
