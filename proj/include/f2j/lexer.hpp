#pragma once

#include <string>
#include <vector>

#include "f2j/diagnostics.hpp"
#include "f2j/source.hpp"

namespace f2j {

enum class TokKind {
  Ident,      // bare identifier (value upper-normalized, original kept)
  Keyword,    // identifier matching a reserved PL/SQL word
  Number,
  String,     // value holds the unescaped content
  Bind,       // :IDENT or :IDENT.IDENT, value = "BLOCK.ITEM" or ".ITEM"
  Assign,     // :=
  Concat,     // ||
  Eq, NotEq, Less, LessEq, Greater, GreaterEq,
  Plus, Minus, Star, Slash,
  LParen, RParen, Comma, Semicolon, Dot, DotDot,
  End,        // end of input
};

struct Token {
  TokKind kind = TokKind::End;
  std::string value;     // upper-normalized for idents/keywords
  std::string original;  // verbatim source text
  SourceSpan span;
};

// Tokenizes a PL/SQL fragment. `base` locates the fragment inside the
// descriptor so token spans index the whole file. Handles '--' comments,
// doubled-quote escapes in strings and '#'-prefixed comment lines.
std::vector<Token> lex_plsql(const std::string& text, const SourceSpan& base,
                             DiagnosticList& diags, const std::string& file);

bool is_plsql_keyword(const std::string& upper);

}  // namespace f2j
