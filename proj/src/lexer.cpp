#include "f2j/lexer.hpp"

#include <cctype>
#include <unordered_set>

#include "f2j/names.hpp"

namespace f2j {

namespace {

const std::unordered_set<std::string>& keyword_set() {
  static const std::unordered_set<std::string> kw = {
      "BEGIN", "END", "DECLARE", "EXCEPTION", "WHEN", "THEN", "OTHERS",
      "IF", "ELSIF", "ELSE", "CASE", "WHILE", "FOR", "LOOP", "EXIT",
      "RETURN", "RAISE", "SELECT", "INTO", "INSERT", "UPDATE", "DELETE",
      "FROM", "AND", "OR", "NOT", "NULL", "TRUE", "FALSE", "IS", "IN",
      "FUNCTION", "PROCEDURE",
      // recognized only to report unsupported constructs cleanly
      "CURSOR", "GOTO", "PACKAGE", "PRAGMA", "COMMIT", "ROLLBACK",
      "SAVEPOINT", "MERGE", "FETCH", "OPEN", "CLOSE",
  };
  return kw;
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::uint32_t line;
  std::uint32_t col;
  std::uint32_t base_offset;
  bool line_has_content = false;

  explicit Cursor(const std::string& t, const SourceSpan& base)
      : text(t), line(base.line), col(base.col), base_offset(base.begin) {}

  bool eof() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  void advance() {
    if (eof()) return;
    if (text[pos] == '\n') {
      ++line;
      col = 1;
      line_has_content = false;
    } else {
      ++col;
      if (!std::isspace(static_cast<unsigned char>(text[pos]))) line_has_content = true;
    }
    ++pos;
  }
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$';
}

}  // namespace

bool is_plsql_keyword(const std::string& upper) { return keyword_set().count(upper) > 0; }

std::vector<Token> lex_plsql(const std::string& text, const SourceSpan& base,
                             DiagnosticList& diags, const std::string& file) {
  std::vector<Token> out;
  Cursor c(text, base);

  auto start_span = [&]() {
    SourceSpan s;
    s.begin = c.base_offset + static_cast<std::uint32_t>(c.pos);
    s.line = c.line;
    s.col = c.col;
    return s;
  };
  auto close_span = [&](SourceSpan& s) {
    s.end = c.base_offset + static_cast<std::uint32_t>(c.pos);
    s.end_line = c.line;
    s.end_col = c.col;
  };
  auto push = [&](TokKind k, SourceSpan s, std::string value, std::string original) {
    close_span(s);
    out.push_back({k, std::move(value), std::move(original), s});
  };

  while (!c.eof()) {
    char ch = c.peek();
    if (std::isspace(static_cast<unsigned char>(ch))) {
      c.advance();
      continue;
    }
    // '#' comment lines (descriptor convention) apply inside bodies as well.
    if (ch == '#' && !c.line_has_content) {
      while (!c.eof() && c.peek() != '\n') c.advance();
      continue;
    }
    if (ch == '-' && c.peek(1) == '-') {
      while (!c.eof() && c.peek() != '\n') c.advance();
      continue;
    }

    SourceSpan span = start_span();

    if (is_ident_start(ch)) {
      std::string raw;
      while (!c.eof() && is_ident_char(c.peek())) {
        raw.push_back(c.peek());
        c.advance();
      }
      std::string upper = to_upper(raw);
      push(is_plsql_keyword(upper) ? TokKind::Keyword : TokKind::Ident, span, upper, raw);
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string raw;
      while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        raw.push_back(c.peek());
        c.advance();
      }
      // Stop before '..' so FOR ranges like 1..10 lex as Number DotDot Number.
      if (c.peek() == '.' && c.peek(1) != '.') {
        raw.push_back('.');
        c.advance();
        while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
          raw.push_back(c.peek());
          c.advance();
        }
      }
      push(TokKind::Number, span, raw, raw);
      continue;
    }

    if (ch == '\'') {
      c.advance();
      std::string value;
      std::string raw = "'";
      bool closed = false;
      while (!c.eof()) {
        char s = c.peek();
        raw.push_back(s);
        if (s == '\'') {
          c.advance();
          if (c.peek() == '\'') {  // doubled quote escape
            value.push_back('\'');
            raw.push_back('\'');
            c.advance();
            continue;
          }
          closed = true;
          break;
        }
        value.push_back(s);
        c.advance();
      }
      if (!closed) {
        diags.error("L001", "unterminated string literal", file, span.line, span.col);
      }
      push(TokKind::String, span, value, raw);
      continue;
    }

    if (ch == ':') {
      if (c.peek(1) == '=') {
        c.advance();
        c.advance();
        push(TokKind::Assign, span, ":=", ":=");
        continue;
      }
      if (is_ident_start(c.peek(1))) {
        c.advance();  // ':'
        std::string first;
        while (!c.eof() && is_ident_char(c.peek())) {
          first.push_back(c.peek());
          c.advance();
        }
        std::string second;
        if (c.peek() == '.' && is_ident_start(c.peek(1))) {
          c.advance();
          while (!c.eof() && is_ident_char(c.peek())) {
            second.push_back(c.peek());
            c.advance();
          }
        }
        std::string value = second.empty() ? "." + to_upper(first)
                                           : to_upper(first) + "." + to_upper(second);
        std::string raw = ":" + first + (second.empty() ? "" : "." + second);
        push(TokKind::Bind, span, value, raw);
        continue;
      }
      diags.error("L002", "stray ':'", file, span.line, span.col);
      c.advance();
      continue;
    }

    auto two = [&](char a, char b) { return ch == a && c.peek(1) == b; };
    if (two('|', '|')) { c.advance(); c.advance(); push(TokKind::Concat, span, "||", "||"); continue; }
    if (two('<', '>')) { c.advance(); c.advance(); push(TokKind::NotEq, span, "<>", "<>"); continue; }
    if (two('!', '=')) { c.advance(); c.advance(); push(TokKind::NotEq, span, "!=", "!="); continue; }
    if (two('<', '=')) { c.advance(); c.advance(); push(TokKind::LessEq, span, "<=", "<="); continue; }
    if (two('>', '=')) { c.advance(); c.advance(); push(TokKind::GreaterEq, span, ">=", ">="); continue; }
    if (two('.', '.')) { c.advance(); c.advance(); push(TokKind::DotDot, span, "..", ".."); continue; }

    TokKind kind;
    switch (ch) {
      case '=': kind = TokKind::Eq; break;
      case '<': kind = TokKind::Less; break;
      case '>': kind = TokKind::Greater; break;
      case '+': kind = TokKind::Plus; break;
      case '-': kind = TokKind::Minus; break;
      case '*': kind = TokKind::Star; break;
      case '/': kind = TokKind::Slash; break;
      case '(': kind = TokKind::LParen; break;
      case ')': kind = TokKind::RParen; break;
      case ',': kind = TokKind::Comma; break;
      case ';': kind = TokKind::Semicolon; break;
      case '.': kind = TokKind::Dot; break;
      default:
        diags.error("L003", std::string("unexpected character '") + ch + "'", file, span.line,
                    span.col);
        c.advance();
        continue;
    }
    c.advance();
    push(kind, span, std::string(1, ch), std::string(1, ch));
  }

  SourceSpan eof_span = start_span();
  eof_span.end = eof_span.begin;
  eof_span.end_line = eof_span.line;
  eof_span.end_col = eof_span.col;
  out.push_back({TokKind::End, "", "", eof_span});
  return out;
}

}  // namespace f2j
