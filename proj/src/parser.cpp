#include "f2j/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "f2j/lexer.hpp"
#include "f2j/names.hpp"

namespace f2j {

namespace {

// ---------------------------------------------------------------------------
// PL/SQL recursive descent
// ---------------------------------------------------------------------------

const std::set<std::string> kScalarTypes = {"VARCHAR2", "NUMBER", "INTEGER", "BOOLEAN", "DATE"};
const std::set<std::string> kUnsupported = {"CURSOR", "GOTO",      "PACKAGE", "PRAGMA", "COMMIT",
                                            "ROLLBACK", "SAVEPOINT", "MERGE",   "FETCH",  "OPEN",
                                            "CLOSE"};

class PlSqlParser {
 public:
  PlSqlParser(const std::string& full_text, std::vector<Token> tokens, DiagnosticList& diags,
              std::string file)
      : text_(full_text), toks_(std::move(tokens)), diags_(diags), file_(std::move(file)) {}

  std::optional<PlSqlBlock> parse_entry() {
    PlSqlBlock block;
    if (at_kw("DECLARE") || at_kw("BEGIN")) {
      auto b = parse_block();
      if (!b) return std::nullopt;
      block = std::move(*b);
      if (at(TokKind::Semicolon)) advance();
    } else {
      SourceSpan begin = cur().span;
      block.statements = parse_statement_list();
      block.span = span_between(begin, prev_span());
      if (block.statements.empty()) block.span = begin;
    }
    if (!at(TokKind::End)) {
      err("P010", "unexpected trailing input after block");
    }
    return block;
  }

  // [declarations] BEGIN ... END [;]  -- program unit body after IS.
  std::optional<PlSqlBlock> parse_unit_body() {
    PlSqlBlock block;
    SourceSpan begin = cur().span;
    if (!at_kw("BEGIN")) {
      if (!parse_declarations_until_begin(block.declarations)) return std::nullopt;
    }
    if (!finish_block(block)) return std::nullopt;
    block.span = span_between(begin, prev_span());
    if (at(TokKind::Semicolon)) advance();
    if (!at(TokKind::End)) err("P010", "unexpected trailing input after program unit body");
    return block;
  }

 private:
  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  DiagnosticList& diags_;
  std::string file_;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t ahead = 1) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(TokKind k) const { return cur().kind == k; }
  bool at_kw(const char* w) const { return cur().kind == TokKind::Keyword && cur().value == w; }
  void advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  SourceSpan prev_span() const { return pos_ > 0 ? toks_[pos_ - 1].span : cur().span; }

  void err(const char* code, const std::string& msg) {
    diags_.error(code, msg, file_, cur().span.line, cur().span.col);
  }

  static SourceSpan span_between(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.end = b.end;
    s.end_line = b.end_line;
    s.end_col = b.end_col;
    return s;
  }

  bool expect(TokKind k, const char* what) {
    if (at(k)) {
      advance();
      return true;
    }
    err("P001", std::string("expected ") + what + ", found '" +
                    (cur().original.empty() ? "<eof>" : cur().original) + "'");
    return false;
  }

  bool expect_kw(const char* w) {
    if (at_kw(w)) {
      advance();
      return true;
    }
    err("P001", std::string("expected ") + w + ", found '" +
                    (cur().original.empty() ? "<eof>" : cur().original) + "'");
    return false;
  }

  // Skips to just past the next ';' (or a block-level keyword) for recovery.
  void recover() {
    int depth = 0;
    while (!at(TokKind::End)) {
      if (at(TokKind::LParen)) ++depth;
      if (at(TokKind::RParen) && depth > 0) --depth;
      if (at(TokKind::Semicolon) && depth == 0) {
        advance();
        return;
      }
      if (depth == 0 && (at_kw("END") || at_kw("ELSIF") || at_kw("ELSE") || at_kw("EXCEPTION")))
        return;
      advance();
    }
  }

  // ----- expressions -----

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    auto lhs = parse_and();
    while (lhs && at_kw("OR")) {
      advance();
      auto rhs = parse_and();
      if (!rhs) return nullptr;
      SourceSpan s = span_between(lhs->span, rhs->span);
      lhs = make_binary(BinOp::Or, std::move(lhs), std::move(rhs), s);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    auto lhs = parse_not();
    while (lhs && at_kw("AND")) {
      advance();
      auto rhs = parse_not();
      if (!rhs) return nullptr;
      SourceSpan s = span_between(lhs->span, rhs->span);
      lhs = make_binary(BinOp::And, std::move(lhs), std::move(rhs), s);
    }
    return lhs;
  }

  ExprPtr parse_not() {
    if (at_kw("NOT")) {
      SourceSpan s = cur().span;
      advance();
      auto operand = parse_not();
      if (!operand) return nullptr;
      SourceSpan full = span_between(s, operand->span);
      return make_unary(UnOp::Not, std::move(operand), full);
    }
    return parse_comparison();
  }

  ExprPtr parse_comparison() {
    auto lhs = parse_additive();
    if (!lhs) return nullptr;
    BinOp op;
    switch (cur().kind) {
      case TokKind::Eq: op = BinOp::Eq; break;
      case TokKind::NotEq: op = BinOp::NotEq; break;
      case TokKind::Less: op = BinOp::Less; break;
      case TokKind::LessEq: op = BinOp::LessEq; break;
      case TokKind::Greater: op = BinOp::Greater; break;
      case TokKind::GreaterEq: op = BinOp::GreaterEq; break;
      default: return lhs;
    }
    advance();
    auto rhs = parse_additive();
    if (!rhs) return nullptr;
    SourceSpan s = span_between(lhs->span, rhs->span);
    return make_binary(op, std::move(lhs), std::move(rhs), s);
  }

  ExprPtr parse_additive() {
    auto lhs = parse_multiplicative();
    while (lhs) {
      BinOp op;
      if (at(TokKind::Plus)) op = BinOp::Add;
      else if (at(TokKind::Minus)) op = BinOp::Sub;
      else if (at(TokKind::Concat)) op = BinOp::Concat;
      else break;
      advance();
      auto rhs = parse_multiplicative();
      if (!rhs) return nullptr;
      SourceSpan s = span_between(lhs->span, rhs->span);
      lhs = make_binary(op, std::move(lhs), std::move(rhs), s);
    }
    return lhs;
  }

  ExprPtr parse_multiplicative() {
    auto lhs = parse_unary();
    while (lhs && (at(TokKind::Star) || at(TokKind::Slash))) {
      BinOp op = at(TokKind::Star) ? BinOp::Mul : BinOp::Div;
      advance();
      auto rhs = parse_unary();
      if (!rhs) return nullptr;
      SourceSpan s = span_between(lhs->span, rhs->span);
      lhs = make_binary(op, std::move(lhs), std::move(rhs), s);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(TokKind::Minus)) {
      SourceSpan s = cur().span;
      advance();
      auto operand = parse_unary();
      if (!operand) return nullptr;
      SourceSpan full = span_between(s, operand->span);
      return make_unary(UnOp::Neg, std::move(operand), full);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokKind::Number: {
        advance();
        return make_literal(LiteralKind::Number, t.value, t.span);
      }
      case TokKind::String: {
        advance();
        return make_literal(LiteralKind::String, t.value, t.span);
      }
      case TokKind::Bind: {
        advance();
        auto dot = t.value.find('.');
        return make_bind_ref(t.value.substr(0, dot), t.value.substr(dot + 1), t.span);
      }
      case TokKind::LParen: {
        advance();
        auto inner = parse_expr();
        if (!inner) return nullptr;
        expect(TokKind::RParen, "')'");
        SourceSpan s = span_between(t.span, prev_span());
        inner->span = s;
        return inner;
      }
      case TokKind::Keyword: {
        if (t.value == "TRUE" || t.value == "FALSE") {
          advance();
          return make_literal(LiteralKind::Bool, to_lower(t.value), t.span);
        }
        if (t.value == "NULL") {
          advance();
          return make_literal(LiteralKind::Null, "null", t.span);
        }
        err("P002", "expected expression, found keyword '" + t.original + "'");
        return nullptr;
      }
      case TokKind::Ident: {
        advance();
        if (at(TokKind::LParen)) {
          advance();
          std::vector<ExprPtr> args;
          if (!at(TokKind::RParen)) {
            while (true) {
              auto a = parse_expr();
              if (!a) return nullptr;
              args.push_back(std::move(a));
              if (at(TokKind::Comma)) {
                advance();
                continue;
              }
              break;
            }
          }
          if (!expect(TokKind::RParen, "')'")) return nullptr;
          SourceSpan s = span_between(t.span, prev_span());
          auto call = make_call(t.value, std::move(args), s);
          call->original = t.original;
          return call;
        }
        return make_var_ref(t.value, t.original, t.span);
      }
      default:
        err("P002", "expected expression, found '" +
                        (t.original.empty() ? "<eof>" : t.original) + "'");
        return nullptr;
    }
  }

  // ----- statements -----

  bool at_statement_terminator() const {
    return at(TokKind::End) || at_kw("END") || at_kw("ELSIF") || at_kw("ELSE") ||
           at_kw("EXCEPTION") || at_kw("WHEN");
  }

  std::vector<StmtPtr> parse_statement_list() {
    std::vector<StmtPtr> out;
    while (!at_statement_terminator()) {
      std::size_t before = pos_;
      auto s = parse_statement();
      if (s) {
        out.push_back(std::move(s));
      } else {
        recover();
        if (pos_ == before) advance();  // guarantee progress
      }
    }
    return out;
  }

  StmtPtr parse_statement() {
    const Token& t = cur();
    if (t.kind == TokKind::Keyword) {
      if (kUnsupported.count(t.value)) {
        err("P003", "unsupported construct: " + t.value);
        return nullptr;
      }
      if (t.value == "BEGIN" || t.value == "DECLARE") return parse_inner_block();
      if (t.value == "IF") return parse_if();
      if (t.value == "CASE") return parse_case();
      if (t.value == "WHILE") return parse_while();
      if (t.value == "FOR") return parse_for();
      if (t.value == "LOOP") return parse_basic_loop();
      if (t.value == "EXIT") return parse_exit();
      if (t.value == "RETURN") return parse_return();
      if (t.value == "RAISE") return parse_raise();
      if (t.value == "SELECT") return parse_select_into();
      if (t.value == "INSERT") return parse_dml(DmlKind::Insert);
      if (t.value == "UPDATE") return parse_dml(DmlKind::Update);
      if (t.value == "DELETE") return parse_dml(DmlKind::Delete);
      err("P004", "unexpected keyword '" + t.original + "' at statement start");
      return nullptr;
    }
    if (t.kind == TokKind::Bind) return parse_assign_or_call();
    if (t.kind == TokKind::Ident) return parse_assign_or_call();
    err("P004", "expected statement, found '" + (t.original.empty() ? "<eof>" : t.original) + "'");
    return nullptr;
  }

  StmtPtr make_stmt(StmtKind k, SourceSpan begin) {
    auto s = std::make_unique<PlSqlStatement>();
    s->kind = k;
    s->span = span_between(begin, prev_span());
    return s;
  }

  StmtPtr parse_inner_block() {
    SourceSpan begin = cur().span;
    auto block = parse_block();
    if (!block) return nullptr;
    if (at(TokKind::Semicolon)) advance();
    auto s = make_stmt(StmtKind::InnerBlock, begin);
    s->inner = std::make_unique<PlSqlBlock>(std::move(*block));
    return s;
  }

  std::optional<PlSqlBlock> parse_block() {
    PlSqlBlock block;
    SourceSpan begin = cur().span;
    if (at_kw("DECLARE")) {
      advance();
      if (!parse_declarations_until_begin(block.declarations)) return std::nullopt;
    }
    if (!finish_block(block)) return std::nullopt;
    block.span = span_between(begin, prev_span());
    return block;
  }

  // BEGIN <stmts> [EXCEPTION (WHEN ... THEN <stmts>)+] END [label]
  bool finish_block(PlSqlBlock& block) {
    if (!expect_kw("BEGIN")) return false;
    block.statements = parse_statement_list();
    if (at_kw("EXCEPTION")) {
      advance();
      if (!at_kw("WHEN")) {
        err("P005", "expected WHEN after EXCEPTION");
        return false;
      }
      while (at_kw("WHEN")) {
        SourceSpan hbegin = cur().span;
        advance();
        std::string name;
        if (at_kw("OTHERS")) {
          name = "OTHERS";
          advance();
        } else if (at(TokKind::Ident)) {
          name = cur().value;
          advance();
        } else {
          err("P005", "expected exception name or OTHERS");
          return false;
        }
        if (!expect_kw("THEN")) return false;
        ExceptionHandler handler;
        handler.exception_name = name;
        handler.statements = parse_statement_list();
        handler.span = span_between(hbegin, prev_span());
        block.exception_handlers.push_back(std::move(handler));
      }
    }
    if (!expect_kw("END")) return false;
    if (at(TokKind::Ident)) advance();  // optional END <label>
    return true;
  }

  bool parse_declarations_until_begin(std::vector<Declaration>& out) {
    while (!at_kw("BEGIN") && !at(TokKind::End)) {
      Declaration d;
      SourceSpan begin = cur().span;
      if (!at(TokKind::Ident)) {
        err("P006", "expected declaration name");
        return false;
      }
      d.name = cur().value;
      d.original = cur().original;
      advance();
      if (!at(TokKind::Ident)) {
        err("P006", "expected type name in declaration of " + d.original);
        return false;
      }
      std::string type = cur().value;
      advance();
      if (at(TokKind::LParen)) {  // VARCHAR2(30)
        advance();
        if (at(TokKind::Number)) {
          type += "(" + cur().value + ")";
          advance();
        }
        if (!expect(TokKind::RParen, "')'")) return false;
      }
      std::string base = type.substr(0, type.find('('));
      if (!kScalarTypes.count(base)) {
        err("P007", "unknown PL/SQL type '" + type + "'");
      }
      d.plsql_type = type;
      if (at(TokKind::Assign)) {
        advance();
        d.init = parse_expr();
        if (!d.init) return false;
      }
      if (!expect(TokKind::Semicolon, "';'")) return false;
      d.span = span_between(begin, prev_span());
      out.push_back(std::move(d));
    }
    return true;
  }

  StmtPtr parse_if() {
    SourceSpan begin = cur().span;
    advance();  // IF
    auto stmt = std::make_unique<PlSqlStatement>();
    stmt->kind = StmtKind::If;

    auto parse_branch = [&](SourceSpan bspan) -> bool {
      IfBranch branch;
      branch.condition = parse_expr();
      if (!branch.condition) return false;
      if (!expect_kw("THEN")) return false;
      branch.statements = parse_statement_list();
      branch.span = span_between(bspan, prev_span());
      stmt->branches.push_back(std::move(branch));
      return true;
    };

    if (!parse_branch(begin)) return nullptr;
    while (at_kw("ELSIF")) {
      SourceSpan bspan = cur().span;
      advance();
      if (!parse_branch(bspan)) return nullptr;
    }
    if (at_kw("ELSE")) {
      SourceSpan espan = cur().span;
      advance();
      stmt->else_statements = parse_statement_list();
      stmt->else_span = span_between(espan, prev_span());
    }
    if (!expect_kw("END")) return nullptr;
    if (!expect_kw("IF")) return nullptr;
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    stmt->span = span_between(begin, prev_span());
    return stmt;
  }

  StmtPtr parse_case() {
    SourceSpan begin = cur().span;
    advance();  // CASE
    auto stmt = std::make_unique<PlSqlStatement>();
    stmt->kind = StmtKind::Case;
    if (!at_kw("WHEN")) {
      stmt->case_subject = parse_expr();
      if (!stmt->case_subject) return nullptr;
    }
    while (at_kw("WHEN")) {
      SourceSpan wspan = cur().span;
      advance();
      CaseWhen arm;
      arm.match = parse_expr();
      if (!arm.match) return nullptr;
      if (!expect_kw("THEN")) return nullptr;
      arm.statements = parse_statement_list();
      arm.span = span_between(wspan, prev_span());
      stmt->whens.push_back(std::move(arm));
    }
    if (stmt->whens.empty()) {
      err("P008", "CASE requires at least one WHEN arm");
      return nullptr;
    }
    if (at_kw("ELSE")) {
      SourceSpan espan = cur().span;
      advance();
      stmt->else_statements = parse_statement_list();
      stmt->else_span = span_between(espan, prev_span());
    }
    if (!expect_kw("END")) return nullptr;
    if (!expect_kw("CASE")) return nullptr;
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    stmt->span = span_between(begin, prev_span());
    return stmt;
  }

  StmtPtr parse_while() {
    SourceSpan begin = cur().span;
    advance();
    auto cond = parse_expr();
    if (!cond) return nullptr;
    if (!expect_kw("LOOP")) return nullptr;
    auto body = parse_statement_list();
    if (!expect_kw("END")) return nullptr;
    if (!expect_kw("LOOP")) return nullptr;
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto s = make_stmt(StmtKind::While, begin);
    s->condition = std::move(cond);
    s->body = std::move(body);
    return s;
  }

  StmtPtr parse_for() {
    SourceSpan begin = cur().span;
    advance();
    if (!at(TokKind::Ident)) {
      err("P009", "expected loop variable after FOR");
      return nullptr;
    }
    std::string var = cur().value;
    std::string var_orig = cur().original;
    advance();
    if (!expect_kw("IN")) return nullptr;
    auto from = parse_expr();
    if (!from) return nullptr;
    if (!expect(TokKind::DotDot, "'..'")) return nullptr;
    auto to = parse_expr();
    if (!to) return nullptr;
    if (!expect_kw("LOOP")) return nullptr;
    auto body = parse_statement_list();
    if (!expect_kw("END")) return nullptr;
    if (!expect_kw("LOOP")) return nullptr;
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto s = make_stmt(StmtKind::For, begin);
    s->loop_var = std::move(var);
    s->loop_var_original = std::move(var_orig);
    s->loop_from = std::move(from);
    s->loop_to = std::move(to);
    s->body = std::move(body);
    return s;
  }

  StmtPtr parse_basic_loop() {
    SourceSpan begin = cur().span;
    advance();
    auto body = parse_statement_list();
    if (!expect_kw("END")) return nullptr;
    if (!expect_kw("LOOP")) return nullptr;
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto s = make_stmt(StmtKind::BasicLoop, begin);
    s->body = std::move(body);
    return s;
  }

  StmtPtr parse_exit() {
    SourceSpan begin = cur().span;
    advance();
    ExprPtr when;
    if (at_kw("WHEN")) {
      advance();
      when = parse_expr();
      if (!when) return nullptr;
    }
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto exit_stmt = make_stmt(StmtKind::Exit, begin);
    if (!when) return exit_stmt;
    // EXIT WHEN c desugars to IF c THEN EXIT; END IF;
    auto wrapper = std::make_unique<PlSqlStatement>();
    wrapper->kind = StmtKind::If;
    wrapper->span = exit_stmt->span;
    IfBranch branch;
    branch.span = exit_stmt->span;
    branch.condition = std::move(when);
    branch.statements.push_back(std::move(exit_stmt));
    wrapper->branches.push_back(std::move(branch));
    return wrapper;
  }

  StmtPtr parse_return() {
    SourceSpan begin = cur().span;
    advance();
    ExprPtr value;
    if (!at(TokKind::Semicolon)) {
      value = parse_expr();
      if (!value) return nullptr;
    }
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto s = make_stmt(StmtKind::Return, begin);
    s->return_value = std::move(value);
    return s;
  }

  StmtPtr parse_raise() {
    SourceSpan begin = cur().span;
    advance();
    if (!at(TokKind::Ident)) {
      err("P009", "expected exception name after RAISE");
      return nullptr;
    }
    std::string name = cur().value;
    advance();
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto s = make_stmt(StmtKind::Raise, begin);
    s->exception_name = std::move(name);
    return s;
  }

  StmtPtr parse_assign_or_call() {
    SourceSpan begin = cur().span;
    if (cur().kind == TokKind::Bind) {
      auto target = parse_primary();
      if (!target) return nullptr;
      if (!expect(TokKind::Assign, "':='")) return nullptr;
      auto value = parse_expr();
      if (!value) return nullptr;
      if (!expect(TokKind::Semicolon, "';'")) return nullptr;
      auto s = make_stmt(StmtKind::Assign, begin);
      s->target = std::move(target);
      s->value = std::move(value);
      return s;
    }
    // Ident: assignment or procedure call.
    const Token name_tok = cur();
    if (peek().kind == TokKind::Assign) {
      advance();
      advance();
      auto value = parse_expr();
      if (!value) return nullptr;
      if (!expect(TokKind::Semicolon, "';'")) return nullptr;
      auto s = make_stmt(StmtKind::Assign, begin);
      s->target = make_var_ref(name_tok.value, name_tok.original, name_tok.span);
      s->value = std::move(value);
      return s;
    }
    advance();
    std::vector<ExprPtr> args;
    if (at(TokKind::LParen)) {
      advance();
      if (!at(TokKind::RParen)) {
        while (true) {
          auto a = parse_expr();
          if (!a) return nullptr;
          args.push_back(std::move(a));
          if (at(TokKind::Comma)) {
            advance();
            continue;
          }
          break;
        }
      }
      if (!expect(TokKind::RParen, "')'")) return nullptr;
    }
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    auto s = make_stmt(StmtKind::Call, begin);
    s->callee = name_tok.value;
    s->callee_original = name_tok.original;
    s->args = std::move(args);
    return s;
  }

  // SELECT <cols> INTO <targets> FROM <tail> ;
  StmtPtr parse_select_into() {
    SourceSpan begin = cur().span;
    advance();  // SELECT
    auto s = std::make_unique<PlSqlStatement>();
    s->kind = StmtKind::SelectInto;

    // Projection: raw source slices split on top-level commas up to INTO.
    std::size_t col_start = pos_;
    int depth = 0;
    std::vector<std::size_t> boundaries;  // token indexes of top-level commas
    while (!at(TokKind::End)) {
      if (at(TokKind::LParen)) ++depth;
      else if (at(TokKind::RParen)) --depth;
      else if (depth == 0 && at_kw("INTO")) break;
      else if (depth == 0 && at(TokKind::Comma)) boundaries.push_back(pos_);
      else if (at(TokKind::Semicolon)) break;
      advance();
    }
    if (!at_kw("INTO")) {
      err("P011", "SELECT without INTO is not supported");
      return nullptr;
    }
    std::size_t into_idx = pos_;
    auto column_text = [&](std::size_t from_tok, std::size_t to_tok) {
      // Verbatim slice between token boundaries, trimmed.
      std::uint32_t a = toks_[from_tok].span.begin;
      std::uint32_t b = toks_[to_tok - 1].span.end;
      std::string raw = text_.substr(a, b - a);
      std::size_t lo = raw.find_first_not_of(" \t\r\n");
      std::size_t hi = raw.find_last_not_of(" \t\r\n");
      return lo == std::string::npos ? std::string() : raw.substr(lo, hi - lo + 1);
    };
    std::size_t piece_start = col_start;
    for (std::size_t b : boundaries) {
      s->projected_columns.push_back(column_text(piece_start, b));
      piece_start = b + 1;
    }
    if (piece_start < into_idx) s->projected_columns.push_back(column_text(piece_start, into_idx));
    if (s->projected_columns.empty() || s->projected_columns.back().empty()) {
      err("P011", "empty SELECT projection");
      return nullptr;
    }

    advance();  // INTO
    while (true) {
      if (at(TokKind::Bind) || at(TokKind::Ident)) {
        auto target = parse_primary();
        if (!target || (target->kind != ExprKind::VarRef && target->kind != ExprKind::BindRef)) {
          err("P012", "INTO target must be a variable or bind reference");
          return nullptr;
        }
        s->into_targets.push_back(std::move(target));
      } else {
        err("P012", "expected INTO target");
        return nullptr;
      }
      if (at(TokKind::Comma)) {
        advance();
        continue;
      }
      break;
    }
    if (!at_kw("FROM")) {
      err("P011", "expected FROM after INTO targets");
      return nullptr;
    }
    std::uint32_t tail_begin = cur().span.begin;
    while (!at(TokKind::End) && !at(TokKind::Semicolon)) {
      if (at(TokKind::Bind)) {
        const Token& t = cur();
        auto dot = t.value.find('.');
        s->binds.push_back(make_bind_ref(t.value.substr(0, dot), t.value.substr(dot + 1), t.span));
      }
      advance();
    }
    std::uint32_t tail_end = prev_span().end;
    s->sql_tail = text_.substr(tail_begin, tail_end - tail_begin);
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    if (s->projected_columns.size() != s->into_targets.size()) {
      diags_.error("P013",
                   "SELECT INTO arity mismatch: " + std::to_string(s->projected_columns.size()) +
                       " column(s) vs " + std::to_string(s->into_targets.size()) + " target(s)",
                   file_, begin.line, begin.col);
      return nullptr;
    }
    s->span = span_between(begin, prev_span());
    return s;
  }

  StmtPtr parse_dml(DmlKind kind) {
    SourceSpan begin = cur().span;
    std::uint32_t raw_begin = cur().span.begin;
    auto s = std::make_unique<PlSqlStatement>();
    s->kind = StmtKind::Dml;
    s->dml_kind = kind;
    while (!at(TokKind::End) && !at(TokKind::Semicolon)) {
      if (at(TokKind::Bind)) {
        const Token& t = cur();
        auto dot = t.value.find('.');
        s->binds.push_back(make_bind_ref(t.value.substr(0, dot), t.value.substr(dot + 1), t.span));
      }
      advance();
    }
    s->sql_tail = text_.substr(raw_begin, prev_span().end - raw_begin);
    if (!expect(TokKind::Semicolon, "';'")) return nullptr;
    s->span = span_between(begin, prev_span());
    return s;
  }
};

// ---------------------------------------------------------------------------
// Bind qualification: ':ITEM' inherits the enclosing window name.
// ---------------------------------------------------------------------------

void qualify_expr(Expr& e, const std::string& window);

void qualify_stmt(PlSqlStatement& s, const std::string& window);

void qualify_block(PlSqlBlock& b, const std::string& window) {
  for (auto& d : b.declarations)
    if (d.init) qualify_expr(*d.init, window);
  for (auto& s : b.statements) qualify_stmt(*s, window);
  for (auto& h : b.exception_handlers)
    for (auto& s : h.statements) qualify_stmt(*s, window);
}

void qualify_expr(Expr& e, const std::string& window) {
  if (e.kind == ExprKind::BindRef && e.block.empty()) e.block = window;
  if (e.lhs) qualify_expr(*e.lhs, window);
  if (e.rhs) qualify_expr(*e.rhs, window);
  if (e.operand) qualify_expr(*e.operand, window);
  for (auto& a : e.args) qualify_expr(*a, window);
}

void qualify_stmt(PlSqlStatement& s, const std::string& window) {
  if (s.target) qualify_expr(*s.target, window);
  if (s.value) qualify_expr(*s.value, window);
  for (auto& br : s.branches) {
    if (br.condition) qualify_expr(*br.condition, window);
    for (auto& st : br.statements) qualify_stmt(*st, window);
  }
  for (auto& st : s.else_statements) qualify_stmt(*st, window);
  if (s.case_subject) qualify_expr(*s.case_subject, window);
  for (auto& w : s.whens) {
    if (w.match) qualify_expr(*w.match, window);
    for (auto& st : w.statements) qualify_stmt(*st, window);
  }
  if (s.condition) qualify_expr(*s.condition, window);
  if (s.loop_from) qualify_expr(*s.loop_from, window);
  if (s.loop_to) qualify_expr(*s.loop_to, window);
  for (auto& st : s.body) qualify_stmt(*st, window);
  if (s.return_value) qualify_expr(*s.return_value, window);
  for (auto& a : s.args) qualify_expr(*a, window);
  for (auto& t : s.into_targets) qualify_expr(*t, window);
  for (auto& b : s.binds) qualify_expr(*b, window);
  if (s.inner) qualify_block(*s.inner, window);
}

// ---------------------------------------------------------------------------
// Descriptor (line-oriented) parsing
// ---------------------------------------------------------------------------

struct Line {
  std::uint32_t offset = 0;
  std::uint32_t number = 1;
  std::string text;  // without trailing newline
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::uint32_t offset = 0, number = 1;
  std::string cur;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back({offset, number, cur});
      cur.clear();
      offset = static_cast<std::uint32_t>(i + 1);
      ++number;
    } else {
      cur.push_back(text[i]);
    }
  }
  return lines;
}

std::string trim(const std::string& s) {
  std::size_t lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return "";
  std::size_t hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

bool is_comment_or_blank(const std::string& s) {
  std::string t = trim(s);
  return t.empty() || t[0] == '#';
}

// First word (upper) and the remainder of a directive line.
std::pair<std::string, std::string> directive(const std::string& s) {
  std::string t = trim(s);
  std::size_t sp = t.find_first_of(" \t");
  if (sp == std::string::npos) return {to_upper(t), ""};
  return {to_upper(t.substr(0, sp)), trim(t.substr(sp + 1))};
}

// Upper-cased line with internal whitespace runs collapsed, for sentinel checks.
std::string collapse_ws(const std::string& s) {
  std::string out;
  bool in_ws = false;
  for (char c : trim(s)) {
    if (c == ' ' || c == '\t') {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out.push_back(' ');
    in_ws = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

SourceSpan line_span(const Line& l) {
  SourceSpan s;
  s.begin = l.offset;
  s.end = l.offset + static_cast<std::uint32_t>(l.text.size());
  s.line = l.number;
  s.col = 1;
  s.end_line = l.number;
  s.end_col = static_cast<std::uint32_t>(l.text.size()) + 1;
  return s;
}

}  // namespace

BlockParseResult parse_plsql(const std::string& text, const std::string& file_name) {
  BlockParseResult result;
  SourceSpan base;
  base.begin = 0;
  base.line = 1;
  base.col = 1;
  auto tokens = lex_plsql(text, base, result.diags, file_name);
  PlSqlParser parser(text, std::move(tokens), result.diags, file_name);
  result.block = parser.parse_entry();
  return result;
}

FormParseResult parse_form(const std::string& text, const std::string& file_name) {
  FormParseResult result;
  DiagnosticList& diags = result.diags;
  auto lines = split_lines(text);

  FormBundle bundle;
  bundle.file = file_name;
  bundle.text = text;

  std::size_t i = 0;
  auto skip_noise = [&]() {
    while (i < lines.size() && is_comment_or_blank(lines[i].text)) ++i;
  };

  skip_noise();
  if (i >= lines.size()) {
    diags.error("F001", "empty descriptor", file_name, 1, 1);
    return result;
  }
  {
    auto [word, rest] = directive(lines[i].text);
    if (word != "FORM" || !valid_name(rest)) {
      diags.error("F001", "expected 'FORM <name>'", file_name, lines[i].number, 1);
      return result;
    }
    bundle.original = rest;
    bundle.name = to_upper(rest);
    bundle.span.begin = lines[i].offset;
    bundle.span.line = lines[i].number;
    ++i;
  }

  Window* window = nullptr;
  bool closed = false;

  // Collects raw body lines until the sentinel; returns the enclosed fragment.
  auto collect_until = [&](const std::string& sentinel, std::uint32_t& frag_begin,
                           std::uint32_t& frag_end, std::uint32_t& first_line,
                           bool& found) {
    frag_begin = i < lines.size() ? lines[i].offset : static_cast<std::uint32_t>(text.size());
    first_line = i < lines.size() ? lines[i].number : 1;
    frag_end = frag_begin;
    found = false;
    while (i < lines.size()) {
      if (collapse_ws(lines[i].text) == sentinel) {
        found = true;
        return;
      }
      frag_end = lines[i].offset + static_cast<std::uint32_t>(lines[i].text.size());
      ++i;
    }
  };

  while (i < lines.size()) {
    if (is_comment_or_blank(lines[i].text)) {
      ++i;
      continue;
    }
    const Line& line = lines[i];
    auto [word, rest] = directive(line.text);
    std::string upper_full = collapse_ws(line.text);

    if (upper_full == "END FORM") {
      bundle.span.end = line.offset + static_cast<std::uint32_t>(line.text.size());
      bundle.span.end_line = line.number;
      bundle.span.end_col = static_cast<std::uint32_t>(line.text.size()) + 1;
      closed = true;
      ++i;
      continue;
    }
    if (closed) {
      diags.error("F002", "content after END FORM", file_name, line.number, 1);
      break;
    }

    if (word == "WINDOW") {
      if (!valid_name(rest)) {
        diags.error("F003", "expected 'WINDOW <name>'", file_name, line.number, 1);
        ++i;
        continue;
      }
      std::string upper = to_upper(rest);
      for (const auto& w : bundle.windows)
        if (w.name == upper)
          diags.error("F004", "duplicate window name " + rest, file_name, line.number, 1);
      Window w;
      w.name = upper;
      w.original = rest;
      w.span = line_span(line);
      bundle.windows.push_back(std::move(w));
      window = &bundle.windows.back();
      ++i;
      continue;
    }

    if (word == "ITEM") {
      if (!window) {
        diags.error("F005", "ITEM outside WINDOW", file_name, line.number, 1);
        ++i;
        continue;
      }
      auto colon = rest.find(':');
      std::string name = trim(colon == std::string::npos ? rest : rest.substr(0, colon));
      std::string kind = colon == std::string::npos ? "" : to_upper(trim(rest.substr(colon + 1)));
      if (!valid_name(name) || kind.empty()) {
        diags.error("F006", "expected 'ITEM <name> : <TEXT|BUTTON|CHECKBOX|DISPLAY>'", file_name,
                    line.number, 1);
        ++i;
        continue;
      }
      Item item;
      item.original = name;
      item.name = to_upper(name);
      item.span = line_span(line);
      if (kind == "TEXT") item.widget = WidgetKind::Text;
      else if (kind == "BUTTON") item.widget = WidgetKind::Button;
      else if (kind == "CHECKBOX") item.widget = WidgetKind::Checkbox;
      else if (kind == "DISPLAY") item.widget = WidgetKind::Display;
      else {
        diags.error("F006", "unknown widget kind '" + kind + "'", file_name, line.number, 1);
        ++i;
        continue;
      }
      for (const auto& it : window->items)
        if (it.name == item.name)
          diags.error("F007", "duplicate item " + name + " in window " + window->original,
                      file_name, line.number, 1);
      window->items.push_back(std::move(item));
      ++i;
      continue;
    }

    if (word == "TRIGGER") {
      if (!window) {
        diags.error("F008", "TRIGGER outside WINDOW", file_name, line.number, 1);
        ++i;
        continue;
      }
      auto dot = rest.find('.');
      std::string item = dot == std::string::npos ? "" : trim(rest.substr(0, dot));
      std::string event = dot == std::string::npos ? "" : trim(rest.substr(dot + 1));
      if (!valid_name(item) || event.empty()) {
        diags.error("F009", "expected 'TRIGGER <item>.<EVENT-NAME>'", file_name, line.number, 1);
        ++i;
        continue;
      }
      std::string item_upper = to_upper(item);
      bool known = false;
      for (const auto& it : window->items) known = known || it.name == item_upper;
      if (!known)
        diags.error("F010", "trigger references unknown item " + item + " in window " +
                                window->original,
                    file_name, line.number, 1);
      std::uint32_t trig_begin = line.offset;
      std::uint32_t trig_line = line.number;
      ++i;
      std::uint32_t frag_begin, frag_end, first_line;
      bool found;
      collect_until("END TRIGGER", frag_begin, frag_end, first_line, found);
      if (!found) {
        diags.error("F011", "unterminated TRIGGER (missing END TRIGGER)", file_name, trig_line, 1);
        break;
      }
      Trigger trig;
      trig.owner_item = item_upper;
      trig.event = to_upper(event);
      trig.span.begin = trig_begin;
      trig.span.line = trig_line;
      trig.span.col = 1;
      trig.span.end = lines[i].offset + static_cast<std::uint32_t>(lines[i].text.size());
      trig.span.end_line = lines[i].number;
      trig.span.end_col = static_cast<std::uint32_t>(lines[i].text.size()) + 1;
      ++i;  // consume END TRIGGER

      std::string fragment = text.substr(frag_begin, frag_end - frag_begin);
      SourceSpan base;
      base.begin = frag_begin;
      base.line = first_line;
      base.col = 1;
      auto tokens = lex_plsql(fragment, base, diags, file_name);
      PlSqlParser parser(text, std::move(tokens), diags, file_name);
      auto block = parser.parse_entry();
      if (block) {
        trig.body = std::move(*block);
        if (block_is_empty(trig.body)) trig.body.span = trig.span;
        qualify_block(trig.body, window->name);
      }
      window->triggers.push_back(std::move(trig));
      continue;
    }

    if (upper_full == "PROGRAM UNIT") {
      std::uint32_t unit_line = line.number;
      ++i;
      std::uint32_t frag_begin, frag_end, first_line;
      bool found;
      collect_until("END UNIT", frag_begin, frag_end, first_line, found);
      if (!found) {
        diags.error("F012", "unterminated PROGRAM UNIT (missing END UNIT)", file_name, unit_line,
                    1);
        break;
      }
      std::uint32_t end_line_no = lines[i].number;
      ++i;  // consume END UNIT

      std::string fragment = text.substr(frag_begin, frag_end - frag_begin);
      SourceSpan base;
      base.begin = frag_begin;
      base.line = first_line;
      base.col = 1;
      DiagnosticList unit_diags;
      auto tokens = lex_plsql(fragment, base, unit_diags, file_name);
      diags.append(unit_diags);

      // FUNCTION|PROCEDURE name [(params)] [RETURN type] IS decls BEGIN ... END;
      std::size_t p = 0;
      auto tok = [&](std::size_t k) -> const Token& {
        return tokens[std::min(k, tokens.size() - 1)];
      };
      ProgramUnit unit;
      unit.span.begin = frag_begin;
      unit.span.line = first_line;
      unit.span.col = 1;
      unit.span.end = frag_end;
      unit.span.end_line = end_line_no > first_line ? end_line_no - 1 : first_line;
      bool unit_ok = true;
      if (tok(p).kind == TokKind::Keyword &&
          (tok(p).value == "FUNCTION" || tok(p).value == "PROCEDURE")) {
        unit.kind = tok(p).value == "FUNCTION" ? UnitKind::Function : UnitKind::Procedure;
        ++p;
      } else {
        diags.error("F013", "program unit must start with FUNCTION or PROCEDURE", file_name,
                    first_line, 1);
        unit_ok = false;
      }
      if (unit_ok && tok(p).kind == TokKind::Ident) {
        unit.original = tok(p).original;
        unit.name = tok(p).value;
        ++p;
      } else if (unit_ok) {
        diags.error("F013", "expected program unit name", file_name, first_line, 1);
        unit_ok = false;
      }
      if (unit_ok && tok(p).kind == TokKind::LParen) {
        ++p;
        while (unit_ok && tok(p).kind != TokKind::RParen && tok(p).kind != TokKind::End) {
          Param param;
          if (tok(p).kind != TokKind::Ident) {
            diags.error("F014", "expected parameter name", file_name, tok(p).span.line,
                        tok(p).span.col);
            unit_ok = false;
            break;
          }
          param.original = tok(p).original;
          param.name = tok(p).value;
          param.span = tok(p).span;
          ++p;
          if (tok(p).kind == TokKind::Keyword && tok(p).value == "IN") ++p;
          if (tok(p).kind != TokKind::Ident) {
            diags.error("F014", "expected parameter type", file_name, tok(p).span.line,
                        tok(p).span.col);
            unit_ok = false;
            break;
          }
          param.plsql_type = tok(p).value;
          ++p;
          unit.params.push_back(std::move(param));
          if (tok(p).kind == TokKind::Comma) ++p;
        }
        if (unit_ok && tok(p).kind == TokKind::RParen) ++p;
      }
      if (unit_ok && tok(p).kind == TokKind::Keyword && tok(p).value == "RETURN") {
        ++p;
        if (tok(p).kind == TokKind::Ident) {
          unit.return_type = tok(p).value;
          ++p;
        } else {
          diags.error("F014", "expected return type", file_name, tok(p).span.line,
                      tok(p).span.col);
          unit_ok = false;
        }
      }
      if (unit_ok && unit.kind == UnitKind::Function && unit.return_type.empty()) {
        diags.error("F015", "FUNCTION requires a RETURN type", file_name, first_line, 1);
        unit_ok = false;
      }
      if (unit_ok) {
        if (tok(p).kind == TokKind::Keyword && tok(p).value == "IS") {
          ++p;
        } else {
          diags.error("F013", "expected IS before program unit body", file_name,
                      tok(p).span.line, tok(p).span.col);
          unit_ok = false;
        }
      }
      if (unit_ok) {
        std::vector<Token> body_toks(tokens.begin() + static_cast<long>(p), tokens.end());
        PlSqlParser parser(text, std::move(body_toks), diags, file_name);
        auto block = parser.parse_unit_body();
        if (block) {
          unit.body = std::move(*block);
          for (const auto& other : bundle.program_units)
            if (other.name == unit.name)
              diags.error("F016", "duplicate program unit " + unit.original, file_name, first_line,
                          1);
          bundle.program_units.push_back(std::move(unit));
        }
      }
      continue;
    }

    diags.error("F017", "unrecognized directive '" + trim(line.text) + "'", file_name, line.number,
                1);
    ++i;
  }

  if (!closed) diags.error("F018", "missing END FORM", file_name,
                           lines.empty() ? 1 : lines.back().number, 1);
  result.bundle = std::move(bundle);
  return result;
}

// ---------------------------------------------------------------------------
// Structural equality (span- and casing-insensitive)
// ---------------------------------------------------------------------------

bool expr_structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Literal:
      return a.literal_kind == b.literal_kind && a.literal_text == b.literal_text;
    case ExprKind::VarRef:
      return a.name == b.name;
    case ExprKind::BindRef:
      return a.name == b.name && a.block == b.block;
    case ExprKind::Binary:
      return a.bin_op == b.bin_op && expr_structurally_equal(*a.lhs, *b.lhs) &&
             expr_structurally_equal(*a.rhs, *b.rhs);
    case ExprKind::Unary:
      return a.un_op == b.un_op && expr_structurally_equal(*a.operand, *b.operand);
    case ExprKind::Call: {
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_structurally_equal(*a.args[i], *b.args[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

bool opt_expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a != !b) return false;
  return !a || expr_structurally_equal(*a, *b);
}

bool stmts_equal(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!stmt_structurally_equal(*a[i], *b[i])) return false;
  return true;
}

bool blocks_equal(const PlSqlBlock& a, const PlSqlBlock& b) {
  if (a.declarations.size() != b.declarations.size()) return false;
  for (std::size_t i = 0; i < a.declarations.size(); ++i) {
    if (a.declarations[i].name != b.declarations[i].name ||
        a.declarations[i].plsql_type != b.declarations[i].plsql_type ||
        !opt_expr_equal(a.declarations[i].init, b.declarations[i].init))
      return false;
  }
  if (!stmts_equal(a.statements, b.statements)) return false;
  if (a.exception_handlers.size() != b.exception_handlers.size()) return false;
  for (std::size_t i = 0; i < a.exception_handlers.size(); ++i) {
    if (a.exception_handlers[i].exception_name != b.exception_handlers[i].exception_name ||
        !stmts_equal(a.exception_handlers[i].statements, b.exception_handlers[i].statements))
      return false;
  }
  return true;
}

}  // namespace

bool stmt_structurally_equal(const PlSqlStatement& a, const PlSqlStatement& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case StmtKind::Assign:
      return opt_expr_equal(a.target, b.target) && opt_expr_equal(a.value, b.value);
    case StmtKind::If: {
      if (a.branches.size() != b.branches.size()) return false;
      for (std::size_t i = 0; i < a.branches.size(); ++i) {
        if (!opt_expr_equal(a.branches[i].condition, b.branches[i].condition) ||
            !stmts_equal(a.branches[i].statements, b.branches[i].statements))
          return false;
      }
      return stmts_equal(a.else_statements, b.else_statements);
    }
    case StmtKind::Case: {
      if (!opt_expr_equal(a.case_subject, b.case_subject)) return false;
      if (a.whens.size() != b.whens.size()) return false;
      for (std::size_t i = 0; i < a.whens.size(); ++i) {
        if (!opt_expr_equal(a.whens[i].match, b.whens[i].match) ||
            !stmts_equal(a.whens[i].statements, b.whens[i].statements))
          return false;
      }
      return stmts_equal(a.else_statements, b.else_statements);
    }
    case StmtKind::While:
      return opt_expr_equal(a.condition, b.condition) && stmts_equal(a.body, b.body);
    case StmtKind::For:
      return a.loop_var == b.loop_var && opt_expr_equal(a.loop_from, b.loop_from) &&
             opt_expr_equal(a.loop_to, b.loop_to) && stmts_equal(a.body, b.body);
    case StmtKind::BasicLoop:
      return stmts_equal(a.body, b.body);
    case StmtKind::Exit:
      return true;
    case StmtKind::Return:
      return opt_expr_equal(a.return_value, b.return_value);
    case StmtKind::Raise:
      return a.exception_name == b.exception_name;
    case StmtKind::Call: {
      if (a.callee != b.callee || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_structurally_equal(*a.args[i], *b.args[i])) return false;
      return true;
    }
    case StmtKind::SelectInto: {
      if (a.projected_columns != b.projected_columns) return false;
      if (a.into_targets.size() != b.into_targets.size()) return false;
      for (std::size_t i = 0; i < a.into_targets.size(); ++i)
        if (!expr_structurally_equal(*a.into_targets[i], *b.into_targets[i])) return false;
      if (a.binds.size() != b.binds.size()) return false;
      for (std::size_t i = 0; i < a.binds.size(); ++i)
        if (!expr_structurally_equal(*a.binds[i], *b.binds[i])) return false;
      return a.sql_tail == b.sql_tail;
    }
    case StmtKind::Dml: {
      if (a.dml_kind != b.dml_kind || a.sql_tail != b.sql_tail) return false;
      if (a.binds.size() != b.binds.size()) return false;
      for (std::size_t i = 0; i < a.binds.size(); ++i)
        if (!expr_structurally_equal(*a.binds[i], *b.binds[i])) return false;
      return true;
    }
    case StmtKind::InnerBlock:
      return blocks_equal(*a.inner, *b.inner);
  }
  return false;
}

}  // namespace f2j
