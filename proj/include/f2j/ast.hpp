#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "f2j/source.hpp"

namespace f2j {

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class BinOp {
  Add, Sub, Mul, Div, Concat,
  Eq, NotEq, Less, LessEq, Greater, GreaterEq,
  And, Or,
};

enum class UnOp { Not, Neg };

// Opaque marks an identifier kept verbatim (builtin-call arguments such as
// property names that resolve to nothing in the form).
enum class LiteralKind { Number, String, Bool, Null, Opaque };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class ExprKind { Literal, VarRef, BindRef, Binary, Unary, Call };

struct Expr {
  ExprKind kind;
  SourceSpan span;

  // Literal
  LiteralKind literal_kind = LiteralKind::Null;
  std::string literal_text;  // verbatim for numbers, unescaped for strings

  // VarRef: identifier normalized to upper case; `original` keeps source casing.
  // BindRef: block may be empty until form-level qualification.
  std::string name;
  std::string original;
  std::string block;  // BindRef only

  // Binary / Unary
  BinOp bin_op = BinOp::Add;
  UnOp un_op = UnOp::Not;
  ExprPtr lhs, rhs, operand;

  // Call: callee normalized upper; args in order.
  std::vector<ExprPtr> args;

  ExprPtr clone() const;
};

ExprPtr make_literal(LiteralKind k, std::string text, SourceSpan span);
ExprPtr make_var_ref(std::string name, std::string original, SourceSpan span);
ExprPtr make_bind_ref(std::string block, std::string item, SourceSpan span);
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourceSpan span);
ExprPtr make_unary(UnOp op, ExprPtr operand, SourceSpan span);
ExprPtr make_call(std::string callee, std::vector<ExprPtr> args, SourceSpan span);

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

enum class StmtKind {
  Assign,      // target := expr;   target is VarRef or BindRef
  If,          // IF/ELSIF/ELSE
  Case,        // CASE [subject] WHEN ... END CASE
  While,
  For,
  BasicLoop,
  Exit,
  Return,
  Raise,
  Call,        // procedure call statement
  SelectInto,
  Dml,         // INSERT / UPDATE / DELETE, opaque tail
  InnerBlock,  // nested [DECLARE] BEGIN ... [EXCEPTION ...] END
};

enum class DmlKind { Insert, Update, Delete };

struct PlSqlStatement;
using StmtPtr = std::unique_ptr<PlSqlStatement>;

struct Declaration {
  std::string name;       // upper-normalized
  std::string original;
  std::string plsql_type; // VARCHAR2 | NUMBER | INTEGER | BOOLEAN | DATE
  ExprPtr init;           // optional
  SourceSpan span;
};

struct ExceptionHandler {
  std::string exception_name;  // upper-normalized; OTHERS for the catch-all
  std::vector<StmtPtr> statements;
  SourceSpan span;
};

struct PlSqlBlock {
  std::vector<Declaration> declarations;
  std::vector<StmtPtr> statements;
  std::vector<ExceptionHandler> exception_handlers;
  SourceSpan span;
};

struct IfBranch {
  ExprPtr condition;
  std::vector<StmtPtr> statements;
  SourceSpan span;  // covers keyword through branch body
};

struct CaseWhen {
  ExprPtr match;  // condition (searched case) or comparand (simple case)
  std::vector<StmtPtr> statements;
  SourceSpan span;
};

struct PlSqlStatement {
  StmtKind kind;
  SourceSpan span;

  // Assign
  ExprPtr target;
  ExprPtr value;

  // If: branches[0] is the IF arm, the rest are ELSIF arms.
  std::vector<IfBranch> branches;
  std::vector<StmtPtr> else_statements;
  SourceSpan else_span;

  // Case
  ExprPtr case_subject;  // null for searched CASE
  std::vector<CaseWhen> whens;

  // While / For / BasicLoop
  ExprPtr condition;
  std::string loop_var, loop_var_original;
  ExprPtr loop_from, loop_to;
  std::vector<StmtPtr> body;

  // Return
  ExprPtr return_value;  // optional

  // Raise
  std::string exception_name;

  // Call
  std::string callee;          // upper-normalized
  std::string callee_original;
  std::vector<ExprPtr> args;

  // SelectInto
  std::vector<std::string> projected_columns;  // verbatim column expressions
  std::vector<ExprPtr> into_targets;           // VarRef or BindRef
  // SelectInto: raw text from FROM onward. Dml: full raw statement text.
  std::string sql_tail;
  std::vector<ExprPtr> binds;  // textual occurrence order within sql_tail

  // Dml
  DmlKind dml_kind = DmlKind::Insert;

  // InnerBlock
  std::unique_ptr<PlSqlBlock> inner;
};

// ---------------------------------------------------------------------------
// Form descriptor model
// ---------------------------------------------------------------------------

enum class WidgetKind { Text, Button, Checkbox, Display };

struct Item {
  std::string name;  // upper-normalized
  std::string original;
  WidgetKind widget = WidgetKind::Text;
  SourceSpan span;
};

struct Trigger {
  std::string owner_item;  // upper-normalized item name within the window
  std::string event;       // e.g. WHEN-BUTTON-PRESSED, kept verbatim upper
  PlSqlBlock body;
  SourceSpan span;  // TRIGGER line through END TRIGGER
};

struct Window {
  std::string name;
  std::string original;
  std::vector<Item> items;
  std::vector<Trigger> triggers;
  SourceSpan span;
};

struct Param {
  std::string name;
  std::string original;
  std::string plsql_type;
  SourceSpan span;
};

enum class UnitKind { Function, Procedure };

struct ProgramUnit {
  UnitKind kind = UnitKind::Procedure;
  std::string name;
  std::string original;
  std::vector<Param> params;
  std::string return_type;  // functions only
  PlSqlBlock body;
  SourceSpan span;
};

struct FormBundle {
  std::string name;
  std::string original;
  std::string file;  // input file name
  std::string text;  // full descriptor text (spans index into it)
  std::vector<Window> windows;
  std::vector<ProgramUnit> program_units;
  SourceSpan span;
};

bool block_is_empty(const PlSqlBlock& b);

}  // namespace f2j
