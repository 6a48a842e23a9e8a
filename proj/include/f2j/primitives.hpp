#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "f2j/code_model.hpp"
#include "f2j/diagnostics.hpp"

namespace f2j {

// Technology-neutral behavior primitives. Every primitive keeps kdm_ref
// back-references into the CodeModel it was derived from.

enum class PrimKind {
  ReadFrom,       // never produced: local reads stay VariableRef readables
  WriteTo,
  ReadFromUI,
  WriteToUI,
  ReadFromDB,
  WriteToDB,
  ManipulateData,
  ModifyUI,
  SelectionFlow,
  Loop,
  Break,
  CallProcedure,
  Return,
  Try,
  Throw,
  ShowMessage,
  OpenView,
};

const char* prim_kind_name(PrimKind k);
std::optional<PrimKind> prim_kind_from_name(const std::string& name);

enum class MOp { Add, Sub, Mul, Div, Concat, Neg };

struct Primitive;
using PrimPtr = std::unique_ptr<Primitive>;

struct UIRef {
  std::string screen;  // upper-normalized window/block name (may be unresolved for ModifyUI paths)
  std::string item;
  std::string widget;  // TEXT | BUTTON | CHECKBOX | DISPLAY, empty when unresolved
};

enum class ReadableKind { Constant, VariableRef, ReturnValue, Nested };

struct Readable {
  ReadableKind kind = ReadableKind::Constant;
  // Constant
  LiteralKind literal_kind = LiteralKind::Null;
  std::string literal_text;
  // VariableRef (local/global)
  std::string var;
  // ReturnValue: function call in expression position
  std::string callee;          // upper-normalized
  std::string callee_original;
  std::string callee_ref;      // CallableUnit id when the call targets a program unit
  std::vector<Readable> args;
  // Nested primitive (ReadFromUI, ManipulateData, ...)
  PrimPtr prim;

  Readable() = default;
  Readable(Readable&&) = default;
  Readable& operator=(Readable&&) = default;
  Readable clone() const;
};

// Condition operator tree; leaves are Readables. Arithmetic in value position
// is expressed as nested ManipulateData primitives instead.
enum class PExprOp {
  And, Or, Not,
  Less, LessEq, Greater, GreaterEq, Eq, NotEq,
  Add, Sub, Mul, Div,
  Leaf,
};

struct PExpr {
  PExprOp op = PExprOp::Leaf;
  std::vector<PExpr> operands;
  std::optional<Readable> leaf;

  PExpr() = default;
  PExpr(PExpr&&) = default;
  PExpr& operator=(PExpr&&) = default;
  PExpr clone() const;
};

struct Case {
  std::optional<PExpr> condition;   // searched SelectionFlow arms
  std::optional<Readable> match;    // switch-style arms
  std::vector<PrimPtr> body;
};

struct CatchClause {
  std::string exception;  // OTHERS or a named exception
  std::vector<PrimPtr> body;
  std::vector<std::string> kdm_ref;
};

struct Primitive {
  PrimKind kind = PrimKind::WriteTo;
  std::vector<std::string> kdm_ref;  // never empty
  std::string label;                 // condensed source snippet for flow graphs

  // WriteTo
  std::string var;
  std::vector<Readable> inputs;

  // ReadFromUI / WriteToUI / ModifyUI
  UIRef ui;

  // ReadFromDB / WriteToDB
  std::string sql_kind;                     // SELECT | INSERT | UPDATE | DELETE
  std::vector<std::string> columns;         // ReadFromDB projected columns
  std::vector<Primitive> into_targets;      // WriteTo/WriteToUI shells naming each target
  std::string sql_tail;
  std::vector<Readable> binds;

  // ManipulateData
  MOp m_op = MOp::Add;
  std::string output_var;  // kept for schema parity; unproduced

  // ModifyUI / CallProcedure / ShowMessage / OpenView
  std::string callee;
  std::string callee_original;
  std::string callee_ref;
  std::string property;  // ModifyUI property name (upper)
  std::vector<Readable> args;

  // SelectionFlow
  std::optional<Readable> subject;  // present -> switch semantics
  std::vector<Case> cases;

  // Loop
  std::string loop_kind;  // WHILE | FOR | BASIC
  std::optional<PExpr> condition;
  std::string loop_var;
  std::optional<Readable> loop_from, loop_to;
  std::vector<PrimPtr> body;

  // Try
  std::vector<CatchClause> catches;

  // Return
  std::optional<Readable> value;

  // Throw
  std::string exception;
};

// Deep copy; PrimPtr members make Primitive itself move-only.
Primitive clone_primitive(const Primitive& p);

enum class PVarKind { Local, Global, UI };

struct PVar {
  PVarKind kind = PVarKind::Local;
  std::string name;
  std::string original;
  std::string plsql_type;
  UIRef ui;  // UI variables only
};

struct Code {
  std::string id;        // CallableUnit id
  CallableOrigin origin = CallableOrigin::Trigger;
  std::string name;      // callable name (trigger: WINDOW.ITEM.EVENT)
  std::string event;     // triggers
  UIRef ui;              // triggers: owning component
  std::string unit_kind;    // FUNCTION | PROCEDURE
  std::string return_type;  // functions
  std::vector<TypedName> params;
  std::vector<PVar> local_variables;
  std::vector<PrimPtr> primitives;
};

struct PrimitivesRoot {
  std::string form_name;
  std::string form_original;
  std::string file;
  std::vector<PVar> variables;  // global scope; unpopulated by this frontend
  std::vector<Code> codes;
};

struct PrimitivesResult {
  PrimitivesRoot root;
  DiagnosticList diags;
};

PrimitivesResult kdm_to_primitives(const CodeModel& model);

// Deep count over all nesting levels (bodies, cases, catches, readables).
// Throws std::invalid_argument for an unknown variant name.
std::size_t count_primitives(const PrimitivesRoot& root, const std::string& variant);
std::size_t count_primitives(const Code& code, const std::string& variant);

// Depth-first visit of every primitive, including readable-nested ones.
void for_each_primitive(const Code& code, const std::function<void(const Primitive&)>& fn);
void for_each_primitive(const Primitive& p, const std::function<void(const Primitive&)>& fn);

}  // namespace f2j
