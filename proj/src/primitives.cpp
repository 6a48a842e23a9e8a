#include "f2j/primitives.hpp"

#include <set>
#include <stdexcept>

#include "f2j/names.hpp"

namespace f2j {

const char* prim_kind_name(PrimKind k) {
  switch (k) {
    case PrimKind::ReadFrom: return "ReadFrom";
    case PrimKind::WriteTo: return "WriteTo";
    case PrimKind::ReadFromUI: return "ReadFromUI";
    case PrimKind::WriteToUI: return "WriteToUI";
    case PrimKind::ReadFromDB: return "ReadFromDB";
    case PrimKind::WriteToDB: return "WriteToDB";
    case PrimKind::ManipulateData: return "ManipulateData";
    case PrimKind::ModifyUI: return "ModifyUI";
    case PrimKind::SelectionFlow: return "SelectionFlow";
    case PrimKind::Loop: return "Loop";
    case PrimKind::Break: return "Break";
    case PrimKind::CallProcedure: return "CallProcedure";
    case PrimKind::Return: return "Return";
    case PrimKind::Try: return "Try";
    case PrimKind::Throw: return "Throw";
    case PrimKind::ShowMessage: return "ShowMessage";
    case PrimKind::OpenView: return "OpenView";
  }
  return "WriteTo";
}

std::optional<PrimKind> prim_kind_from_name(const std::string& name) {
  static const std::vector<PrimKind> all = {
      PrimKind::ReadFrom,      PrimKind::WriteTo,       PrimKind::ReadFromUI,
      PrimKind::WriteToUI,     PrimKind::ReadFromDB,    PrimKind::WriteToDB,
      PrimKind::ManipulateData, PrimKind::ModifyUI,     PrimKind::SelectionFlow,
      PrimKind::Loop,          PrimKind::Break,         PrimKind::CallProcedure,
      PrimKind::Return,        PrimKind::Try,           PrimKind::Throw,
      PrimKind::ShowMessage,   PrimKind::OpenView};
  for (PrimKind k : all)
    if (name == prim_kind_name(k)) return k;
  return std::nullopt;
}

Readable Readable::clone() const {
  Readable r;
  r.kind = kind;
  r.literal_kind = literal_kind;
  r.literal_text = literal_text;
  r.var = var;
  r.callee = callee;
  r.callee_original = callee_original;
  r.callee_ref = callee_ref;
  for (const auto& a : args) r.args.push_back(a.clone());
  if (prim) r.prim = std::make_unique<Primitive>(clone_primitive(*prim));
  return r;
}

PExpr PExpr::clone() const {
  PExpr e;
  e.op = op;
  for (const auto& o : operands) e.operands.push_back(o.clone());
  if (leaf) e.leaf = leaf->clone();
  return e;
}

Primitive clone_primitive(const Primitive& p) {
  Primitive out;
  out.kind = p.kind;
  out.kdm_ref = p.kdm_ref;
  out.label = p.label;
  out.var = p.var;
  for (const auto& i : p.inputs) out.inputs.push_back(i.clone());
  out.ui = p.ui;
  out.sql_kind = p.sql_kind;
  out.columns = p.columns;
  for (const auto& t : p.into_targets) out.into_targets.push_back(clone_primitive(t));
  out.sql_tail = p.sql_tail;
  for (const auto& b : p.binds) out.binds.push_back(b.clone());
  out.m_op = p.m_op;
  out.output_var = p.output_var;
  out.callee = p.callee;
  out.callee_original = p.callee_original;
  out.callee_ref = p.callee_ref;
  out.property = p.property;
  for (const auto& a : p.args) out.args.push_back(a.clone());
  if (p.subject) out.subject = p.subject->clone();
  for (const auto& c : p.cases) {
    Case cc;
    if (c.condition) cc.condition = c.condition->clone();
    if (c.match) cc.match = c.match->clone();
    for (const auto& b : c.body) cc.body.push_back(std::make_unique<Primitive>(clone_primitive(*b)));
    out.cases.push_back(std::move(cc));
  }
  out.loop_kind = p.loop_kind;
  if (p.condition) out.condition = p.condition->clone();
  out.loop_var = p.loop_var;
  if (p.loop_from) out.loop_from = p.loop_from->clone();
  if (p.loop_to) out.loop_to = p.loop_to->clone();
  for (const auto& b : p.body) out.body.push_back(std::make_unique<Primitive>(clone_primitive(*b)));
  for (const auto& c : p.catches) {
    CatchClause cc;
    cc.exception = c.exception;
    cc.kdm_ref = c.kdm_ref;
    for (const auto& b : c.body) cc.body.push_back(std::make_unique<Primitive>(clone_primitive(*b)));
    out.catches.push_back(std::move(cc));
  }
  if (p.value) out.value = p.value->clone();
  out.exception = p.exception;
  return out;
}

namespace {

std::string condense(const std::string& snippet, bool first_line_only) {
  std::string s = snippet;
  if (first_line_only) {
    auto nl = s.find('\n');
    if (nl != std::string::npos) s = s.substr(0, nl);
  }
  std::string out;
  bool ws = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ws = true;
      continue;
    }
    if (ws && !out.empty()) out.push_back(' ');
    ws = false;
    out.push_back(c);
  }
  if (out.size() > 60) out = out.substr(0, 57) + "...";
  return out;
}

class Lowerer {
 public:
  Lowerer(const CodeModel& model, DiagnosticList& diags) : model_(model), diags_(diags) {}

  Code lower(const CodeElement& callable) {
    Code code;
    code.id = callable.id;
    code.origin = callable.origin;
    code.event = callable.event;
    code.unit_kind = callable.unit_kind;
    code.return_type = callable.return_type;
    code.params = callable.params;
    if (callable.origin == CallableOrigin::Trigger) {
      code.ui = ui_ref_from_resource(callable.ui_resource);
      code.name = code.ui.screen + "." + callable.name;
    } else {
      code.name = callable.name;
    }

    env_.clear();
    for (const auto& p : callable.params) env_.insert(p.name);

    const CodeElement* body = model_.find(callable.body);
    if (!body) return code;
    hoist_locals(*body, code);
    for (const auto& v : code.local_variables) env_.insert(v.name);
    code.primitives = lower_children(body->children);
    return code;
  }

 private:
  const CodeModel& model_;
  DiagnosticList& diags_;
  std::set<std::string> env_;

  void err(const std::string& code, const std::string& msg, const CodeElement& at) {
    diags_.error(code, msg, at.source.file, at.source.span.line, at.source.span.col);
  }
  void warn(const std::string& code, const std::string& msg, const CodeElement& at) {
    diags_.warning(code, msg, at.source.file, at.source.span.line, at.source.span.col);
  }

  UIRef ui_ref_from_resource(const std::string& id) const {
    UIRef ref;
    const CodeElement* res = model_.find(id);
    if (!res) return ref;
    ref.item = res->name;
    ref.widget = res->widget;
    if (const CodeElement* screen = model_.find(res->owner)) ref.screen = screen->name;
    return ref;
  }

  UIRef ui_ref_for(const std::string& block, const std::string& item) const {
    UIRef ref;
    ref.screen = to_upper(block);
    ref.item = to_upper(item);
    if (const CodeElement* res = model_.find("ui:" + ref.screen + "." + ref.item))
      ref.widget = res->widget;
    return ref;
  }

  // Inner-block locals become method-level variables; duplicates merge.
  void hoist_locals(const CodeElement& el, Code& code) {
    for (const auto& vid : el.storable_units) {
      const CodeElement* var = model_.find(vid);
      if (!var) continue;
      bool merged = false;
      for (const auto& existing : code.local_variables) {
        if (existing.name != var->name) continue;
        merged = true;
        if (existing.plsql_type != var->plsql_type)
          warn("P101",
               "conflicting redeclaration of " + var->original + " (" + var->plsql_type +
                   " vs " + existing.plsql_type + "); keeping the first type",
               *var);
        break;
      }
      if (!merged) {
        PVar v;
        v.kind = PVarKind::Local;
        v.name = var->name;
        v.original = var->original;
        v.plsql_type = var->plsql_type;
        code.local_variables.push_back(std::move(v));
      }
    }
    for (const auto& cid : el.children)
      if (const CodeElement* child = model_.find(cid)) hoist_locals(*child, code);
  }

  // ----- expression payloads -----

  Readable readable_from(const Expr& e, const CodeElement& ae) {
    Readable r;
    switch (e.kind) {
      case ExprKind::Literal:
        r.kind = ReadableKind::Constant;
        r.literal_kind = e.literal_kind;
        r.literal_text = e.literal_text;
        return r;
      case ExprKind::VarRef:
        if (env_.count(e.name)) {
          r.kind = ReadableKind::VariableRef;
          r.var = e.name;
        } else {
          r.kind = ReadableKind::Constant;
          r.literal_kind = LiteralKind::Opaque;
          r.literal_text = e.original.empty() ? e.name : e.original;
        }
        return r;
      case ExprKind::BindRef: {
        r.kind = ReadableKind::Nested;
        auto prim = std::make_unique<Primitive>();
        prim->kind = PrimKind::ReadFromUI;
        prim->ui = ui_ref_for(e.block, e.name);
        prim->kdm_ref = {ae.id};
        prim->label = ":" + e.block + "." + e.name;
        r.prim = std::move(prim);
        return r;
      }
      case ExprKind::Binary: {
        MOp op;
        switch (e.bin_op) {
          case BinOp::Add: op = MOp::Add; break;
          case BinOp::Sub: op = MOp::Sub; break;
          case BinOp::Mul: op = MOp::Mul; break;
          case BinOp::Div: op = MOp::Div; break;
          case BinOp::Concat: op = MOp::Concat; break;
          default:
            err("P102", "comparison or logical operator is not supported in value position", ae);
            r.kind = ReadableKind::Constant;
            r.literal_kind = LiteralKind::Null;
            r.literal_text = "null";
            return r;
        }
        r.kind = ReadableKind::Nested;
        auto prim = std::make_unique<Primitive>();
        prim->kind = PrimKind::ManipulateData;
        prim->m_op = op;
        prim->kdm_ref = {ae.id};
        prim->inputs.push_back(readable_from(*e.lhs, ae));
        prim->inputs.push_back(readable_from(*e.rhs, ae));
        r.prim = std::move(prim);
        return r;
      }
      case ExprKind::Unary: {
        if (e.un_op == UnOp::Not) {
          err("P102", "NOT is not supported in value position", ae);
          r.kind = ReadableKind::Constant;
          r.literal_kind = LiteralKind::Null;
          r.literal_text = "null";
          return r;
        }
        r.kind = ReadableKind::Nested;
        auto prim = std::make_unique<Primitive>();
        prim->kind = PrimKind::ManipulateData;
        prim->m_op = MOp::Neg;
        prim->kdm_ref = {ae.id};
        prim->inputs.push_back(readable_from(*e.operand, ae));
        r.prim = std::move(prim);
        return r;
      }
      case ExprKind::Call: {
        r.kind = ReadableKind::ReturnValue;
        r.callee = e.name;
        r.callee_original = e.original.empty() ? e.name : e.original;
        if (model_.find("callable:unit." + e.name)) r.callee_ref = "callable:unit." + e.name;
        for (const auto& a : e.args) r.args.push_back(readable_from(*a, ae));
        return r;
      }
    }
    return r;
  }

  PExpr pexpr_from(const Expr& e, const CodeElement& ae) {
    auto leaf_of = [&](Readable r) {
      PExpr out;
      out.op = PExprOp::Leaf;
      out.leaf = std::move(r);
      return out;
    };
    if (e.kind == ExprKind::Binary) {
      PExprOp op;
      switch (e.bin_op) {
        case BinOp::And: op = PExprOp::And; break;
        case BinOp::Or: op = PExprOp::Or; break;
        case BinOp::Less: op = PExprOp::Less; break;
        case BinOp::LessEq: op = PExprOp::LessEq; break;
        case BinOp::Greater: op = PExprOp::Greater; break;
        case BinOp::GreaterEq: op = PExprOp::GreaterEq; break;
        case BinOp::Eq: op = PExprOp::Eq; break;
        case BinOp::NotEq: op = PExprOp::NotEq; break;
        case BinOp::Add: op = PExprOp::Add; break;
        case BinOp::Sub: op = PExprOp::Sub; break;
        case BinOp::Mul: op = PExprOp::Mul; break;
        case BinOp::Div: op = PExprOp::Div; break;
        case BinOp::Concat:
          return leaf_of(readable_from(e, ae));  // concat folds to ManipulateData
      }
      PExpr out;
      out.op = op;
      out.operands.push_back(pexpr_from(*e.lhs, ae));
      out.operands.push_back(pexpr_from(*e.rhs, ae));
      return out;
    }
    if (e.kind == ExprKind::Unary) {
      if (e.un_op == UnOp::Not) {
        PExpr out;
        out.op = PExprOp::Not;
        out.operands.push_back(pexpr_from(*e.operand, ae));
        return out;
      }
      return leaf_of(readable_from(e, ae));  // negation folds to ManipulateData
    }
    return leaf_of(readable_from(e, ae));
  }

  // ----- statements -----

  std::vector<PrimPtr> lower_children(const std::vector<std::string>& ids) {
    std::vector<PrimPtr> out;
    std::size_t i = 0;
    while (i < ids.size()) {
      const CodeElement* el = model_.find(ids[i]);
      if (!el) {
        ++i;
        continue;
      }
      if (el->kind == ElementKind::ActionElement) {
        if (auto p = lower_action(*el)) out.push_back(std::move(p));
        ++i;
        continue;
      }
      if (el->kind == ElementKind::BlockUnit) {
        auto p = std::make_unique<Primitive>();
        p->kind = PrimKind::Try;
        p->kdm_ref = {el->id};
        p->label = condense(el->source.snippet, true);
        p->body = lower_children(el->children);
        out.push_back(std::move(p));
        ++i;
        continue;
      }
      if (el->kind == ElementKind::TryUnit) {
        auto p = std::make_unique<Primitive>();
        p->kind = PrimKind::Try;
        p->kdm_ref = {el->id};
        p->label = condense(el->source.snippet, true);
        p->body = lower_children(el->children);
        ++i;
        while (i < ids.size()) {
          const CodeElement* next = model_.find(ids[i]);
          if (!next || next->kind != ElementKind::CatchUnit) break;
          CatchClause clause;
          clause.exception = next->exception_name;
          clause.kdm_ref = {next->id};
          clause.body = lower_children(next->children);
          p->catches.push_back(std::move(clause));
          ++i;
        }
        out.push_back(std::move(p));
        continue;
      }
      err("P103", "unexpected element " + el->id + " in statement position", *el);
      ++i;
    }
    return out;
  }

  PrimPtr lower_action(const CodeElement& ae) {
    auto p = std::make_unique<Primitive>();
    p->kdm_ref = {ae.id};

    const std::string& d = ae.detail;
    if (d == "assign") {
      const Expr& target = *ae.exprs[0];
      const Expr& value = *ae.exprs[1];
      if (target.kind == ExprKind::BindRef) {
        p->kind = PrimKind::WriteToUI;
        p->ui = ui_ref_for(target.block, target.name);
      } else {
        p->kind = PrimKind::WriteTo;
        p->var = target.name;
      }
      p->inputs.push_back(readable_from(value, ae));
      p->label = condense(ae.source.snippet, false);
      return p;
    }
    if (d == "select") {
      p->kind = PrimKind::ReadFromDB;
      p->sql_kind = "SELECT";
      std::size_t k = ae.strings.size() - 1;
      for (std::size_t i = 0; i < k; ++i) p->columns.push_back(ae.strings[i]);
      p->sql_tail = ae.strings.back();
      for (std::size_t i = 0; i < k; ++i) {
        const Expr& target = *ae.exprs[i];
        Primitive shell;
        shell.kdm_ref = {ae.id};
        if (target.kind == ExprKind::BindRef) {
          shell.kind = PrimKind::WriteToUI;
          shell.ui = ui_ref_for(target.block, target.name);
          shell.label = ":" + target.block + "." + target.name;
        } else {
          shell.kind = PrimKind::WriteTo;
          shell.var = target.name;
          shell.label = target.original.empty() ? target.name : target.original;
        }
        p->into_targets.push_back(std::move(shell));
      }
      for (std::size_t i = k; i < ae.exprs.size(); ++i)
        p->binds.push_back(readable_from(*ae.exprs[i], ae));
      p->label = condense(ae.source.snippet, false);
      return p;
    }
    if (d == "insert" || d == "update" || d == "delete") {
      p->kind = PrimKind::WriteToDB;
      p->sql_kind = to_upper(d);
      p->sql_tail = ae.strings[0];
      for (const auto& b : ae.exprs) p->binds.push_back(readable_from(*b, ae));
      p->label = condense(ae.source.snippet, false);
      return p;
    }
    if (d == "if" || d == "case") {
      p->kind = PrimKind::SelectionFlow;
      p->label = condense(ae.source.snippet, true);
      bool switch_style = false;
      if (d == "case" && !ae.exprs.empty()) {
        p->subject = readable_from(*ae.exprs[0], ae);
        switch_style = true;
      }
      Case first;
      std::vector<std::string> first_body;
      if (d == "if") {
        first.condition = pexpr_from(*ae.exprs[0], ae);
        // Children up to the first ELSIF/ELSE arm belong to the THEN body.
        std::size_t i = 0;
        for (; i < ae.children.size(); ++i) {
          const CodeElement* c = model_.find(ae.children[i]);
          if (c && c->kind == ElementKind::ActionElement &&
              (c->name == "ELSIF" || c->name == "ELSE"))
            break;
          first_body.push_back(ae.children[i]);
        }
        first.body = lower_children(first_body);
        p->cases.push_back(std::move(first));
        for (; i < ae.children.size(); ++i) {
          const CodeElement* arm = model_.find(ae.children[i]);
          if (!arm) continue;
          Case c;
          if (arm->name == "ELSIF") c.condition = pexpr_from(*arm->exprs[0], *arm);
          c.body = lower_children(arm->children);
          p->cases.push_back(std::move(c));
        }
      } else {
        for (const auto& cid : ae.children) {
          const CodeElement* arm = model_.find(cid);
          if (!arm) continue;
          Case c;
          if (arm->name == "ELSIF") {
            if (switch_style)
              c.match = readable_from(*arm->exprs[0], *arm);
            else
              c.condition = pexpr_from(*arm->exprs[0], *arm);
          }
          c.body = lower_children(arm->children);
          p->cases.push_back(std::move(c));
        }
      }
      return p;
    }
    if (d == "while") {
      p->kind = PrimKind::Loop;
      p->loop_kind = "WHILE";
      p->condition = pexpr_from(*ae.exprs[0], ae);
      p->body = lower_children(ae.children);
      p->label = condense(ae.source.snippet, true);
      return p;
    }
    if (d == "for") {
      p->kind = PrimKind::Loop;
      p->loop_kind = "FOR";
      p->loop_var = ae.strings[0];
      p->loop_from = readable_from(*ae.exprs[0], ae);
      p->loop_to = readable_from(*ae.exprs[1], ae);
      bool inserted = env_.insert(ae.strings[0]).second;
      p->body = lower_children(ae.children);
      if (inserted) env_.erase(ae.strings[0]);
      p->label = condense(ae.source.snippet, true);
      return p;
    }
    if (d == "loop") {
      p->kind = PrimKind::Loop;
      p->loop_kind = "BASIC";
      p->body = lower_children(ae.children);
      p->label = condense(ae.source.snippet, true);
      return p;
    }
    if (d == "exit") {
      p->kind = PrimKind::Break;
      p->label = condense(ae.source.snippet, false);
      return p;
    }
    if (d == "return") {
      p->kind = PrimKind::Return;
      if (!ae.exprs.empty()) p->value = readable_from(*ae.exprs[0], ae);
      p->label = condense(ae.source.snippet, false);
      return p;
    }
    if (d == "throw") {
      p->kind = PrimKind::Throw;
      p->exception = ae.strings[0];
      p->label = condense(ae.source.snippet, false);
      return p;
    }
    if (d == "call") return lower_call(ae, std::move(p));
    if (d == "elsif" || d == "when" || d == "else") {
      err("P103", "selection arm encountered outside a selection statement", ae);
      return nullptr;
    }
    err("P103", "unknown action detail '" + d + "'", ae);
    return nullptr;
  }

  PrimPtr lower_call(const CodeElement& ae, PrimPtr p) {
    const std::string& callee = ae.strings[0];
    const std::string& callee_original = ae.strings[1];
    p->label = condense(ae.source.snippet, false);

    auto fallback = [&]() {
      p->kind = PrimKind::CallProcedure;
      p->callee = callee;
      p->callee_original = callee_original;
      if (!ae.calls.empty()) p->callee_ref = ae.calls[0];
      for (const auto& a : ae.exprs) p->args.push_back(readable_from(*a, ae));
      return std::move(p);
    };

    if (callee == "SET_ITEM_PROPERTY" || callee == "CLEAR_ITEM") {
      if (ae.exprs.empty() || ae.exprs[0]->kind != ExprKind::Literal ||
          ae.exprs[0]->literal_kind != LiteralKind::String) {
        warn("P104", callee + " with a non-literal item argument falls back to a procedure call",
             ae);
        return fallback();
      }
      const std::string& spec = ae.exprs[0]->literal_text;
      auto dot = spec.find('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 >= spec.size()) {
        warn("P104", callee + " item argument must look like 'BLOCK.ITEM'; falling back", ae);
        return fallback();
      }
      p->kind = PrimKind::ModifyUI;
      p->callee = callee;
      p->callee_original = callee_original;
      p->ui = ui_ref_for(spec.substr(0, dot), spec.substr(dot + 1));
      if (callee == "CLEAR_ITEM") {
        p->property = "VALUE";
        Readable null_arg;
        null_arg.kind = ReadableKind::Constant;
        null_arg.literal_kind = LiteralKind::Null;
        null_arg.literal_text = "null";
        p->args.push_back(std::move(null_arg));
        return p;
      }
      if (ae.exprs.size() < 3) {
        warn("P104", "SET_ITEM_PROPERTY expects (item, property, value); falling back", ae);
        *p = Primitive{};
        p->kdm_ref = {ae.id};
        p->label = condense(ae.source.snippet, false);
        return fallback();
      }
      const Expr& prop = *ae.exprs[1];
      if (prop.kind == ExprKind::VarRef)
        p->property = prop.name;
      else if (prop.kind == ExprKind::Literal && prop.literal_kind == LiteralKind::String)
        p->property = to_upper(prop.literal_text);
      else {
        warn("P104", "SET_ITEM_PROPERTY property argument is not a name; falling back", ae);
        *p = Primitive{};
        p->kdm_ref = {ae.id};
        p->label = condense(ae.source.snippet, false);
        return fallback();
      }
      const Expr& value = *ae.exprs[2];
      Readable v;
      if (value.kind == ExprKind::VarRef && value.name == "PROPERTY_TRUE") {
        v.kind = ReadableKind::Constant;
        v.literal_kind = LiteralKind::Bool;
        v.literal_text = "true";
      } else if (value.kind == ExprKind::VarRef && value.name == "PROPERTY_FALSE") {
        v.kind = ReadableKind::Constant;
        v.literal_kind = LiteralKind::Bool;
        v.literal_text = "false";
      } else {
        v = readable_from(value, ae);
      }
      p->args.push_back(std::move(v));
      return p;
    }
    if (callee == "SHOW_ALERT") {
      p->kind = PrimKind::ShowMessage;
      p->callee = callee;
      p->callee_original = callee_original;
      for (const auto& a : ae.exprs) p->args.push_back(readable_from(*a, ae));
      return p;
    }
    if (callee == "OPEN_FORM" || callee == "SHOW_VIEW") {
      p->kind = PrimKind::OpenView;
      p->callee = callee;
      p->callee_original = callee_original;
      for (const auto& a : ae.exprs) p->args.push_back(readable_from(*a, ae));
      return p;
    }
    return fallback();
  }
};

}  // namespace

PrimitivesResult kdm_to_primitives(const CodeModel& model) {
  PrimitivesResult out;
  out.root.form_name = model.form_name;
  out.root.form_original = model.form_original;
  out.root.file = model.file;
  Lowerer lowerer(model, out.diags);
  for (const auto& cid : model.callables) {
    const CodeElement* callable = model.find(cid);
    if (!callable) continue;
    out.root.codes.push_back(lowerer.lower(*callable));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Walkers
// ---------------------------------------------------------------------------

namespace {

void visit_readable(const Readable& r, const std::function<void(const Primitive&)>& fn);

void visit_pexpr(const PExpr& e, const std::function<void(const Primitive&)>& fn) {
  if (e.leaf) visit_readable(*e.leaf, fn);
  for (const auto& o : e.operands) visit_pexpr(o, fn);
}

void visit_readable(const Readable& r, const std::function<void(const Primitive&)>& fn) {
  if (r.kind == ReadableKind::Nested && r.prim) for_each_primitive(*r.prim, fn);
  for (const auto& a : r.args) visit_readable(a, fn);
}

}  // namespace

void for_each_primitive(const Primitive& p, const std::function<void(const Primitive&)>& fn) {
  fn(p);
  for (const auto& i : p.inputs) visit_readable(i, fn);
  for (const auto& t : p.into_targets) for_each_primitive(t, fn);
  for (const auto& b : p.binds) visit_readable(b, fn);
  for (const auto& a : p.args) visit_readable(a, fn);
  if (p.subject) visit_readable(*p.subject, fn);
  for (const auto& c : p.cases) {
    if (c.condition) visit_pexpr(*c.condition, fn);
    if (c.match) visit_readable(*c.match, fn);
    for (const auto& b : c.body) for_each_primitive(*b, fn);
  }
  if (p.condition) visit_pexpr(*p.condition, fn);
  if (p.loop_from) visit_readable(*p.loop_from, fn);
  if (p.loop_to) visit_readable(*p.loop_to, fn);
  for (const auto& b : p.body) for_each_primitive(*b, fn);
  for (const auto& c : p.catches)
    for (const auto& b : c.body) for_each_primitive(*b, fn);
  if (p.value) visit_readable(*p.value, fn);
}

void for_each_primitive(const Code& code, const std::function<void(const Primitive&)>& fn) {
  for (const auto& p : code.primitives) for_each_primitive(*p, fn);
}

std::size_t count_primitives(const Code& code, const std::string& variant) {
  auto kind = prim_kind_from_name(variant);
  if (!kind) throw std::invalid_argument("unknown primitive variant: " + variant);
  std::size_t n = 0;
  for_each_primitive(code, [&](const Primitive& p) {
    if (p.kind == *kind) ++n;
  });
  return n;
}

std::size_t count_primitives(const PrimitivesRoot& root, const std::string& variant) {
  auto kind = prim_kind_from_name(variant);
  if (!kind) throw std::invalid_argument("unknown primitive variant: " + variant);
  std::size_t n = 0;
  for (const auto& code : root.codes)
    for_each_primitive(code, [&](const Primitive& p) {
      if (p.kind == *kind) ++n;
    });
  return n;
}

}  // namespace f2j
