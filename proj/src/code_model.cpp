#include "f2j/code_model.hpp"

#include <algorithm>
#include <set>

#include "f2j/names.hpp"

namespace f2j {

const std::vector<std::string> kStereotypes = {
    "ASSIGN", "SELECT", "INSERT", "UPDATE", "DELETE", "IF",   "ELSIF", "ELSE", "CASE",
    "LOOP",   "WHILE",  "FOR",    "EXIT",   "RETURN", "RAISE", "CALL", "THROW"};

bool is_known_stereotype(const std::string& s) {
  return std::find(kStereotypes.begin(), kStereotypes.end(), s) != kStereotypes.end();
}

const CodeElement* CodeModel::find(const std::string& id) const {
  auto it = elements.find(id);
  return it == elements.end() ? nullptr : &it->second;
}

CodeElement* CodeModel::find(const std::string& id) {
  auto it = elements.find(id);
  return it == elements.end() ? nullptr : &it->second;
}

namespace {

std::string widget_name(WidgetKind k) {
  switch (k) {
    case WidgetKind::Text: return "TEXT";
    case WidgetKind::Button: return "BUTTON";
    case WidgetKind::Checkbox: return "CHECKBOX";
    case WidgetKind::Display: return "DISPLAY";
  }
  return "TEXT";
}

// Lexical scope for identifier resolution. An empty mapped id means the name
// resolves (loop variable) but carries no storable element.
struct Scope {
  const Scope* parent = nullptr;
  std::map<std::string, std::string> vars;

  const std::string* lookup(const std::string& name) const {
    auto it = vars.find(name);
    if (it != vars.end()) return &it->second;
    return parent ? parent->lookup(name) : nullptr;
  }
};

class Injector {
 public:
  explicit Injector(const FormBundle& bundle) : bundle_(bundle) {}

  InjectResult run() {
    InjectResult out;
    model_ = &out.model;
    diags_ = &out.diags;
    model_->form_name = bundle_.name;
    model_->form_original = bundle_.original;
    model_->file = bundle_.file;
    model_->source_text = bundle_.text;

    build_ui();
    declare_callables();
    for (const auto& w : bundle_.windows)
      for (const auto& t : w.triggers) lower_trigger(w, t);
    for (const auto& u : bundle_.program_units) lower_unit(u);

    model_ = nullptr;
    diags_ = nullptr;
    return out;
  }

 private:
  const FormBundle& bundle_;
  CodeModel* model_ = nullptr;
  DiagnosticList* diags_ = nullptr;
  std::map<std::string, std::string> units_;  // unit name -> callable id
  std::map<std::string, std::string> ui_;     // WINDOW.ITEM -> resource id
  int ae_n_ = 0, block_n_ = 0, try_n_ = 0, catch_n_ = 0;
  std::string callable_id_;

  CodeElement& add(CodeElement e) {
    model_->order.push_back(e.id);
    auto [it, inserted] = model_->elements.emplace(e.id, std::move(e));
    return it->second;
  }

  SourceRef ref(const SourceSpan& span) const {
    SourceRef r;
    r.file = bundle_.file;
    r.span = span;
    r.snippet = slice(bundle_.text, span);
    return r;
  }

  void err(const std::string& code, const std::string& msg, const SourceSpan& at) {
    diags_->error(code, msg, bundle_.file, at.line, at.col);
  }

  void build_ui() {
    for (const auto& w : bundle_.windows) {
      CodeElement screen;
      screen.id = "screen:" + w.name;
      screen.kind = ElementKind::Screen;
      screen.name = w.name;
      screen.original = w.original;
      screen.source = ref(w.span);
      for (const auto& item : w.items) screen.resources.push_back("ui:" + w.name + "." + item.name);
      model_->screens.push_back(screen.id);
      add(std::move(screen));
      for (const auto& item : w.items) {
        CodeElement res;
        res.id = "ui:" + w.name + "." + item.name;
        res.kind = ElementKind::UIResource;
        res.name = item.name;
        res.original = item.original;
        res.widget = widget_name(item.widget);
        res.owner = "screen:" + w.name;
        res.source = ref(item.span);
        ui_[w.name + "." + item.name] = res.id;
        add(std::move(res));
      }
    }
  }

  void declare_callables() {
    for (const auto& w : bundle_.windows) {
      for (const auto& t : w.triggers) {
        std::string id = "callable:" + w.name + "." + t.owner_item + "." + t.event;
        if (model_->elements.count(id)) {
          err("K001", "duplicate trigger " + t.owner_item + "." + t.event + " in window " +
                          w.original,
              t.span);
          continue;
        }
        CodeElement c;
        c.id = id;
        c.kind = ElementKind::CallableUnit;
        c.origin = CallableOrigin::Trigger;
        c.name = t.owner_item + "." + t.event;
        c.event = t.event;
        c.ui_resource = "ui:" + w.name + "." + t.owner_item;
        c.stereotypes = {"EventAction"};
        c.source = ref(t.span);
        model_->callables.push_back(id);
        add(std::move(c));
      }
    }
    for (const auto& u : bundle_.program_units) {
      std::string id = "callable:unit." + u.name;
      if (model_->elements.count(id)) continue;  // duplicate already diagnosed by parser
      CodeElement c;
      c.id = id;
      c.kind = ElementKind::CallableUnit;
      c.origin = CallableOrigin::ProgramUnit;
      c.name = u.name;
      c.unit_kind = u.kind == UnitKind::Function ? "FUNCTION" : "PROCEDURE";
      c.return_type = u.return_type;
      for (const auto& p : u.params) c.params.push_back({p.name, p.original, p.plsql_type});
      c.stereotypes = {"CodeFragment"};
      c.source = ref(u.span);
      units_[u.name] = id;
      model_->callables.push_back(id);
      add(std::move(c));
    }
  }

  // ----- body lowering -----

  std::string next_block_id() { return callable_id_ + "/block" + std::to_string(block_n_++); }
  std::string next_ae_id() { return callable_id_ + "/ae" + std::to_string(ae_n_++); }
  std::string next_try_id() { return callable_id_ + "/try" + std::to_string(try_n_++); }
  std::string next_catch_id() { return callable_id_ + "/catch" + std::to_string(catch_n_++); }

  void begin_callable(const std::string& id) {
    callable_id_ = id;
    ae_n_ = block_n_ = try_n_ = catch_n_ = 0;
  }

  void lower_trigger(const Window& w, const Trigger& t) {
    std::string id = "callable:" + w.name + "." + t.owner_item + "." + t.event;
    CodeElement* callable = model_->find(id);
    if (!callable || !callable->body.empty()) return;  // duplicate shell
    begin_callable(id);
    Scope root_scope;
    callable->body = lower_root_block(t.body, root_scope);
  }

  void lower_unit(const ProgramUnit& u) {
    std::string id = "callable:unit." + u.name;
    CodeElement* callable = model_->find(id);
    if (!callable || !callable->body.empty()) return;
    begin_callable(id);
    Scope root_scope;
    for (const auto& p : u.params) root_scope.vars[p.name] = "";  // resolvable, no element
    callable->body = lower_root_block(u.body, root_scope);
  }

  // Root blocks translate handlers as a TryUnit wrapping all statements,
  // followed by CatchUnit siblings, inside the body BlockUnit.
  std::string lower_root_block(const PlSqlBlock& block, Scope& outer) {
    CodeElement root;
    root.id = next_block_id();
    root.kind = ElementKind::BlockUnit;
    root.source = ref(block.span);
    CodeElement& root_ref = add(std::move(root));

    Scope scope;
    scope.parent = &outer;
    declare_locals(block, root_ref, scope);

    if (block.exception_handlers.empty()) {
      lower_statements(block.statements, scope, root_ref.children);
    } else {
      lower_guarded(block, scope, root_ref.children, block.span);
    }
    return root_ref.id;
  }

  void declare_locals(const PlSqlBlock& block, CodeElement& owner, Scope& scope) {
    for (const auto& d : block.declarations) {
      std::string vid = owner.id + "/var:" + d.name;
      if (scope.vars.count(d.name)) {
        err("K002", "duplicate declaration of " + d.original + " in the same block", d.span);
        continue;
      }
      CodeElement var;
      var.id = vid;
      var.kind = ElementKind::StorableUnit;
      var.name = d.name;
      var.original = d.original;
      var.scope = StorableScope::Local;
      var.plsql_type = d.plsql_type;
      var.source = ref(d.span);
      add(std::move(var));
      owner.storable_units.push_back(vid);
      scope.vars[d.name] = vid;
    }
    // Initializers become leading ASSIGN elements, in declaration order.
    for (const auto& d : block.declarations) {
      if (!d.init) continue;
      const std::string* vid = scope.lookup(d.name);
      if (!vid || vid->empty()) continue;
      CodeElement ae;
      ae.id = next_ae_id();
      ae.kind = ElementKind::ActionElement;
      ae.name = "ASSIGN";
      ae.tag = "assign";
      ae.detail = "assign";
      ae.source = ref(d.span);
      ae.writes.push_back(*vid);
      ae.exprs.push_back(make_var_ref(d.name, d.original, d.span));
      ae.exprs.push_back(d.init->clone());
      walk_expr(*d.init, scope, ae, false);
      owner.children.push_back(ae.id);
      add(std::move(ae));
    }
  }

  // TryUnit over statements + CatchUnit per handler, appended to `children`.
  void lower_guarded(const PlSqlBlock& block, Scope& scope, std::vector<std::string>& children,
                     const SourceSpan& span) {
    CodeElement try_unit;
    try_unit.id = next_try_id();
    try_unit.kind = ElementKind::TryUnit;
    try_unit.source = ref(span);
    CodeElement& try_ref = add(std::move(try_unit));
    children.push_back(try_ref.id);
    lower_statements(block.statements, scope, try_ref.children);
    for (const auto& h : block.exception_handlers) {
      CodeElement catch_unit;
      catch_unit.id = next_catch_id();
      catch_unit.kind = ElementKind::CatchUnit;
      catch_unit.exception_name = h.exception_name;
      catch_unit.source = ref(h.span);
      CodeElement& catch_ref = add(std::move(catch_unit));
      children.push_back(catch_ref.id);
      lower_statements(h.statements, scope, catch_ref.children);
    }
  }

  void lower_statements(const std::vector<StmtPtr>& stmts, Scope& scope,
                        std::vector<std::string>& children) {
    for (const auto& s : stmts) lower_statement(*s, scope, children);
  }

  CodeElement& make_ae(const char* stereo, const char* tag, const char* detail,
                       const SourceSpan& span, std::vector<std::string>& children) {
    CodeElement ae;
    ae.id = next_ae_id();
    ae.kind = ElementKind::ActionElement;
    ae.name = stereo;
    ae.tag = tag;
    ae.detail = detail;
    ae.source = ref(span);
    children.push_back(ae.id);
    return add(std::move(ae));
  }

  void lower_statement(const PlSqlStatement& s, Scope& scope, std::vector<std::string>& children) {
    switch (s.kind) {
      case StmtKind::Assign: {
        CodeElement& ae = make_ae("ASSIGN", "assign", "assign", s.span, children);
        ae.exprs.push_back(s.target->clone());
        ae.exprs.push_back(s.value->clone());
        write_target(*s.target, scope, ae);
        walk_expr(*s.value, scope, ae, false);
        break;
      }
      case StmtKind::If: {
        CodeElement& ae = make_ae("IF", "if", "if", s.span, children);
        ae.exprs.push_back(s.branches[0].condition->clone());
        walk_expr(*s.branches[0].condition, scope, ae, false);
        lower_statements(s.branches[0].statements, scope, ae.children);
        for (std::size_t i = 1; i < s.branches.size(); ++i) {
          CodeElement& arm = make_ae("ELSIF", "elsif", "elsif", s.branches[i].span, ae.children);
          arm.exprs.push_back(s.branches[i].condition->clone());
          walk_expr(*s.branches[i].condition, scope, arm, false);
          lower_statements(s.branches[i].statements, scope, arm.children);
        }
        if (!s.else_statements.empty()) {
          CodeElement& arm = make_ae("ELSE", "else", "else", s.else_span, ae.children);
          lower_statements(s.else_statements, scope, arm.children);
        }
        break;
      }
      case StmtKind::Case: {
        CodeElement& ae = make_ae("CASE", "case", "case", s.span, children);
        if (s.case_subject) {
          ae.exprs.push_back(s.case_subject->clone());
          walk_expr(*s.case_subject, scope, ae, false);
        }
        for (const auto& arm : s.whens) {
          CodeElement& warm = make_ae("ELSIF", "elsif", "when", arm.span, ae.children);
          warm.exprs.push_back(arm.match->clone());
          walk_expr(*arm.match, scope, warm, false);
          lower_statements(arm.statements, scope, warm.children);
        }
        if (!s.else_statements.empty()) {
          CodeElement& arm = make_ae("ELSE", "else", "else", s.else_span, ae.children);
          lower_statements(s.else_statements, scope, arm.children);
        }
        break;
      }
      case StmtKind::While: {
        CodeElement& ae = make_ae("WHILE", "while", "while", s.span, children);
        ae.exprs.push_back(s.condition->clone());
        walk_expr(*s.condition, scope, ae, false);
        lower_statements(s.body, scope, ae.children);
        break;
      }
      case StmtKind::For: {
        CodeElement& ae = make_ae("FOR", "for", "for", s.span, children);
        ae.strings.push_back(s.loop_var);
        ae.strings.push_back(s.loop_var_original);
        ae.exprs.push_back(s.loop_from->clone());
        ae.exprs.push_back(s.loop_to->clone());
        walk_expr(*s.loop_from, scope, ae, false);
        walk_expr(*s.loop_to, scope, ae, false);
        Scope body_scope;
        body_scope.parent = &scope;
        body_scope.vars[s.loop_var] = "";  // loop counter, no storable element
        lower_statements(s.body, body_scope, ae.children);
        break;
      }
      case StmtKind::BasicLoop: {
        CodeElement& ae = make_ae("LOOP", "loop", "loop", s.span, children);
        lower_statements(s.body, scope, ae.children);
        break;
      }
      case StmtKind::Exit: {
        make_ae("EXIT", "exit", "exit", s.span, children);
        break;
      }
      case StmtKind::Return: {
        CodeElement& ae = make_ae("RETURN", "return", "return", s.span, children);
        if (s.return_value) {
          ae.exprs.push_back(s.return_value->clone());
          walk_expr(*s.return_value, scope, ae, false);
        }
        break;
      }
      case StmtKind::Raise: {
        CodeElement& ae = make_ae("THROW", "throw", "throw", s.span, children);
        ae.strings.push_back(s.exception_name);
        break;
      }
      case StmtKind::Call: {
        CodeElement& ae = make_ae("CALL", "call", "call", s.span, children);
        ae.strings.push_back(s.callee);
        ae.strings.push_back(s.callee_original);
        auto unit = units_.find(s.callee);
        bool resolved = unit != units_.end();
        if (resolved) ae.calls.push_back(unit->second);
        for (const auto& a : s.args) {
          ae.exprs.push_back(a->clone());
          walk_expr(*a, scope, ae, !resolved);
        }
        break;
      }
      case StmtKind::SelectInto: {
        CodeElement& ae = make_ae("SELECT", "select", "select", s.span, children);
        for (const auto& c : s.projected_columns) ae.strings.push_back(c);
        ae.strings.push_back(s.sql_tail);
        for (const auto& t : s.into_targets) {
          ae.exprs.push_back(t->clone());
          write_target(*t, scope, ae);
        }
        for (const auto& b : s.binds) {
          ae.exprs.push_back(b->clone());
          walk_expr(*b, scope, ae, false);
        }
        break;
      }
      case StmtKind::Dml: {
        const char* stereo = s.dml_kind == DmlKind::Insert   ? "INSERT"
                             : s.dml_kind == DmlKind::Update ? "UPDATE"
                                                             : "DELETE";
        const char* tag = s.dml_kind == DmlKind::Insert   ? "insert"
                          : s.dml_kind == DmlKind::Update ? "update"
                                                          : "delete";
        CodeElement& ae = make_ae(stereo, tag, tag, s.span, children);
        ae.strings.push_back(s.sql_tail);
        for (const auto& b : s.binds) {
          ae.exprs.push_back(b->clone());
          walk_expr(*b, scope, ae, false);
        }
        break;
      }
      case StmtKind::InnerBlock: {
        const PlSqlBlock& inner = *s.inner;
        if (inner.exception_handlers.empty()) {
          CodeElement block;
          block.id = next_block_id();
          block.kind = ElementKind::BlockUnit;
          block.source = ref(inner.span);
          CodeElement& block_ref = add(std::move(block));
          children.push_back(block_ref.id);
          Scope inner_scope;
          inner_scope.parent = &scope;
          declare_locals(inner, block_ref, inner_scope);
          lower_statements(inner.statements, inner_scope, block_ref.children);
        } else {
          // Locals of a guarded block live on the TryUnit.
          CodeElement try_unit;
          try_unit.id = next_try_id();
          try_unit.kind = ElementKind::TryUnit;
          try_unit.source = ref(inner.span);
          CodeElement& try_ref = add(std::move(try_unit));
          children.push_back(try_ref.id);
          Scope inner_scope;
          inner_scope.parent = &scope;
          declare_locals(inner, try_ref, inner_scope);
          lower_statements(inner.statements, inner_scope, try_ref.children);
          for (const auto& h : inner.exception_handlers) {
            CodeElement catch_unit;
            catch_unit.id = next_catch_id();
            catch_unit.kind = ElementKind::CatchUnit;
            catch_unit.exception_name = h.exception_name;
            catch_unit.source = ref(h.span);
            CodeElement& catch_ref = add(std::move(catch_unit));
            children.push_back(catch_ref.id);
            lower_statements(h.statements, inner_scope, catch_ref.children);
          }
        }
        break;
      }
    }
  }

  void push_unique(std::vector<std::string>& v, const std::string& id) {
    if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
  }

  void write_target(const Expr& target, Scope& scope, CodeElement& ae) {
    if (target.kind == ExprKind::VarRef) {
      const std::string* id = scope.lookup(target.name);
      if (!id) {
        err("K010", "unresolved identifier " + target.original, target.span);
        return;
      }
      if (id->empty()) {
        err("K011", "cannot assign to loop variable or parameter " + target.original, target.span);
        return;
      }
      push_unique(ae.writes, *id);
      return;
    }
    if (target.kind == ExprKind::BindRef) {
      auto it = ui_.find(target.block + "." + target.name);
      if (it == ui_.end()) {
        err("K012", "unresolved screen item :" + target.block + "." + target.name, target.span);
        return;
      }
      push_unique(ae.writes, it->second);
      return;
    }
    err("K013", "assignment target must be a variable or screen item", target.span);
  }

  void walk_expr(const Expr& e, Scope& scope, CodeElement& ae, bool opaque_idents) {
    switch (e.kind) {
      case ExprKind::Literal:
        return;
      case ExprKind::VarRef: {
        const std::string* id = scope.lookup(e.name);
        if (id) {
          if (!id->empty()) push_unique(ae.reads, *id);
          return;
        }
        if (!opaque_idents)
          err("K010", "unresolved identifier " + e.original, e.span);
        return;
      }
      case ExprKind::BindRef: {
        auto it = ui_.find(e.block + "." + e.name);
        if (it == ui_.end()) {
          err("K012", "unresolved screen item :" + e.block + "." + e.name, e.span);
          return;
        }
        push_unique(ae.reads, it->second);
        return;
      }
      case ExprKind::Binary:
        walk_expr(*e.lhs, scope, ae, opaque_idents);
        walk_expr(*e.rhs, scope, ae, opaque_idents);
        return;
      case ExprKind::Unary:
        walk_expr(*e.operand, scope, ae, opaque_idents);
        return;
      case ExprKind::Call: {
        auto unit = units_.find(e.name);
        bool resolved = unit != units_.end();
        if (resolved) push_unique(ae.calls, unit->second);
        for (const auto& a : e.args) walk_expr(*a, scope, ae, resolved ? false : true);
        return;
      }
    }
  }
};

}  // namespace

InjectResult inject(const FormBundle& bundle) { return Injector(bundle).run(); }

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

bool span_contains(const SourceSpan& outer, const SourceSpan& inner) {
  return outer.begin <= inner.begin && inner.end <= outer.end;
}

}  // namespace

DiagnosticList validate_code_model(const CodeModel& model) {
  DiagnosticList diags;
  auto bad = [&](const std::string& code, const std::string& msg) {
    diags.error(code, msg, model.file, 1, 1);
  };

  // order <-> elements agreement
  std::set<std::string> seen;
  for (const auto& id : model.order) {
    if (!seen.insert(id).second) bad("V001", "duplicate element id in order: " + id);
    if (!model.elements.count(id)) bad("V002", "ordered id missing from element map: " + id);
  }
  for (const auto& [id, e] : model.elements) {
    if (e.id != id) bad("V003", "element key/id mismatch: " + id);
    if (!seen.count(id)) bad("V004", "element not listed in order: " + id);
  }

  auto kind_of = [&](const std::string& id) -> std::optional<ElementKind> {
    const CodeElement* e = model.find(id);
    if (!e) return std::nullopt;
    return e->kind;
  };
  auto require = [&](const std::string& owner, const std::string& id,
                     std::initializer_list<ElementKind> kinds, const char* what) {
    auto k = kind_of(id);
    if (!k) {
      bad("V005", owner + ": dangling " + what + " reference " + id);
      return;
    }
    for (auto want : kinds)
      if (*k == want) return;
    bad("V006", owner + ": " + what + " reference " + id + " has wrong kind");
  };

  for (const auto& [id, e] : model.elements) {
    if (slice(model.source_text, e.source.span) != e.source.snippet)
      bad("V007", id + ": snippet does not match source slice");
    switch (e.kind) {
      case ElementKind::ActionElement: {
        if (!is_known_stereotype(e.name)) bad("V008", id + ": unknown stereotype " + e.name);
        if (e.tag != to_lower(e.name)) bad("V009", id + ": tag does not mirror stereotype");
        for (const auto& c : e.children)
          require(id, c,
                  {ElementKind::ActionElement, ElementKind::BlockUnit, ElementKind::TryUnit,
                   ElementKind::CatchUnit},
                  "child");
        for (const auto& r : e.reads)
          require(id, r, {ElementKind::StorableUnit, ElementKind::UIResource}, "read");
        for (const auto& w : e.writes)
          require(id, w, {ElementKind::StorableUnit, ElementKind::UIResource}, "write");
        for (const auto& c : e.calls) require(id, c, {ElementKind::CallableUnit}, "call");
        break;
      }
      case ElementKind::BlockUnit:
      case ElementKind::TryUnit:
      case ElementKind::CatchUnit: {
        std::set<std::string> names;
        for (const auto& v : e.storable_units) {
          require(id, v, {ElementKind::StorableUnit}, "storable");
          if (const CodeElement* var = model.find(v))
            if (!names.insert(var->name).second)
              bad("V010", id + ": duplicate storable name " + var->name);
        }
        for (const auto& c : e.children)
          require(id, c,
                  {ElementKind::ActionElement, ElementKind::BlockUnit, ElementKind::TryUnit,
                   ElementKind::CatchUnit},
                  "child");
        break;
      }
      case ElementKind::CallableUnit: {
        if (e.body.empty()) {
          bad("V011", id + ": callable without body block");
        } else {
          require(id, e.body, {ElementKind::BlockUnit}, "body");
        }
        if (e.origin == CallableOrigin::Trigger) {
          if (e.ui_resource.empty())
            bad("V012", id + ": trigger callable without ui resource");
          else
            require(id, e.ui_resource, {ElementKind::UIResource}, "ui");
        }
        break;
      }
      case ElementKind::Screen: {
        for (const auto& r : e.resources) require(id, r, {ElementKind::UIResource}, "resource");
        break;
      }
      case ElementKind::UIResource: {
        if (e.owner.empty())
          bad("V013", id + ": ui resource without owner screen");
        else
          require(id, e.owner, {ElementKind::Screen}, "owner");
        break;
      }
      case ElementKind::StorableUnit:
        break;
    }
  }

  // Span containment along the containment tree.
  for (const auto& [id, e] : model.elements) {
    auto check_child = [&](const std::string& cid) {
      const CodeElement* c = model.find(cid);
      if (!c) return;
      if (!span_contains(e.source.span, c->source.span))
        bad("V014", id + ": child span escapes parent (" + cid + ")");
    };
    for (const auto& c : e.children) check_child(c);
    for (const auto& v : e.storable_units) check_child(v);
    if (e.kind == ElementKind::CallableUnit && !e.body.empty()) check_child(e.body);
  }

  return diags;
}

}  // namespace f2j
