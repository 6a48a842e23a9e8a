#include "f2j/oo_model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "f2j/names.hpp"

namespace f2j {

// ---------------------------------------------------------------------------
// Types and keys
// ---------------------------------------------------------------------------

std::string TypeMap::map(const std::string& plsql_type) const {
  std::string base = to_upper(plsql_type);
  auto paren = base.find('(');
  if (paren != std::string::npos) base = base.substr(0, paren);
  auto it = overrides.find(base);
  if (it != overrides.end()) return it->second;
  return java_type_for(base);
}

std::string TypeMap::widget_java_type(const std::string& widget) {
  if (widget == "CHECKBOX") return "Boolean";
  return "String";  // TEXT, BUTTON, DISPLAY
}

std::string MappingContext::key_for(const std::string& upper_name) {
  auto it = map_keys.find(upper_name);
  if (it != map_keys.end()) return it->second;
  auto dot = upper_name.rfind('.');
  std::string base = to_camel(dot == std::string::npos ? upper_name : upper_name.substr(dot + 1));
  std::string key = base;
  int n = 2;
  while (used_keys.count(key)) key = base + std::to_string(n++);
  used_keys.insert(key);
  map_keys[upper_name] = key;
  return key;
}

std::vector<std::string> param_keys_for_unit(const std::vector<TypedName>& params) {
  std::vector<std::string> keys;
  std::set<std::string> used;
  for (const auto& p : params) {
    std::string base = to_camel(p.name);
    std::string key = base;
    int n = 2;
    while (used.count(key)) key = base + std::to_string(n++);
    used.insert(key);
    keys.push_back(key);
  }
  return keys;
}

// ---------------------------------------------------------------------------
// OExpr builders
// ---------------------------------------------------------------------------

namespace {

OExpr lit(std::string text) {
  OExpr e;
  e.kind = OExprKind::Literal;
  e.text = std::move(text);
  return e;
}

OExpr name_of(std::string n) {
  OExpr e;
  e.kind = OExprKind::Name;
  e.text = std::move(n);
  return e;
}

OExpr var_use(std::string upper) {
  OExpr e;
  e.kind = OExprKind::VarUse;
  e.text = std::move(upper);
  return e;
}

OExpr make_call(std::string receiver, std::string callee, std::vector<OExpr> args,
                bool todo = false) {
  OExpr e;
  e.kind = OExprKind::Call;
  e.receiver = std::move(receiver);
  e.callee = std::move(callee);
  e.args = std::move(args);
  e.todo = todo;
  return e;
}

OExpr make_binary(std::string op, OExpr l, OExpr r) {
  OExpr e;
  e.kind = OExprKind::Binary;
  e.op = std::move(op);
  e.args.push_back(std::move(l));
  e.args.push_back(std::move(r));
  return e;
}

OExpr make_unary(std::string op, OExpr x) {
  OExpr e;
  e.kind = OExprKind::Unary;
  e.op = std::move(op);
  e.args.push_back(std::move(x));
  return e;
}

OExpr make_cast(std::string type, OExpr x) {
  OExpr e;
  e.kind = OExprKind::Cast;
  e.text = std::move(type);
  e.args.push_back(std::move(x));
  return e;
}

OExpr make_new(std::string type, std::vector<OExpr> args = {}) {
  OExpr e;
  e.kind = OExprKind::New;
  e.text = std::move(type);
  e.args = std::move(args);
  return e;
}

std::string java_string(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

OExpr map_get(const std::string& key) {
  return make_call("map", "get", {lit(java_string(key))});
}

OStmt map_put_stmt(const std::string& key, OExpr value) {
  OStmt s;
  s.kind = OStmtKind::ExprStmt;
  s.expr = make_call("map", "put", {lit(java_string(key)), std::move(value)});
  return s;
}

std::string exception_java_type(const std::string& plsql_exception) {
  if (plsql_exception == "OTHERS") return "Exception";
  return to_pascal(plsql_exception);
}

// Bind placeholders: every :NAME or :BLOCK.ITEM token in raw SQL becomes '?'.
std::string sql_with_placeholders(const std::string& raw) {
  std::string out;
  std::size_t i = 0;
  bool in_string = false;
  while (i < raw.size()) {
    char c = raw[i];
    if (in_string) {
      out.push_back(c == '\'' ? '\'' : c);
      if (c == '\'') in_string = false;
      ++i;
      continue;
    }
    if (c == '\'') {
      in_string = true;
      out.push_back(c);
      ++i;
      continue;
    }
    if (c == ':' && i + 1 < raw.size() &&
        (std::isalpha(static_cast<unsigned char>(raw[i + 1])) || raw[i + 1] == '_')) {
      ++i;
      while (i < raw.size() && (std::isalnum(static_cast<unsigned char>(raw[i])) ||
                                raw[i] == '_' || raw[i] == '.'))
        ++i;
      out.push_back('?');
      continue;
    }
    out.push_back(c);
    ++i;
  }
  // SQL text reads better single-line.
  std::string squeezed;
  bool ws = false;
  for (char c : out) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ws = true;
      continue;
    }
    if (ws && !squeezed.empty()) squeezed.push_back(' ');
    ws = false;
    squeezed.push_back(c);
  }
  return squeezed;
}

// ---------------------------------------------------------------------------
// Readable / PExpr translation
// ---------------------------------------------------------------------------

OExpr readable_expr(const Readable& r, MappingContext& ctx, std::vector<OStmt>& sink);

OExpr builtin_call_expr(const std::string& callee_upper, const std::string& callee_original,
                        const std::vector<Readable>& args, MappingContext& ctx,
                        std::vector<OStmt>& sink) {
  std::vector<OExpr> oargs;
  for (const auto& a : args) oargs.push_back(readable_expr(a, ctx, sink));
  std::string target = to_camel(callee_upper);
  bool todo = true;
  if (ctx.options) {
    auto it = ctx.options->builtin_map.find(callee_upper);
    if (it != ctx.options->builtin_map.end()) {
      target = it->second;
      todo = false;
    }
  }
  (void)callee_original;
  auto dot = target.rfind('.');
  if (dot != std::string::npos)
    return make_call(target.substr(0, dot), target.substr(dot + 1), std::move(oargs), todo);
  return make_call("", target, std::move(oargs), todo);
}

OExpr unit_call_expr(const std::string& callee_upper, const std::vector<Readable>& args,
                     MappingContext& ctx, std::vector<OStmt>& sink) {
  const auto& params = ctx.unit_params[callee_upper];
  auto keys = param_keys_for_unit(params);
  if (args.size() != params.size() && ctx.diags)
    ctx.diags->warning("O101", "call to " + callee_upper + " passes " +
                                   std::to_string(args.size()) + " argument(s) for " +
                                   std::to_string(params.size()) + " parameter(s)");
  for (std::size_t i = 0; i < args.size() && i < keys.size(); ++i) {
    OExpr value = readable_expr(args[i], ctx, sink);
    OStmt put = map_put_stmt(keys[i], std::move(value));
    put.origin_seq = ctx.origin_seq;
    sink.push_back(std::move(put));
  }
  return make_call(ctx.app_service_field, ctx.unit_method[callee_upper], {name_of("map")});
}

OExpr readable_expr(const Readable& r, MappingContext& ctx, std::vector<OStmt>& sink) {
  switch (r.kind) {
    case ReadableKind::Constant:
      switch (r.literal_kind) {
        case LiteralKind::String: return lit(java_string(r.literal_text));
        case LiteralKind::Number:
        case LiteralKind::Bool:
        case LiteralKind::Null:
        case LiteralKind::Opaque: return lit(r.literal_text);
      }
      return lit("null");
    case ReadableKind::VariableRef:
      return var_use(r.var);
    case ReadableKind::ReturnValue:
      if (!r.callee_ref.empty()) return unit_call_expr(r.callee, r.args, ctx, sink);
      return builtin_call_expr(r.callee, r.callee_original, r.args, ctx, sink);
    case ReadableKind::Nested: {
      if (!r.prim) return lit("null");
      const Primitive& p = *r.prim;
      if (p.kind == PrimKind::ReadFromUI) {
        std::string key = ctx.key_for(p.ui.screen + "." + p.ui.item);
        return make_cast(TypeMap::widget_java_type(p.ui.widget), map_get(key));
      }
      if (p.kind == PrimKind::ManipulateData) {
        if (p.m_op == MOp::Neg)
          return make_unary("-", readable_expr(p.inputs[0], ctx, sink));
        const char* op = p.m_op == MOp::Add      ? "+"
                         : p.m_op == MOp::Sub    ? "-"
                         : p.m_op == MOp::Mul    ? "*"
                         : p.m_op == MOp::Div    ? "/"
                                                 : "+";  // Concat
        return make_binary(op, readable_expr(p.inputs[0], ctx, sink),
                           readable_expr(p.inputs[1], ctx, sink));
      }
      return lit("null");
    }
  }
  return lit("null");
}

OExpr pexpr_expr(const PExpr& e, MappingContext& ctx, std::vector<OStmt>& sink) {
  switch (e.op) {
    case PExprOp::Leaf:
      return readable_expr(*e.leaf, ctx, sink);
    case PExprOp::Not:
      return make_unary("!", pexpr_expr(e.operands[0], ctx, sink));
    default: {
      const char* op = "&&";
      switch (e.op) {
        case PExprOp::And: op = "&&"; break;
        case PExprOp::Or: op = "||"; break;
        case PExprOp::Less: op = "<"; break;
        case PExprOp::LessEq: op = "<="; break;
        case PExprOp::Greater: op = ">"; break;
        case PExprOp::GreaterEq: op = ">="; break;
        case PExprOp::Eq: op = "=="; break;
        case PExprOp::NotEq: op = "!="; break;
        case PExprOp::Add: op = "+"; break;
        case PExprOp::Sub: op = "-"; break;
        case PExprOp::Mul: op = "*"; break;
        case PExprOp::Div: op = "/"; break;
        default: break;
      }
      return make_binary(op, pexpr_expr(e.operands[0], ctx, sink),
                         pexpr_expr(e.operands[1], ctx, sink));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Primitive -> statements
// ---------------------------------------------------------------------------

void map_primitive_to_statements(const Primitive& p, MappingContext& ctx,
                                 std::vector<OStmt>& sink) {
  auto stamp = [&](OStmt s) {
    s.origin_seq = ctx.origin_seq;
    sink.push_back(std::move(s));
  };

  switch (p.kind) {
    case PrimKind::WriteTo: {
      OStmt s;
      s.kind = OStmtKind::Assign;
      s.name = p.var;
      s.symbolic_target = true;
      s.value = readable_expr(p.inputs[0], ctx, sink);
      stamp(std::move(s));
      return;
    }
    case PrimKind::WriteToUI: {
      std::string key = ctx.key_for(p.ui.screen + "." + p.ui.item);
      OStmt s = map_put_stmt(key, readable_expr(p.inputs[0], ctx, sink));
      stamp(std::move(s));
      return;
    }
    case PrimKind::ReadFromDB: {
      std::string tail = sql_with_placeholders(p.sql_tail);
      for (std::size_t i = 0; i < p.into_targets.size(); ++i) {
        std::vector<OExpr> args;
        args.push_back(lit(java_string("SELECT " + p.columns[i] + " " + tail)));
        for (const auto& b : p.binds) args.push_back(readable_expr(b, ctx, sink));
        OExpr call = make_call("", "readFromDB", std::move(args));
        const Primitive& target = p.into_targets[i];
        if (target.kind == PrimKind::WriteToUI) {
          std::string key = ctx.key_for(target.ui.screen + "." + target.ui.item);
          stamp(map_put_stmt(key, std::move(call)));
        } else {
          OStmt s;
          s.kind = OStmtKind::Assign;
          s.name = target.var;
          s.symbolic_target = true;
          s.value = std::move(call);
          stamp(std::move(s));
        }
      }
      return;
    }
    case PrimKind::WriteToDB: {
      std::vector<OExpr> args;
      args.push_back(lit(java_string(sql_with_placeholders(p.sql_tail))));
      for (const auto& b : p.binds) args.push_back(readable_expr(b, ctx, sink));
      OStmt s;
      s.kind = OStmtKind::ExprStmt;
      s.expr = make_call("", "writeToDB", std::move(args));
      stamp(std::move(s));
      return;
    }
    case PrimKind::ModifyUI: {
      std::string callee =
          "set" + to_pascal(p.ui.screen) + to_pascal(p.ui.item) + to_pascal(p.property);
      std::vector<OExpr> args;
      for (const auto& a : p.args) args.push_back(readable_expr(a, ctx, sink));
      OStmt s;
      s.kind = OStmtKind::ExprStmt;
      s.expr = make_call("", callee, std::move(args));
      s.from_modify_ui = true;
      stamp(std::move(s));
      return;
    }
    case PrimKind::SelectionFlow: {
      if (p.subject) {
        OStmt s;
        s.kind = OStmtKind::Switch;
        s.subject = readable_expr(*p.subject, ctx, sink);
        for (const auto& c : p.cases) {
          OSwitchCase arm;
          if (c.match) arm.label = readable_expr(*c.match, ctx, sink);
          for (const auto& b : c.body) map_primitive_to_statements(*b, ctx, arm.body);
          s.cases.push_back(std::move(arm));
        }
        stamp(std::move(s));
        return;
      }
      // Searched selection: if / else-if chain.
      std::function<OStmt(std::size_t)> build = [&](std::size_t idx) {
        OStmt s;
        s.kind = OStmtKind::If;
        s.cond = pexpr_expr(*p.cases[idx].condition, ctx, sink);
        for (const auto& b : p.cases[idx].body)
          map_primitive_to_statements(*b, ctx, s.then_body);
        if (idx + 1 < p.cases.size()) {
          if (p.cases[idx + 1].condition) {
            s.else_body.push_back(build(idx + 1));
          } else {
            for (const auto& b : p.cases[idx + 1].body)
              map_primitive_to_statements(*b, ctx, s.else_body);
          }
        }
        return s;
      };
      stamp(build(0));
      return;
    }
    case PrimKind::Loop: {
      if (p.loop_kind == "FOR") {
        OStmt s;
        s.kind = OStmtKind::For;
        s.loop_var = p.loop_var;
        s.loop_from = readable_expr(*p.loop_from, ctx, sink);
        s.loop_to = readable_expr(*p.loop_to, ctx, sink);
        ctx.loop_vars.push_back(p.loop_var);
        for (const auto& b : p.body) map_primitive_to_statements(*b, ctx, s.body);
        ctx.loop_vars.pop_back();
        stamp(std::move(s));
        return;
      }
      OStmt s;
      s.kind = OStmtKind::While;
      s.cond = p.condition ? pexpr_expr(*p.condition, ctx, sink) : lit("true");
      for (const auto& b : p.body) map_primitive_to_statements(*b, ctx, s.body);
      stamp(std::move(s));
      return;
    }
    case PrimKind::Break: {
      OStmt s;
      s.kind = OStmtKind::Break;
      stamp(std::move(s));
      return;
    }
    case PrimKind::Return: {
      OStmt s;
      s.kind = OStmtKind::Return;
      if (p.value) s.value = readable_expr(*p.value, ctx, sink);
      stamp(std::move(s));
      return;
    }
    case PrimKind::Try: {
      OStmt s;
      s.kind = OStmtKind::Try;
      for (const auto& b : p.body) map_primitive_to_statements(*b, ctx, s.body);
      for (const auto& c : p.catches) {
        OCatch oc;
        oc.exception_type = exception_java_type(c.exception);
        for (const auto& b : c.body) map_primitive_to_statements(*b, ctx, oc.body);
        s.catches.push_back(std::move(oc));
      }
      stamp(std::move(s));
      return;
    }
    case PrimKind::Throw: {
      OStmt s;
      s.kind = OStmtKind::Throw;
      s.exception_type = exception_java_type(p.exception);
      stamp(std::move(s));
      return;
    }
    case PrimKind::CallProcedure: {
      OStmt s;
      s.kind = OStmtKind::ExprStmt;
      if (!p.callee_ref.empty())
        s.expr = unit_call_expr(p.callee, p.args, ctx, sink);
      else
        s.expr = builtin_call_expr(p.callee, p.callee_original, p.args, ctx, sink);
      stamp(std::move(s));
      return;
    }
    case PrimKind::ShowMessage: {
      std::vector<OExpr> args;
      for (const auto& a : p.args) args.push_back(readable_expr(a, ctx, sink));
      OStmt s;
      s.kind = OStmtKind::ExprStmt;
      s.expr = make_call("", "showMessage", std::move(args));
      stamp(std::move(s));
      return;
    }
    case PrimKind::OpenView: {
      std::vector<OExpr> args;
      for (const auto& a : p.args) args.push_back(readable_expr(a, ctx, sink));
      OStmt s;
      s.kind = OStmtKind::ExprStmt;
      s.expr = make_call("", "navigateTo", std::move(args));
      stamp(std::move(s));
      return;
    }
    case PrimKind::ReadFrom:
    case PrimKind::ReadFromUI:
    case PrimKind::ManipulateData: {
      // Value-producing primitives in statement position: keep the effect.
      Readable wrap;
      wrap.kind = ReadableKind::Nested;
      wrap.prim = std::make_unique<Primitive>(clone_primitive(p));
      OStmt s;
      s.kind = OStmtKind::ExprStmt;
      s.expr = readable_expr(wrap, ctx, sink);
      stamp(std::move(s));
      return;
    }
  }
}

bool contains_modify_ui(const Primitive& p) {
  bool found = false;
  for_each_primitive(p, [&](const Primitive& q) {
    if (q.kind == PrimKind::ModifyUI) found = true;
  });
  return found;
}

bool process_primitive(const Primitive& p, MappingContext& ctx, std::vector<OStmt>& sink) {
  bool move_ui = contains_modify_ui(p);
  map_primitive_to_statements(p, ctx, sink);
  return move_ui;
}

// ---------------------------------------------------------------------------
// Event-handler separation (service/bean split)
// ---------------------------------------------------------------------------

SeparationResult separate_event_handler(const Code& code, MappingContext& ctx,
                                        const std::string& handler_name) {
  SeparationResult out;
  std::vector<OStmt> pending;

  auto flush_pending = [&]() {
    if (pending.empty()) return;
    ServiceFragmentMethod frag;
    frag.ordinal = static_cast<int>(out.fragments.size()) + 1;
    frag.statements = std::move(pending);
    pending.clear();
    out.fragments.push_back(std::move(frag));

    OStmt call;
    call.kind = OStmtKind::ExprStmt;
    call.name = "fragment-call";
    call.expr = make_call("", handler_name + std::to_string(out.fragments.back().ordinal), {});
    out.bean_statements.push_back(std::move(call));
  };

  int seq = 0;
  for (const auto& p : code.primitives) {
    ctx.origin_seq = seq++;
    if (!contains_modify_ui(*p)) {
      map_primitive_to_statements(*p, ctx, pending);
      continue;
    }
    flush_pending();
    std::size_t before = out.bean_statements.size();
    map_primitive_to_statements(*p, ctx, out.bean_statements);
    for (std::size_t i = before; i < out.bean_statements.size(); ++i)
      out.bean_statements[i].from_modify_ui = true;
  }
  flush_pending();
  ctx.origin_seq = -1;
  return out;
}

// ---------------------------------------------------------------------------
// Sharing and placement
// ---------------------------------------------------------------------------

std::vector<std::string> detect_shared_variables(const std::vector<MethodAccessRecord>& accesses) {
  std::vector<std::string> order;
  std::map<std::string, std::set<int>> methods;
  for (const auto& a : accesses) {
    auto& s = methods[a.var];
    if (s.empty()) order.push_back(a.var);
    s.insert(a.method);
  }
  std::vector<std::string> shared;
  for (const auto& v : order)
    if (methods[v].size() >= 2) shared.push_back(v);
  return shared;
}

PlacementResult place_variable_declaration(const std::vector<int>& parent_of,
                                           const std::vector<VarAccess>& accesses) {
  PlacementResult out;
  if (accesses.empty()) return out;
  auto ancestors = [&](int b) {
    std::vector<int> path;
    for (int cur = b; cur != -1; cur = parent_of[static_cast<std::size_t>(cur)])
      path.push_back(cur);
    return path;  // b .. root
  };
  auto lca = [&](int a, int b) {
    auto pa = ancestors(a);
    std::set<int> seen(pa.begin(), pa.end());
    for (int cur = b; cur != -1; cur = parent_of[static_cast<std::size_t>(cur)])
      if (seen.count(cur)) return cur;
    return 0;
  };
  int block = accesses[0].block;
  for (const auto& a : accesses) block = lca(block, a.block);
  out.block = block;
  out.warn = !accesses[0].is_write;
  return out;
}

// ---------------------------------------------------------------------------
// Statement-tree machinery (block ids, access scans, rewriting)
// ---------------------------------------------------------------------------

namespace {

// Depth-first traversal assigning stable block ids; the same allocation logic
// runs in every pass so ids line up.
class BlockTraverser {
 public:
  std::function<void(int /*id*/, int /*parent*/, std::vector<OStmt>&)> on_block;
  std::function<void(OStmt&, int /*block*/)> on_stmt;

  void run(std::vector<OStmt>& stmts) {
    next_ = 0;
    walk(stmts, -1);
  }

 private:
  int next_ = 0;

  void walk(std::vector<OStmt>& stmts, int parent) {
    int id = next_++;
    if (on_block) on_block(id, parent, stmts);
    // Index-based loop: on_block may insert into the list.
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      OStmt& s = stmts[i];
      if (on_stmt) on_stmt(s, id);
      switch (s.kind) {
        case OStmtKind::If:
          s.block_then = next_;
          walk(s.then_body, id);
          if (!s.else_body.empty()) {
            s.block_else = next_;
            walk(s.else_body, id);
          }
          break;
        case OStmtKind::Switch:
          for (auto& c : s.cases) walk(c.body, id);
          break;
        case OStmtKind::While:
        case OStmtKind::For:
        case OStmtKind::ForEach:
          s.block_body = next_;
          walk(s.body, id);
          break;
        case OStmtKind::Try:
          s.block_body = next_;
          walk(s.body, id);
          for (auto& c : s.catches) {
            c.block_id = next_;
            walk(c.body, id);
          }
          break;
        default:
          break;
      }
    }
  }
};

void scan_expr_reads(const OExpr& e, const std::function<void(const std::string&)>& fn) {
  if (e.kind == OExprKind::VarUse) fn(e.text);
  for (const auto& a : e.args) scan_expr_reads(a, fn);
}

void collect_loop_vars(const std::vector<OStmt>& stmts, std::set<std::string>& out) {
  for (const auto& s : stmts) {
    if (s.kind == OStmtKind::For && !s.loop_var.empty()) out.insert(s.loop_var);
    collect_loop_vars(s.then_body, out);
    collect_loop_vars(s.else_body, out);
    collect_loop_vars(s.body, out);
    for (const auto& c : s.cases) collect_loop_vars(c.body, out);
    for (const auto& c : s.catches) collect_loop_vars(c.body, out);
  }
}

struct MethodAccessScan {
  std::vector<int> parent_of;
  // per variable, ordered accesses
  std::map<std::string, std::vector<VarAccess>> accesses;
  std::vector<std::string> order;  // first-access order
  std::set<std::string> loop_vars;

  void record(const std::string& var, int block, bool write) {
    if (loop_vars.count(var)) return;
    auto it = accesses.find(var);
    if (it == accesses.end()) order.push_back(var);
    accesses[var].push_back({block, write});
  }

  void run(std::vector<OStmt>& stmts) {
    collect_loop_vars(stmts, loop_vars);
    BlockTraverser t;
    t.on_block = [&](int id, int parent, std::vector<OStmt>&) {
      if (static_cast<std::size_t>(id) >= parent_of.size())
        parent_of.resize(static_cast<std::size_t>(id) + 1, -1);
      parent_of[static_cast<std::size_t>(id)] = parent;
    };
    t.on_stmt = [&](OStmt& s, int block) {
      auto read = [&](const std::string& v) { record(v, block, false); };
      if (s.value) scan_expr_reads(*s.value, read);
      if (s.expr) scan_expr_reads(*s.expr, read);
      if (s.cond) scan_expr_reads(*s.cond, read);
      if (s.subject) scan_expr_reads(*s.subject, read);
      if (s.loop_from) scan_expr_reads(*s.loop_from, read);
      if (s.loop_to) scan_expr_reads(*s.loop_to, read);
      for (const auto& c : s.cases)
        if (c.label) scan_expr_reads(*c.label, read);
      if (s.kind == OStmtKind::Assign && s.symbolic_target) record(s.name, block, true);
    };
    t.run(stmts);
  }
};

bool stmt_tree_accesses(const OStmt& s, const std::string& var) {
  bool found = false;
  auto probe = [&](const std::string& v) {
    if (v == var) found = true;
  };
  if (s.value) scan_expr_reads(*s.value, probe);
  if (s.expr) scan_expr_reads(*s.expr, probe);
  if (s.cond) scan_expr_reads(*s.cond, probe);
  if (s.subject) scan_expr_reads(*s.subject, probe);
  if (s.loop_from) scan_expr_reads(*s.loop_from, probe);
  if (s.loop_to) scan_expr_reads(*s.loop_to, probe);
  for (const auto& c : s.cases)
    if (c.label) scan_expr_reads(*c.label, probe);
  if (s.kind == OStmtKind::Assign && s.symbolic_target && s.name == var) found = true;
  if (found) return true;
  auto any = [&](const std::vector<OStmt>& body) {
    for (const auto& child : body)
      if (stmt_tree_accesses(child, var)) return true;
    return false;
  };
  if (any(s.then_body) || any(s.else_body) || any(s.body)) return true;
  for (const auto& c : s.cases)
    if (any(c.body)) return true;
  for (const auto& c : s.catches)
    if (any(c.body)) return true;
  return false;
}

bool expr_tree_accesses(const OStmt& s, const std::string& var) {
  // Accesses excluding a direct symbolic write by this statement itself.
  bool found = false;
  auto probe = [&](const std::string& v) {
    if (v == var) found = true;
  };
  if (s.value) scan_expr_reads(*s.value, probe);
  if (s.expr) scan_expr_reads(*s.expr, probe);
  return found;
}

// Declares `var` inside `stmts` (the method body) at the placement block:
// fused with the first whole-statement assignment when possible.
void insert_declaration(std::vector<OStmt>& stmts, const std::string& var,
                        const std::string& java_type, int target_block, bool warn) {
  BlockTraverser t;
  bool done = false;
  t.on_block = [&](int id, int, std::vector<OStmt>& list) {
    if (done || id != target_block) return;
    done = true;
    std::size_t first = list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (stmt_tree_accesses(list[i], var)) {
        first = i;
        break;
      }
    }
    if (first < list.size()) {
      OStmt& s = list[first];
      bool self_read = expr_tree_accesses(s, var);
      if (s.kind == OStmtKind::Assign && s.symbolic_target && s.name == var && !self_read) {
        s.kind = OStmtKind::VarDecl;
        s.java_type = java_type;
        return;  // fused; stays symbolic for the rewrite pass
      }
    }
    OStmt decl;
    decl.kind = OStmtKind::VarDecl;
    decl.symbolic_target = true;
    decl.name = var;
    decl.java_type = java_type;
    decl.value = lit("null");
    if (warn) decl.comment = "Variable not explicitly initialized";
    list.insert(list.begin() + static_cast<long>(std::min(first, list.size())),
                std::move(decl));
  };
  t.run(stmts);
}

struct Rewriter {
  // UPPER name -> map key (shared / param routing)
  std::map<std::string, std::string> routed_keys;
  // UPPER name -> java type (for casts and declarations)
  std::map<std::string, std::string> java_types;
  std::set<std::string> loop_vars;

  bool routed(const std::string& v) const { return routed_keys.count(v) != 0; }

  std::string type_of(const std::string& v) const {
    auto it = java_types.find(v);
    return it == java_types.end() ? "Object" : it->second;
  }

  OExpr rewrite_expr(OExpr e) const {
    for (auto& a : e.args) a = rewrite_expr(std::move(a));
    if (e.kind != OExprKind::VarUse) return e;
    const std::string upper = e.text;
    if (loop_vars.count(upper)) return name_of(to_camel(upper));
    auto it = routed_keys.find(upper);
    if (it != routed_keys.end()) return make_cast(type_of(upper), map_get(it->second));
    return name_of(to_camel(upper));
  }

  static bool is_db_read(const OExpr& e) {
    return e.kind == OExprKind::Call && e.receiver.empty() && e.callee == "readFromDB";
  }

  void rewrite_stmts(std::vector<OStmt>& stmts) const {
    for (auto& s : stmts) {
      if (s.value) s.value = rewrite_expr(std::move(*s.value));
      if (s.expr) s.expr = rewrite_expr(std::move(*s.expr));
      if (s.cond) s.cond = rewrite_expr(std::move(*s.cond));
      if (s.subject) s.subject = rewrite_expr(std::move(*s.subject));
      if (s.loop_from) s.loop_from = rewrite_expr(std::move(*s.loop_from));
      if (s.loop_to) s.loop_to = rewrite_expr(std::move(*s.loop_to));
      for (auto& c : s.cases)
        if (c.label) c.label = rewrite_expr(std::move(*c.label));

      if (s.kind == OStmtKind::Assign && s.symbolic_target) {
        auto it = routed_keys.find(s.name);
        if (it != routed_keys.end()) {
          OStmt put = map_put_stmt(it->second, std::move(*s.value));
          put.origin_seq = s.origin_seq;
          put.from_modify_ui = s.from_modify_ui;
          s = std::move(put);
        } else {
          if (s.value && is_db_read(*s.value))
            s.value = make_cast(type_of(s.name), std::move(*s.value));
          s.name = to_camel(s.name);
          s.symbolic_target = false;
        }
      } else if (s.kind == OStmtKind::VarDecl && s.symbolic_target) {
        if (s.value && is_db_read(*s.value))
          s.value = make_cast(type_of(s.name), std::move(*s.value));
        s.name = to_camel(s.name);
        s.symbolic_target = false;
      }
      if (!s.loop_var.empty()) s.loop_var = to_camel(s.loop_var);

      rewrite_stmts(s.then_body);
      rewrite_stmts(s.else_body);
      rewrite_stmts(s.body);
      for (auto& c : s.cases) rewrite_stmts(c.body);
      for (auto& c : s.catches) rewrite_stmts(c.body);
    }
  }
};

// ---------------------------------------------------------------------------
// Stub requirements scan
// ---------------------------------------------------------------------------

struct StubNeeds {
  std::vector<std::string> ui_setters;
  std::vector<std::string> library;
  bool show_message = false;
  bool navigate = false;
  bool read_db = false;
  bool write_db = false;
  bool calls_units = false;

  void add_setter(const std::string& s) {
    if (std::find(ui_setters.begin(), ui_setters.end(), s) == ui_setters.end())
      ui_setters.push_back(s);
  }
  void add_library(const std::string& s) {
    if (std::find(library.begin(), library.end(), s) == library.end()) library.push_back(s);
  }
};

void scan_readable_for_stubs(const Readable& r, StubNeeds& needs, const OoGenOptions& options);

void scan_prim_for_stubs(const Primitive& p, StubNeeds& needs, const OoGenOptions& options) {
  switch (p.kind) {
    case PrimKind::ModifyUI:
      needs.add_setter("set" + to_pascal(p.ui.screen) + to_pascal(p.ui.item) +
                       to_pascal(p.property));
      break;
    case PrimKind::ShowMessage: needs.show_message = true; break;
    case PrimKind::OpenView: needs.navigate = true; break;
    case PrimKind::ReadFromDB: needs.read_db = true; break;
    case PrimKind::WriteToDB: needs.write_db = true; break;
    case PrimKind::CallProcedure:
      if (!p.callee_ref.empty()) {
        needs.calls_units = true;
      } else if (!options.builtin_map.count(p.callee) ||
                 options.builtin_map.at(p.callee).find('.') == std::string::npos) {
        auto it = options.builtin_map.find(p.callee);
        needs.add_library(it != options.builtin_map.end() ? it->second : to_camel(p.callee));
      }
      break;
    default: break;
  }
  for (const auto& i : p.inputs) scan_readable_for_stubs(i, needs, options);
  for (const auto& b : p.binds) scan_readable_for_stubs(b, needs, options);
  for (const auto& a : p.args) scan_readable_for_stubs(a, needs, options);
  if (p.subject) scan_readable_for_stubs(*p.subject, needs, options);
  auto scan_pexpr = [&](const PExpr& e, auto&& self) -> void {
    if (e.leaf) scan_readable_for_stubs(*e.leaf, needs, options);
    for (const auto& o : e.operands) self(o, self);
  };
  for (const auto& c : p.cases) {
    if (c.condition) scan_pexpr(*c.condition, scan_pexpr);
    if (c.match) scan_readable_for_stubs(*c.match, needs, options);
    for (const auto& b : c.body) scan_prim_for_stubs(*b, needs, options);
  }
  if (p.condition) scan_pexpr(*p.condition, scan_pexpr);
  if (p.loop_from) scan_readable_for_stubs(*p.loop_from, needs, options);
  if (p.loop_to) scan_readable_for_stubs(*p.loop_to, needs, options);
  for (const auto& b : p.body) scan_prim_for_stubs(*b, needs, options);
  for (const auto& c : p.catches)
    for (const auto& b : c.body) scan_prim_for_stubs(*b, needs, options);
  if (p.value) scan_readable_for_stubs(*p.value, needs, options);
}

void scan_readable_for_stubs(const Readable& r, StubNeeds& needs, const OoGenOptions& options) {
  if (r.kind == ReadableKind::ReturnValue) {
    if (!r.callee_ref.empty()) {
      needs.calls_units = true;
    } else if (!options.builtin_map.count(r.callee) ||
               options.builtin_map.at(r.callee).find('.') == std::string::npos) {
      auto it = options.builtin_map.find(r.callee);
      needs.add_library(it != options.builtin_map.end() ? it->second : to_camel(r.callee));
    }
  }
  if (r.kind == ReadableKind::Nested && r.prim) scan_prim_for_stubs(*r.prim, needs, options);
  for (const auto& a : r.args) scan_readable_for_stubs(a, needs, options);
}

OStmt comment_stmt(std::string text) {
  OStmt s;
  s.kind = OStmtKind::Comment;
  s.comment = std::move(text);
  return s;
}

void append_stub_methods(OClass& cls, const StubNeeds& needs) {
  for (const auto& setter : needs.ui_setters) {
    OMethod m;
    m.id = cls.name + "." + setter;
    m.name = setter;
    m.role = MethodRole::UISetterStub;
    m.visibility = "private";
    m.params = {{"value", "Object"}};
    m.body.push_back(comment_stmt("TODO: apply the property change to the widget"));
    cls.methods.push_back(std::move(m));
  }
  if (needs.show_message) {
    OMethod m;
    m.id = cls.name + ".showMessage";
    m.name = "showMessage";
    m.role = MethodRole::UISetterStub;
    m.visibility = "private";
    m.params = {{"message", "Object"}};
    m.body.push_back(comment_stmt("TODO: surface the message in the UI"));
    cls.methods.push_back(std::move(m));
  }
  if (needs.navigate) {
    OMethod m;
    m.id = cls.name + ".navigateTo";
    m.name = "navigateTo";
    m.role = MethodRole::UISetterStub;
    m.visibility = "private";
    m.params = {{"view", "Object"}};
    m.body.push_back(comment_stmt("TODO: navigation"));
    cls.methods.push_back(std::move(m));
  }
  for (const auto& lib : needs.library) {
    OMethod m;
    m.id = cls.name + "." + lib;
    m.name = lib;
    m.role = MethodRole::LibraryStub;
    m.visibility = "private";
    m.return_type = "Object";
    m.params = {{"args", "Object..."}};
    OStmt ret;
    ret.kind = OStmtKind::Return;
    ret.value = make_call("PlSqlLibrary", lib, {name_of("args")});
    m.body.push_back(std::move(ret));
    cls.methods.push_back(std::move(m));
  }
  if (needs.read_db) {
    OMethod m;
    m.id = cls.name + ".readFromDB";
    m.name = "readFromDB";
    m.role = MethodRole::DbHelper;
    m.visibility = "private";
    m.return_type = "Object";
    m.params = {{"sql", "String"}, {"args", "Object..."}};
    m.body.push_back(comment_stmt("TODO: run the query through the entity manager"));
    OStmt ret;
    ret.kind = OStmtKind::Return;
    ret.value = lit("null");
    m.body.push_back(std::move(ret));
    cls.methods.push_back(std::move(m));
  }
  if (needs.write_db) {
    OMethod m;
    m.id = cls.name + ".writeToDB";
    m.name = "writeToDB";
    m.role = MethodRole::DbHelper;
    m.visibility = "private";
    m.params = {{"sql", "String"}, {"args", "Object..."}};
    m.body.push_back(comment_stmt("TODO: run the update through the entity manager"));
    cls.methods.push_back(std::move(m));
  }
  if (needs.read_db || needs.write_db) {
    OAttribute emf;
    emf.name = "emf";
    emf.java_type = "EntityManagerFactory";
    cls.attributes.push_back(std::move(emf));
  }
}

// ---------------------------------------------------------------------------
// UI read/write inventories (bean pre-puts and write-backs)
// ---------------------------------------------------------------------------

struct UiUse {
  std::string screen;
  std::string item;
  std::string widget;
};

void add_ui_use(std::vector<UiUse>& v, const UIRef& ui) {
  for (const auto& u : v)
    if (u.screen == ui.screen && u.item == ui.item) return;
  v.push_back({ui.screen, ui.item, ui.widget});
}

void scan_ui_uses(const Code& code, std::vector<UiUse>& reads, std::vector<UiUse>& writes) {
  for_each_primitive(code, [&](const Primitive& p) {
    if (p.kind == PrimKind::ReadFromUI) add_ui_use(reads, p.ui);
    if (p.kind == PrimKind::WriteToUI) add_ui_use(writes, p.ui);
  });
}

bool stmts_reference_map(const std::vector<OStmt>& stmts) {
  bool found = false;
  std::function<void(const OExpr&)> scan_e = [&](const OExpr& e) {
    if (e.receiver == "map") found = true;
    if (e.kind == OExprKind::Name && e.text == "map") found = true;
    for (const auto& a : e.args) scan_e(a);
  };
  std::function<void(const std::vector<OStmt>&)> scan = [&](const std::vector<OStmt>& list) {
    for (const auto& s : list) {
      if (s.value) scan_e(*s.value);
      if (s.expr) scan_e(*s.expr);
      if (s.cond) scan_e(*s.cond);
      if (s.subject) scan_e(*s.subject);
      if (s.loop_from) scan_e(*s.loop_from);
      if (s.loop_to) scan_e(*s.loop_to);
      for (const auto& c : s.cases)
        if (c.label) scan_e(*c.label);
      scan(s.then_body);
      scan(s.else_body);
      scan(s.body);
      for (const auto& c : s.cases) scan(c.body);
      for (const auto& c : s.catches) scan(c.body);
    }
  };
  scan(stmts);
  return found;
}

}  // namespace

// ---------------------------------------------------------------------------
// platform_to_oo
// ---------------------------------------------------------------------------

OoResult platform_to_oo(const TargetPlatformModel& platform, const PrimitivesRoot& root,
                        const OoGenOptions& options) {
  OoResult out;
  out.platform = platform;
  out.model.form_name = platform.form_name;
  out.model.form_original = platform.form_original;
  out.model.file = platform.file;

  // Global knowledge.
  std::map<std::string, const Code*> code_by_id;
  for (const auto& c : root.codes) code_by_id[c.id] = &c;

  std::string app_class, app_field, app_service_id;
  for (const auto& s : platform.services)
    if (s.kind == ServiceKind::App) {
      app_class = s.name;
      app_field = lower_first(s.name);
      app_service_id = s.id;
    }

  std::map<std::string, std::string> unit_method;
  std::map<std::string, std::vector<TypedName>> unit_params;
  std::vector<const Code*> unit_codes;
  for (const auto& c : root.codes) {
    if (c.origin != CallableOrigin::ProgramUnit) continue;
    unit_method[c.name] = to_camel(c.name);
    unit_params[c.name] = c.params;
    unit_codes.push_back(&c);
  }

  auto make_ctx = [&](const Code& code) {
    MappingContext ctx;
    ctx.code = &code;
    ctx.root = &root;
    ctx.options = &options;
    ctx.diags = &out.diags;
    ctx.app_service_field = app_field;
    ctx.unit_method = unit_method;
    ctx.unit_params = unit_params;
    for (const auto& v : code.local_variables) ctx.var_types[v.name] = v.plsql_type;
    for (const auto& p : code.params) ctx.var_types[p.name] = p.plsql_type;
    return ctx;
  };

  auto reserve_unit_param_keys = [&](MappingContext& ctx) {
    for (const auto& [unit, params] : unit_params)
      for (const auto& k : param_keys_for_unit(params)) ctx.used_keys.insert(k);
  };

  // Per controller-service class under construction.
  std::map<std::string, OClass> controller_classes;  // service id -> class
  std::map<std::string, StubNeeds> controller_needs;
  std::vector<std::string> controller_order;

  std::vector<OClass> bean_classes;

  for (auto& bean : out.platform.beans) {
    // view id "view:<WINDOW>"
    std::string window;
    for (const auto& v : out.platform.views)
      if (v.id == bean.window) window = v.window;
    std::string view_class = to_pascal(window);
    std::string view_field = to_camel(window);

    std::string controller_id = bean.used_services.empty() ? "" : bean.used_services[0];
    std::string controller_class_name;
    for (const auto& s : out.platform.services)
      if (s.id == controller_id) controller_class_name = s.name;
    std::string controller_field = lower_first(controller_class_name);
    if (!controller_id.empty() && !controller_classes.count(controller_id)) {
      OClass cls;
      cls.name = controller_class_name;
      cls.role = ClassRole::ControllerService;
      cls.annotations = {"@Service"};
      cls.window = window;
      cls.source_file = platform.file;
      controller_classes[controller_id] = std::move(cls);
      controller_order.push_back(controller_id);
    }

    OClass bean_cls;
    bean_cls.name = bean.name;
    bean_cls.role = ClassRole::ManagedBean;
    bean_cls.annotations = {"@ManagedBean"};
    bean_cls.window = window;
    bean_cls.source_file = platform.file;

    StubNeeds bean_needs;

    for (auto& handler : bean.event_handlers) {
      auto code_it = code_by_id.find(handler.code);
      if (code_it == code_by_id.end()) {
        out.diags.error("O001", "handler " + handler.id + " references unknown code " +
                                    handler.code,
                        platform.file);
        continue;
      }
      const Code& code = *code_it->second;

      MappingContext ctx = make_ctx(code);
      reserve_unit_param_keys(ctx);

      SeparationResult sep = separate_event_handler(code, ctx, handler.name);

      // Stub requirements follow the separation split.
      for (const auto& p : code.primitives) {
        StubNeeds& sink = contains_modify_ui(*p) ? bean_needs : controller_needs[controller_id];
        scan_prim_for_stubs(*p, sink, options);
      }

      // methods[0] is the bean sequence, methods[1..] the fragments.
      std::vector<std::vector<OStmt>*> methods;
      methods.push_back(&sep.bean_statements);
      for (auto& f : sep.fragments) methods.push_back(&f.statements);

      // Access analysis across all methods of this handler chain.
      std::vector<MethodAccessRecord> records;
      std::vector<MethodAccessScan> scans(methods.size());
      for (std::size_t m = 0; m < methods.size(); ++m) {
        scans[m].run(*methods[m]);
        for (const auto& var : scans[m].order)
          for (std::size_t k = 0; k < scans[m].accesses[var].size(); ++k)
            records.push_back({var, static_cast<int>(m)});
      }
      std::vector<std::string> shared = detect_shared_variables(records);

      Rewriter rw;
      collect_loop_vars(sep.bean_statements, rw.loop_vars);
      for (auto& f : sep.fragments) collect_loop_vars(f.statements, rw.loop_vars);
      for (const auto& v : shared) {
        rw.routed_keys[v] = ctx.key_for(v);
        rw.java_types[v] = options.types.map(ctx.var_types.count(v) ? ctx.var_types[v] : "");
      }

      // Singleton placement inside the single accessing method.
      for (std::size_t m = 0; m < methods.size(); ++m) {
        for (const auto& var : scans[m].order) {
          if (std::find(shared.begin(), shared.end(), var) != shared.end()) continue;
          std::string jt = options.types.map(ctx.var_types.count(var) ? ctx.var_types[var] : "");
          rw.java_types[var] = jt;
          PlacementResult placement =
              place_variable_declaration(scans[m].parent_of, scans[m].accesses[var]);
          insert_declaration(*methods[m], var, jt, placement.block, placement.warn);
        }
      }

      for (auto* m : methods) rw.rewrite_stmts(*m);

      // Bean method assembly.
      std::vector<UiUse> ui_reads, ui_writes;
      scan_ui_uses(code, ui_reads, ui_writes);

      std::vector<OStmt> bean_body;
      for (const auto& u : ui_reads) {
        std::string key = ctx.key_for(u.screen + "." + u.item);
        OStmt put = map_put_stmt(key, make_call(view_field, "get" + to_pascal(u.item), {}));
        bean_body.push_back(std::move(put));
      }
      for (auto& s : sep.bean_statements) {
        if (s.name == "fragment-call" && s.expr) {
          s.expr->receiver = controller_field;
          s.expr->args.push_back(name_of("map"));
          s.name.clear();
        }
        bean_body.push_back(std::move(s));
      }
      for (const auto& u : ui_writes) {
        std::string key = ctx.key_for(u.screen + "." + u.item);
        OStmt set;
        set.kind = OStmtKind::ExprStmt;
        set.expr = make_call(view_field, "set" + to_pascal(u.item),
                             {make_cast(TypeMap::widget_java_type(u.widget), map_get(key))});
        bean_body.push_back(std::move(set));
      }
      if (stmts_reference_map(bean_body)) {
        OStmt decl;
        decl.kind = OStmtKind::VarDecl;
        decl.name = "map";
        decl.java_type = "Map<String, Object>";
        decl.value = make_new("HashMap<String, Object>");
        bean_body.insert(bean_body.begin(), std::move(decl));
      }

      OMethod bean_method;
      bean_method.id = bean_cls.name + "." + handler.name;
      bean_method.name = handler.name;
      bean_method.role = MethodRole::EventHandler;
      bean_method.body = std::move(bean_body);
      bean_cls.methods.push_back(std::move(bean_method));
      handler.method = bean_cls.name + "." + handler.name;

      // Fragment methods on the controller.
      for (auto& f : sep.fragments) {
        std::string frag_name = handler.name + std::to_string(f.ordinal);
        OMethod m;
        m.id = controller_class_name + "." + frag_name;
        m.name = frag_name;
        m.role = MethodRole::ServiceFragment;
        m.params = {{"map", "Map<String, Object>"}};
        m.body = std::move(f.statements);
        controller_classes[controller_id].methods.push_back(std::move(m));

        for (auto& svc : out.platform.services) {
          if (svc.id != controller_id) continue;
          EventHandlerServiceMethod em;
          em.code = code.id;
          em.method = controller_class_name + "." + frag_name;
          em.ordinal = f.ordinal;
          em.handler = handler.id;
          svc.event_methods.push_back(std::move(em));
        }
      }
    }

    // Bean fields: the view, the controller service, the app service if used.
    {
      OAttribute view_attr;
      view_attr.name = view_field;
      view_attr.java_type = view_class;
      view_attr.init = make_new(view_class);
      bean_cls.attributes.push_back(std::move(view_attr));
      if (!controller_class_name.empty()) {
        OAttribute svc_attr;
        svc_attr.name = controller_field;
        svc_attr.java_type = controller_class_name;
        svc_attr.annotations = {"@Autowired"};
        bean_cls.attributes.push_back(std::move(svc_attr));
      }
      if (bean_needs.calls_units && !app_class.empty()) {
        OAttribute app_attr;
        app_attr.name = app_field;
        app_attr.java_type = app_class;
        app_attr.annotations = {"@Autowired"};
        bean_cls.attributes.push_back(std::move(app_attr));
        bool listed = false;
        for (const auto& s : bean.used_services) listed = listed || s == app_service_id;
        if (!listed) bean.used_services.push_back(app_service_id);
      }
    }
    append_stub_methods(bean_cls, bean_needs);
    bean_classes.push_back(std::move(bean_cls));
  }

  // Controller service fields + stubs.
  for (const auto& id : controller_order) {
    OClass& cls = controller_classes[id];
    const StubNeeds& needs = controller_needs[id];
    if (needs.calls_units && !app_class.empty()) {
      OAttribute app_attr;
      app_attr.name = app_field;
      app_attr.java_type = app_class;
      app_attr.annotations = {"@Autowired"};
      cls.attributes.push_back(std::move(app_attr));
    }
    append_stub_methods(cls, needs);
  }

  // App service: one method per program unit.
  std::optional<OClass> app_cls;
  if (!app_class.empty()) {
    OClass cls;
    cls.name = app_class;
    cls.role = ClassRole::AppService;
    cls.annotations = {"@Service"};
    cls.source_file = platform.file;
    StubNeeds app_needs;

    for (const Code* unit : unit_codes) {
      MappingContext ctx = make_ctx(*unit);
      ctx.app_service_field.clear();  // sibling-unit calls are unqualified
      reserve_unit_param_keys(ctx);
      // Parameters claim their canonical keys first.
      auto keys = param_keys_for_unit(unit->params);
      Rewriter rw;
      for (std::size_t i = 0; i < unit->params.size(); ++i) {
        ctx.used_keys.insert(keys[i]);
        ctx.map_keys[unit->params[i].name] = keys[i];
        rw.routed_keys[unit->params[i].name] = keys[i];
        rw.java_types[unit->params[i].name] = options.types.map(unit->params[i].plsql_type);
      }

      std::vector<OStmt> body;
      int seq = 0;
      for (const auto& p : unit->primitives) {
        ctx.origin_seq = seq++;
        map_primitive_to_statements(*p, ctx, body);
      }
      ctx.origin_seq = -1;

      MethodAccessScan scan;
      scan.run(body);
      for (const auto& var : scan.order) {
        if (rw.routed_keys.count(var)) continue;  // parameters
        std::string jt = options.types.map(ctx.var_types.count(var) ? ctx.var_types[var] : "");
        rw.java_types[var] = jt;
        PlacementResult placement = place_variable_declaration(scan.parent_of, scan.accesses[var]);
        insert_declaration(body, var, jt, placement.block, placement.warn);
      }
      collect_loop_vars(body, rw.loop_vars);
      rw.rewrite_stmts(body);

      OMethod m;
      m.id = cls.name + "." + unit_method[unit->name];
      m.name = unit_method[unit->name];
      m.role = MethodRole::Helper;
      m.return_type = unit->return_type.empty() ? "void" : options.types.map(unit->return_type);
      m.params = {{"map", "Map<String, Object>"}};
      m.body = std::move(body);
      cls.methods.push_back(std::move(m));

      for (auto& svc : out.platform.services) {
        if (svc.kind != ServiceKind::App) continue;
        for (auto& hm : svc.helper_methods)
          if (hm.code == unit->id) hm.method = cls.name + "." + unit_method[unit->name];
      }

      for (const auto& p : unit->primitives) scan_prim_for_stubs(*p, app_needs, options);
    }
    append_stub_methods(cls, app_needs);
    app_cls = std::move(cls);
  }

  for (auto& cls : bean_classes) out.model.classes.push_back(std::move(cls));
  for (const auto& id : controller_order)
    out.model.classes.push_back(std::move(controller_classes[id]));
  if (app_cls) out.model.classes.push_back(std::move(*app_cls));

  return out;
}

}  // namespace f2j
