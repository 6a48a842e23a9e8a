#include "f2j/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace f2j {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_value(const std::string& what, const std::string& got) {
  throw std::runtime_error("invalid " + what + " in model JSON: \"" + got + "\"");
}

// --------------------------------------------------------------------------
// Field helpers: empty/default members are omitted on write and defaulted on
// read, so a round-trip re-dump is byte-identical.
// --------------------------------------------------------------------------

void put(json& j, const char* key, const std::string& v) {
  if (!v.empty()) j[key] = v;
}
void put(json& j, const char* key, const std::vector<std::string>& v) {
  if (!v.empty()) j[key] = v;
}
void put_bool(json& j, const char* key, bool v) {
  if (v) j[key] = true;
}
void put_int(json& j, const char* key, int v, int dflt) {
  if (v != dflt) j[key] = v;
}

std::string get_str(const json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::string>() : std::string();
}
std::vector<std::string> get_strs(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}
bool get_bool(const json& j, const char* key) {
  return j.contains(key) && j.at(key).get<bool>();
}
int get_int(const json& j, const char* key, int dflt) {
  return j.contains(key) ? j.at(key).get<int>() : dflt;
}

json span_to_json(const SourceSpan& s) {
  return json::array({s.begin, s.end, s.line, s.col, s.end_line, s.end_col});
}

SourceSpan span_from_json(const json& j) {
  SourceSpan s;
  if (!j.is_array() || j.size() != 6) bad_value("span", j.dump());
  s.begin = j[0].get<std::uint32_t>();
  s.end = j[1].get<std::uint32_t>();
  s.line = j[2].get<std::uint32_t>();
  s.col = j[3].get<std::uint32_t>();
  s.end_line = j[4].get<std::uint32_t>();
  s.end_col = j[5].get<std::uint32_t>();
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --------------------------------------------------------------------------
// Enum name tables
// --------------------------------------------------------------------------

const char* element_kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::CallableUnit: return "CallableUnit";
    case ElementKind::BlockUnit: return "BlockUnit";
    case ElementKind::TryUnit: return "TryUnit";
    case ElementKind::CatchUnit: return "CatchUnit";
    case ElementKind::ActionElement: return "ActionElement";
    case ElementKind::StorableUnit: return "StorableUnit";
    case ElementKind::Screen: return "Screen";
    case ElementKind::UIResource: return "UIResource";
  }
  return "ActionElement";
}

ElementKind element_kind_parse(const std::string& s) {
  if (s == "CallableUnit") return ElementKind::CallableUnit;
  if (s == "BlockUnit") return ElementKind::BlockUnit;
  if (s == "TryUnit") return ElementKind::TryUnit;
  if (s == "CatchUnit") return ElementKind::CatchUnit;
  if (s == "ActionElement") return ElementKind::ActionElement;
  if (s == "StorableUnit") return ElementKind::StorableUnit;
  if (s == "Screen") return ElementKind::Screen;
  if (s == "UIResource") return ElementKind::UIResource;
  bad_value("element kind", s);
}

const char* origin_name(CallableOrigin o) {
  return o == CallableOrigin::Trigger ? "trigger" : "program_unit";
}
CallableOrigin origin_parse(const std::string& s) {
  if (s == "trigger") return CallableOrigin::Trigger;
  if (s == "program_unit") return CallableOrigin::ProgramUnit;
  bad_value("callable origin", s);
}

const char* scope_name(StorableScope s) {
  return s == StorableScope::Local ? "local" : "global";
}
StorableScope scope_parse(const std::string& s) {
  if (s == "local") return StorableScope::Local;
  if (s == "global") return StorableScope::Global;
  bad_value("storable scope", s);
}

const char* expr_kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::Literal: return "literal";
    case ExprKind::VarRef: return "var_ref";
    case ExprKind::BindRef: return "bind_ref";
    case ExprKind::Binary: return "binary";
    case ExprKind::Unary: return "unary";
    case ExprKind::Call: return "call";
  }
  return "literal";
}

ExprKind expr_kind_parse(const std::string& s) {
  if (s == "literal") return ExprKind::Literal;
  if (s == "var_ref") return ExprKind::VarRef;
  if (s == "bind_ref") return ExprKind::BindRef;
  if (s == "binary") return ExprKind::Binary;
  if (s == "unary") return ExprKind::Unary;
  if (s == "call") return ExprKind::Call;
  bad_value("expression kind", s);
}

const char* literal_kind_name(LiteralKind k) {
  switch (k) {
    case LiteralKind::Number: return "number";
    case LiteralKind::String: return "string";
    case LiteralKind::Bool: return "bool";
    case LiteralKind::Null: return "null";
    case LiteralKind::Opaque: return "opaque";
  }
  return "null";
}

LiteralKind literal_kind_parse(const std::string& s) {
  if (s == "number") return LiteralKind::Number;
  if (s == "string") return LiteralKind::String;
  if (s == "bool") return LiteralKind::Bool;
  if (s == "null") return LiteralKind::Null;
  if (s == "opaque") return LiteralKind::Opaque;
  bad_value("literal kind", s);
}

const char* bin_op_name(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Concat: return "||";
    case BinOp::Eq: return "=";
    case BinOp::NotEq: return "<>";
    case BinOp::Less: return "<";
    case BinOp::LessEq: return "<=";
    case BinOp::Greater: return ">";
    case BinOp::GreaterEq: return ">=";
    case BinOp::And: return "AND";
    case BinOp::Or: return "OR";
  }
  return "+";
}

BinOp bin_op_parse(const std::string& s) {
  if (s == "+") return BinOp::Add;
  if (s == "-") return BinOp::Sub;
  if (s == "*") return BinOp::Mul;
  if (s == "/") return BinOp::Div;
  if (s == "||") return BinOp::Concat;
  if (s == "=") return BinOp::Eq;
  if (s == "<>") return BinOp::NotEq;
  if (s == "<") return BinOp::Less;
  if (s == "<=") return BinOp::LessEq;
  if (s == ">") return BinOp::Greater;
  if (s == ">=") return BinOp::GreaterEq;
  if (s == "AND") return BinOp::And;
  if (s == "OR") return BinOp::Or;
  bad_value("binary operator", s);
}

const char* un_op_name(UnOp op) { return op == UnOp::Not ? "NOT" : "-"; }
UnOp un_op_parse(const std::string& s) {
  if (s == "NOT") return UnOp::Not;
  if (s == "-") return UnOp::Neg;
  bad_value("unary operator", s);
}

const char* m_op_name(MOp op) {
  switch (op) {
    case MOp::Add: return "add";
    case MOp::Sub: return "sub";
    case MOp::Mul: return "mul";
    case MOp::Div: return "div";
    case MOp::Concat: return "concat";
    case MOp::Neg: return "neg";
  }
  return "add";
}

MOp m_op_parse(const std::string& s) {
  if (s == "add") return MOp::Add;
  if (s == "sub") return MOp::Sub;
  if (s == "mul") return MOp::Mul;
  if (s == "div") return MOp::Div;
  if (s == "concat") return MOp::Concat;
  if (s == "neg") return MOp::Neg;
  bad_value("manipulate operator", s);
}

const char* readable_kind_name(ReadableKind k) {
  switch (k) {
    case ReadableKind::Constant: return "Constant";
    case ReadableKind::VariableRef: return "VariableRef";
    case ReadableKind::ReturnValue: return "ReturnValue";
    case ReadableKind::Nested: return "Nested";
  }
  return "Constant";
}

ReadableKind readable_kind_parse(const std::string& s) {
  if (s == "Constant") return ReadableKind::Constant;
  if (s == "VariableRef") return ReadableKind::VariableRef;
  if (s == "ReturnValue") return ReadableKind::ReturnValue;
  if (s == "Nested") return ReadableKind::Nested;
  bad_value("readable kind", s);
}

const char* pexpr_op_name(PExprOp op) {
  switch (op) {
    case PExprOp::And: return "and";
    case PExprOp::Or: return "or";
    case PExprOp::Not: return "not";
    case PExprOp::Less: return "lt";
    case PExprOp::LessEq: return "le";
    case PExprOp::Greater: return "gt";
    case PExprOp::GreaterEq: return "ge";
    case PExprOp::Eq: return "eq";
    case PExprOp::NotEq: return "ne";
    case PExprOp::Add: return "add";
    case PExprOp::Sub: return "sub";
    case PExprOp::Mul: return "mul";
    case PExprOp::Div: return "div";
    case PExprOp::Leaf: return "leaf";
  }
  return "leaf";
}

PExprOp pexpr_op_parse(const std::string& s) {
  if (s == "and") return PExprOp::And;
  if (s == "or") return PExprOp::Or;
  if (s == "not") return PExprOp::Not;
  if (s == "lt") return PExprOp::Less;
  if (s == "le") return PExprOp::LessEq;
  if (s == "gt") return PExprOp::Greater;
  if (s == "ge") return PExprOp::GreaterEq;
  if (s == "eq") return PExprOp::Eq;
  if (s == "ne") return PExprOp::NotEq;
  if (s == "add") return PExprOp::Add;
  if (s == "sub") return PExprOp::Sub;
  if (s == "mul") return PExprOp::Mul;
  if (s == "div") return PExprOp::Div;
  if (s == "leaf") return PExprOp::Leaf;
  bad_value("condition operator", s);
}

const char* pvar_kind_name(PVarKind k) {
  switch (k) {
    case PVarKind::Local: return "local";
    case PVarKind::Global: return "global";
    case PVarKind::UI: return "ui";
  }
  return "local";
}

PVarKind pvar_kind_parse(const std::string& s) {
  if (s == "local") return PVarKind::Local;
  if (s == "global") return PVarKind::Global;
  if (s == "ui") return PVarKind::UI;
  bad_value("variable kind", s);
}

const char* service_kind_name(ServiceKind k) {
  return k == ServiceKind::Controller ? "controller" : "app";
}
ServiceKind service_kind_parse(const std::string& s) {
  if (s == "controller") return ServiceKind::Controller;
  if (s == "app") return ServiceKind::App;
  bad_value("service kind", s);
}

const char* oexpr_kind_name(OExprKind k) {
  switch (k) {
    case OExprKind::Literal: return "literal";
    case OExprKind::Name: return "name";
    case OExprKind::VarUse: return "var_use";
    case OExprKind::Call: return "call";
    case OExprKind::Binary: return "binary";
    case OExprKind::Unary: return "unary";
    case OExprKind::Cast: return "cast";
    case OExprKind::New: return "new";
  }
  return "literal";
}

OExprKind oexpr_kind_parse(const std::string& s) {
  if (s == "literal") return OExprKind::Literal;
  if (s == "name") return OExprKind::Name;
  if (s == "var_use") return OExprKind::VarUse;
  if (s == "call") return OExprKind::Call;
  if (s == "binary") return OExprKind::Binary;
  if (s == "unary") return OExprKind::Unary;
  if (s == "cast") return OExprKind::Cast;
  if (s == "new") return OExprKind::New;
  bad_value("expression kind", s);
}

const char* ostmt_kind_name(OStmtKind k) {
  switch (k) {
    case OStmtKind::VarDecl: return "var_decl";
    case OStmtKind::Assign: return "assign";
    case OStmtKind::ExprStmt: return "expr";
    case OStmtKind::If: return "if";
    case OStmtKind::Switch: return "switch";
    case OStmtKind::While: return "while";
    case OStmtKind::For: return "for";
    case OStmtKind::ForEach: return "for_each";
    case OStmtKind::Try: return "try";
    case OStmtKind::Return: return "return";
    case OStmtKind::Throw: return "throw";
    case OStmtKind::Break: return "break";
    case OStmtKind::Comment: return "comment";
  }
  return "expr";
}

OStmtKind ostmt_kind_parse(const std::string& s) {
  if (s == "var_decl") return OStmtKind::VarDecl;
  if (s == "assign") return OStmtKind::Assign;
  if (s == "expr") return OStmtKind::ExprStmt;
  if (s == "if") return OStmtKind::If;
  if (s == "switch") return OStmtKind::Switch;
  if (s == "while") return OStmtKind::While;
  if (s == "for") return OStmtKind::For;
  if (s == "for_each") return OStmtKind::ForEach;
  if (s == "try") return OStmtKind::Try;
  if (s == "return") return OStmtKind::Return;
  if (s == "throw") return OStmtKind::Throw;
  if (s == "break") return OStmtKind::Break;
  if (s == "comment") return OStmtKind::Comment;
  bad_value("statement kind", s);
}

const char* method_role_name(MethodRole r) {
  switch (r) {
    case MethodRole::EventHandler: return "event_handler";
    case MethodRole::ServiceFragment: return "service_fragment";
    case MethodRole::Helper: return "helper";
    case MethodRole::UISetterStub: return "ui_setter_stub";
    case MethodRole::Accessor: return "accessor";
    case MethodRole::DbHelper: return "db_helper";
    case MethodRole::LibraryStub: return "library_stub";
  }
  return "helper";
}

MethodRole method_role_parse(const std::string& s) {
  if (s == "event_handler") return MethodRole::EventHandler;
  if (s == "service_fragment") return MethodRole::ServiceFragment;
  if (s == "helper") return MethodRole::Helper;
  if (s == "ui_setter_stub") return MethodRole::UISetterStub;
  if (s == "accessor") return MethodRole::Accessor;
  if (s == "db_helper") return MethodRole::DbHelper;
  if (s == "library_stub") return MethodRole::LibraryStub;
  bad_value("method role", s);
}

const char* class_role_name(ClassRole r) {
  switch (r) {
    case ClassRole::ManagedBean: return "managed_bean";
    case ClassRole::ControllerService: return "controller_service";
    case ClassRole::AppService: return "app_service";
    case ClassRole::View: return "view";
    case ClassRole::ExceptionClass: return "exception";
    case ClassRole::Library: return "library";
  }
  return "managed_bean";
}

ClassRole class_role_parse(const std::string& s) {
  if (s == "managed_bean") return ClassRole::ManagedBean;
  if (s == "controller_service") return ClassRole::ControllerService;
  if (s == "app_service") return ClassRole::AppService;
  if (s == "view") return ClassRole::View;
  if (s == "exception") return ClassRole::ExceptionClass;
  if (s == "library") return ClassRole::Library;
  bad_value("class role", s);
}

// --------------------------------------------------------------------------
// PL/SQL expression trees
// --------------------------------------------------------------------------

json expr_to_json(const Expr* e) {
  if (!e) return nullptr;
  json j = json::object();
  j["kind"] = expr_kind_name(e->kind);
  switch (e->kind) {
    case ExprKind::Literal:
      j["literal_kind"] = literal_kind_name(e->literal_kind);
      j["text"] = e->literal_text;
      break;
    case ExprKind::VarRef:
      j["name"] = e->name;
      put(j, "original", e->original);
      break;
    case ExprKind::BindRef:
      put(j, "block", e->block);
      j["item"] = e->name;
      put(j, "original", e->original);
      break;
    case ExprKind::Binary:
      j["op"] = bin_op_name(e->bin_op);
      j["lhs"] = expr_to_json(e->lhs.get());
      j["rhs"] = expr_to_json(e->rhs.get());
      break;
    case ExprKind::Unary:
      j["op"] = un_op_name(e->un_op);
      j["operand"] = expr_to_json(e->operand.get());
      break;
    case ExprKind::Call: {
      j["callee"] = e->name;
      put(j, "original", e->original);
      json args = json::array();
      for (const auto& a : e->args) args.push_back(expr_to_json(a.get()));
      j["args"] = std::move(args);
      break;
    }
  }
  j["span"] = span_to_json(e->span);
  return j;
}

ExprPtr expr_from_json(const json& j) {
  if (j.is_null()) return nullptr;
  auto e = std::make_unique<Expr>();
  e->kind = expr_kind_parse(j.at("kind").get<std::string>());
  switch (e->kind) {
    case ExprKind::Literal:
      e->literal_kind = literal_kind_parse(j.at("literal_kind").get<std::string>());
      e->literal_text = get_str(j, "text");
      break;
    case ExprKind::VarRef:
      e->name = get_str(j, "name");
      e->original = get_str(j, "original");
      break;
    case ExprKind::BindRef:
      e->block = get_str(j, "block");
      e->name = get_str(j, "item");
      e->original = get_str(j, "original");
      break;
    case ExprKind::Binary:
      e->bin_op = bin_op_parse(j.at("op").get<std::string>());
      e->lhs = expr_from_json(j.at("lhs"));
      e->rhs = expr_from_json(j.at("rhs"));
      break;
    case ExprKind::Unary:
      e->un_op = un_op_parse(j.at("op").get<std::string>());
      e->operand = expr_from_json(j.at("operand"));
      break;
    case ExprKind::Call:
      e->name = get_str(j, "callee");
      e->original = get_str(j, "original");
      for (const auto& a : j.at("args")) e->args.push_back(expr_from_json(a));
      break;
  }
  e->span = span_from_json(j.at("span"));
  return e;
}

// --------------------------------------------------------------------------
// CodeModel
// --------------------------------------------------------------------------

json element_to_json(const CodeElement& e) {
  json j = json::object();
  j["id"] = e.id;
  j["kind"] = element_kind_name(e.kind);
  put(j, "name", e.name);
  put(j, "tag", e.tag);

  json src = json::object();
  put(src, "file", e.source.file);
  src["span"] = span_to_json(e.source.span);
  put(src, "snippet", e.source.snippet);
  j["source"] = std::move(src);

  if (e.kind == ElementKind::CallableUnit) {
    j["origin"] = origin_name(e.origin);
    put(j, "stereotypes", e.stereotypes);
    put(j, "body", e.body);
    put(j, "ui_resource", e.ui_resource);
    if (!e.params.empty()) {
      json params = json::array();
      for (const auto& p : e.params) {
        json pj = json::object();
        pj["name"] = p.name;
        put(pj, "original", p.original);
        put(pj, "plsql_type", p.plsql_type);
        params.push_back(std::move(pj));
      }
      j["params"] = std::move(params);
    }
    put(j, "return_type", e.return_type);
    put(j, "event", e.event);
    put(j, "unit_kind", e.unit_kind);
  }
  put(j, "storable_units", e.storable_units);
  put(j, "children", e.children);
  put(j, "exception_name", e.exception_name);
  put(j, "reads", e.reads);
  put(j, "writes", e.writes);
  put(j, "calls", e.calls);
  if (!e.exprs.empty()) {
    json exprs = json::array();
    for (const auto& x : e.exprs) exprs.push_back(expr_to_json(x.get()));
    j["exprs"] = std::move(exprs);
  }
  put(j, "strings", e.strings);
  put(j, "detail", e.detail);
  if (e.kind == ElementKind::StorableUnit) {
    j["scope"] = scope_name(e.scope);
    put(j, "plsql_type", e.plsql_type);
    put(j, "original", e.original);
  }
  if (e.kind == ElementKind::Screen || e.kind == ElementKind::UIResource) {
    put(j, "owner", e.owner);
    put(j, "widget", e.widget);
    put(j, "resources", e.resources);
    put(j, "original", e.original);
  }
  return j;
}

CodeElement element_from_json(const json& j) {
  CodeElement e;
  e.id = j.at("id").get<std::string>();
  e.kind = element_kind_parse(j.at("kind").get<std::string>());
  e.name = get_str(j, "name");
  e.tag = get_str(j, "tag");
  const json& src = j.at("source");
  e.source.file = get_str(src, "file");
  e.source.span = span_from_json(src.at("span"));
  e.source.snippet = get_str(src, "snippet");
  if (e.kind == ElementKind::CallableUnit) {
    e.origin = origin_parse(j.at("origin").get<std::string>());
    e.stereotypes = get_strs(j, "stereotypes");
    e.body = get_str(j, "body");
    e.ui_resource = get_str(j, "ui_resource");
    if (j.contains("params")) {
      for (const auto& pj : j.at("params")) {
        TypedName p;
        p.name = pj.at("name").get<std::string>();
        p.original = get_str(pj, "original");
        p.plsql_type = get_str(pj, "plsql_type");
        e.params.push_back(std::move(p));
      }
    }
    e.return_type = get_str(j, "return_type");
    e.event = get_str(j, "event");
    e.unit_kind = get_str(j, "unit_kind");
  }
  e.storable_units = get_strs(j, "storable_units");
  e.children = get_strs(j, "children");
  e.exception_name = get_str(j, "exception_name");
  e.reads = get_strs(j, "reads");
  e.writes = get_strs(j, "writes");
  e.calls = get_strs(j, "calls");
  if (j.contains("exprs"))
    for (const auto& x : j.at("exprs")) e.exprs.push_back(expr_from_json(x));
  e.strings = get_strs(j, "strings");
  e.detail = get_str(j, "detail");
  if (e.kind == ElementKind::StorableUnit) {
    e.scope = scope_parse(j.at("scope").get<std::string>());
    e.plsql_type = get_str(j, "plsql_type");
    e.original = get_str(j, "original");
  }
  if (e.kind == ElementKind::Screen || e.kind == ElementKind::UIResource) {
    e.owner = get_str(j, "owner");
    e.widget = get_str(j, "widget");
    e.resources = get_strs(j, "resources");
    e.original = get_str(j, "original");
  }
  return e;
}

}  // namespace

std::string to_json(const CodeModel& m) {
  json j = json::object();
  j["model"] = "code";
  j["form_name"] = m.form_name;
  put(j, "form_original", m.form_original);
  put(j, "file", m.file);
  j["source_text"] = m.source_text;
  j["screens"] = m.screens;
  j["callables"] = m.callables;
  json elements = json::array();
  for (const auto& id : m.order) {
    auto it = m.elements.find(id);
    if (it != m.elements.end()) elements.push_back(element_to_json(it->second));
  }
  j["elements"] = std::move(elements);
  return dump(j);
}

CodeModel code_model_from_json(const std::string& text) {
  json j = json::parse(text);
  if (get_str(j, "model") != "code") bad_value("model tag", get_str(j, "model"));
  CodeModel m;
  m.form_name = get_str(j, "form_name");
  m.form_original = get_str(j, "form_original");
  m.file = get_str(j, "file");
  m.source_text = get_str(j, "source_text");
  m.screens = get_strs(j, "screens");
  m.callables = get_strs(j, "callables");
  for (const auto& ej : j.at("elements")) {
    CodeElement e = element_from_json(ej);
    m.order.push_back(e.id);
    m.elements.emplace(e.id, std::move(e));
  }
  return m;
}

// --------------------------------------------------------------------------
// Primitives
// --------------------------------------------------------------------------

namespace {

json primitive_to_json(const Primitive& p);
Primitive primitive_from_json(const json& j);

json readable_to_json(const Readable& r) {
  json j = json::object();
  j["kind"] = readable_kind_name(r.kind);
  switch (r.kind) {
    case ReadableKind::Constant:
      j["literal_kind"] = literal_kind_name(r.literal_kind);
      j["text"] = r.literal_text;
      break;
    case ReadableKind::VariableRef:
      j["var"] = r.var;
      break;
    case ReadableKind::ReturnValue: {
      j["callee"] = r.callee;
      put(j, "callee_original", r.callee_original);
      put(j, "callee_ref", r.callee_ref);
      json args = json::array();
      for (const auto& a : r.args) args.push_back(readable_to_json(a));
      j["args"] = std::move(args);
      break;
    }
    case ReadableKind::Nested:
      j["prim"] = r.prim ? primitive_to_json(*r.prim) : json();
      break;
  }
  return j;
}

Readable readable_from_json(const json& j) {
  Readable r;
  r.kind = readable_kind_parse(j.at("kind").get<std::string>());
  switch (r.kind) {
    case ReadableKind::Constant:
      r.literal_kind = literal_kind_parse(j.at("literal_kind").get<std::string>());
      r.literal_text = get_str(j, "text");
      break;
    case ReadableKind::VariableRef:
      r.var = get_str(j, "var");
      break;
    case ReadableKind::ReturnValue:
      r.callee = get_str(j, "callee");
      r.callee_original = get_str(j, "callee_original");
      r.callee_ref = get_str(j, "callee_ref");
      for (const auto& a : j.at("args")) r.args.push_back(readable_from_json(a));
      break;
    case ReadableKind::Nested:
      if (!j.at("prim").is_null())
        r.prim = std::make_unique<Primitive>(primitive_from_json(j.at("prim")));
      break;
  }
  return r;
}

json pexpr_to_json(const PExpr& e) {
  json j = json::object();
  j["op"] = pexpr_op_name(e.op);
  if (e.op == PExprOp::Leaf) {
    j["leaf"] = e.leaf ? readable_to_json(*e.leaf) : json();
  } else {
    json ops = json::array();
    for (const auto& o : e.operands) ops.push_back(pexpr_to_json(o));
    j["operands"] = std::move(ops);
  }
  return j;
}

PExpr pexpr_from_json(const json& j) {
  PExpr e;
  e.op = pexpr_op_parse(j.at("op").get<std::string>());
  if (e.op == PExprOp::Leaf) {
    if (!j.at("leaf").is_null()) e.leaf = readable_from_json(j.at("leaf"));
  } else {
    for (const auto& o : j.at("operands")) e.operands.push_back(pexpr_from_json(o));
  }
  return e;
}

json readables_to_json(const std::vector<Readable>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(readable_to_json(r));
  return a;
}

std::vector<Readable> readables_from_json(const json& j) {
  std::vector<Readable> out;
  for (const auto& r : j) out.push_back(readable_from_json(r));
  return out;
}

json prims_to_json(const std::vector<PrimPtr>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(primitive_to_json(*p));
  return a;
}

std::vector<PrimPtr> prims_from_json(const json& j) {
  std::vector<PrimPtr> out;
  for (const auto& p : j) out.push_back(std::make_unique<Primitive>(primitive_from_json(p)));
  return out;
}

json ui_ref_to_json(const UIRef& u) {
  json j = json::object();
  put(j, "screen", u.screen);
  put(j, "item", u.item);
  put(j, "widget", u.widget);
  return j;
}

UIRef ui_ref_from_json(const json& j) {
  UIRef u;
  u.screen = get_str(j, "screen");
  u.item = get_str(j, "item");
  u.widget = get_str(j, "widget");
  return u;
}

bool ui_ref_empty(const UIRef& u) {
  return u.screen.empty() && u.item.empty() && u.widget.empty();
}

json primitive_to_json(const Primitive& p) {
  json j = json::object();
  j["primitive"] = prim_kind_name(p.kind);
  put(j, "kdm_ref", p.kdm_ref);
  put(j, "label", p.label);
  switch (p.kind) {
    case PrimKind::ReadFrom:
    case PrimKind::WriteTo:
      j["var"] = p.var;
      if (!p.inputs.empty()) j["inputs"] = readables_to_json(p.inputs);
      break;
    case PrimKind::ReadFromUI:
    case PrimKind::WriteToUI:
      j["ui"] = ui_ref_to_json(p.ui);
      if (!p.inputs.empty()) j["inputs"] = readables_to_json(p.inputs);
      break;
    case PrimKind::ReadFromDB:
    case PrimKind::WriteToDB: {
      j["sql_kind"] = p.sql_kind;
      put(j, "columns", p.columns);
      if (!p.into_targets.empty()) {
        json targets = json::array();
        for (const auto& t : p.into_targets) targets.push_back(primitive_to_json(t));
        j["into_targets"] = std::move(targets);
      }
      put(j, "sql_tail", p.sql_tail);
      if (!p.binds.empty()) j["binds"] = readables_to_json(p.binds);
      break;
    }
    case PrimKind::ManipulateData:
      j["op"] = m_op_name(p.m_op);
      j["inputs"] = readables_to_json(p.inputs);
      put(j, "output_var", p.output_var);
      break;
    case PrimKind::ModifyUI:
      if (!ui_ref_empty(p.ui)) j["ui"] = ui_ref_to_json(p.ui);
      j["callee"] = p.callee;
      put(j, "callee_original", p.callee_original);
      put(j, "property", p.property);
      if (!p.args.empty()) j["args"] = readables_to_json(p.args);
      break;
    case PrimKind::CallProcedure:
    case PrimKind::ShowMessage:
    case PrimKind::OpenView:
      j["callee"] = p.callee;
      put(j, "callee_original", p.callee_original);
      put(j, "callee_ref", p.callee_ref);
      if (!p.args.empty()) j["args"] = readables_to_json(p.args);
      break;
    case PrimKind::SelectionFlow: {
      if (p.subject) j["subject"] = readable_to_json(*p.subject);
      json cases = json::array();
      for (const auto& c : p.cases) {
        json cj = json::object();
        if (c.condition) cj["condition"] = pexpr_to_json(*c.condition);
        if (c.match) cj["match"] = readable_to_json(*c.match);
        cj["body"] = prims_to_json(c.body);
        cases.push_back(std::move(cj));
      }
      j["cases"] = std::move(cases);
      break;
    }
    case PrimKind::Loop:
      j["loop_kind"] = p.loop_kind;
      if (p.condition) j["condition"] = pexpr_to_json(*p.condition);
      put(j, "loop_var", p.loop_var);
      if (p.loop_from) j["loop_from"] = readable_to_json(*p.loop_from);
      if (p.loop_to) j["loop_to"] = readable_to_json(*p.loop_to);
      j["body"] = prims_to_json(p.body);
      break;
    case PrimKind::Try: {
      j["body"] = prims_to_json(p.body);
      json catches = json::array();
      for (const auto& c : p.catches) {
        json cj = json::object();
        cj["exception"] = c.exception;
        cj["body"] = prims_to_json(c.body);
        put(cj, "kdm_ref", c.kdm_ref);
        catches.push_back(std::move(cj));
      }
      j["catches"] = std::move(catches);
      break;
    }
    case PrimKind::Return:
      if (p.value) j["value"] = readable_to_json(*p.value);
      break;
    case PrimKind::Throw:
      j["exception"] = p.exception;
      break;
    case PrimKind::Break:
      break;
  }
  return j;
}

Primitive primitive_from_json(const json& j) {
  Primitive p;
  auto kind = prim_kind_from_name(j.at("primitive").get<std::string>());
  if (!kind) bad_value("primitive kind", j.at("primitive").get<std::string>());
  p.kind = *kind;
  p.kdm_ref = get_strs(j, "kdm_ref");
  p.label = get_str(j, "label");
  switch (p.kind) {
    case PrimKind::ReadFrom:
    case PrimKind::WriteTo:
      p.var = get_str(j, "var");
      if (j.contains("inputs")) p.inputs = readables_from_json(j.at("inputs"));
      break;
    case PrimKind::ReadFromUI:
    case PrimKind::WriteToUI:
      p.ui = ui_ref_from_json(j.at("ui"));
      if (j.contains("inputs")) p.inputs = readables_from_json(j.at("inputs"));
      break;
    case PrimKind::ReadFromDB:
    case PrimKind::WriteToDB:
      p.sql_kind = get_str(j, "sql_kind");
      p.columns = get_strs(j, "columns");
      if (j.contains("into_targets"))
        for (const auto& t : j.at("into_targets"))
          p.into_targets.push_back(primitive_from_json(t));
      p.sql_tail = get_str(j, "sql_tail");
      if (j.contains("binds")) p.binds = readables_from_json(j.at("binds"));
      break;
    case PrimKind::ManipulateData:
      p.m_op = m_op_parse(j.at("op").get<std::string>());
      p.inputs = readables_from_json(j.at("inputs"));
      p.output_var = get_str(j, "output_var");
      break;
    case PrimKind::ModifyUI:
      if (j.contains("ui")) p.ui = ui_ref_from_json(j.at("ui"));
      p.callee = get_str(j, "callee");
      p.callee_original = get_str(j, "callee_original");
      p.property = get_str(j, "property");
      if (j.contains("args")) p.args = readables_from_json(j.at("args"));
      break;
    case PrimKind::CallProcedure:
    case PrimKind::ShowMessage:
    case PrimKind::OpenView:
      p.callee = get_str(j, "callee");
      p.callee_original = get_str(j, "callee_original");
      p.callee_ref = get_str(j, "callee_ref");
      if (j.contains("args")) p.args = readables_from_json(j.at("args"));
      break;
    case PrimKind::SelectionFlow:
      if (j.contains("subject")) p.subject = readable_from_json(j.at("subject"));
      for (const auto& cj : j.at("cases")) {
        Case c;
        if (cj.contains("condition")) c.condition = pexpr_from_json(cj.at("condition"));
        if (cj.contains("match")) c.match = readable_from_json(cj.at("match"));
        c.body = prims_from_json(cj.at("body"));
        p.cases.push_back(std::move(c));
      }
      break;
    case PrimKind::Loop:
      p.loop_kind = get_str(j, "loop_kind");
      if (j.contains("condition")) p.condition = pexpr_from_json(j.at("condition"));
      p.loop_var = get_str(j, "loop_var");
      if (j.contains("loop_from")) p.loop_from = readable_from_json(j.at("loop_from"));
      if (j.contains("loop_to")) p.loop_to = readable_from_json(j.at("loop_to"));
      p.body = prims_from_json(j.at("body"));
      break;
    case PrimKind::Try:
      p.body = prims_from_json(j.at("body"));
      for (const auto& cj : j.at("catches")) {
        CatchClause c;
        c.exception = cj.at("exception").get<std::string>();
        c.body = prims_from_json(cj.at("body"));
        c.kdm_ref = get_strs(cj, "kdm_ref");
        p.catches.push_back(std::move(c));
      }
      break;
    case PrimKind::Return:
      if (j.contains("value")) p.value = readable_from_json(j.at("value"));
      break;
    case PrimKind::Throw:
      p.exception = get_str(j, "exception");
      break;
    case PrimKind::Break:
      break;
  }
  return p;
}

json pvar_to_json(const PVar& v) {
  json j = json::object();
  j["kind"] = pvar_kind_name(v.kind);
  j["name"] = v.name;
  put(j, "original", v.original);
  put(j, "plsql_type", v.plsql_type);
  if (!ui_ref_empty(v.ui)) j["ui"] = ui_ref_to_json(v.ui);
  return j;
}

PVar pvar_from_json(const json& j) {
  PVar v;
  v.kind = pvar_kind_parse(j.at("kind").get<std::string>());
  v.name = get_str(j, "name");
  v.original = get_str(j, "original");
  v.plsql_type = get_str(j, "plsql_type");
  if (j.contains("ui")) v.ui = ui_ref_from_json(j.at("ui"));
  return v;
}

json code_to_json(const Code& c) {
  json j = json::object();
  j["id"] = c.id;
  j["origin"] = origin_name(c.origin);
  j["name"] = c.name;
  put(j, "event", c.event);
  if (!ui_ref_empty(c.ui)) j["ui"] = ui_ref_to_json(c.ui);
  put(j, "unit_kind", c.unit_kind);
  put(j, "return_type", c.return_type);
  if (!c.params.empty()) {
    json params = json::array();
    for (const auto& p : c.params) {
      json pj = json::object();
      pj["name"] = p.name;
      put(pj, "original", p.original);
      put(pj, "plsql_type", p.plsql_type);
      params.push_back(std::move(pj));
    }
    j["params"] = std::move(params);
  }
  if (!c.local_variables.empty()) {
    json vars = json::array();
    for (const auto& v : c.local_variables) vars.push_back(pvar_to_json(v));
    j["local_variables"] = std::move(vars);
  }
  j["primitives"] = prims_to_json(c.primitives);
  return j;
}

Code code_from_json(const json& j) {
  Code c;
  c.id = j.at("id").get<std::string>();
  c.origin = origin_parse(j.at("origin").get<std::string>());
  c.name = get_str(j, "name");
  c.event = get_str(j, "event");
  if (j.contains("ui")) c.ui = ui_ref_from_json(j.at("ui"));
  c.unit_kind = get_str(j, "unit_kind");
  c.return_type = get_str(j, "return_type");
  if (j.contains("params")) {
    for (const auto& pj : j.at("params")) {
      TypedName p;
      p.name = pj.at("name").get<std::string>();
      p.original = get_str(pj, "original");
      p.plsql_type = get_str(pj, "plsql_type");
      c.params.push_back(std::move(p));
    }
  }
  if (j.contains("local_variables"))
    for (const auto& vj : j.at("local_variables")) c.local_variables.push_back(pvar_from_json(vj));
  c.primitives = prims_from_json(j.at("primitives"));
  return c;
}

}  // namespace

std::string to_json(const PrimitivesRoot& r) {
  json j = json::object();
  j["model"] = "primitives";
  j["form_name"] = r.form_name;
  put(j, "form_original", r.form_original);
  put(j, "file", r.file);
  if (!r.variables.empty()) {
    json vars = json::array();
    for (const auto& v : r.variables) vars.push_back(pvar_to_json(v));
    j["variables"] = std::move(vars);
  }
  json codes = json::array();
  for (const auto& c : r.codes) codes.push_back(code_to_json(c));
  j["codes"] = std::move(codes);
  return dump(j);
}

PrimitivesRoot primitives_from_json(const std::string& text) {
  json j = json::parse(text);
  if (get_str(j, "model") != "primitives") bad_value("model tag", get_str(j, "model"));
  PrimitivesRoot r;
  r.form_name = get_str(j, "form_name");
  r.form_original = get_str(j, "form_original");
  r.file = get_str(j, "file");
  if (j.contains("variables"))
    for (const auto& vj : j.at("variables")) r.variables.push_back(pvar_from_json(vj));
  for (const auto& cj : j.at("codes")) r.codes.push_back(code_from_json(cj));
  return r;
}

// --------------------------------------------------------------------------
// Target platform model
// --------------------------------------------------------------------------

namespace {

json handler_to_json(const EventHandler& h) {
  json j = json::object();
  j["id"] = h.id;
  j["name"] = h.name;
  j["event"] = h.event;
  j["code"] = h.code;
  if (h.method) j["method"] = *h.method;
  j["component"] = h.component;
  return j;
}

EventHandler handler_from_json(const json& j) {
  EventHandler h;
  h.id = j.at("id").get<std::string>();
  h.name = get_str(j, "name");
  h.event = get_str(j, "event");
  h.code = get_str(j, "code");
  if (j.contains("method")) h.method = j.at("method").get<std::string>();
  h.component = get_str(j, "component");
  return h;
}

}  // namespace

std::string to_json(const TargetPlatformModel& m) {
  json j = json::object();
  j["model"] = "platform";
  j["form_name"] = m.form_name;
  put(j, "form_original", m.form_original);
  put(j, "file", m.file);
  put_int(j, "skipped_data_block_triggers", m.skipped_data_block_triggers, 0);
  put_int(j, "skipped_empty_triggers", m.skipped_empty_triggers, 0);

  json views = json::array();
  for (const auto& v : m.views) {
    json vj = json::object();
    vj["id"] = v.id;
    vj["window"] = v.window;
    put(vj, "original", v.original);
    vj["components"] = v.components;
    views.push_back(std::move(vj));
  }
  j["views"] = std::move(views);

  json components = json::array();
  for (const auto& c : m.components) {
    json cj = json::object();
    cj["id"] = c.id;
    cj["item"] = c.item;
    put(cj, "widget", c.widget);
    cj["event_handlers"] = c.event_handlers;
    components.push_back(std::move(cj));
  }
  j["components"] = std::move(components);

  json beans = json::array();
  for (const auto& b : m.beans) {
    json bj = json::object();
    bj["id"] = b.id;
    bj["name"] = b.name;
    bj["window"] = b.window;
    json attrs = json::array();
    for (const auto& a : b.attributes) {
      json aj = json::object();
      aj["ui_component"] = a.ui_component;
      aj["name"] = a.name;
      aj["java_type"] = a.java_type;
      attrs.push_back(std::move(aj));
    }
    bj["attributes"] = std::move(attrs);
    json handlers = json::array();
    for (const auto& h : b.event_handlers) handlers.push_back(handler_to_json(h));
    bj["event_handlers"] = std::move(handlers);
    put(bj, "used_services", b.used_services);
    beans.push_back(std::move(bj));
  }
  j["beans"] = std::move(beans);

  json services = json::array();
  for (const auto& s : m.services) {
    json sj = json::object();
    sj["id"] = s.id;
    sj["name"] = s.name;
    sj["kind"] = service_kind_name(s.kind);
    put(sj, "window", s.window);
    if (!s.event_methods.empty()) {
      json ems = json::array();
      for (const auto& em : s.event_methods) {
        json ej = json::object();
        ej["code"] = em.code;
        if (em.method) ej["method"] = *em.method;
        put_int(ej, "ordinal", em.ordinal, 1);
        ej["handler"] = em.handler;
        ems.push_back(std::move(ej));
      }
      sj["event_methods"] = std::move(ems);
    }
    if (!s.helper_methods.empty()) {
      json hms = json::array();
      for (const auto& hm : s.helper_methods) {
        json hj = json::object();
        hj["code"] = hm.code;
        if (hm.method) hj["method"] = *hm.method;
        hj["name"] = hm.name;
        hms.push_back(std::move(hj));
      }
      sj["helper_methods"] = std::move(hms);
    }
    services.push_back(std::move(sj));
  }
  j["services"] = std::move(services);
  return dump(j);
}

TargetPlatformModel platform_from_json(const std::string& text) {
  json j = json::parse(text);
  if (get_str(j, "model") != "platform") bad_value("model tag", get_str(j, "model"));
  TargetPlatformModel m;
  m.form_name = get_str(j, "form_name");
  m.form_original = get_str(j, "form_original");
  m.file = get_str(j, "file");
  m.skipped_data_block_triggers = get_int(j, "skipped_data_block_triggers", 0);
  m.skipped_empty_triggers = get_int(j, "skipped_empty_triggers", 0);
  for (const auto& vj : j.at("views")) {
    UserInterfaceView v;
    v.id = vj.at("id").get<std::string>();
    v.window = get_str(vj, "window");
    v.original = get_str(vj, "original");
    v.components = get_strs(vj, "components");
    m.views.push_back(std::move(v));
  }
  for (const auto& cj : j.at("components")) {
    UserInterfaceComponent c;
    c.id = cj.at("id").get<std::string>();
    c.item = get_str(cj, "item");
    c.widget = get_str(cj, "widget");
    c.event_handlers = get_strs(cj, "event_handlers");
    m.components.push_back(std::move(c));
  }
  for (const auto& bj : j.at("beans")) {
    ManagedBean b;
    b.id = bj.at("id").get<std::string>();
    b.name = get_str(bj, "name");
    b.window = get_str(bj, "window");
    for (const auto& aj : bj.at("attributes")) {
      ManagedBeanAttribute a;
      a.ui_component = aj.at("ui_component").get<std::string>();
      a.name = get_str(aj, "name");
      a.java_type = get_str(aj, "java_type");
      b.attributes.push_back(std::move(a));
    }
    for (const auto& hj : bj.at("event_handlers")) b.event_handlers.push_back(handler_from_json(hj));
    b.used_services = get_strs(bj, "used_services");
    m.beans.push_back(std::move(b));
  }
  for (const auto& sj : j.at("services")) {
    Service s;
    s.id = sj.at("id").get<std::string>();
    s.name = get_str(sj, "name");
    s.kind = service_kind_parse(sj.at("kind").get<std::string>());
    s.window = get_str(sj, "window");
    if (sj.contains("event_methods")) {
      for (const auto& ej : sj.at("event_methods")) {
        EventHandlerServiceMethod em;
        em.code = ej.at("code").get<std::string>();
        if (ej.contains("method")) em.method = ej.at("method").get<std::string>();
        em.ordinal = get_int(ej, "ordinal", 1);
        em.handler = get_str(ej, "handler");
        s.event_methods.push_back(std::move(em));
      }
    }
    if (sj.contains("helper_methods")) {
      for (const auto& hj : sj.at("helper_methods")) {
        HelperServiceMethod hm;
        hm.code = hj.at("code").get<std::string>();
        if (hj.contains("method")) hm.method = hj.at("method").get<std::string>();
        hm.name = get_str(hj, "name");
        s.helper_methods.push_back(std::move(hm));
      }
    }
    m.services.push_back(std::move(s));
  }
  return m;
}

// --------------------------------------------------------------------------
// OO model
// --------------------------------------------------------------------------

namespace {

json oexpr_to_json(const OExpr& e) {
  json j = json::object();
  j["kind"] = oexpr_kind_name(e.kind);
  put(j, "text", e.text);
  put(j, "receiver", e.receiver);
  put(j, "callee", e.callee);
  put_bool(j, "todo", e.todo);
  put(j, "op", e.op);
  if (!e.args.empty()) {
    json args = json::array();
    for (const auto& a : e.args) args.push_back(oexpr_to_json(a));
    j["args"] = std::move(args);
  }
  return j;
}

OExpr oexpr_from_json(const json& j) {
  OExpr e;
  e.kind = oexpr_kind_parse(j.at("kind").get<std::string>());
  e.text = get_str(j, "text");
  e.receiver = get_str(j, "receiver");
  e.callee = get_str(j, "callee");
  e.todo = get_bool(j, "todo");
  e.op = get_str(j, "op");
  if (j.contains("args"))
    for (const auto& a : j.at("args")) e.args.push_back(oexpr_from_json(a));
  return e;
}

json ostmt_to_json(const OStmt& s);

json ostmts_to_json(const std::vector<OStmt>& body) {
  json a = json::array();
  for (const auto& s : body) a.push_back(ostmt_to_json(s));
  return a;
}

OStmt ostmt_from_json(const json& j);

std::vector<OStmt> ostmts_from_json(const json& j) {
  std::vector<OStmt> out;
  for (const auto& s : j) out.push_back(ostmt_from_json(s));
  return out;
}

json ostmt_to_json(const OStmt& s) {
  json j = json::object();
  j["stmt"] = ostmt_kind_name(s.kind);
  put_int(j, "origin_seq", s.origin_seq, -1);
  put_bool(j, "from_modify_ui", s.from_modify_ui);
  put(j, "name", s.name);
  put(j, "java_type", s.java_type);
  put_bool(j, "symbolic_target", s.symbolic_target);
  if (s.value) j["value"] = oexpr_to_json(*s.value);
  put(j, "comment", s.comment);
  if (s.expr) j["expr"] = oexpr_to_json(*s.expr);
  if (s.cond) j["cond"] = oexpr_to_json(*s.cond);
  if (!s.then_body.empty() || s.kind == OStmtKind::If || s.kind == OStmtKind::While)
    j["then_body"] = ostmts_to_json(s.then_body);
  if (!s.else_body.empty()) j["else_body"] = ostmts_to_json(s.else_body);
  if (s.subject) j["subject"] = oexpr_to_json(*s.subject);
  if (s.kind == OStmtKind::Switch) {
    json cases = json::array();
    for (const auto& c : s.cases) {
      json cj = json::object();
      if (c.label) cj["label"] = oexpr_to_json(*c.label);
      cj["body"] = ostmts_to_json(c.body);
      cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
  }
  put(j, "loop_var", s.loop_var);
  if (s.loop_from) j["loop_from"] = oexpr_to_json(*s.loop_from);
  if (s.loop_to) j["loop_to"] = oexpr_to_json(*s.loop_to);
  if (!s.body.empty() || s.kind == OStmtKind::Try || s.kind == OStmtKind::For ||
      s.kind == OStmtKind::ForEach)
    j["body"] = ostmts_to_json(s.body);
  if (!s.catches.empty()) {
    json catches = json::array();
    for (const auto& c : s.catches) {
      json cj = json::object();
      cj["exception_type"] = c.exception_type;
      if (c.var != "e") cj["var"] = c.var;
      cj["body"] = ostmts_to_json(c.body);
      put_int(cj, "block_id", c.block_id, -1);
      catches.push_back(std::move(cj));
    }
    j["catches"] = std::move(catches);
  }
  put(j, "exception_type", s.exception_type);
  put_int(j, "block_then", s.block_then, -1);
  put_int(j, "block_else", s.block_else, -1);
  put_int(j, "block_body", s.block_body, -1);
  return j;
}

OStmt ostmt_from_json(const json& j) {
  OStmt s;
  s.kind = ostmt_kind_parse(j.at("stmt").get<std::string>());
  s.origin_seq = get_int(j, "origin_seq", -1);
  s.from_modify_ui = get_bool(j, "from_modify_ui");
  s.name = get_str(j, "name");
  s.java_type = get_str(j, "java_type");
  s.symbolic_target = get_bool(j, "symbolic_target");
  if (j.contains("value")) s.value = oexpr_from_json(j.at("value"));
  s.comment = get_str(j, "comment");
  if (j.contains("expr")) s.expr = oexpr_from_json(j.at("expr"));
  if (j.contains("cond")) s.cond = oexpr_from_json(j.at("cond"));
  if (j.contains("then_body")) s.then_body = ostmts_from_json(j.at("then_body"));
  if (j.contains("else_body")) s.else_body = ostmts_from_json(j.at("else_body"));
  if (j.contains("subject")) s.subject = oexpr_from_json(j.at("subject"));
  if (j.contains("cases")) {
    for (const auto& cj : j.at("cases")) {
      OSwitchCase c;
      if (cj.contains("label")) c.label = oexpr_from_json(cj.at("label"));
      c.body = ostmts_from_json(cj.at("body"));
      s.cases.push_back(std::move(c));
    }
  }
  s.loop_var = get_str(j, "loop_var");
  if (j.contains("loop_from")) s.loop_from = oexpr_from_json(j.at("loop_from"));
  if (j.contains("loop_to")) s.loop_to = oexpr_from_json(j.at("loop_to"));
  if (j.contains("body")) s.body = ostmts_from_json(j.at("body"));
  if (j.contains("catches")) {
    for (const auto& cj : j.at("catches")) {
      OCatch c;
      c.exception_type = cj.at("exception_type").get<std::string>();
      if (cj.contains("var")) c.var = cj.at("var").get<std::string>();
      c.body = ostmts_from_json(cj.at("body"));
      c.block_id = get_int(cj, "block_id", -1);
      s.catches.push_back(std::move(c));
    }
  }
  s.exception_type = get_str(j, "exception_type");
  s.block_then = get_int(j, "block_then", -1);
  s.block_else = get_int(j, "block_else", -1);
  s.block_body = get_int(j, "block_body", -1);
  return s;
}

}  // namespace

std::string to_json(const OOModel& m) {
  json j = json::object();
  j["model"] = "oo";
  j["form_name"] = m.form_name;
  put(j, "form_original", m.form_original);
  put(j, "file", m.file);
  json classes = json::array();
  for (const auto& c : m.classes) {
    json cj = json::object();
    cj["name"] = c.name;
    cj["role"] = class_role_name(c.role);
    put(cj, "annotations", c.annotations);
    put(cj, "window", c.window);
    put(cj, "source_file", c.source_file);
    cj["source_span"] = span_to_json(c.source_span);
    json attrs = json::array();
    for (const auto& a : c.attributes) {
      json aj = json::object();
      aj["name"] = a.name;
      aj["java_type"] = a.java_type;
      put(aj, "annotations", a.annotations);
      if (a.visibility != "private") aj["visibility"] = a.visibility;
      if (a.init) aj["init"] = oexpr_to_json(*a.init);
      attrs.push_back(std::move(aj));
    }
    cj["attributes"] = std::move(attrs);
    json methods = json::array();
    for (const auto& mth : c.methods) {
      json mj = json::object();
      mj["id"] = mth.id;
      mj["name"] = mth.name;
      mj["role"] = method_role_name(mth.role);
      if (mth.visibility != "public") mj["visibility"] = mth.visibility;
      if (mth.return_type != "void") mj["return_type"] = mth.return_type;
      if (!mth.params.empty()) {
        json params = json::array();
        for (const auto& p : mth.params) {
          json pj = json::object();
          pj["name"] = p.name;
          pj["java_type"] = p.java_type;
          params.push_back(std::move(pj));
        }
        mj["params"] = std::move(params);
      }
      mj["body"] = ostmts_to_json(mth.body);
      methods.push_back(std::move(mj));
    }
    cj["methods"] = std::move(methods);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  return dump(j);
}

OOModel oo_from_json(const std::string& text) {
  json j = json::parse(text);
  if (get_str(j, "model") != "oo") bad_value("model tag", get_str(j, "model"));
  OOModel m;
  m.form_name = get_str(j, "form_name");
  m.form_original = get_str(j, "form_original");
  m.file = get_str(j, "file");
  for (const auto& cj : j.at("classes")) {
    OClass c;
    c.name = cj.at("name").get<std::string>();
    c.role = class_role_parse(cj.at("role").get<std::string>());
    c.annotations = get_strs(cj, "annotations");
    c.window = get_str(cj, "window");
    c.source_file = get_str(cj, "source_file");
    c.source_span = span_from_json(cj.at("source_span"));
    for (const auto& aj : cj.at("attributes")) {
      OAttribute a;
      a.name = aj.at("name").get<std::string>();
      a.java_type = get_str(aj, "java_type");
      a.annotations = get_strs(aj, "annotations");
      if (aj.contains("visibility")) a.visibility = aj.at("visibility").get<std::string>();
      if (aj.contains("init")) a.init = oexpr_from_json(aj.at("init"));
      c.attributes.push_back(std::move(a));
    }
    for (const auto& mj : cj.at("methods")) {
      OMethod mth;
      mth.id = mj.at("id").get<std::string>();
      mth.name = get_str(mj, "name");
      mth.role = method_role_parse(mj.at("role").get<std::string>());
      if (mj.contains("visibility")) mth.visibility = mj.at("visibility").get<std::string>();
      if (mj.contains("return_type")) mth.return_type = mj.at("return_type").get<std::string>();
      if (mj.contains("params")) {
        for (const auto& pj : mj.at("params")) {
          OParam p;
          p.name = pj.at("name").get<std::string>();
          p.java_type = get_str(pj, "java_type");
          mth.params.push_back(std::move(p));
        }
      }
      mth.body = ostmts_from_json(mj.at("body"));
      c.methods.push_back(std::move(mth));
    }
    m.classes.push_back(std::move(c));
  }
  return m;
}

// --------------------------------------------------------------------------
// Metrics
// --------------------------------------------------------------------------

namespace {

json stage_to_json(const StageCounts& s) {
  json j = json::object();
  j["triggers_or_methods"] = s.triggers_or_methods;
  j["program_units_or_methods"] = s.program_units_or_methods;
  j["sql_statements"] = s.sql_statements;
  put_int(j, "skipped_data_block_triggers", s.skipped_data_block_triggers, 0);
  put_int(j, "empty_triggers", s.empty_triggers, 0);
  return j;
}

}  // namespace

std::string to_json(const MetricsReport& r) {
  json j = json::object();
  j["model"] = "metrics";
  j["form_name"] = r.form_name;
  j["forms"] = stage_to_json(r.forms);
  j["kdm"] = stage_to_json(r.kdm);
  j["primitives"] = stage_to_json(r.primitives);
  j["platform"] = stage_to_json(r.platform);
  j["oo"] = stage_to_json(r.oo);
  j["java"] = stage_to_json(r.java);
  j["select_into_extra_targets"] = r.select_into_extra_targets;
  return dump(j);
}

}  // namespace f2j
