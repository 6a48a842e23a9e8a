#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "f2j/diagnostics.hpp"
#include "f2j/platform.hpp"
#include "f2j/primitives.hpp"

namespace f2j {

// ---------------------------------------------------------------------------
// Java-flavored OO syntax model
// ---------------------------------------------------------------------------

enum class OExprKind { Literal, Name, VarUse, Call, Binary, Unary, Cast, New };

// VarUse nodes are symbolic references to PL/SQL variables (upper-case names);
// the finalize pass rewrites them into plain names or map.get chains.
struct OExpr {
  OExprKind kind = OExprKind::Literal;
  std::string text;      // literal text / name / var / cast or new type
  std::string receiver;  // Call: empty means unqualified
  std::string callee;    // Call method name
  bool todo = false;     // Call: append the PL/SQL library TODO marker
  std::string op;        // Binary / Unary operator as Java text
  std::vector<OExpr> args;  // Call args; Binary [l,r]; Unary/Cast [x]; New args
};

enum class OStmtKind {
  VarDecl, Assign, ExprStmt, If, Switch, While, For, ForEach, Try, Return,
  Throw, Break, Comment,
};

struct OSwitchCase {
  std::optional<OExpr> label;  // absent -> default
  std::vector<struct OStmt> body;
};

struct OCatch {
  std::string exception_type;
  std::string var = "e";
  std::vector<struct OStmt> body;
  int block_id = -1;
};

struct OStmt {
  OStmtKind kind = OStmtKind::ExprStmt;

  // Provenance for tests/metrics: ordinal of the top-level primitive this
  // statement derives from, and whether it is ModifyUI-derived.
  int origin_seq = -1;
  bool from_modify_ui = false;

  // VarDecl / Assign
  std::string name;       // VarDecl: declared name; Assign: symbolic target (upper) or final name
  std::string java_type;
  bool symbolic_target = false;  // Assign to a PL/SQL variable pending rewrite
  std::optional<OExpr> value;    // VarDecl init / Assign RHS / Return value
  std::string comment;           // trailing comment text (e.g. init warning)

  // ExprStmt
  std::optional<OExpr> expr;

  // If / While
  std::optional<OExpr> cond;
  std::vector<OStmt> then_body;
  std::vector<OStmt> else_body;

  // Switch
  std::optional<OExpr> subject;
  std::vector<OSwitchCase> cases;

  // For
  std::string loop_var;
  std::optional<OExpr> loop_from, loop_to;

  // Try (catch-less Try renders as a bare block) / loop bodies
  std::vector<OStmt> body;
  std::vector<OCatch> catches;

  // Throw
  std::string exception_type;

  // Block identities for declaration placement; -1 outside any analysis.
  int block_then = -1, block_else = -1, block_body = -1;
};

enum class MethodRole {
  EventHandler,     // bean method per trigger
  ServiceFragment,  // <handler><ordinal> controller methods
  Helper,           // program-unit app-service methods
  UISetterStub,
  Accessor,
  DbHelper,
  LibraryStub,      // per-class delegate for unmapped PL/SQL built-ins
};

struct OParam {
  std::string name;
  std::string java_type;
};

struct OMethod {
  std::string id;  // <Class>.<name>
  std::string name;
  MethodRole role = MethodRole::Helper;
  std::string visibility = "public";
  std::string return_type = "void";
  std::vector<OParam> params;
  std::vector<OStmt> body;
};

struct OAttribute {
  std::string name;
  std::string java_type;
  std::vector<std::string> annotations;
  std::string visibility = "private";
  std::optional<OExpr> init;
};

enum class ClassRole { ManagedBean, ControllerService, AppService, View, ExceptionClass, Library };

struct OClass {
  std::string name;
  ClassRole role = ClassRole::ManagedBean;
  std::vector<std::string> annotations;
  std::vector<OAttribute> attributes;
  std::vector<OMethod> methods;
  std::string window;       // beans/views/controllers: source window (upper)
  std::string source_file;  // descriptor name for the header comment
  SourceSpan source_span;
};

struct OOModel {
  std::string form_name;
  std::string form_original;
  std::string file;
  std::vector<OClass> classes;  // beans + services only; support classes are emitted later
};

// ---------------------------------------------------------------------------
// Transformation surface
// ---------------------------------------------------------------------------

struct TypeMap {
  std::map<std::string, std::string> overrides;  // PLSQL -> Java
  std::string map(const std::string& plsql_type) const;
  static std::string widget_java_type(const std::string& widget);
};

struct OoGenOptions {
  std::map<std::string, std::string> builtin_map;  // PLSQL builtin -> Java callee (no TODO)
  TypeMap types;
};

// Symbol knowledge needed while mapping primitives of one Code.
struct MappingContext {
  const Code* code = nullptr;
  const PrimitivesRoot* root = nullptr;
  const OoGenOptions* options = nullptr;
  DiagnosticList* diags = nullptr;
  std::string app_service_field;  // camel field name of the form's app service
  std::map<std::string, std::string> unit_method;   // UPPER unit name -> java method name
  std::map<std::string, std::vector<TypedName>> unit_params;
  std::map<std::string, std::string> var_types;     // UPPER var -> PLSQL type
  std::map<std::string, std::string> map_keys;      // UPPER var/item -> map key
  std::set<std::string> used_keys;                  // claimed keys incl. reservations
  std::vector<std::string> loop_vars;               // active FOR variables (upper)
  int next_block = 0;
  int origin_seq = -1;

  std::string key_for(const std::string& upper_name);
  int new_block() { return next_block++; }
};

// Map keys a call to the given unit claims, in parameter order (camelCase with
// deterministic numeric suffixes on collision). Callers and the unit body use
// the same sequence.
std::vector<std::string> param_keys_for_unit(const std::vector<TypedName>& params);

// Maps one primitive to statements appended to `sink` (symbolic variable nodes,
// UI access already map-routed).
void map_primitive_to_statements(const Primitive& p, MappingContext& ctx,
                                 std::vector<OStmt>& sink);

// Appends the mapped statements and reports whether the primitive is ModifyUI
// or transitively contains one (the separation trigger).
bool process_primitive(const Primitive& p, MappingContext& ctx, std::vector<OStmt>& sink);

bool contains_modify_ui(const Primitive& p);

struct ServiceFragmentMethod {
  int ordinal = 1;
  std::vector<OStmt> statements;
};

struct SeparationResult {
  std::vector<OStmt> bean_statements;  // service calls interleaved with UI statements
  std::vector<ServiceFragmentMethod> fragments;
};

// Event-handler separation: walks top-level primitives, keeps non-UI runs in
// numbered service fragments and moves UI statements (with their service-call
// boundaries) into the bean sequence. Empty trailing/leading fragments are
// never materialized. The service-call placeholders in bean_statements are
// ExprStmt calls with callee "<handlerName><ordinal>" and empty receiver,
// fixed up by platform_to_oo.
SeparationResult separate_event_handler(const Code& code, MappingContext& ctx,
                                        const std::string& handler_name);

// Variable sharing: names accessed from two or more distinct methods.
struct MethodAccessRecord {
  std::string var;  // upper-normalized
  int method = 0;
};
std::vector<std::string> detect_shared_variables(const std::vector<MethodAccessRecord>& accesses);

// Declaration placement over a block tree (parent_of[i] == -1 for the root).
// Accesses are ordered by source position. Returns the target block and
// whether the not-initialized warning applies (first access is a read).
struct VarAccess {
  int block = 0;
  bool is_write = false;
};
struct PlacementResult {
  int block = 0;
  bool warn = false;
};
PlacementResult place_variable_declaration(const std::vector<int>& parent_of,
                                           const std::vector<VarAccess>& accesses);

struct OoResult {
  OOModel model;
  TargetPlatformModel platform;  // method references filled in
  DiagnosticList diags;
};

OoResult platform_to_oo(const TargetPlatformModel& platform, const PrimitivesRoot& root,
                        const OoGenOptions& options = {});

}  // namespace f2j
