#include "doctest.h"

#include <random>

#include "f2j/oo_model.hpp"
#include "f2j/parser.hpp"
#include "f2j/pipeline.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace f2j;
using testutil::contains;
using testutil::find_class;
using testutil::find_method;

namespace {

OoResult oo_from(const std::string& text, const std::string& file = "mini.form") {
  FormParseResult p = parse_form(text, file);
  REQUIRE(p.ok());
  InjectResult i = inject(*p.bundle);
  REQUIRE(!i.diags.has_errors());
  PrimitivesResult pr = kdm_to_primitives(i.model);
  REQUIRE(!pr.diags.has_errors());
  PlatformResult pl = primitives_to_platform(pr.root, i.model);
  REQUIRE(!pl.diags.has_errors());
  return platform_to_oo(pl.model, pr.root);
}

const OOModel& renew_oo() {
  const auto& art = testutil::renew_artifacts();
  REQUIRE(art.oo.has_value());
  return *art.oo;
}

void check_no_modify_ui(const std::vector<OStmt>& body) {
  for (const auto& s : body) {
    CHECK(!s.from_modify_ui);
    check_no_modify_ui(s.then_body);
    check_no_modify_ui(s.else_body);
    check_no_modify_ui(s.body);
    for (const auto& c : s.cases) check_no_modify_ui(c.body);
    for (const auto& c : s.catches) check_no_modify_ui(c.body);
  }
}

void collect_decl_names(const std::vector<OStmt>& body, std::vector<std::string>& out) {
  for (const auto& s : body) {
    if (s.kind == OStmtKind::VarDecl) out.push_back(s.name);
    collect_decl_names(s.then_body, out);
    collect_decl_names(s.else_body, out);
    collect_decl_names(s.body, out);
    for (const auto& c : s.cases) collect_decl_names(c.body, out);
    for (const auto& c : s.catches) collect_decl_names(c.body, out);
  }
}

}  // namespace

TEST_CASE("param keys are camelCase with deterministic suffixes") {
  std::vector<TypedName> params = {{"COMPANY_NAME", "company_name", "VARCHAR2"}};
  auto keys = param_keys_for_unit(params);
  REQUIRE(keys.size() == 1);
  CHECK(keys[0] == "companyName");

  std::vector<TypedName> colliding = {{"MY_VAR", "my_var", "NUMBER"},
                                      {"MY__VAR", "my__var", "NUMBER"},
                                      {"MY___VAR", "my___var", "NUMBER"}};
  auto suffixed = param_keys_for_unit(colliding);
  REQUIRE(suffixed.size() == 3);
  CHECK(suffixed[0] == "myVar");
  CHECK(suffixed[1] == "myVar2");
  CHECK(suffixed[2] == "myVar3");
}

TEST_CASE("type mapping") {
  TypeMap types;
  CHECK(types.map("VARCHAR2") == "String");
  CHECK(types.map("VARCHAR2(256)") == "String");
  CHECK(types.map("number") == "Double");
  CHECK(types.map("INTEGER") == "Integer");
  CHECK(types.map("BOOLEAN") == "Boolean");
  CHECK(types.map("DATE") == "Date");
  CHECK(types.map("CLOB") == "Object");

  TypeMap with_overrides;
  with_overrides.overrides["NUMBER"] = "java.math.BigDecimal";
  CHECK(with_overrides.map("NUMBER(10,2)") == "java.math.BigDecimal");
  CHECK(with_overrides.map("VARCHAR2") == "String");

  CHECK(TypeMap::widget_java_type("CHECKBOX") == "Boolean");
  CHECK(TypeMap::widget_java_type("TEXT") == "String");
  CHECK(TypeMap::widget_java_type("BUTTON") == "String");
  CHECK(TypeMap::widget_java_type("DISPLAY") == "String");
}

TEST_CASE("declaration placement: hand-picked trees") {
  // Single root block.
  PlacementResult r = place_variable_declaration({-1}, {{0, true}});
  CHECK(r.block == 0);
  CHECK(!r.warn);

  // Root with two children: siblings hoist to the root.
  r = place_variable_declaration({-1, 0, 0}, {{1, true}, {2, false}});
  CHECK(r.block == 0);
  CHECK(!r.warn);

  // First access is a read: warn.
  r = place_variable_declaration({-1, 0, 0}, {{1, false}, {2, true}});
  CHECK(r.block == 0);
  CHECK(r.warn);

  // All accesses in one nested block stay there.
  r = place_variable_declaration({-1, 0, 1, 2}, {{3, true}, {3, false}});
  CHECK(r.block == 3);
  CHECK(!r.warn);

  // Ancestor/descendant pair lands on the ancestor.
  r = place_variable_declaration({-1, 0, 1, 2}, {{3, true}, {1, false}});
  CHECK(r.block == 1);
  CHECK(!r.warn);

  // No accesses: method root, no warning.
  r = place_variable_declaration({-1, 0}, {});
  CHECK(r.block == 0);
  CHECK(!r.warn);
}

TEST_CASE("declaration placement agrees with the brute-force oracle") {
  std::mt19937 rng(20260825);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> parent_of(static_cast<std::size_t>(n));
    parent_of[0] = -1;
    for (int i = 1; i < n; ++i) parent_of[static_cast<std::size_t>(i)] = static_cast<int>(rng() % static_cast<unsigned>(i));
    int m = 1 + static_cast<int>(rng() % 8);
    std::vector<VarAccess> accesses;
    for (int i = 0; i < m; ++i)
      accesses.push_back({static_cast<int>(rng() % static_cast<unsigned>(n)), rng() % 2 == 0});
    PlacementResult got = place_variable_declaration(parent_of, accesses);
    PlacementResult want = oracle::lca_placement(parent_of, accesses);
    REQUIRE(got.block == want.block);
    REQUIRE(got.warn == want.warn);
  }
}

TEST_CASE("shared variable detection keeps first-appearance order") {
  std::vector<MethodAccessRecord> records = {
      {"ALPHA", 1}, {"BETA", 1}, {"ALPHA", 2}, {"GAMMA", 2},
      {"BETA", 1},  {"GAMMA", 3}, {"DELTA", 2},
  };
  auto shared = detect_shared_variables(records);
  REQUIRE(shared.size() == 2);
  CHECK(shared[0] == "ALPHA");
  CHECK(shared[1] == "GAMMA");

  CHECK(detect_shared_variables({}).empty());
  CHECK(detect_shared_variables({{"X", 1}, {"X", 1}}).empty());
}

TEST_CASE("fixture produces bean, controller, and app service classes") {
  const OOModel& model = renew_oo();
  REQUIRE(model.classes.size() == 3);
  CHECK(model.classes[0].name == "RenewGrantsManagedBean");
  CHECK(model.classes[0].role == ClassRole::ManagedBean);
  CHECK(model.classes[1].name == "RenewGrantsService");
  CHECK(model.classes[1].role == ClassRole::ControllerService);
  CHECK(model.classes[2].name == "RenewGrantsAppService");
  CHECK(model.classes[2].role == ClassRole::AppService);
}

TEST_CASE("fixture bean handler interleaves service calls with UI work") {
  const OClass* bean = find_class(renew_oo(), "RenewGrantsManagedBean");
  REQUIRE(bean != nullptr);
  const OMethod* handler = find_method(*bean, "newGrantButtonWhenButtonPressed");
  REQUIRE(handler != nullptr);
  CHECK(handler->role == MethodRole::EventHandler);
  CHECK(handler->return_type == "void");
  CHECK(handler->params.empty());

  const auto& body = handler->body;
  REQUIRE(body.size() == 9);
  CHECK(body[0].kind == OStmtKind::VarDecl);
  CHECK(body[0].name == "map");
  CHECK(body[0].java_type == "Map<String, Object>");
  REQUIRE(body[0].value.has_value());
  CHECK(body[0].value->kind == OExprKind::New);
  CHECK(body[0].value->text == "HashMap<String, Object>");

  // Three UI reads pre-loaded into the map.
  for (int i = 1; i <= 3; ++i) {
    CHECK(body[static_cast<std::size_t>(i)].kind == OStmtKind::ExprStmt);
    REQUIRE(body[static_cast<std::size_t>(i)].expr.has_value());
    CHECK(body[static_cast<std::size_t>(i)].expr->receiver == "map");
    CHECK(body[static_cast<std::size_t>(i)].expr->callee == "put");
  }
  CHECK(contains(body[1].expr->args[0].text, "company"));
  CHECK(contains(body[2].expr->args[0].text, "year"));
  CHECK(contains(body[3].expr->args[0].text, "grantCode"));

  // First service fragment call.
  REQUIRE(body[4].expr.has_value());
  CHECK(body[4].expr->receiver == "renewGrantsService");
  CHECK(body[4].expr->callee == "newGrantButtonWhenButtonPressed1");

  // UI branch stays in the bean and is flagged as ModifyUI-derived.
  CHECK(body[5].kind == OStmtKind::If);
  CHECK(body[5].from_modify_ui);
  REQUIRE(body[5].then_body.size() == 1);
  REQUIRE(body[5].then_body[0].expr.has_value());
  CHECK(body[5].then_body[0].expr->callee == "setRenewCompanyGrantsGrantRenewedVisible");
  CHECK(body[5].then_body[0].expr->receiver.empty());
  REQUIRE(body[5].else_body.size() == 1);
  CHECK(body[5].else_body[0].expr->callee == "setRenewCompanyGrantsThresholdNotExceededVisible");

  // Second fragment call, then UI write-backs.
  CHECK(body[6].expr->callee == "newGrantButtonWhenButtonPressed2");
  CHECK(body[7].expr->receiver == "renewGrants");
  CHECK(body[7].expr->callee == "setThresholdDiference");
  CHECK(body[8].expr->callee == "setTotalAmount");
}

TEST_CASE("fixture bean support methods") {
  const OClass* bean = find_class(renew_oo(), "RenewGrantsManagedBean");
  REQUIRE(bean != nullptr);

  const OMethod* stub = find_method(*bean, "setRenewCompanyGrantsGrantRenewedVisible");
  REQUIRE(stub != nullptr);
  CHECK(stub->role == MethodRole::UISetterStub);
  CHECK(stub->visibility == "private");
  REQUIRE(stub->params.size() == 1);
  CHECK(stub->params[0].java_type == "Object");

  const OMethod* getter = find_method(*bean, "getRenewGrants");
  REQUIRE(getter != nullptr);
  CHECK(getter->role == MethodRole::Accessor);
  CHECK(find_method(*bean, "setRenewGrants") != nullptr);
  CHECK(find_method(*bean, "getRenewGrantsService") != nullptr);
  CHECK(find_method(*bean, "setRenewGrantsService") != nullptr);
}

TEST_CASE("fixture service fragments carry the non-UI logic") {
  const OClass* service = find_class(renew_oo(), "RenewGrantsService");
  REQUIRE(service != nullptr);

  const OMethod* first = find_method(*service, "newGrantButtonWhenButtonPressed1");
  REQUIRE(first != nullptr);
  CHECK(first->role == MethodRole::ServiceFragment);
  REQUIRE(first->params.size() == 1);
  CHECK(first->params[0].name == "map");
  CHECK(first->params[0].java_type == "Map<String, Object>");

  REQUIRE(first->body.size() == 1);
  const OStmt& guarded = first->body[0];
  CHECK(guarded.kind == OStmtKind::Try);
  REQUIRE(guarded.body.size() == 7);
  CHECK(guarded.body[0].kind == OStmtKind::ExprStmt);  // map.put("companyName", ...)
  CHECK(guarded.body[1].kind == OStmtKind::VarDecl);
  CHECK(guarded.body[1].name == "companyName");
  CHECK(guarded.body[1].java_type == "String");
  REQUIRE(guarded.body[1].value.has_value());
  CHECK(guarded.body[1].value->kind == OExprKind::Call);
  CHECK(guarded.body[1].value->receiver == "renewGrantsAppService");
  CHECK(guarded.body[1].value->callee == "normalizeCompanyName");
  CHECK(guarded.body[2].kind == OStmtKind::ExprStmt);  // moneyPaid
  CHECK(guarded.body[3].kind == OStmtKind::ExprStmt);  // threshold
  CHECK(guarded.body[4].kind == OStmtKind::ExprStmt);  // endowment
  CHECK(guarded.body[5].kind == OStmtKind::VarDecl);   // fused: Double total = ...
  CHECK(guarded.body[5].name == "total");
  CHECK(guarded.body[5].java_type == "Double");
  CHECK(guarded.body[6].kind == OStmtKind::If);
  REQUIRE(guarded.body[6].then_body.size() == 2);

  REQUIRE(guarded.catches.size() == 1);
  CHECK(guarded.catches[0].exception_type == "Exception");
  CHECK(guarded.catches[0].var == "e");
  REQUIRE(guarded.catches[0].body.size() == 2);
  CHECK(guarded.catches[0].body[0].kind == OStmtKind::ExprStmt);
  CHECK(guarded.catches[0].body[0].expr->callee == "message");
  CHECK(guarded.catches[0].body[1].kind == OStmtKind::Throw);
  CHECK(guarded.catches[0].body[1].exception_type == "FormTriggerFailure");

  const OMethod* second = find_method(*service, "newGrantButtonWhenButtonPressed2");
  REQUIRE(second != nullptr);
  REQUIRE(second->body.size() == 2);
  CHECK(second->body[0].kind == OStmtKind::VarDecl);  // fused: Double diference = ...
  CHECK(second->body[0].name == "diference");
  REQUIRE(second->body[0].value.has_value());
  CHECK(second->body[0].value->kind == OExprKind::Binary);
  CHECK(second->body[0].value->op == "-");
  CHECK(second->body[1].kind == OStmtKind::If);

  // Separation property: service bodies never contain ModifyUI-derived code.
  check_no_modify_ui(first->body);
  check_no_modify_ui(second->body);

  // Database and library helpers.
  const OMethod* reader = find_method(*service, "readFromDB");
  REQUIRE(reader != nullptr);
  CHECK(reader->role == MethodRole::DbHelper);
  CHECK(reader->visibility == "private");
  const OMethod* writer = find_method(*service, "writeToDB");
  REQUIRE(writer != nullptr);
  CHECK(writer->role == MethodRole::DbHelper);
  const OMethod* lib = find_method(*service, "message");
  REQUIRE(lib != nullptr);
  CHECK(lib->role == MethodRole::LibraryStub);
}

TEST_CASE("fixture shared variables live in the map, singletons get declarations") {
  const OClass* service = find_class(renew_oo(), "RenewGrantsService");
  REQUIRE(service != nullptr);
  std::vector<std::string> decls;
  for (const auto& m : service->methods) collect_decl_names(m.body, decls);

  auto count = [&](const std::string& name) {
    std::size_t n = 0;
    for (const auto& d : decls) n += d == name ? 1 : 0;
    return n;
  };
  CHECK(count("companyName") == 1);
  CHECK(count("total") == 1);
  CHECK(count("diference") == 1);
  // Shared across fragments: routed through the map, never declared.
  CHECK(count("moneyPaid") == 0);
  CHECK(count("threshold") == 0);
  CHECK(count("endowment") == 0);
}

TEST_CASE("fixture app service maps the program unit") {
  const OClass* app = find_class(renew_oo(), "RenewGrantsAppService");
  REQUIRE(app != nullptr);
  const OMethod* unit = find_method(*app, "normalizeCompanyName");
  REQUIRE(unit != nullptr);
  CHECK(unit->role == MethodRole::Helper);
  CHECK(unit->return_type == "String");
  REQUIRE(unit->params.size() == 1);
  CHECK(unit->params[0].name == "map");
  REQUIRE(unit->body.size() == 2);
  CHECK(unit->body[0].kind == OStmtKind::If);
  REQUIRE(unit->body[0].then_body.size() == 1);
  CHECK(unit->body[0].then_body[0].kind == OStmtKind::Return);
  REQUIRE(unit->body[0].then_body[0].value.has_value());
  CHECK(unit->body[0].then_body[0].value->todo);  // substr -> PL/SQL library stub
  CHECK(unit->body[1].kind == OStmtKind::Return);

  CHECK(find_method(*app, "length") != nullptr);
  CHECK(find_method(*app, "substr") != nullptr);
  CHECK(find_method(*app, "length")->role == MethodRole::LibraryStub);
}

TEST_CASE("handler and fragment references are filled back into the platform model") {
  const auto& art = testutil::renew_artifacts();
  REQUIRE(art.platform.has_value());
  const TargetPlatformModel& platform = *art.platform;
  REQUIRE(platform.beans.size() == 1);
  REQUIRE(platform.beans[0].event_handlers.size() == 1);
  REQUIRE(platform.beans[0].event_handlers[0].method.has_value());
  CHECK(*platform.beans[0].event_handlers[0].method ==
        "RenewGrantsManagedBean.newGrantButtonWhenButtonPressed");

  const Service* controller = nullptr;
  for (const auto& s : platform.services)
    if (s.kind == ServiceKind::Controller) controller = &s;
  REQUIRE(controller != nullptr);
  REQUIRE(controller->event_methods.size() == 2);
  CHECK(controller->event_methods[0].ordinal == 1);
  CHECK(controller->event_methods[1].ordinal == 2);
  REQUIRE(controller->event_methods[0].method.has_value());
  CHECK(*controller->event_methods[0].method ==
        "RenewGrantsService.newGrantButtonWhenButtonPressed1");
  CHECK(*controller->event_methods[1].method ==
        "RenewGrantsService.newGrantButtonWhenButtonPressed2");
  CHECK(controller->event_methods[0].handler == platform.beans[0].event_handlers[0].id);
}

TEST_CASE("trigger without UI statements yields exactly one fragment") {
  OoResult r = oo_from(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "DECLARE\nx NUMBER;\nBEGIN\nx := 1;\nx := x + 1;\nEND;\nEND TRIGGER\nEND FORM\n");
  const OClass* service = find_class(r.model, "WService");
  REQUIRE(service != nullptr);
  int fragments = 0;
  for (const auto& m : service->methods)
    if (m.role == MethodRole::ServiceFragment) ++fragments;
  CHECK(fragments == 1);
  CHECK(find_method(*service, "aWhenButtonPressed1") != nullptr);

  const OClass* bean = find_class(r.model, "WManagedBean");
  REQUIRE(bean != nullptr);
  const OMethod* handler = find_method(*bean, "aWhenButtonPressed");
  REQUIRE(handler != nullptr);
  int calls = 0;
  for (const auto& s : handler->body)
    if (s.expr && s.expr->receiver == "wService") ++calls;
  CHECK(calls == 1);
}

TEST_CASE("trigger with only ModifyUI yields no fragments") {
  OoResult r = oo_from(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nITEM T1 : TEXT\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "BEGIN\nSET_ITEM_PROPERTY('W.T1', visible, property_true);\nEND;\nEND TRIGGER\nEND FORM\n");
  const OClass* service = find_class(r.model, "WService");
  REQUIRE(service != nullptr);
  for (const auto& m : service->methods) CHECK(m.role != MethodRole::ServiceFragment);

  const OClass* bean = find_class(r.model, "WManagedBean");
  REQUIRE(bean != nullptr);
  const OMethod* handler = find_method(*bean, "aWhenButtonPressed");
  REQUIRE(handler != nullptr);
  REQUIRE(handler->body.size() == 1);
  CHECK(handler->body[0].kind == OStmtKind::ExprStmt);
  CHECK(handler->body[0].from_modify_ui);
  CHECK(handler->body[0].expr->callee == "setWT1Visible");
}

TEST_CASE("alternating UI and logic produces consecutive ordinals") {
  OoResult r = oo_from(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nITEM T1 : TEXT\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "DECLARE\nx NUMBER;\nBEGIN\nx := 1;\n"
      "SET_ITEM_PROPERTY('W.T1', visible, property_false);\nx := 2;\nEND;\nEND TRIGGER\nEND FORM\n");
  const OClass* service = find_class(r.model, "WService");
  REQUIRE(service != nullptr);
  CHECK(find_method(*service, "aWhenButtonPressed1") != nullptr);
  CHECK(find_method(*service, "aWhenButtonPressed2") != nullptr);

  const Service* controller = nullptr;
  for (const auto& s : r.platform.services)
    if (s.kind == ServiceKind::Controller) controller = &s;
  REQUIRE(controller != nullptr);
  REQUIRE(controller->event_methods.size() == 2);
  CHECK(controller->event_methods[0].ordinal == 1);
  CHECK(controller->event_methods[1].ordinal == 2);
}

TEST_CASE("never-initialized variables get a null declaration with a warning comment") {
  OoResult r = oo_from(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nITEM D1 : DISPLAY\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "DECLARE\nv NUMBER;\nx NUMBER;\nBEGIN\n"
      "IF :W.D1 = 'y' THEN\nx := v;\nELSE\nv := 2;\nEND IF;\nEND;\nEND TRIGGER\nEND FORM\n");
  const OClass* service = find_class(r.model, "WService");
  REQUIRE(service != nullptr);
  const OMethod* frag = find_method(*service, "aWhenButtonPressed1");
  REQUIRE(frag != nullptr);
  REQUIRE(frag->body.size() == 2);
  CHECK(frag->body[0].kind == OStmtKind::VarDecl);
  CHECK(frag->body[0].name == "v");
  CHECK(frag->body[0].java_type == "Double");
  REQUIRE(frag->body[0].value.has_value());
  CHECK(frag->body[0].value->text == "null");
  CHECK(contains(frag->body[0].comment, "not explicitly initialized"));

  // x is written first inside the THEN branch: fused declaration there.
  const OStmt& branch = frag->body[1];
  REQUIRE(branch.kind == OStmtKind::If);
  REQUIRE(branch.then_body.size() == 1);
  CHECK(branch.then_body[0].kind == OStmtKind::VarDecl);
  CHECK(branch.then_body[0].name == "x");
  REQUIRE(branch.else_body.size() == 1);
  CHECK(branch.else_body[0].kind == OStmtKind::Assign);
  CHECK(branch.else_body[0].name == "v");
}

TEST_CASE("arity mismatches on unit calls warn with O101") {
  std::string text =
      "FORM F\nWINDOW W\nITEM A : BUTTON\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "BEGIN\nnotify(1, 2);\nEND;\nEND TRIGGER\n"
      "PROGRAM UNIT\nPROCEDURE notify (v IN NUMBER) IS\nBEGIN\nmessage('v');\nEND;\n"
      "END UNIT\nEND FORM\n";
  FormParseResult p = parse_form(text, "arity.form");
  REQUIRE(p.ok());
  InjectResult i = inject(*p.bundle);
  REQUIRE(!i.diags.has_errors());
  PrimitivesResult pr = kdm_to_primitives(i.model);
  PlatformResult pl = primitives_to_platform(pr.root, i.model);
  OoResult r = platform_to_oo(pl.model, pr.root);
  CHECK(testutil::has_code(r.diags, "O101"));
  CHECK(!r.diags.has_errors());
}

TEST_CASE("builtin map option suppresses the library TODO") {
  FormParseResult p = parse_form(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "DECLARE\nx NUMBER;\nBEGIN\nx := nvl(2, 0);\nEND;\nEND TRIGGER\nEND FORM\n",
      "builtin.form");
  REQUIRE(p.ok());
  InjectResult i = inject(*p.bundle);
  PrimitivesResult pr = kdm_to_primitives(i.model);
  PlatformResult pl = primitives_to_platform(pr.root, i.model);

  OoGenOptions options;
  options.builtin_map["NVL"] = "java.util.Objects.requireNonNullElse";
  OoResult mapped = platform_to_oo(pl.model, pr.root, options);
  const OClass* service = find_class(mapped.model, "WService");
  REQUIRE(service != nullptr);
  const OMethod* frag = find_method(*service, "aWhenButtonPressed1");
  REQUIRE(frag != nullptr);
  REQUIRE(frag->body.size() == 1);
  REQUIRE(frag->body[0].value.has_value());
  CHECK(frag->body[0].value->kind == OExprKind::Call);
  CHECK(!frag->body[0].value->todo);
  CHECK(frag->body[0].value->receiver == "java.util.Objects");
  CHECK(frag->body[0].value->callee == "requireNonNullElse");
}
