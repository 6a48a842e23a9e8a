#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f2j/diagnostics.hpp"
#include "f2j/primitives.hpp"

namespace f2j {

// Target-platform model: JSF-style views/beans over Spring-style services.

enum class ServiceKind { Controller, App };

struct UserInterfaceComponent {
  std::string id;
  std::string item;    // upper-normalized item name
  std::string widget;
  std::vector<std::string> event_handlers;  // EventHandler ids
};

struct UserInterfaceView {
  std::string id;
  std::string window;    // upper-normalized window name
  std::string original;  // source casing
  std::vector<std::string> components;  // only components with triggers
};

struct EventHandler {
  std::string id;
  std::string name;   // camelCase(item) + PascalCase(event)
  std::string event;
  std::string code;   // Code id in the PrimitivesRoot
  std::optional<std::string> method;  // OO Method id, filled by platform_to_oo
  std::string component;              // owning UserInterfaceComponent id
};

struct ManagedBeanAttribute {
  std::string ui_component;  // UserInterfaceComponent id
  std::string name;          // camelCase item name
  std::string java_type;
};

struct ManagedBean {
  std::string id;
  std::string name;    // <WindowId>ManagedBean
  std::string window;  // UserInterfaceView id
  std::vector<ManagedBeanAttribute> attributes;
  std::vector<EventHandler> event_handlers;
  std::vector<std::string> used_services;  // Service ids
};

struct EventHandlerServiceMethod {
  std::string code;  // Code id
  std::optional<std::string> method;
  int ordinal = 1;
  std::string handler;  // EventHandler id
};

struct HelperServiceMethod {
  std::string code;  // program-unit Code id
  std::optional<std::string> method;
  std::string name;  // camelCase unit name
};

struct Service {
  std::string id;
  std::string name;  // <WindowId>Service or <FormName>AppService
  ServiceKind kind = ServiceKind::Controller;
  std::string window;  // controller services: UserInterfaceView id
  std::vector<EventHandlerServiceMethod> event_methods;
  std::vector<HelperServiceMethod> helper_methods;
};

struct TargetPlatformModel {
  std::string form_name;
  std::string form_original;
  std::string file;
  std::vector<UserInterfaceView> views;
  std::vector<UserInterfaceComponent> components;
  std::vector<ManagedBean> beans;
  std::vector<Service> services;
  int skipped_data_block_triggers = 0;
  int skipped_empty_triggers = 0;
};

struct PlatformResult {
  TargetPlatformModel model;
  DiagnosticList diags;
};

// Groups trigger Codes by window into views/beans/controller services and
// program units into the form's app service. Trigger Codes without a UI
// resource are skipped with a counted diagnostic (data-block triggers), as are
// empty trigger Codes.
PlatformResult primitives_to_platform(const PrimitivesRoot& root, const CodeModel& model);

// Resolves the screen/resource pair a trigger Code is attached to.
// Program-unit Codes yield an error diagnostic and no value.
struct ScreenRef {
  std::string screen_id;
  std::string resource_id;
};
std::optional<ScreenRef> navigate_to_screen(const Code& code, const CodeModel& model,
                                            DiagnosticList& diags);

}  // namespace f2j
