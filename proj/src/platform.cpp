#include "f2j/platform.hpp"

#include <map>

#include "f2j/names.hpp"

namespace f2j {

namespace {

std::string default_widget_type(const std::string& widget) {
  if (widget == "CHECKBOX") return "Boolean";
  return "String";  // TEXT, BUTTON, DISPLAY
}

}  // namespace

std::optional<ScreenRef> navigate_to_screen(const Code& code, const CodeModel& model,
                                            DiagnosticList& diags) {
  if (code.origin != CallableOrigin::Trigger) {
    diags.error("T001", "code " + code.id + " is not attached to a screen", model.file, 1, 1);
    return std::nullopt;
  }
  if (code.ui.screen.empty() || code.ui.item.empty()) {
    diags.error("T002", "trigger code " + code.id + " has no ui resource", model.file, 1, 1);
    return std::nullopt;
  }
  std::string resource_id = "ui:" + code.ui.screen + "." + code.ui.item;
  const CodeElement* res = model.find(resource_id);
  if (!res) {
    diags.error("T002", "trigger code " + code.id + " references missing resource " + resource_id,
                model.file, 1, 1);
    return std::nullopt;
  }
  return ScreenRef{res->owner, resource_id};
}

PlatformResult primitives_to_platform(const PrimitivesRoot& root, const CodeModel& model) {
  PlatformResult out;
  TargetPlatformModel& tpm = out.model;
  tpm.form_name = root.form_name;
  tpm.form_original = root.form_original;
  tpm.file = root.file;

  // Views and components mirror the screen inventory.
  std::map<std::string, std::size_t> view_index;       // window -> views idx
  std::map<std::string, std::size_t> component_index;  // WINDOW.ITEM -> components idx
  for (const auto& sid : model.screens) {
    const CodeElement* screen = model.find(sid);
    if (!screen) continue;
    UserInterfaceView view;
    view.id = "view:" + screen->name;
    view.window = screen->name;
    view.original = screen->original;
    view_index[screen->name] = tpm.views.size();
    tpm.views.push_back(std::move(view));
    for (const auto& rid : screen->resources) {
      const CodeElement* res = model.find(rid);
      if (!res) continue;
      UserInterfaceComponent comp;
      comp.id = "component:" + screen->name + "." + res->name;
      comp.item = res->name;
      comp.widget = res->widget;
      component_index[screen->name + "." + res->name] = tpm.components.size();
      tpm.components.push_back(std::move(comp));
    }
  }

  // Beans materialize lazily, per window with at least one usable trigger.
  std::map<std::string, std::size_t> bean_index;  // window -> beans idx
  auto bean_for = [&](const std::string& window) -> ManagedBean& {
    auto it = bean_index.find(window);
    if (it != bean_index.end()) return tpm.beans[it->second];
    ManagedBean bean;
    bean.id = "bean:" + window;
    bean.name = to_pascal(window) + "ManagedBean";
    bean.window = "view:" + window;
    const CodeElement* screen = model.find("screen:" + window);
    if (screen) {
      for (const auto& rid : screen->resources) {
        const CodeElement* res = model.find(rid);
        if (!res) continue;
        ManagedBeanAttribute attr;
        attr.ui_component = "component:" + window + "." + res->name;
        attr.name = to_camel(res->name);
        attr.java_type = default_widget_type(res->widget);
        bean.attributes.push_back(std::move(attr));
      }
    }
    bean.used_services.push_back("service:" + window);
    bean_index[window] = tpm.beans.size();
    tpm.beans.push_back(std::move(bean));

    Service controller;
    controller.id = "service:" + window;
    controller.name = to_pascal(window) + "Service";
    controller.kind = ServiceKind::Controller;
    controller.window = "view:" + window;
    tpm.services.push_back(std::move(controller));
    return tpm.beans[bean_index[window]];
  };

  for (const auto& code : root.codes) {
    if (code.origin != CallableOrigin::Trigger) continue;
    if (code.primitives.empty()) {
      ++tpm.skipped_empty_triggers;
      out.diags.warning("T101", "skipping empty trigger " + code.name, root.file, 1, 1);
      continue;
    }
    DiagnosticList probe;
    auto screen_ref = navigate_to_screen(code, model, probe);
    if (!screen_ref) {
      ++tpm.skipped_data_block_triggers;
      out.diags.warning("T102",
                        "skipping data-block trigger " + code.id + " (no screen attachment)",
                        root.file, 1, 1);
      continue;
    }
    const std::string& window = code.ui.screen;
    ManagedBean& bean = bean_for(window);

    EventHandler handler;
    handler.id = "handler:" + window + "." + code.ui.item + "." + code.event;
    handler.name = to_camel(code.ui.item) + to_pascal(code.event);
    handler.event = code.event;
    handler.code = code.id;
    handler.component = "component:" + window + "." + code.ui.item;
    auto comp_it = component_index.find(window + "." + code.ui.item);
    if (comp_it != component_index.end()) {
      tpm.components[comp_it->second].event_handlers.push_back(handler.id);
      auto& view = tpm.views[view_index[window]];
      const std::string& cid = tpm.components[comp_it->second].id;
      bool listed = false;
      for (const auto& existing : view.components) listed = listed || existing == cid;
      if (!listed) view.components.push_back(cid);
    }
    bean.event_handlers.push_back(std::move(handler));
  }

  // Program units populate the form-level app service.
  bool has_units = false;
  for (const auto& code : root.codes)
    if (code.origin == CallableOrigin::ProgramUnit) has_units = true;
  if (has_units) {
    Service app;
    app.id = "service:app:" + root.form_name;
    app.name = to_pascal(root.form_name) + "AppService";
    app.kind = ServiceKind::App;
    for (const auto& code : root.codes) {
      if (code.origin != CallableOrigin::ProgramUnit) continue;
      HelperServiceMethod m;
      m.code = code.id;
      m.name = to_camel(code.name);
      app.helper_methods.push_back(std::move(m));
    }
    tpm.services.push_back(std::move(app));
  }

  return out;
}

}  // namespace f2j
