#include "f2j/pipeline.hpp"

namespace f2j {

std::optional<Stage> stage_from_name(const std::string& name) {
  if (name == "forms") return Stage::Forms;
  if (name == "kdm") return Stage::Kdm;
  if (name == "primitives") return Stage::Primitives;
  if (name == "platform") return Stage::Platform;
  if (name == "oo") return Stage::Oo;
  if (name == "java") return Stage::Java;
  return std::nullopt;
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Forms: return "forms";
    case Stage::Kdm: return "kdm";
    case Stage::Primitives: return "primitives";
    case Stage::Platform: return "platform";
    case Stage::Oo: return "oo";
    case Stage::Java: return "java";
  }
  return "forms";
}

std::string flow_file_stem(const std::string& form, const Code& code) {
  auto clean = [](std::string s) {
    for (auto& ch : s)
      if (ch == '-' || ch == '.') ch = '_';
    return s;
  };
  std::string stem = clean(form);
  if (code.origin == CallableOrigin::Trigger && !code.ui.screen.empty())
    return stem + "_" + clean(code.ui.screen) + "_" + clean(code.ui.item) + "_" + clean(code.event);
  return stem + "_" + clean(code.name);
}

namespace {

bool require(PipelineArtifacts& a, bool present, const char* need, const char* stage) {
  if (present) return true;
  a.diags.error("R001", std::string("cannot resume at stage '") + stage + "': missing " + need);
  return false;
}

}  // namespace

void resume_pipeline(PipelineArtifacts& a, Stage from, const PipelineConfig& config) {
  // The code model embeds the descriptor text, so a bundle lost across a
  // save/load boundary can be re-parsed for the forms-stage metrics.
  if (!a.bundle && a.code_model) {
    FormParseResult parsed = parse_form(a.code_model->source_text, a.code_model->file);
    if (parsed.bundle) a.bundle = std::move(*parsed.bundle);
  }

  if (from <= Stage::Kdm) {
    if (!require(a, a.bundle.has_value(), "parsed form", "kdm")) return;
    InjectResult injected = inject(*a.bundle);
    a.diags.append(injected.diags);
    a.code_model = std::move(injected.model);
  }
  if (from <= Stage::Primitives) {
    if (!require(a, a.code_model.has_value(), "code model", "primitives")) return;
    PrimitivesResult prim = kdm_to_primitives(*a.code_model);
    a.diags.append(prim.diags);
    a.primitives = std::move(prim.root);
  }
  if (from <= Stage::Platform) {
    if (!require(a, a.primitives.has_value() && a.code_model.has_value(),
                 "primitives + code model", "platform"))
      return;
    PlatformResult plat = primitives_to_platform(*a.primitives, *a.code_model);
    a.diags.append(plat.diags);
    a.platform = std::move(plat.model);
  }
  if (from <= Stage::Oo) {
    if (!require(a, a.platform.has_value() && a.primitives.has_value(),
                 "platform + primitives", "oo"))
      return;
    OoResult oo = platform_to_oo(*a.platform, *a.primitives, config.oo);
    a.diags.append(oo.diags);
    a.oo = std::move(oo.model);
    a.platform = std::move(oo.platform);  // method references filled in
  }
  if (from <= Stage::Java) {
    if (!require(a, a.oo.has_value() && a.platform.has_value(), "oo + platform", "java")) return;
    CodegenResult gen = generate(*a.oo, *a.platform, config.codegen);
    a.diags.append(gen.diags);
    a.files = std::move(gen.files);
    if (!config.skeletons.empty()) {
      CodegenResult merged = merge_into_skeleton(*a.files, config.skeletons, *a.oo);
      a.diags.append(merged.diags);
      a.files = std::move(merged.files);
    }
  }

  a.flows.clear();
  if (a.primitives) {
    for (const auto& code : a.primitives->codes)
      if (code.origin == CallableOrigin::Trigger)
        a.flows.emplace_back(flow_file_stem(a.primitives->form_name, code), build_flow(code));
  }

  if (a.bundle && a.code_model && a.primitives && a.platform && a.oo && a.files) {
    a.metrics = measure(*a.bundle, *a.code_model, *a.primitives, *a.platform, *a.oo, *a.files);
    a.diags.append(coverage_check(*a.metrics));
  }
}

PipelineArtifacts run_pipeline(const std::string& descriptor_text, const std::string& file_name,
                               const PipelineConfig& config) {
  PipelineArtifacts a;
  FormParseResult parsed = parse_form(descriptor_text, file_name);
  a.diags.append(parsed.diags);
  if (parsed.bundle) a.bundle = std::move(*parsed.bundle);
  if (!parsed.ok()) return a;  // parse failure is the only early stop
  resume_pipeline(a, Stage::Kdm, config);
  return a;
}

}  // namespace f2j
