#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f2j/code_model.hpp"
#include "f2j/flowgraph.hpp"
#include "f2j/java_emitter.hpp"
#include "f2j/metrics.hpp"
#include "f2j/oo_model.hpp"
#include "f2j/parser.hpp"
#include "f2j/platform.hpp"
#include "f2j/primitives.hpp"

namespace f2j {

enum class Stage { Forms, Kdm, Primitives, Platform, Oo, Java };

std::optional<Stage> stage_from_name(const std::string& name);
const char* stage_name(Stage s);

struct PipelineConfig {
  OoGenOptions oo;
  CodegenOptions codegen;
  FlowFormat flow_format = FlowFormat::Cypher;
  std::vector<Skeleton> skeletons;
  bool strict = false;  // warnings promoted to errors for the exit status
};

// Every intermediate artifact of one form's migration.
struct PipelineArtifacts {
  std::optional<FormBundle> bundle;
  std::optional<CodeModel> code_model;
  std::optional<PrimitivesRoot> primitives;
  std::optional<TargetPlatformModel> platform;
  std::optional<OOModel> oo;
  std::optional<SourceFileSet> files;
  std::optional<MetricsReport> metrics;
  std::vector<std::pair<std::string, FlowGraph>> flows;  // per-trigger, file stem + graph
  DiagnosticList diags;
};

// Runs parse -> inject -> primitives -> platform -> oo -> java for one
// descriptor. Stops early only on parse failure.
PipelineArtifacts run_pipeline(const std::string& descriptor_text, const std::string& file_name,
                               const PipelineConfig& config = {});

// Resumes the chain from an already-materialized stage. The artifacts must
// hold the models that stage depends on (e.g. resuming at Platform needs
// code_model + primitives); later artifacts are recomputed.
void resume_pipeline(PipelineArtifacts& artifacts, Stage from, const PipelineConfig& config = {});

// Flow-graph file stem: <Form>_<Window>_<Item>_<Event> with '-' flattened.
std::string flow_file_stem(const std::string& form, const Code& code);

}  // namespace f2j
