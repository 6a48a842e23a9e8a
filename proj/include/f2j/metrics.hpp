#pragma once

#include <optional>
#include <string>

#include "f2j/ast.hpp"
#include "f2j/code_model.hpp"
#include "f2j/diagnostics.hpp"
#include "f2j/java_emitter.hpp"
#include "f2j/oo_model.hpp"
#include "f2j/platform.hpp"
#include "f2j/primitives.hpp"

namespace f2j {

struct StageCounts {
  int triggers_or_methods = 0;
  int program_units_or_methods = 0;
  int sql_statements = 0;
  int skipped_data_block_triggers = 0;
  int empty_triggers = 0;
};

struct MetricsReport {
  std::string form_name;
  StageCounts forms, kdm, primitives, platform, oo, java;
  // Sum over SELECT INTO statements of (targets - 1); feeds the SQL growth law.
  int select_into_extra_targets = 0;

  std::string render_table() const;
};

// Counts each stage independently (the java counts scan the emitted text).
MetricsReport measure(const FormBundle& bundle, const CodeModel& model,
                      const PrimitivesRoot& root, const TargetPlatformModel& platform,
                      const OOModel& oo, const SourceFileSet& files);

// Conservation laws; empty result means all hold.
DiagnosticList coverage_check(const MetricsReport& report);

}  // namespace f2j
