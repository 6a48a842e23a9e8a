#pragma once

#include <string>
#include <vector>

#include "f2j/diagnostics.hpp"
#include "f2j/oo_model.hpp"

namespace f2j {

struct SourceFile {
  std::string path;  // e.g. src/RENEW_GRANTS/RenewGrantsService.java
  std::string content;
};

struct SourceFileSet {
  std::vector<SourceFile> files;
  const SourceFile* find_class(const std::string& class_name) const;
};

struct CodegenOptions {
  // Self-contained mode additionally emits view classes, bean accessors and
  // UI setter stubs so the output stands alone without the UI migrator.
  bool self_contained = true;
};

struct CodegenResult {
  SourceFileSet files;
  DiagnosticList diags;
};

// One .java file per model class plus, when the model is nonempty, the shared
// support files (exception classes and the PL/SQL builtin stub library).
CodegenResult generate(const OOModel& oo, const TargetPlatformModel& platform,
                       const CodegenOptions& options = {});

struct Skeleton {
  std::string class_name;  // file stem
  std::string content;     // contains "// BODY:<methodName>" markers
};

// Splices bean event-handler bodies into skeleton marker lines; non-bean files
// pass through unchanged. Bean methods without a marker produce diagnostics.
CodegenResult merge_into_skeleton(const SourceFileSet& generated,
                                  const std::vector<Skeleton>& skeletons, const OOModel& oo);

// Rendering helpers shared with tests.
std::string render_expr(const OExpr& e);
std::string render_class(const OClass& cls, const std::string& form_original);

}  // namespace f2j
