#pragma once

#include <optional>
#include <string>

#include "f2j/ast.hpp"
#include "f2j/diagnostics.hpp"

namespace f2j {

struct FormParseResult {
  std::optional<FormBundle> bundle;  // absent only on unrecoverable input
  DiagnosticList diags;
  bool ok() const { return bundle.has_value() && !diags.has_errors(); }
};

struct BlockParseResult {
  std::optional<PlSqlBlock> block;
  DiagnosticList diags;
  bool ok() const { return block.has_value() && !diags.has_errors(); }
};

// Parses a whole form descriptor (line-oriented format, '#' comments).
FormParseResult parse_form(const std::string& text, const std::string& file_name);

// Parses a standalone PL/SQL fragment: either a [DECLARE] BEGIN ... END block
// or a bare statement list. Unqualified binds keep an empty block component.
BlockParseResult parse_plsql(const std::string& text, const std::string& file_name = "<plsql>");

// Structural equality ignoring spans and original casing (used by the
// slice/re-parse traceability checks).
bool stmt_structurally_equal(const PlSqlStatement& a, const PlSqlStatement& b);
bool expr_structurally_equal(const Expr& a, const Expr& b);

}  // namespace f2j
