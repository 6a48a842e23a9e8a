#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "f2j/ast.hpp"
#include "f2j/diagnostics.hpp"
#include "f2j/source.hpp"

namespace f2j {

// Knowledge-model layer: a Code/Action/UI subset addressed by string ids.
// Statement structure is preserved as stereotyped ActionElement trees; the
// structural expression payloads ride along so later stages never re-parse
// source text.

struct SourceRef {
  std::string file;
  SourceSpan span;
  std::string snippet;  // exact source slice
};

enum class ElementKind {
  CallableUnit,
  BlockUnit,
  TryUnit,    // inner block guarded region
  CatchUnit,  // one exception handler
  ActionElement,
  StorableUnit,
  Screen,
  UIResource,
};

enum class CallableOrigin { Trigger, ProgramUnit };
enum class StorableScope { Local, Global };

struct TypedName {
  std::string name;
  std::string original;
  std::string plsql_type;
};

struct CodeElement {
  std::string id;
  ElementKind kind = ElementKind::ActionElement;
  std::string name;     // stereotype name for ActionElements, identifier otherwise
  std::string tag;      // lowercase kind tag for ActionElements ("assign", "elsif", ...)
  SourceRef source;

  // CallableUnit
  CallableOrigin origin = CallableOrigin::Trigger;
  std::vector<std::string> stereotypes;  // e.g. CodeFragment for program units
  std::string body;                      // BlockUnit id
  std::string ui_resource;               // UIResource id, empty for program units
  std::vector<TypedName> params;         // program units only
  std::string return_type;               // functions only
  std::string event;                     // triggers: event name
  std::string unit_kind;                 // "FUNCTION" | "PROCEDURE" for units

  // BlockUnit / TryUnit / CatchUnit
  std::vector<std::string> storable_units;
  std::vector<std::string> children;  // ActionElements / nested blocks in order
  std::string exception_name;         // CatchUnit

  // ActionElement
  std::vector<std::string> reads;   // StorableUnit / UIResource ids
  std::vector<std::string> writes;
  std::vector<std::string> calls;   // CallableUnit ids (resolved program units)
  // Structural payloads (per statement kind; see inject()):
  std::vector<ExprPtr> exprs;               // conditions, values, args, binds...
  std::vector<std::string> strings;         // columns, sql text, names...
  std::string detail;                       // statement-kind discriminator

  // StorableUnit
  StorableScope scope = StorableScope::Local;
  std::string plsql_type;
  std::string original;

  // Screen / UIResource
  std::string owner;                 // UIResource -> Screen id; Screen -> ""
  std::string widget;                // UIResource widget kind name
  std::vector<std::string> resources;  // Screen -> UIResource ids
};

struct CodeModel {
  std::string form_name;
  std::string form_original;
  std::string file;
  std::string source_text;  // descriptor text, needed for snippet validation
  std::vector<std::string> order;  // element ids in creation order
  std::map<std::string, CodeElement> elements;
  std::vector<std::string> screens;    // Screen ids in document order
  std::vector<std::string> callables;  // CallableUnit ids in document order

  const CodeElement* find(const std::string& id) const;
  CodeElement* find(const std::string& id);
};

// Stereotype vocabulary (closed set).
extern const std::vector<std::string> kStereotypes;
bool is_known_stereotype(const std::string& s);

struct InjectResult {
  CodeModel model;
  DiagnosticList diags;
};

// Lowers a parsed bundle into the knowledge model. Name resolution happens
// here: variable references bind to the innermost enclosing block, then outer
// blocks, then the trigger/unit root; UI binds resolve against declared
// windows/items.
InjectResult inject(const FormBundle& bundle);

// Structural well-formedness: id uniqueness, reference resolution, stereotype
// vocabulary, snippet==slice, span containment, per-block name uniqueness.
DiagnosticList validate_code_model(const CodeModel& model);

}  // namespace f2j
