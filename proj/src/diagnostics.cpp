#include "f2j/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace f2j {

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Note: return "note";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "error";
}

std::string Diagnostic::render() const {
  std::ostringstream os;
  if (!file.empty()) {
    os << file << ':' << line << ':' << col << ": ";
  }
  os << severity_name(severity) << " [" << code << "] " << message;
  return os.str();
}

bool DiagnosticList::has_errors() const {
  return std::any_of(items_.begin(), items_.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::size_t DiagnosticList::count(Severity s) const {
  return static_cast<std::size_t>(std::count_if(
      items_.begin(), items_.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

}  // namespace f2j
