#pragma once

#include <string>
#include <vector>

#include "f2j/source.hpp"

namespace f2j {

enum class Severity { Note, Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;     // stable identifier, e.g. "P003"
  std::string message;
  std::string file;     // input file name, may be empty for model-level checks
  std::uint32_t line = 0;
  std::uint32_t col = 0;

  std::string render() const;
};

class DiagnosticList {
 public:
  void add(Diagnostic d) { items_.push_back(std::move(d)); }
  void error(std::string code, std::string msg, std::string file = {}, std::uint32_t line = 0,
             std::uint32_t col = 0) {
    add({Severity::Error, std::move(code), std::move(msg), std::move(file), line, col});
  }
  void warning(std::string code, std::string msg, std::string file = {}, std::uint32_t line = 0,
               std::uint32_t col = 0) {
    add({Severity::Warning, std::move(code), std::move(msg), std::move(file), line, col});
  }

  bool has_errors() const;
  std::size_t count(Severity s) const;
  const std::vector<Diagnostic>& items() const { return items_; }
  std::vector<Diagnostic>& items() { return items_; }
  void append(const DiagnosticList& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }
  void clear() { items_.clear(); }

 private:
  std::vector<Diagnostic> items_;
};

const char* severity_name(Severity s);

}  // namespace f2j
