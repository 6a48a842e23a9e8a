#include "f2j/names.hpp"

#include <array>
#include <cctype>
#include <map>
#include <vector>

namespace f2j {

namespace {

std::vector<std::string> split_words(const std::string& name) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : name) {
    if (c == '_' || c == '-' || c == '.' || c == ' ') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(cur);
  return words;
}

std::string capitalize(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(w[0]))));
  for (std::size_t i = 1; i < w.size(); ++i)
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(w[i]))));
  return out;
}

std::string decapitalize(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::string sanitize(std::string s) {
  if (s.empty()) return "_";
  if (std::isdigit(static_cast<unsigned char>(s[0])) || is_java_reserved(s)) s.insert(s.begin(), '_');
  return s;
}

}  // namespace

std::string to_camel(const std::string& name) {
  auto words = split_words(name);
  if (words.empty()) return "_";
  std::string out = decapitalize(words[0]);
  for (std::size_t i = 1; i < words.size(); ++i) out += capitalize(words[i]);
  return sanitize(out);
}

std::string to_pascal(const std::string& name) {
  auto words = split_words(name);
  if (words.empty()) return "_";
  std::string out;
  for (const auto& w : words) out += capitalize(w);
  return sanitize(out);
}

std::string upper_first(const std::string& name) {
  std::string out = name;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string lower_first(const std::string& name) {
  std::string out = name;
  if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

std::string to_upper(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

std::string to_lower(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool is_java_reserved(const std::string& word) {
  static const std::array<const char*, 53> kWords = {
      "abstract", "assert",   "boolean",   "break",    "byte",      "case",       "catch",
      "char",     "class",    "const",     "continue", "default",   "do",         "double",
      "else",     "enum",     "extends",   "final",    "finally",   "float",      "for",
      "goto",     "if",       "implements","import",   "instanceof","int",        "interface",
      "long",     "native",   "new",       "package",  "private",   "protected",  "public",
      "return",   "short",    "static",    "strictfp", "super",     "switch",     "synchronized",
      "this",     "throw",    "throws",    "transient","try",       "void",       "volatile",
      "while",    "true",     "false",     "null",
  };
  for (const char* w : kWords)
    if (word == w) return true;
  return false;
}

std::string java_type_for(const std::string& plsql_type) {
  static const std::map<std::string, std::string> kTypes = {
      {"VARCHAR2", "String"}, {"NUMBER", "Double"},   {"INTEGER", "Integer"},
      {"BOOLEAN", "Boolean"}, {"DATE", "Date"},
  };
  // VARCHAR2(30) and friends: strip the length part.
  std::string base = plsql_type;
  if (auto p = base.find('('); p != std::string::npos) base.resize(p);
  auto it = kTypes.find(to_upper(base));
  return it == kTypes.end() ? "Object" : it->second;
}

}  // namespace f2j
