#pragma once

#include <string>

namespace f2j {

// Identifier conversions between the RAD world (SCREAMING_SNAKE, dash-separated
// event names) and Java. Words split on '_', '-', '.' and case boundaries are
// not inferred: RAD names are treated as case-insensitive word lists.

std::string to_camel(const std::string& name);    // NEW_GRANT_BUTTON -> newGrantButton
std::string to_pascal(const std::string& name);   // WHEN-BUTTON-PRESSED -> WhenButtonPressed
std::string to_upper(const std::string& name);
std::string to_lower(const std::string& name);

// Case-preserving first-letter flips for names that are already camel/Pascal
// cased (field names from class names, accessor names from attribute names).
std::string upper_first(const std::string& name);  // grantCode -> GrantCode
std::string lower_first(const std::string& name);  // RenewGrantsService -> renewGrantsService

bool is_java_reserved(const std::string& word);

// Maps a PL/SQL scalar type name to its Java boxed equivalent.
// Unknown names map to "Object".
std::string java_type_for(const std::string& plsql_type);

}  // namespace f2j
