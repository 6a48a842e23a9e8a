#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

namespace f2j {

// Half-open byte range into a source file, with 1-based line/column endpoints.
struct SourceSpan {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  std::uint32_t end_line = 1;
  std::uint32_t end_col = 1;

  bool contains(const SourceSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const SourceSpan& other) const {
    return begin < other.end && other.begin < end;
  }
};

inline std::string slice(const std::string& text, const SourceSpan& span) {
  if (span.begin >= text.size() || span.end < span.begin) return {};
  return text.substr(span.begin, std::min<std::uint32_t>(span.end, static_cast<std::uint32_t>(text.size())) - span.begin);
}

}  // namespace f2j
