#pragma once

// Minimal RFC 4180-style field splitting for the single-line records used by
// the profile and aggregate formats (no embedded newlines).

#include "citebounds/error.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace citebounds::csv {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Splits one record; throws InputError (with the line number) on an unterminated quote.
inline std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::string(trim(cur)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw InputError("line " + std::to_string(line_no) + ": unterminated quoted field");
  fields.push_back(std::string(trim(cur)));
  return fields;
}

/// Parses a base-10 integer occupying the whole (trimmed) field.
inline std::int64_t parse_int(std::string_view text, std::size_t line_no, std::string_view what) {
  text = trim(text);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("line " + std::to_string(line_no) + ": " + std::string(what) + " is not an integer: '" +
                     std::string(text) + "'");
  }
  return value;
}

/// Splits a document into lines, dropping a trailing '\r' from each.
inline std::vector<std::string_view> lines(std::string_view doc) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= doc.size()) {
    auto nl = doc.find('\n', start);
    if (nl == std::string_view::npos) nl = doc.size();
    auto line = doc.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = nl + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace citebounds::csv
