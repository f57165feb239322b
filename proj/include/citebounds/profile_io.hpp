#pragma once

#include "citebounds/csv.hpp"
#include "citebounds/error.hpp"
#include "citebounds/profile.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace citebounds {

enum class ProfileFormat { jsonl, csv };

namespace detail {

inline CitationProfile checked_profile(std::vector<Count> counts, std::optional<std::string> id, std::size_t line_no) {
  try {
    return CitationProfile::normalize(std::move(counts), std::move(id));
  } catch (const InputError& e) {
    throw InputError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

inline std::vector<CitationProfile> parse_jsonl(std::string_view doc) {
  std::vector<CitationProfile> out;
  const auto all = csv::lines(doc);
  for (std::size_t n = 0; n < all.size(); ++n) {
    const std::size_t line_no = n + 1;
    const auto line = csv::trim(all[n]);
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("line " + std::to_string(line_no) + ": invalid JSON (" + e.what() + ")");
    }
    if (!rec.is_object()) throw InputError("line " + std::to_string(line_no) + ": record is not an object");
    std::optional<std::string> id;
    if (auto it = rec.find("id"); it != rec.end() && !it->is_null()) {
      if (!it->is_string()) throw InputError("line " + std::to_string(line_no) + ": 'id' must be text");
      id = it->get<std::string>();
    }
    auto cit = rec.find("citations");
    if (cit == rec.end() || !cit->is_array()) {
      throw InputError("line " + std::to_string(line_no) + ": 'citations' must be an array");
    }
    std::vector<Count> counts;
    counts.reserve(cit->size());
    for (const auto& v : *cit) {
      if (!v.is_number_integer()) {
        throw InputError("line " + std::to_string(line_no) + ": citation counts must be integers");
      }
      counts.push_back(v.get<Count>());
    }
    out.push_back(checked_profile(std::move(counts), std::move(id), line_no));
  }
  return out;
}

inline std::vector<CitationProfile> parse_csv(std::string_view doc) {
  std::vector<CitationProfile> out;
  const auto all = csv::lines(doc);
  if (all.empty()) throw InputError("line 1: missing header 'id,citations'");
  const auto header = csv::split_record(all[0], 1);
  if (header != std::vector<std::string>{"id", "citations"}) {
    throw InputError("line 1: expected header 'id,citations'");
  }
  for (std::size_t n = 1; n < all.size(); ++n) {
    const std::size_t line_no = n + 1;
    if (csv::trim(all[n]).empty()) continue;
    auto fields = csv::split_record(all[n], line_no);
    if (fields.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 2 fields, found " +
                       std::to_string(fields.size()));
    }
    std::vector<Count> counts;
    std::string_view list = fields[1];
    if (!csv::trim(list).empty()) {
      std::size_t start = 0;
      while (true) {
        auto semi = list.find(';', start);
        auto item = list.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        counts.push_back(csv::parse_int(item, line_no, "citation count"));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
    }
    std::optional<std::string> id;
    if (!fields[0].empty()) id = fields[0];
    out.push_back(checked_profile(std::move(counts), std::move(id), line_no));
  }
  return out;
}

}  // namespace detail

/// Reads profiles from a JSONL or CSV document; every record is normalized.
/// Errors name the 1-based line of the offending record.
inline std::vector<CitationProfile> parse_profiles(std::string_view document, ProfileFormat format) {
  return format == ProfileFormat::jsonl ? detail::parse_jsonl(document) : detail::parse_csv(document);
}

}  // namespace citebounds
