#pragma once

#include "citebounds/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace citebounds {

using Count = std::int64_t;

/// Per-paper citation counts of one author or journal, sorted non-increasing.
///
/// The only ways to obtain a profile are normalize() and from_sorted(), so every
/// instance satisfies: P >= 1, all counts >= 0, counts non-increasing.
class CitationProfile {
 public:
  /// Sorts a raw count vector into canonical (non-increasing) order.
  /// Throws InputError on an empty vector or a negative entry.
  static CitationProfile normalize(std::vector<Count> raw, std::optional<std::string> id = std::nullopt) {
    if (raw.empty()) throw InputError("citation profile is empty");
    for (Count c : raw) {
      if (c < 0) throw InputError("negative citation count " + std::to_string(c));
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return CitationProfile(std::move(raw), std::move(id));
  }

  /// Adopts counts that are already canonical; throws InputError otherwise.
  static CitationProfile from_sorted(std::vector<Count> counts, std::optional<std::string> id = std::nullopt) {
    if (counts.empty()) throw InputError("citation profile is empty");
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 0) throw InputError("negative citation count " + std::to_string(counts[i]));
      if (i > 0 && counts[i - 1] < counts[i]) throw InputError("citation counts are not non-increasing");
    }
    return CitationProfile(std::move(counts), std::move(id));
  }

  std::span<const Count> counts() const noexcept { return counts_; }
  const std::vector<Count>& vector() const noexcept { return counts_; }
  const std::optional<std::string>& id() const noexcept { return id_; }

  /// Number of papers, P.
  std::int64_t papers() const noexcept { return static_cast<std::int64_t>(counts_.size()); }

  /// Total citations, C.
  Count total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), Count{0}); }

  /// 1-based access, matching the usual c_1 >= c_2 >= ... numbering.
  Count rank(std::int64_t i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const CitationProfile& a, const CitationProfile& b) { return a.counts_ == b.counts_; }

 private:
  CitationProfile(std::vector<Count> counts, std::optional<std::string> id)
      : counts_(std::move(counts)), id_(std::move(id)) {}

  std::vector<Count> counts_;
  std::optional<std::string> id_;
};

inline CitationProfile normalize(std::vector<Count> raw) { return CitationProfile::normalize(std::move(raw)); }

/// Sum of counts at 1-based ranks first..last, clamped to the profile; empty ranges give 0.
inline Count segment_sum(const CitationProfile& p, std::int64_t first, std::int64_t last) {
  first = std::max<std::int64_t>(first, 1);
  last = std::min(last, p.papers());
  if (first > last) return 0;
  auto c = p.counts();
  return std::accumulate(c.begin() + (first - 1), c.begin() + last, Count{0});
}

/// Canonical order: ascending P, then ascending total, then descending lexicographic.
inline bool canonical_less(std::span<const Count> a, std::span<const Count> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Count ta = std::accumulate(a.begin(), a.end(), Count{0});
  const Count tb = std::accumulate(b.begin(), b.end(), Count{0});
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

inline bool canonical_less(const CitationProfile& a, const CitationProfile& b) {
  return canonical_less(a.counts(), b.counts());
}

inline std::string to_string(std::span<const Count> counts) {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(counts[i]);
  }
  return out + "]";
}

inline std::string to_string(const CitationProfile& p) { return to_string(p.counts()); }

}  // namespace citebounds
