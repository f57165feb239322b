#pragma once

#include "citebounds/error.hpp"
#include "citebounds/profile.hpp"
#include "citebounds/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace citebounds {

/// How the g-index treats ranks beyond P.
/// capped: i <= P only. padded: fictitious zero-cited papers extend the ranking.
enum class GConvention { capped, padded };

inline std::string_view to_string(GConvention c) { return c == GConvention::capped ? "capped" : "padded"; }

inline GConvention parse_g_convention(std::string_view s) {
  if (s == "capped") return GConvention::capped;
  if (s == "padded") return GConvention::padded;
  throw InputError("unknown g convention '" + std::string(s) + "' (expected capped|padded)");
}

/// Largest 1-based rank i with c_i >= i; 0 when no paper qualifies.
inline std::int64_t h_index(std::span<const Count> counts) {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto rank = static_cast<std::int64_t>(i + 1);
    if (counts[i] >= rank) h = rank;
  }
  return h;
}

/// Largest i with c_1 + ... + c_i >= i^2 (see GConvention for i > P); 0 when none.
inline std::int64_t g_index(std::span<const Count> counts, GConvention convention = GConvention::capped) {
  std::int64_t g = 0;
  Count running = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto rank = static_cast<std::int64_t>(i + 1);
    running += counts[i];
    if (running >= rank * rank) g = rank;
  }
  if (convention == GConvention::padded) {
    // Past P the prefix sum is frozen at C, so the largest padded rank is isqrt(C).
    const std::int64_t beyond = isqrt(running);
    if (beyond > static_cast<std::int64_t>(counts.size())) g = beyond;
  }
  return g;
}

/// Excess citations of the h-core: (c_1 + ... + c_h) - h^2.
inline Count e_squared(std::span<const Count> counts) {
  const std::int64_t h = h_index(counts);
  Count core = 0;
  for (std::int64_t i = 0; i < h; ++i) core += counts[static_cast<std::size_t>(i)];
  return core - h * h;
}

inline std::int64_t h_index(const CitationProfile& p) { return h_index(p.counts()); }
inline std::int64_t g_index(const CitationProfile& p, GConvention c = GConvention::capped) {
  return g_index(p.counts(), c);
}
inline Count e_squared(const CitationProfile& p) { return e_squared(p.counts()); }

/// Average citations per paper, C / P, kept exact.
inline Rational impact_factor(const CitationProfile& p) { return Rational(p.total(), p.papers()); }

/// All indices of one profile (or one published aggregate row).
struct IndexReport {
  std::int64_t h = 0;
  std::int64_t g = 0;
  Count e_squared = 0;
  std::int64_t e_ceil = 0;  ///< ceil(sqrt(e_squared)), the printed e value
  std::int64_t papers = 0;  ///< P
  Count total_citations = 0;  ///< C
  Rational impact_factor{0};  ///< C / P
  GConvention g_convention = GConvention::capped;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

inline IndexReport index_report(std::span<const Count> counts, GConvention convention = GConvention::capped) {
  if (counts.empty()) throw InputError("citation profile is empty");
  IndexReport r;
  r.h = h_index(counts);
  r.g = g_index(counts, convention);
  r.e_squared = e_squared(counts);
  r.e_ceil = ceil_sqrt(r.e_squared);
  r.papers = static_cast<std::int64_t>(counts.size());
  for (Count c : counts) r.total_citations += c;
  r.impact_factor = Rational(r.total_citations, r.papers);
  r.g_convention = convention;
  return r;
}

inline IndexReport index_report(const CitationProfile& p, GConvention convention = GConvention::capped) {
  return index_report(p.counts(), convention);
}

/// Builds a report from published aggregates alone (no raw counts).
inline IndexReport report_from_aggregates(std::int64_t h, std::int64_t g, Count e_sq, std::int64_t papers, Count total,
                                          GConvention convention = GConvention::capped) {
  if (papers < 1) throw InputError("aggregate P must be at least 1");
  if (h < 0 || g < 0 || e_sq < 0 || total < 0) throw InputError("aggregate values must be non-negative");
  IndexReport r;
  r.h = h;
  r.g = g;
  r.e_squared = e_sq;
  r.e_ceil = ceil_sqrt(e_sq);
  r.papers = papers;
  r.total_citations = total;
  r.impact_factor = Rational(total, papers);
  r.g_convention = convention;
  return r;
}

}  // namespace citebounds
