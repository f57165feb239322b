#pragma once

#include "citebounds/indices.hpp"
#include "citebounds/profile.hpp"
#include "citebounds/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace citebounds {

/// Segment sums of a profile split at ranks h and g, and the caps the bound
/// derivations put on them. Segment lengths are clamped at zero, so under the
/// padded convention (g > P) the tail is empty and its caps are 0.
struct PartialSums {
  Count s_top = 0;       ///< c_1 + ... + c_h
  Count s_h_to_P = 0;    ///< c_{h+1} + ... + c_P
  Count s_h_to_g = 0;    ///< c_{h+1} + ... + c_g
  Count s_g_to_P = 0;    ///< c_{g+1} + ... + c_P
  Count bound_Ph = 0;    ///< (P - h) h
  Count bound_gh_h = 0;  ///< (g - h) h
  Count bound_gh_g = 0;  ///< (g - h) g
  Count bound_Pg_h = 0;  ///< (P - g) h
  Count bound_Pg_g = 0;  ///< (P - g) g
  Count g2_plus_tail = 0;  ///< g^2 + s_g_to_P

  friend bool operator==(const PartialSums&, const PartialSums&) = default;
};

/// Fills only the bound expressions; they depend on h, g, P alone.
inline PartialSums segment_bounds(const IndexReport& r) {
  PartialSums s;
  const std::int64_t rest = std::max<std::int64_t>(r.papers - r.h, 0);
  const std::int64_t mid = std::max<std::int64_t>(r.g - r.h, 0);
  const std::int64_t tail = std::max<std::int64_t>(r.papers - r.g, 0);
  s.bound_Ph = rest * r.h;
  s.bound_gh_h = mid * r.h;
  s.bound_gh_g = mid * r.g;
  s.bound_Pg_h = tail * r.h;
  s.bound_Pg_g = tail * r.g;
  return s;
}

inline PartialSums partial_sums(std::span<const Count> counts, const IndexReport& r) {
  PartialSums s = segment_bounds(r);
  const auto n = static_cast<std::int64_t>(counts.size());
  const auto h = std::min(r.h, n);
  const auto g = std::min(r.g, n);
  for (std::int64_t i = 0; i < n; ++i) {
    const Count c = counts[static_cast<std::size_t>(i)];
    if (i < h) s.s_top += c; else s.s_h_to_P += c;
    if (i >= h && i < g) s.s_h_to_g += c;
    if (i >= g) s.s_g_to_P += c;
  }
  s.g2_plus_tail = r.g * r.g + s.s_g_to_P;
  return s;
}

inline PartialSums partial_sums(const CitationProfile& p, const IndexReport& r) { return partial_sums(p.counts(), r); }

/// Whether a bound follows from definitions alone or leans on the sum_{i<=g} c_i ~ g^2 approximation.
enum class BoundKind { exact, heuristic };

inline std::string_view to_string(BoundKind k) { return k == BoundKind::exact ? "exact" : "heuristic"; }

/// h >= floor((C - e^2) / P), the impact-factor form of the lower bound on h.
inline std::int64_t thm1_lower_h(const IndexReport& r) {
  return floor_div(r.total_citations - r.e_squared, r.papers);
}

/// h >= floor((g^2 - e^2) / g); defined as 0 for g = 0.
inline std::int64_t thm2_lower_h(const IndexReport& r) {
  if (r.g == 0) return 0;
  return floor_div(r.g * r.g - r.e_squared, r.g);
}

/// Heuristic: h >= floor((C - g^2) / (P - g)); absent unless P > g.
inline std::optional<std::int64_t> thm4_lower_h(const IndexReport& r) {
  if (r.papers <= r.g) return std::nullopt;
  return floor_div(r.total_citations - r.g * r.g, r.papers - r.g);
}

/// g <= ceil((h^2 + e^2) / h); absent for h = 0.
inline std::optional<std::int64_t> lemma1_upper_g(const IndexReport& r) {
  if (r.h == 0) return std::nullopt;
  return ceil_div(r.h * r.h + r.e_squared, r.h);
}

struct Thm3Result {
  std::int64_t display;  ///< h + ceil(sqrt(e^2))
  bool exact_holds;      ///< g <= h or (g - h)^2 <= e^2
};

/// g <= h + e, checked without irrationals as (g - h)^2 <= e^2.
inline Thm3Result thm3_upper_g(const IndexReport& r) {
  const std::int64_t gap = r.g - r.h;
  return {r.h + r.e_ceil, gap <= 0 || gap * gap <= r.e_squared};
}

/// Heuristic: g >= I_f.
inline Rational lemma2_lower_g(const IndexReport& r) { return r.impact_factor; }

/// One integer-valued bound with its verdict. Slack is actual - bound for lower
/// bounds and bound - actual for upper bounds; negative slack means violated.
struct IntBound {
  std::optional<std::int64_t> value;
  bool holds = true;
  std::optional<std::int64_t> slack;

  friend bool operator==(const IntBound&, const IntBound&) = default;
};

struct RationalBound {
  Rational value{0};
  bool holds = true;
  Rational slack{0};

  friend bool operator==(const RationalBound&, const RationalBound&) = default;
};

struct BoundReport {
  IntBound thm1_lower_h;          ///< exact
  IntBound thm2_lower_h;          ///< exact
  IntBound thm4_lower_h;          ///< heuristic; empty when P = g
  IntBound lemma1_upper_g;        ///< exact; empty when h = 0
  IntBound thm3_upper_g_display;  ///< h + e_ceil
  bool thm3_exact_holds = true;   ///< exact
  RationalBound lemma2_lower_g;   ///< heuristic

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

namespace detail {

inline IntBound lower(std::optional<std::int64_t> bound, std::int64_t actual) {
  if (!bound) return {};
  return {bound, actual >= *bound, actual - *bound};
}

inline IntBound upper(std::optional<std::int64_t> bound, std::int64_t actual) {
  if (!bound) return {};
  return {bound, actual <= *bound, *bound - actual};
}

}  // namespace detail

/// Evaluates every bound from the aggregates in `r`; no raw profile needed.
inline BoundReport bound_report(const IndexReport& r) {
  BoundReport b;
  b.thm1_lower_h = detail::lower(thm1_lower_h(r), r.h);
  b.thm2_lower_h = detail::lower(thm2_lower_h(r), r.h);
  b.thm4_lower_h = detail::lower(thm4_lower_h(r), r.h);
  b.lemma1_upper_g = detail::upper(lemma1_upper_g(r), r.g);
  const auto t3 = thm3_upper_g(r);
  b.thm3_upper_g_display = detail::upper(t3.display, r.g);
  b.thm3_exact_holds = t3.exact_holds;
  const Rational f = lemma2_lower_g(r);
  b.lemma2_lower_g = {f, Rational(r.g) >= f, Rational(r.g) - f};
  return b;
}

}  // namespace citebounds
