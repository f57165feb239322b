#pragma once

#include "citebounds/error.hpp"
#include "citebounds/profile.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace citebounds {

/// One block of the canonical enumeration: all profiles with `papers` entries summing to `total`.
/// Cells are contiguous in canonical order, so they partition the space for parallel work.
struct EnumerationCell {
  std::int64_t papers;
  Count total;
};

/// Cells of the (p_max, c_max) space, in canonical order.
inline std::vector<EnumerationCell> enumeration_cells(std::int64_t p_max, Count c_max) {
  std::vector<EnumerationCell> cells;
  for (std::int64_t p = 1; p <= p_max; ++p) {
    for (Count t = 0; t <= p * c_max; ++t) cells.push_back({p, t});
  }
  return cells;
}

namespace detail {

template <class Visit>
void fill_cell(std::vector<Count>& buf, std::size_t pos, Count remaining, Count cap, Visit& visit) {
  const auto left = static_cast<Count>(buf.size() - pos);
  if (left == 1) {
    buf[pos] = remaining;
    visit(std::span<const Count>(buf));
    return;
  }
  // Largest value first gives descending lexicographic order; the rest must still fit under v.
  const Count hi = remaining < cap ? remaining : cap;
  const Count lo = (remaining + left - 1) / left;
  for (Count v = hi; v >= lo; --v) {
    buf[pos] = v;
    fill_cell(buf, pos + 1, remaining - v, v, visit);
  }
}

}  // namespace detail

/// Visits every non-increasing sequence in the cell with entries in 0..c_max, in descending lex order.
template <class Visit>
void for_each_in_cell(const EnumerationCell& cell, Count c_max, Visit&& visit) {
  if (cell.papers < 1 || cell.total < 0 || cell.total > cell.papers * c_max) return;
  std::vector<Count> buf(static_cast<std::size_t>(cell.papers));
  detail::fill_cell(buf, 0, cell.total, c_max, visit);
}

/// Visits the whole (p_max, c_max) space in canonical order.
template <class Visit>
void for_each_profile(std::int64_t p_max, Count c_max, Visit&& visit) {
  for (const auto& cell : enumeration_cells(p_max, c_max)) for_each_in_cell(cell, c_max, visit);
}

/// Number of profiles of length 1..p_max with entries in 0..c_max: sum_k C(k + c_max, c_max).
/// Empty when the count does not fit in 63 bits.
inline std::optional<std::int64_t> count_profiles(std::int64_t p_max, Count c_max) {
  if (p_max < 1 || c_max < 0) return std::int64_t{0};
  using wide = unsigned __int128;
  constexpr wide limit = static_cast<wide>(std::numeric_limits<std::int64_t>::max());
  wide total = 0;
  // C(k + c, k) built up incrementally: C(k + c, k) = C(k - 1 + c, k - 1) * (k + c) / k
  wide binom = 1;
  for (std::int64_t k = 1; k <= p_max; ++k) {
    binom = binom * static_cast<wide>(k + c_max) / static_cast<wide>(k);
    if (binom > limit) return std::nullopt;
    total += binom;
    if (total > limit) return std::nullopt;
  }
  return static_cast<std::int64_t>(total);
}

/// Materializes the full canonical enumeration. Intended for small spaces.
inline std::vector<CitationProfile> enumerate_profiles(std::int64_t p_max, Count c_max) {
  std::vector<CitationProfile> out;
  if (auto n = count_profiles(p_max, c_max)) out.reserve(static_cast<std::size_t>(*n));
  for_each_profile(p_max, c_max, [&](std::span<const Count> c) {
    out.push_back(CitationProfile::from_sorted(std::vector<Count>(c.begin(), c.end())));
  });
  return out;
}

}  // namespace citebounds
