#pragma once

// Independent reference implementations used only by the tests. None of these
// call into the library's index, bound or enumeration code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <tuple>
#include <vector>

namespace oracle {

using Counts = std::vector<std::int64_t>;

/// Every non-increasing sequence of length 1..p with entries 0..c, by
/// generate-and-filter over the full box, sorted by an explicit key.
inline std::vector<Counts> brute_force_profiles(int p, int c) {
  std::vector<Counts> out;
  for (int k = 1; k <= p; ++k) {
    Counts digits(static_cast<std::size_t>(k), 0);
    while (true) {
      if (std::is_sorted(digits.begin(), digits.end(), std::greater<>())) out.push_back(digits);
      int pos = 0;
      while (pos < k && digits[static_cast<std::size_t>(pos)] == c) digits[static_cast<std::size_t>(pos++)] = 0;
      if (pos == k) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }
  auto key = [](const Counts& v) {
    Counts neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](auto x) { return -x; });
    return std::tuple(v.size(), std::accumulate(v.begin(), v.end(), std::int64_t{0}), neg);
  };
  std::sort(out.begin(), out.end(), [&](const Counts& a, const Counts& b) { return key(a) < key(b); });
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h by binary search on the monotone predicate c_i >= i.
inline std::int64_t h_binary(const Counts& c) {
  std::int64_t lo = 0, hi = static_cast<std::int64_t>(c.size());
  while (lo < hi) {
    const std::int64_t mid = (lo + hi + 1) / 2;
    if (c[static_cast<std::size_t>(mid - 1)] >= mid) lo = mid; else hi = mid - 1;
  }
  return lo;
}

/// Capped g by binary search over prefix sums (the predicate is monotone for sorted input).
inline std::int64_t g_binary(const Counts& c) {
  Counts prefix(c.size() + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) prefix[i + 1] = prefix[i] + c[i];
  std::int64_t lo = 0, hi = static_cast<std::int64_t>(c.size());
  while (lo < hi) {
    const std::int64_t mid = (lo + hi + 1) / 2;
    if (prefix[static_cast<std::size_t>(mid)] >= mid * mid) lo = mid; else hi = mid - 1;
  }
  return lo;
}

/// Padded g by direct scan, extending with zero-cited papers until i^2 exceeds C.
inline std::int64_t g_padded_scan(const Counts& c) {
  const std::int64_t total = std::accumulate(c.begin(), c.end(), std::int64_t{0});
  std::int64_t best = 0, running = 0;
  for (std::int64_t i = 1; i * i <= total || i <= static_cast<std::int64_t>(c.size()); ++i) {
    if (i <= static_cast<std::int64_t>(c.size())) running += c[static_cast<std::size_t>(i - 1)];
    if (running >= i * i) best = i;
  }
  return best;
}

/// Largest integer k with k * den <= num (den > 0), by stepping.
inline std::int64_t floor_by_search(std::int64_t num, std::int64_t den) {
  std::int64_t k = num >= 0 ? 0 : num;
  while ((k + 1) * den <= num) ++k;
  while (k * den > num) --k;
  return k;
}

/// Smallest integer k with k * den >= num (den > 0).
inline std::int64_t ceil_by_search(std::int64_t num, std::int64_t den) { return -floor_by_search(-num, den); }

}  // namespace oracle
