#pragma once

// Exact integer helpers shared by the index and bound computations.
// Nothing in here touches floating point.

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace citebounds {

using Rational = boost::rational<std::int64_t>;

/// Mathematical floor of num / den (rounds toward -infinity), den != 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("floor_div: zero denominator");
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

/// Mathematical ceiling of num / den, den != 0.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("ceil_div: zero denominator");
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  if (r != 0 && ((r < 0) == (den < 0))) ++q;
  return q;
}

inline std::int64_t floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
inline std::int64_t ceil(const Rational& r) { return ceil_div(r.numerator(), r.denominator()); }

/// Largest r with r*r <= n, n >= 0. Bisection on integers only.
constexpr std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  std::int64_t lo = 0;
  std::int64_t hi = n < 4 ? n : (n < 3037000499 ? n / 2 : 3037000499);
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid <= n / mid) lo = mid; else hi = mid - 1;
  }
  return lo;
}

/// Smallest r with r*r >= n, n >= 0.
constexpr std::int64_t ceil_sqrt(std::int64_t n) {
  std::int64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

/// Decimal text with exactly two fractional digits, rounding half away from zero.
inline std::string to_fixed2(const Rational& value) {
  const bool negative = value < 0;
  const std::int64_t num = negative ? -value.numerator() : value.numerator();
  const std::int64_t den = value.denominator();
  // round(num * 100 / den) with ties going up (away from zero on the magnitude)
  const std::int64_t hundredths = floor_div(200 * num + den, 2 * den);
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  std::string out = std::to_string(hundredths / 100) + "." + frac;
  if (negative && hundredths != 0) out.insert(0, "-");
  return out;
}

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace citebounds
