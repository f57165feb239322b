#pragma once

#include "citebounds/error.hpp"
#include "citebounds/profile.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace citebounds {

/// Truncated discrete power law on {0, ..., c_max}: P(k) proportional to (k + 1)^-alpha.
///
/// Sampling is inverse-CDF on a 53-bit uniform built from raw mt19937_64 output, so
/// results do not depend on the standard library's distribution implementations.
class PowerLawSampler {
 public:
  PowerLawSampler(double alpha, Count c_max) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("power-law exponent must be positive");
    if (c_max < 0) throw InputError("c_max must be non-negative");
    cdf_.reserve(static_cast<std::size_t>(c_max) + 1);
    double acc = 0.0;
    for (Count k = 0; k <= c_max; ++k) {
      acc += std::pow(static_cast<double>(k + 1), -alpha);
      cdf_.push_back(acc);
    }
    for (double& v : cdf_) v /= acc;
    cdf_.back() = 1.0;
  }

  template <class Engine>
  Count operator()(Engine& engine) const {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    std::size_t lo = 0, hi = cdf_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (u < cdf_[mid]) hi = mid; else lo = mid + 1;
    }
    return static_cast<Count>(lo);
  }

  Count c_max() const noexcept { return static_cast<Count>(cdf_.size()) - 1; }

 private:
  std::vector<double> cdf_;
};

/// Draws `papers` counts from the sampler using `engine` and normalizes them.
template <class Engine>
CitationProfile draw_profile(const PowerLawSampler& sampler, std::int64_t papers, Engine& engine) {
  if (papers < 1) throw InputError("profile must have at least one paper");
  std::vector<Count> raw;
  raw.reserve(static_cast<std::size_t>(papers));
  for (std::int64_t i = 0; i < papers; ++i) raw.push_back(sampler(engine));
  return CitationProfile::normalize(std::move(raw));
}

/// P independent power-law draws, normalized. Deterministic for a fixed seed.
inline CitationProfile generate_power_law(std::int64_t papers, double alpha, Count c_max, std::uint64_t seed) {
  if (papers < 1) throw InputError("profile must have at least one paper");
  PowerLawSampler sampler(alpha, c_max);
  std::mt19937_64 engine(seed);
  return draw_profile(sampler, papers, engine);
}

}  // namespace citebounds
