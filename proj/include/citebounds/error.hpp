#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace citebounds {

/// Malformed or out-of-domain input (bad record, negative count, empty profile).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search space larger than the configured profile budget.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::int64_t p_max, std::int64_t c_max, std::string detail)
      : std::runtime_error("search space (p_max=" + std::to_string(p_max) +
                           ", c_max=" + std::to_string(c_max) + ") exceeds capacity: " + detail),
        p_max_(p_max),
        c_max_(c_max) {}

  std::int64_t p_max() const noexcept { return p_max_; }
  std::int64_t c_max() const noexcept { return c_max_; }

 private:
  std::int64_t p_max_;
  std::int64_t c_max_;
};

}  // namespace citebounds
