// Algebra dimensions and capacity limits, plus the error types shared by the
// engine.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pea {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// base^alpha would not fit the configured maximum.
struct CapacityError : Error {
  using Error::Error;
};

// A closure computation grew past its configured element cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Configuration of one full set algebra on the space of alpha-ary sequences
// over {0,...,base-1}.  alpha >= 1 and base >= 1 are both legal; the
// degenerate cases collapse predictably and are exercised in tests.  Checks
// that need two distinct coordinates (the interpolation terms, witnesses)
// validate alpha >= 2 at their own entry points.
struct AlgebraConfig {
  std::uint32_t alpha = 2;
  std::uint32_t base = 2;
  std::uint64_t max_points = 1ull << 20;   // cap on base^alpha
  std::uint64_t closure_cap = 1ull << 16;  // cap on generated-subalgebra size

  void validate() const {
    if (alpha < 1) throw Error("AlgebraConfig: alpha must be >= 1");
    if (base < 1) throw Error("AlgebraConfig: base must be >= 1");
    points();  // throws CapacityError when too large
  }

  // base^alpha, checked against max_points.
  std::uint64_t points() const {
    std::uint64_t p = 1;
    for (std::uint32_t i = 0; i < alpha; ++i) {
      if (p > max_points / base + 1) {
        throw CapacityError("AlgebraConfig: base^alpha exceeds max_points (" +
                            std::to_string(max_points) + ")");
      }
      p *= base;
      if (p > max_points)
        throw CapacityError("AlgebraConfig: base^alpha exceeds max_points (" +
                            std::to_string(max_points) + ")");
    }
    return p;
  }

  bool operator==(const AlgebraConfig& o) const {
    return alpha == o.alpha && base == o.base;
  }
};

}  // namespace pea
