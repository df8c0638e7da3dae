#pragma once

#include <cstdint>
#include <random>

#include "unitri/rational.hpp"

namespace unitri {

/// Deterministic generator for sampling harnesses.
///
/// Streams are derived from a 64-bit seed through splitmix64, and `split()` hands out
/// independent child streams so that nested samplers do not perturb each other. Bounded
/// integers are drawn by rejection rather than through std distributions, which keeps
/// sequences identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform on [lo, hi] (inclusive).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  bool coin() { return (next() >> 63) != 0; }

  /// Numerator in [-height, height], denominator in [1, height].
  Rational rational(int height);
  Rational nonzero_rational(int height);

  Rng split();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace unitri
