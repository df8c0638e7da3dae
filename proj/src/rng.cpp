#include "unitri/rng.hpp"

#include <stdexcept>

namespace unitri {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational Rng::rational(int height) {
  if (height < 1) height = 1;
  const long num = uniform(-height, height);
  const long den = uniform(1, height);
  return make_rational(num, den);
}

Rational Rng::nonzero_rational(int height) {
  Rational q;
  do {
    q = rational(height);
  } while (q == 0);
  return q;
}

Rng Rng::split() { return Rng(next() ^ 0x5851f42d4c957f2dULL); }

}  // namespace unitri
