#pragma once

#include <cstdint>
#include <random>

#include "rose/point.h"

namespace rose {

/// Deterministic random source: a fixed 64-bit generator with hand-rolled
/// uniform mappings, so seeded output is identical across standard libraries
/// (std distributions are implementation-defined).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform01_open_low() { return 1.0 - uniform01(); }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(double p) { return uniform01() < p; }

  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct PointOptions {
  int max_level = 8;
  double boundary_prob = 0.0;  // rho set exactly onto the base edge
  double corner_prob = 0.0;    // point set exactly onto an outer corner
};

/// A random canonical non-center point with level <= max_level.
RosePoint random_point(const RadiiTable& table, RandomSource& rng,
                       const PointOptions& opt);

/// A random address of exactly the given word length.
PetalAddress random_address(RandomSource& rng, int word_length);

}  // namespace rose
