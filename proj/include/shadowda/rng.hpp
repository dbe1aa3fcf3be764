#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "shadowda/types.hpp"

namespace shadowda {

/// Deterministic random source built on std::mt19937_64.
///
/// Uniform doubles are generated by the 53-bit shift method and Gaussians
/// with an explicit Box-Muller transform, so streams are bit-identical
/// across platforms and standard-library implementations for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; draws are consumed in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Vec normal_vector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Vec uniform_vector(int n, double lo, double hi) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace shadowda
