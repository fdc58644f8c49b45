#pragma once

#include <cstdint>
#include <cmath>

#include "jsparse/matrix.hpp"

// Deterministic, seed-addressable random streams. Every consumer derives
// its stream from explicit (seed, index) inputs via a 64-bit mix, so
// parallel execution order never changes what any stream produces.

namespace jsparse::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
  return splitmix64(state);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix(mix(a, b), c);
}

// Gaussian stream via Box-Muller on splitmix64 uniforms. Portable across
// compilers up to libm rounding; bit-stable on a fixed platform.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed) {}

  // Uniform on (0, 1].
  double next_uniform_pos() {
    return static_cast<double>((splitmix64(state_) >> 11) + 1) * 0x1.0p-53;
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform_pos();
    double u2 = next_uniform_pos();
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  // Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      std::uint64_t r = splitmix64(state_);
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Matrix m(rows, cols);
  GaussianStream g(seed);
  double* p = m.data();
  for (std::size_t i = 0; i < m.size(); ++i) p[i] = g.next_gaussian();
  return m;
}

}  // namespace jsparse::rng
