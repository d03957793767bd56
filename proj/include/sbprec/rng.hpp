/**
 * @file rng.hpp
 * @brief Seeded random streams with portable uniform/Gaussian draws.
 *
 * Distributions are generated from raw engine words instead of
 * std::uniform_real_distribution / std::normal_distribution so that a given
 * seed produces the same draw sequence on every standard library.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "sbprec/types.hpp"

namespace sbprec {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Independent stream for parallel work items (stream index = trial index).
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    return Rng(splitmix64(splitmix64(master_seed) + stream_index));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Circularly-symmetric complex Gaussian CN(0, 1): per-entry variance 1,
  // i.e. real/imag parts each N(0, 1/2). Polar form avoids rejection.
  cplx standard_complex_gaussian() {
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double r = std::sqrt(-std::log(u1));
    const double theta = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  // Single random bit.
  unsigned bit() { return static_cast<unsigned>(next_u64() >> 63); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sbprec
