#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace gaugenorm {

// Seeded source for all randomized constructions. The engine is
// std::mt19937_64 (fully specified by the standard); normals come from our
// own Box-Muller transform so sequences do not depend on the standard
// library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  double normal();
  std::complex<double> complex_normal() { return {normal(), normal()}; }
  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gaugenorm
