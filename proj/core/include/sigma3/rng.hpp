#pragma once

// Deterministic, platform-independent random streams. Each (seed, index)
// pair yields an independent stream, so trials can run in any order or in
// parallel and still reproduce bit-identically.

#include <complex>
#include <cstdint>

namespace sigma3 {

class TrialRng {
 public:
  TrialRng(uint64_t seed, uint64_t index) : s_(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ULL))) {}

  uint64_t next_u64() {
    s_ += 0x9e3779b97f4a7c15ULL;
    return mix(s_);
  }
  // uniform in [0, 1)
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  std::complex<double> complex_box(double half_side) {
    double re = uniform(-half_side, half_side);
    double im = uniform(-half_side, half_side);
    return {re, im};
  }
  bool coin() { return (next_u64() & 1u) != 0; }
  // uniform integer in [0, n)
  uint64_t below(uint64_t n) { return next_u64() % n; }

 private:
  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t s_;
};

}  // namespace sigma3
