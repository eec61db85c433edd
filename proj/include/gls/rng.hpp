#pragma once

#include <cmath>
#include <cstdint>

namespace gls {

// SplitMix64: tiny, fast, and identical on every platform, which is what the
// reproducibility contract needs (std::mt19937 distributions are not
// guaranteed bit-stable across standard libraries).  Constants are the ones
// from Steele, Lea & Flood's original splitmix64 reference code.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n); multiply-shift, bias < 2^-64 (fine here).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Knuth's product method; only used for small lambda (obstacle counts).
  int poisson(double lambda) {
    double limit = std::exp(-lambda);
    double prod = 1.0;
    int k = -1;
    do {
      ++k;
      prod *= uniform();
    } while (prod > limit);
    return k;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gls
