#pragma once

#include <cstdint>

namespace polybound {

// splitmix64: 64-bit state, equidistributed increments. Streams derived from
// (seed, index) are deterministic, so sampling batches can be split and the
// whole pipeline replayed bit-for-bit from one seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  s.next();
  return s.next();
}

// Uniform in [0,1) with 53 random bits.
inline double u01(SplitMix64& g) { return double(g.next() >> 11) * 0x1.0p-53; }

// Standard normal via Box-Muller (explicit, so the stream is reproducible
// across standard libraries).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : g_(seed) {}

  double next_gaussian();
  double next_uniform() { return u01(g_); }
  std::uint64_t next_raw() { return g_.next(); }

 private:
  SplitMix64 g_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace polybound
