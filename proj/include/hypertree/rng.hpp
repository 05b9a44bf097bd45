#pragma once

#include <cstdint>

namespace hypertree {

// Counter-based splitmix64. Cheap to seed, passes the usual batteries at the
// sample counts we draw, and -- the property we actually need -- supports
// derivation of independent streams from (seed, index) so that parallel
// Monte Carlo runs are reproducible regardless of thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stream `index` of a master seed. Distinct indices give streams whose
  // states are separated by a strong 64-bit mix, not by small offsets.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ mix(index + 0x9e3779b97f4a7c15ULL));
    mixer.next();
    return Rng(mixer.next());
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform draw in [0, bound). Multiply-shift with rejection on the low
  // word keeps the distribution exactly uniform for any bound.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hypertree
