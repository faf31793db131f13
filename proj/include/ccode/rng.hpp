#pragma once

#include <cstdint>

namespace ccode {

/// splitmix64 generator. Small state, fully specified arithmetic, so
/// sequences are identical across platforms and compilers; the standard
/// distributions are avoided for the same reason.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), unbiased (multiply-shift with rejection).
  uint64_t next_below(uint64_t bound) {
    if (bound == 0) return 0;
    while (true) {
      const uint64_t x = next();
      const auto m = static_cast<unsigned __int128>(x) * bound;
      const auto low = static_cast<uint64_t>(m);
      if (low >= bound || low >= -bound % bound)
        return static_cast<uint64_t>(m >> 64);
    }
  }

 private:
  uint64_t state_;
};

/// Seed for an independent substream, derived from a master seed and a
/// stream index. Serial and parallel consumers that address streams by
/// index draw identical values.
inline uint64_t substream_seed(uint64_t master_seed, uint64_t stream_index) {
  SplitMix64 mixer(master_seed ^
                   (stream_index + 1) * 0xD1B54A32D192ED03ull);
  return mixer.next();
}

}  // namespace ccode
