#pragma once
#include <cstdint>

namespace speccond {

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27; x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Counter-derived stream: the draw sequence depends only on (seed, stream),
// so any partition of streams across workers reproduces the same values.
// One stream per Monte-Carlo sample keeps results independent of worker count.
class SampleRng {
 public:
  SampleRng(uint64_t seed, uint64_t stream)
      : state_(mix64(seed + 0x9e3779b97f4a7c15ull) ^
               mix64(stream * 0xd1b54a32d192ed03ull + 0x8cb92ba72f3d8dd7ull)) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // uniform on [0, n), unbiased by rejection
  uint64_t below(uint64_t n) {
    uint64_t r = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t x = next();
      if (x >= r) return (x - r) % n;
    }
  }

  double u01() { return (next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace speccond
