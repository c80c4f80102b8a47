#pragma once

#include <cstdint>
#include <stdexcept>

namespace cupkernel {

struct TwoAdic {
  unsigned long b = 0;
  unsigned long c = 0;  // q = 2^c * (2b+1)
};

inline TwoAdic two_adic(unsigned long q) {
  if (q == 0) throw std::invalid_argument("two_adic: q must be positive");
  TwoAdic t;
  while (q % 2 == 0) {
    q /= 2;
    ++t.c;
  }
  t.b = (q - 1) / 2;
  return t;
}

/// Deterministic 64-bit generator for reproducible randomized trials.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  long next_int(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace cupkernel
