#pragma once

#include <cstdint>
#include <random>

namespace mrgrc {

// splitmix64 step, used to key independent mt19937_64 streams from
// (seed, stream index) so serial and parallel runs see the same draws.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // Independent stream for (seed, index): mixes the pair through splitmix64.
  static Rng stream(uint64_t seed, uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x1234567893abcdefULL)));
  }

  uint64_t next() { return eng_(); }

  // Uniform in [0, bound). Not for cryptography; modulo bias is negligible
  // for the field sizes used here but we reject anyway to keep draws exact.
  uint64_t below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mrgrc
