#pragma once

#include <cstdint>

#include "qex/field.hpp"

namespace qex {

// Deterministic across platforms; used everywhere sampling is seeded.
struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

inline uint64_t derive_seed(uint64_t seed, uint64_t i) {
  SplitMix64 r(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
  return r.next();
}

// Over F_p: uniform residue. Over Q: integer from a bounded box.
inline Scalar random_scalar(const Field& f, SplitMix64& rng) {
  if (f.is_rational())
    return Scalar(static_cast<long>(rng.below(7)) - 3);
  return Scalar(static_cast<unsigned long>(rng.below(f.characteristic())));
}

}  // namespace qex
