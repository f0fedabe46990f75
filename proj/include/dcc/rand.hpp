#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dcc {

using Rng = std::mt19937_64;

// Bounded draws are done by hand (rejection sampling) instead of through
// std::uniform_int_distribution, whose output is implementation-defined.
// Streams and probe sequences must replay bit-for-bit from a seed.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t t = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= t) return (r - t) % n;
  }
}

inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// splitmix64 finalizer; used to derive independent per-component seeds from
// one master seed without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 0x632be59bd9b4e019ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace dcc
