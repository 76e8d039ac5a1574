#pragma once

#include <cstdint>
#include <string_view>

namespace ga {

// splitmix64: tiny, portable, and fully pinned by the implementation below.
// Standard-library distributions are not used because their output is not
// specified bit-for-bit; reports must replay identically across platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(unsigned num, unsigned den) { return next() % den < num; }
};

// FNV-1a, used to derive per-case seeds from a master seed and a case key.
inline std::uint64_t hash_key(std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : key) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view key) {
  Rng r(master ^ hash_key(key));
  return r.next();
}

}  // namespace ga
