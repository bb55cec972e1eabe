#pragma once
// Counter-based splittable random streams. A stream is identified by a key
// derived from (seed, label path); draws never depend on call order across
// distinct labels.

#include <cstdint>
#include <string_view>

namespace cremona {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : key_(splitmix64(seed ^ 0x5eed5eed5eed5eedULL)) {}

  Rng split(std::string_view label) const { return Rng(key_, fnv1a(label)); }
  Rng split(uint64_t index) const { return Rng(key_, splitmix64(index + 0x51u)); }

  uint64_t next() { return splitmix64(key_ ^ splitmix64(++ctr_)); }

  // Uniform in [0, n), n > 0.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      uint64_t v = next();
      if (v < limit) return v % n;
    }
  }

  // Uniform in [lo, hi].
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  uint64_t key() const { return key_; }

 private:
  Rng(uint64_t parent, uint64_t tag) : key_(splitmix64(parent * 31 + tag)) {}
  uint64_t key_;
  uint64_t ctr_ = 0;
};

}  // namespace cremona
