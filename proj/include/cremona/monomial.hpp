#pragma once
// Packed exponent vectors: variable i lives in byte i of a 64-bit word, so at
// most 8 variables with exponents below 64. Products are word additions and
// divisibility is a single SWAR test.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cremona {

using Exp = uint64_t;

constexpr int kMaxVars = 8;

namespace mono {

constexpr uint64_t kHigh = 0x8080808080808080ULL;
constexpr uint64_t kOverflow = 0xC0C0C0C0C0C0C0C0ULL;
constexpr uint64_t kOnes = 0x0101010101010101ULL;

inline int get(Exp m, int i) { return static_cast<int>((m >> (8 * i)) & 0xFF); }
inline Exp var(int i, int e = 1) { return static_cast<Exp>(e) << (8 * i); }
inline Exp set(Exp m, int i, int e) { return (m & ~(0xFFULL << (8 * i))) | var(i, e); }
inline int degree(Exp m) { return static_cast<int>((m * kOnes) >> 56); }
inline bool divides(Exp a, Exp b) { return (((b | kHigh) - a) & kHigh) == kHigh; }

// Byte mask of positions where b_i >= a_i.
inline uint64_t ge_mask(Exp a, Exp b) { return ((((b | kHigh) - a) & kHigh) >> 7) * 0xFF; }
inline Exp lcm(Exp a, Exp b) {
  uint64_t m = ge_mask(a, b);
  return (b & m) | (a & ~m);
}
inline Exp gcd(Exp a, Exp b) {
  uint64_t m = ge_mask(a, b);
  return (a & m) | (b & ~m);
}
inline bool coprime(Exp a, Exp b) { return gcd(a, b) == 0; }
inline bool overflowed(Exp m) { return (m & kOverflow) != 0; }

inline Exp make(std::initializer_list<int> e) {
  Exp m = 0;
  int i = 0;
  for (int v : e) {
    if (v < 0 || v >= 64) throw std::out_of_range("exponent out of range");
    m |= var(i++, v);
  }
  return m;
}

template <class Arr>
inline Exp from_array(const Arr& a, int n) {
  Exp m = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] < 0 || a[i] >= 64) throw std::out_of_range("exponent out of range");
    m |= var(i, static_cast<int>(a[i]));
  }
  return m;
}

// Weighted degree with byte weights.
inline int wdegree(Exp m, const std::array<uint8_t, kMaxVars>& w) {
  int s = 0;
  for (int i = 0; i < kMaxVars; ++i) s += w[i] * get(m, i);
  return s;
}

}  // namespace mono

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block, Weighted };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  // Eliminates the first k variables.
  static MonomialOrder block(int k) {
    MonomialOrder o(Kind::Block);
    if (k < 1 || k >= kMaxVars) throw std::invalid_argument("block size out of range");
    o.k_ = k;
    o.block_mask_ = (k == 8) ? ~0ULL : ((1ULL << (8 * k)) - 1);
    return o;
  }
  // Weighted degree, ties broken reverse-lexicographically. Weights must be positive.
  static MonomialOrder weighted(const std::array<uint8_t, kMaxVars>& w) {
    MonomialOrder o(Kind::Weighted);
    for (auto x : w)
      if (x == 0) throw std::invalid_argument("weights must be positive");
    o.w_ = w;
    return o;
  }

  Kind kind() const { return kind_; }
  int block_size() const { return k_; }
  const std::array<uint8_t, kMaxVars>& weights() const { return w_; }

  // True iff a > b.
  bool greater(Exp a, Exp b) const {
    switch (kind_) {
      case Kind::Grevlex: {
        int da = mono::degree(a), db = mono::degree(b);
        return da != db ? da > db : a < b;
      }
      case Kind::Lex:
        return __builtin_bswap64(a) > __builtin_bswap64(b);
      case Kind::Block: {
        int da = mono::degree(a & block_mask_), db = mono::degree(b & block_mask_);
        if (da != db) return da > db;
        da = mono::degree(a);
        db = mono::degree(b);
        return da != db ? da > db : a < b;
      }
      case Kind::Weighted: {
        int da = mono::wdegree(a, w_), db = mono::wdegree(b, w_);
        return da != db ? da > db : a < b;
      }
    }
    return false;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Block: return "block(" + std::to_string(k_) + ")";
      case Kind::Weighted: {
        std::string s = "weighted(";
        for (int i = 0; i < kMaxVars; ++i) s += (i ? "," : "") + std::to_string(w_[i]);
        return s + ")";
      }
    }
    return "?";
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && (kind_ != Kind::Weighted || w_ == o.w_);
  }
  bool operator<(const MonomialOrder& o) const { return name() < o.name(); }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) { w_.fill(1); }
  Kind kind_;
  int k_ = 0;
  uint64_t block_mask_ = 0;
  std::array<uint8_t, kMaxVars> w_{};
};

}  // namespace cremona
