#pragma once
// Exact coefficient fields: prime fields GF(p) with p < 2^31 and the rationals.
// Elements carry no field tag; the field object travels with the polynomial.

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

#include "cremona/rng.hpp"

namespace cremona {

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct BadPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    uint64_t x = powmod64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Random prime in [lo, hi].
inline uint32_t random_prime(Rng& rng, uint32_t lo = 1000003u, uint32_t hi = 2147483647u) {
  for (;;) {
    uint32_t c = static_cast<uint32_t>(rng.range(lo, hi)) | 1u;
    if (c <= hi && is_prime_u64(c)) return c;
  }
}

class Zp {
 public:
  using Elem = uint32_t;

  // Any prime below 2^31 is accepted here; analysis entry points demand p > 1000.
  explicit Zp(uint64_t p) : p_(static_cast<uint32_t>(p)) {
    if (p >= (1ULL << 31) || !is_prime_u64(p)) throw std::invalid_argument("modulus is not a prime below 2^31: " + std::to_string(p));
  }

  uint32_t prime() const { return p_; }
  bool is_working_prime() const { return p_ > 1000; }
  std::string descriptor() const { return "gf:" + std::to_string(p_); }
  bool operator==(const Zp& o) const { return p_ == o.p_; }
  bool operator!=(const Zp& o) const { return p_ != o.p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_mpz(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r.get_ui());
  }
  Elem from_mpq(const mpq_class& q) const {
    Elem d = from_mpz(q.get_den());
    if (d == 0) throw BadPrime("denominator divisible by " + std::to_string(p_));
    return mul(from_mpz(q.get_num()), inv(d));
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<uint64_t>(a) * b % p_); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr) {
      int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return static_cast<Elem>(t < 0 ? t + p_ : t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const { return static_cast<Elem>(powmod64(a, e, p_)); }

  Elem random(Rng& rng) const { return static_cast<Elem>(rng.below(p_)); }
  Elem random_nonzero(Rng& rng) const { return static_cast<Elem>(1 + rng.below(p_ - 1)); }

  // Tonelli-Shanks.
  std::optional<Elem> sqrt(Elem a) const {
    if (a == 0) return Elem{0};
    if (p_ == 2) return a;
    if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
    uint32_t q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    Elem z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
    Elem m_c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    int m = s;
    while (t != 1) {
      int i = 0;
      Elem tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      Elem b = m_c;
      for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
      m = i;
      m_c = mul(b, b);
      t = mul(t, m_c);
      r = mul(r, b);
    }
    return r;
  }

  std::string to_string(Elem a) const { return std::to_string(a); }
  mpq_class to_mpq(Elem a) const { return mpq_class(static_cast<unsigned long>(a)); }

 private:
  uint32_t p_;
};

class Qq {
 public:
  using Elem = mpq_class;

  std::string descriptor() const { return "q"; }
  bool operator==(const Qq&) const { return true; }
  bool operator!=(const Qq&) const { return false; }
  bool is_working_prime() const { return true; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& z) const { return Elem(z); }
  Elem from_mpq(const mpq_class& q) const {
    Elem r(q);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem pow(const Elem& a, uint64_t e) const {
    Elem r(1), b(a);
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // Small integers keep rational computations readable.
  Elem random(Rng& rng) const { return Elem(static_cast<long>(rng.below(201)) - 100); }
  Elem random_nonzero(Rng& rng) const {
    for (;;) {
      Elem v = random(rng);
      if (sgn(v) != 0) return v;
    }
  }

  std::optional<Elem> sqrt(const Elem& a) const {
    if (sgn(a) < 0) return std::nullopt;
    mpz_class n = a.get_num(), d = a.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Elem(rn, rd);
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  mpq_class to_mpq(const Elem& a) const { return a; }
};

}  // namespace cremona
