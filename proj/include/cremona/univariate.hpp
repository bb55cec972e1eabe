#pragma once
// Dense univariate polynomials (coefficients low to high), used for eliminants
// and root finding.

#include <algorithm>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

template <class F>
struct UPoly {
  using Elem = typename F::Elem;
  F f;
  std::vector<Elem> c;

  explicit UPoly(const F& field) : f(field) {}
  UPoly(const F& field, std::vector<Elem> coeffs) : f(field), c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && f.is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lead() const { return c.back(); }

  static UPoly monomial(const F& field, int d, const Elem& a) {
    std::vector<Elem> v(d + 1, field.zero());
    v[d] = a;
    return UPoly(field, std::move(v));
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<Elem> v(std::max(c.size(), o.c.size()), f.zero());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] = f.add(v[i], o.c[i]);
    return UPoly(f, std::move(v));
  }
  UPoly operator-(const UPoly& o) const {
    std::vector<Elem> v(std::max(c.size(), o.c.size()), f.zero());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] = f.sub(v[i], o.c[i]);
    return UPoly(f, std::move(v));
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(f);
    std::vector<Elem> v(c.size() + o.c.size() - 1, f.zero());
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(c[i], o.c[j]));
    return UPoly(f, std::move(v));
  }

  // Quotient and remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    UPoly r = *this;
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (r.degree() < d.degree()) return {UPoly(f), r};
    std::vector<Elem> q(r.degree() - d.degree() + 1, f.zero());
    Elem il = f.inv(d.lead());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int s = r.degree() - d.degree();
      Elem k = f.mul(r.lead(), il);
      q[s] = k;
      for (size_t i = 0; i < d.c.size(); ++i) r.c[i + s] = f.sub(r.c[i + s], f.mul(k, d.c[i]));
      r.trim();
    }
    return {UPoly(f, std::move(q)), r};
  }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  UPoly monic() const {
    if (is_zero()) return *this;
    Elem il = f.inv(lead());
    UPoly r = *this;
    for (auto& x : r.c) x = f.mul(x, il);
    return r;
  }
  UPoly derivative() const {
    if (c.size() <= 1) return UPoly(f);
    std::vector<Elem> v(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) v[i - 1] = f.mul(c[i], f.from_int(static_cast<int64_t>(i)));
    return UPoly(f, std::move(v));
  }
  Elem eval(const Elem& x) const {
    Elem s = f.zero();
    for (size_t i = c.size(); i-- > 0;) s = f.add(f.mul(s, x), c[i]);
    return s;
  }
};

template <class F>
UPoly<F> ugcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& a) {
  if (a.degree() <= 0) return a;
  auto g = ugcd(a, a.derivative());
  return (a / g).monic();
}

template <class F>
UPoly<F> upowmod(UPoly<F> base, uint64_t e, const UPoly<F>& mod) {
  UPoly<F> r(base.f, {base.f.one()});
  base = base % mod;
  while (e) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

// Distinct roots in GF(p) via Cantor-Zassenhaus equal-degree splitting.
inline std::vector<uint32_t> roots_mod_p(const UPoly<Zp>& a, Rng& rng) {
  const Zp& f = a.f;
  std::vector<uint32_t> out;
  if (a.degree() <= 0) return out;
  UPoly<Zp> x(f, {0, 1});
  auto xp = upowmod(x, f.prime(), a);
  auto g = ugcd(a, xp - x);
  std::vector<UPoly<Zp>> stack{g};
  while (!stack.empty()) {
    auto h = stack.back();
    stack.pop_back();
    if (h.degree() <= 0) continue;
    if (h.degree() == 1) {
      out.push_back(f.neg(f.div(h.c[0], h.c[1])));
      continue;
    }
    for (;;) {
      UPoly<Zp> t(f, {f.random(rng), 1});
      auto s = upowmod(t, (f.prime() - 1) / 2, h) - UPoly<Zp>(f, {1});
      auto d = ugcd(h, s);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        stack.push_back(d);
        stack.push_back((h / d).monic());
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cremona
