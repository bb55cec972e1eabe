#pragma once
// Homogeneous ideals with cached Groebner bases, the standard ideal
// operations, Hilbert data and local invariants at rational points.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/forms.hpp"
#include "cremona/groebner.hpp"
#include "cremona/univariate.hpp"

namespace cremona {

template <class F>
using Point = std::vector<typename F::Elem>;

struct HilbertData {
  int nvars = 0;
  int dimension = -1;  // projective
  long long degree = 0;
  long long p_a = 0;   // meaningful when dimension == 1
  std::vector<long long> numerator;  // over (1-t)^nvars

  long long hilbert_function(int k) const {
    long long s = 0;
    for (size_t j = 0; j < numerator.size(); ++j) s += numerator[j] * binomial(k - static_cast<long long>(j) + nvars - 1, nvars - 1);
    return s;
  }
  // Hilbert polynomial evaluated at k.
  long long hilbert_polynomial(long long k) const {
    if (dimension < 0) return 0;
    int m = dimension;
    auto red = reduced();
    long long s = 0;
    for (size_t j = 0; j < red.size(); ++j) {
      // binomial(k - j + m, m) continued polynomially in k
      long long x = k - static_cast<long long>(j) + m, num = 1, den = 1;
      for (int i = 0; i < m; ++i) {
        num *= (x - i);
        den *= (i + 1);
      }
      s += red[j] * (num / den);
    }
    return s;
  }
  std::vector<long long> reduced() const {
    std::vector<long long> m = numerator;
    for (int k = 0; k < nvars - dimension - 1; ++k) m = divide_one_minus_t(m);
    return m;
  }
  static std::vector<long long> divide_one_minus_t(const std::vector<long long>& a) {
    // a = (1-t) q: q_j = sum_{i<=j} a_i
    std::vector<long long> q(a.size() > 0 ? a.size() - 1 : 0);
    long long acc = 0;
    for (size_t j = 0; j + 1 < a.size(); ++j) {
      acc += a[j];
      q[j] = acc;
    }
    return q;
  }
};

namespace detail {

inline std::vector<Exp> minimize_monomials(std::vector<Exp> g) {
  std::sort(g.begin(), g.end(), [](Exp a, Exp b) {
    int da = mono::degree(a), db = mono::degree(b);
    return da != db ? da < db : a < b;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Exp> out;
  for (Exp m : g) {
    bool red = false;
    for (Exp o : out)
      if (mono::divides(o, m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

inline void poly_add_shifted(std::vector<long long>& acc, const std::vector<long long>& a, int shift, long long sign) {
  if (acc.size() < a.size() + shift) acc.resize(a.size() + shift, 0);
  for (size_t i = 0; i < a.size(); ++i) acc[i + shift] += sign * a[i];
}

inline void trim(std::vector<long long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Numerator of the Hilbert series of S/M over (1-t)^n, by pivot splitting.
inline std::vector<long long> hilbert_numerator(std::vector<Exp> gens, int n) {
  gens = minimize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens[0] == 0) return {};
  bool coprime = true;
  Exp acc = 0;
  for (Exp g : gens) {
    if (!mono::coprime(acc, g)) {
      coprime = false;
      break;
    }
    acc = mono::lcm(acc, g);
  }
  if (coprime) {
    std::vector<long long> r{1};
    for (Exp g : gens) {
      std::vector<long long> nr(r.size() + mono::degree(g), 0);
      for (size_t i = 0; i < r.size(); ++i) {
        nr[i] += r[i];
        nr[i + mono::degree(g)] -= r[i];
      }
      r = std::move(nr);
    }
    trim(r);
    return r;
  }
  // Pivot on the variable occurring in the most non-pure generators.
  int best = -1, best_count = -1;
  for (int v = 0; v < n; ++v) {
    int cnt = 0;
    for (Exp g : gens) {
      int e = mono::get(g, v);
      if (e > 0 && g != mono::var(v, e)) ++cnt;
    }
    if (cnt > best_count) {
      best_count = cnt;
      best = v;
    }
  }
  int e = 64;
  for (Exp g : gens) {
    int x = mono::get(g, best);
    if (x > 0 && g != mono::var(best, x)) e = std::min(e, x);
  }
  Exp piv = mono::var(best, e);
  std::vector<Exp> plus = gens;
  plus.push_back(piv);
  std::vector<Exp> colon;
  for (Exp g : gens) {
    int x = mono::get(g, best);
    colon.push_back(mono::set(g, best, std::max(0, x - e)));
  }
  auto a = hilbert_numerator(std::move(plus), n);
  auto b = hilbert_numerator(std::move(colon), n);
  poly_add_shifted(a, b, e, 1);
  trim(a);
  return a;
}

inline HilbertData hilbert_from_monomials(const std::vector<Exp>& lms, int n) {
  HilbertData h;
  h.nvars = n;
  h.numerator = hilbert_numerator(lms, n);
  if (h.numerator.empty()) {
    h.dimension = -1;
    return h;
  }
  std::vector<long long> m = h.numerator;
  int r = n;
  auto at1 = [](const std::vector<long long>& a) {
    long long s = 0;
    for (auto x : a) s += x;
    return s;
  };
  while (r > 0 && at1(m) == 0) {
    m = HilbertData::divide_one_minus_t(m);
    --r;
  }
  h.dimension = r - 1;
  if (r == 0) {
    h.dimension = -1;
    return h;
  }
  h.degree = at1(m);
  if (h.dimension == 1) {
    long long d1 = 0;
    for (size_t j = 0; j < m.size(); ++j) d1 += static_cast<long long>(j) * m[j];
    h.p_a = 1 - h.degree + d1;
  }
  return h;
}

}  // namespace detail

template <class F>
class Ideal {
 public:
  using Elem = typename F::Elem;
  using Poly = Polynomial<F>;

  Ideal(const F& field, int n, std::vector<Poly> gens = {}, bool saturated = false)
      : f_(field), n_(n), saturated_(saturated), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.field() != field) throw FieldMismatch("generator over a different field");
      if (g.nvars() != n) throw std::invalid_argument("generator in a different ring");
      if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  static Ideal unit(const F& field, int n) { return Ideal(field, n, {Poly::constant(field, n, field.one())}, true); }

  const F& field() const { return f_; }
  int nvars() const { return n_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool saturated() const { return saturated_; }
  Ideal with_saturated(bool s) const {
    Ideal r = *this;
    r.saturated_ = s;
    return r;
  }
  bool is_zero() const { return gens_.empty(); }

  const GroebnerBasis<F>& gb(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto key = ord.name();
    auto it = cache_->gbs.find(key);
    if (it != cache_->gbs.end()) return *it->second;
    std::shared_ptr<GroebnerBasis<F>> g;
    if (gens_.empty())
      g = std::make_shared<GroebnerBasis<F>>(f_, n_, ord, std::vector<GPoly<F>>{}, 0);
    else
      g = std::make_shared<GroebnerBasis<F>>(groebner(gens_, ord));
    cache_->gbs.emplace(key, g);
    return *g;
  }

  const HilbertData& hilbert() const {
    {
      std::lock_guard<std::mutex> lk(cache_->mu);
      if (cache_->hd) return *cache_->hd;
    }
    auto h = detail::hilbert_from_monomials(gb().leading_monomials(), n_);
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (!cache_->hd) cache_->hd = h;
    return *cache_->hd;
  }
  int dimension() const { return hilbert().dimension; }

  bool is_unit() const { return gb().is_unit(); }
  bool contains(const Poly& p) const { return gb().contains(p); }
  bool contains(const Ideal& o) const {
    for (auto& g : o.gens_)
      if (!contains(g)) return false;
    return true;
  }
  bool equals(const Ideal& o) const {
    auto a = gb().polynomials(), b = o.gb().polynomials();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  // Same ideal, generated by its reduced grevlex basis.
  Ideal reduced() const {
    Ideal r(f_, n_, gb().polynomials(), saturated_);
    r.cache_ = cache_;
    return r;
  }

  bool vanishes_at(const Point<F>& p) const {
    for (auto& g : gens_)
      if (!f_.is_zero(g.evaluate(p))) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<GroebnerBasis<F>>> gbs;
    std::optional<HilbertData> hd;
  };
  F f_;
  int n_;
  std::vector<Poly> gens_;
  bool saturated_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------- points

template <class F>
Point<F> normalize_point(const F& f, Point<F> p) {
  for (auto& x : p)
    if (!f.is_zero(x)) {
      auto iv = f.inv(x);
      for (auto& y : p) y = f.mul(y, iv);
      return p;
    }
  throw std::invalid_argument("all-zero point");
}

template <class F>
bool same_point(const F& f, const Point<F>& a, const Point<F>& b) {
  auto na = normalize_point(f, a), nb = normalize_point(f, b);
  for (size_t i = 0; i < na.size(); ++i)
    if (!f.eq(na[i], nb[i])) return false;
  return true;
}

template <class F>
Point<F> random_point(const F& f, int n, Rng& rng) {
  for (;;) {
    Point<F> p(n);
    bool nz = false;
    for (auto& x : p) {
      x = f.random(rng);
      nz = nz || !f.is_zero(x);
    }
    if (nz) return p;
  }
}

template <class F>
Polynomial<F> linear_form(const F& f, const std::vector<typename F::Elem>& a) {
  std::vector<typename Polynomial<F>::Term> ts;
  for (size_t i = 0; i < a.size(); ++i) ts.push_back({mono::var(static_cast<int>(i)), a[i]});
  return Polynomial<F>::from_terms(f, static_cast<int>(a.size()), std::move(ts));
}

template <class F>
Polynomial<F> random_linear_form(const F& f, int n, Rng& rng) {
  for (;;) {
    std::vector<typename F::Elem> a(n);
    for (auto& x : a) x = f.random(rng);
    auto l = linear_form(f, a);
    if (!l.is_zero()) return l;
  }
}

template <class F>
Polynomial<F> random_linear_through(const F& f, const Point<F>& p, Rng& rng) {
  int n = static_cast<int>(p.size());
  int j = 0;
  while (f.is_zero(p[j])) ++j;
  for (;;) {
    std::vector<typename F::Elem> a(n);
    auto s = f.zero();
    for (int i = 0; i < n; ++i)
      if (i != j) {
        a[i] = f.random(rng);
        s = f.add(s, f.mul(a[i], p[i]));
      }
    a[j] = f.neg(f.div(s, p[j]));
    auto l = linear_form(f, a);
    if (!l.is_zero()) return l;
  }
}

template <class F>
Ideal<F> ideal_of_point(const F& f, const Point<F>& p) {
  int n = static_cast<int>(p.size());
  int j = 0;
  while (f.is_zero(p[j])) ++j;
  std::vector<Polynomial<F>> g;
  for (int i = 0; i < n; ++i)
    if (i != j) {
      std::vector<typename F::Elem> a(n, f.zero());
      a[i] = p[j];
      a[j] = f.neg(p[i]);
      g.push_back(linear_form(f, a));
    }
  return Ideal<F>(f, n, std::move(g), true);
}

// ---------------------------------------------------------------- operations

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal<F>(a.field(), a.nvars(), std::move(g));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  std::vector<Polynomial<F>> g;
  for (auto& x : a.gens())
    for (auto& y : b.gens()) g.push_back(x * y);
  return Ideal<F>(a.field(), a.nvars(), std::move(g));
}

// Exact division; throws if q does not divide p.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& p, const Polynomial<F>& q) {
  const F& f = p.field();
  if (q.is_zero()) throw std::domain_error("division by zero");
  Polynomial<F> r = p;
  std::vector<typename Polynomial<F>::Term> quot;
  Exp lq = q.terms().front().m;
  auto ilc = f.inv(q.leading_coeff());
  while (!r.is_zero()) {
    Exp lr = r.terms().front().m;
    if (!mono::divides(lq, lr)) throw std::domain_error("inexact polynomial division");
    auto c = f.mul(r.leading_coeff(), ilc);
    quot.push_back({lr - lq, c});
    r = r.sub_any(q.times_monomial(lr - lq, c));
  }
  return Polynomial<F>::from_terms(f, p.nvars(), std::move(quot));
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& I, int k) {
  int n = I.nvars();
  if (k <= 0 || k >= n) throw std::invalid_argument("elimination count out of range");
  const auto& G = I.gb(MonomialOrder::block(k));
  Exp mask = (1ULL << (8 * k)) - 1;
  std::vector<Polynomial<F>> out;
  for (auto& g : G.polynomials()) {
    bool free = true;
    for (auto& t : g.terms())
      if (t.m & mask) {
        free = false;
        break;
      }
    if (!free) continue;
    std::vector<typename Polynomial<F>::Term> ts;
    for (auto& t : g.terms()) ts.push_back({t.m >> (8 * k), t.c});
    out.push_back(Polynomial<F>::from_terms(I.field(), n - k, std::move(ts)));
  }
  return Ideal<F>(I.field(), n - k, std::move(out));
}

template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b) {
  const F& f = a.field();
  int n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(f, n);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (n + 1 > kMaxVars) throw std::invalid_argument("intersection needs a spare variable");
  auto t = Polynomial<F>::variable(f, n + 1, 0);
  std::vector<Polynomial<F>> g;
  for (auto& x : a.gens()) g.push_back(t * x.embed(n + 1, 1));
  for (auto& y : b.gens()) {
    auto e = y.embed(n + 1, 1);
    g.push_back(e.sub_any(t * e));
  }
  Grading w = standard_grading();
  w[0] = 0;
  auto G = Buchberger<F>(f, n + 1, MonomialOrder::block(1), Strategy::Sugar, w).run(g);
  std::vector<Polynomial<F>> out;
  for (auto& p : G.polynomials()) {
    bool free = true;
    for (auto& tt : p.terms())
      if (mono::get(tt.m, 0)) {
        free = false;
        break;
      }
    if (!free) continue;
    std::vector<typename Polynomial<F>::Term> ts;
    for (auto& tt : p.terms()) ts.push_back({tt.m >> 8, tt.c});
    out.push_back(Polynomial<F>::from_terms(f, n, std::move(ts)));
  }
  return Ideal<F>(f, n, std::move(out), a.saturated() && b.saturated());
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& g) {
  const F& f = I.field();
  if (g.is_zero()) return Ideal<F>::unit(f, I.nvars());
  if (g.is_constant()) return I;
  auto K = ideal_intersection(I, Ideal<F>(f, I.nvars(), {g}));
  std::vector<Polynomial<F>> out;
  for (auto& k : K.gens()) out.push_back(divide_exact(k, g));
  return Ideal<F>(f, I.nvars(), std::move(out));
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J) {
  if (J.is_zero()) return Ideal<F>::unit(I.field(), I.nvars());
  std::optional<Ideal<F>> acc;
  for (auto& g : J.gens()) {
    auto q = ideal_quotient(I, g);
    acc = acc ? ideal_intersection(*acc, q) : q;
  }
  return *acc;
}

// (I : J^infinity) by iterated quotients until the reduced basis stabilizes.
template <class F>
Ideal<F> saturate_iterated(const Ideal<F>& I, const Ideal<F>& J) {
  Ideal<F> cur = I;
  for (;;) {
    auto next = ideal_quotient(cur, J);
    if (next.equals(cur)) return cur;
    cur = next;
  }
}

// (I : h^infinity): adjoin w - h with w of weight deg h, divide the basis by
// powers of w, then put w = h back.
template <class F>
Ideal<F> saturate_by_element(const Ideal<F>& I, const Polynomial<F>& h) {
  const F& f = I.field();
  int n = I.nvars();
  if (h.is_zero()) return Ideal<F>::unit(f, n);
  if (h.is_constant() || I.is_zero()) return I;
  if (n + 1 > kMaxVars) return saturate_iterated(I, Ideal<F>(f, n, {h}));
  int d = h.degree();
  std::vector<Polynomial<F>> g;
  for (auto& x : I.gens()) g.push_back(x.embed(n + 1));
  g.push_back(Polynomial<F>::variable(f, n + 1, n).sub_any(h.embed(n + 1)));
  Grading w = standard_grading();
  w[n] = static_cast<uint8_t>(d);
  auto G = Buchberger<F>(f, n + 1, MonomialOrder::weighted(w), Strategy::Sugar, w).run(g);
  if (G.is_unit()) return Ideal<F>::unit(f, n);
  std::vector<Polynomial<F>> hp{Polynomial<F>::constant(f, n, f.one())};
  std::vector<Polynomial<F>> out;
  for (auto& p : G.polynomials()) {
    int k = 64;
    for (auto& t : p.terms()) k = std::min(k, mono::get(t.m, n));
    std::vector<typename Polynomial<F>::Term> acc;
    for (auto& t : p.terms()) {
      int e = mono::get(t.m, n) - k;
      while (static_cast<int>(hp.size()) <= e) hp.push_back(hp.back() * h);
      Exp base = t.m & ((1ULL << (8 * n)) - 1);
      auto v = hp[e].times_monomial(base, t.c);
      acc.insert(acc.end(), v.terms().begin(), v.terms().end());
    }
    auto q = Polynomial<F>::from_terms(f, n, std::move(acc));
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return Ideal<F>(f, n, std::move(out));
}

// Random element of J of the top generator degree: sum c_i l_i^(D - deg g_i) g_i.
template <class F>
Polynomial<F> generic_element(const Ideal<F>& J, Rng& rng) {
  const F& f = J.field();
  int n = J.nvars();
  if (J.is_zero()) return Polynomial<F>(f, n);
  int D = 0;
  for (auto& g : J.gens()) {
    if (g.is_constant()) return Polynomial<F>::constant(f, n, f.one());
    D = std::max(D, g.degree());
  }
  for (;;) {
    std::vector<typename Polynomial<F>::Term> acc;
    for (auto& g : J.gens()) {
      auto term = g.scale(f.random_nonzero(rng));
      if (g.degree() < D) term = term * random_linear_form(f, n, rng).pow(D - g.degree());
      acc.insert(acc.end(), term.terms().begin(), term.terms().end());
    }
    auto h = Polynomial<F>::from_terms(f, n, std::move(acc));
    if (!h.is_zero()) return h;
  }
}

template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, Rng& rng) {
  return saturate_by_element(I, generic_element(J, rng));
}

template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& I, Rng& rng) {
  if (I.saturated()) return I;
  return saturate_by_element(I, random_linear_form(I.field(), I.nvars(), rng)).with_saturated(true);
}

template <class F>
long long graded_piece_dim(const Ideal<F>& I, int k) {
  long long all = binomial(k + I.nvars() - 1, I.nvars() - 1);
  if (I.saturated()) return all - I.hilbert().hilbert_function(k);
  Rng rng(0x5a7u);
  return all - saturate_irrelevant(I, rng).hilbert().hilbert_function(k);
}

// ---------------------------------------------------------------- 0-dimensional schemes

// Total length of a 0-dimensional scheme (0 when empty).
template <class F>
long long scheme_length(const Ideal<F>& I) {
  const auto& h = I.hilbert();
  if (h.dimension < 0) return 0;
  if (h.dimension > 0) throw std::invalid_argument("scheme is not 0-dimensional");
  return h.degree;
}

template <class F>
long long local_length(const Ideal<F>& I, const Point<F>& p, Rng& rng) {
  const auto& h = I.hilbert();
  if (h.dimension > 0) throw std::invalid_argument("local_length needs a 0-dimensional scheme");
  if (h.dimension < 0 || !I.vanishes_at(p)) return 0;
  auto R = saturate_by_element(I, random_linear_through(I.field(), p, rng));
  auto P = saturate_by_element(I, generic_element(R, rng));
  return scheme_length(P);
}

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
long long multiplicity_at(const Ideal<F>& C, const Point<F>& p, Rng& rng) {
  if (!C.vanishes_at(p)) return 0;
  for (int trial = 0; trial < 5; ++trial) {
    auto a = local_length(ideal_sum(C, Ideal<F>(C.field(), C.nvars(), {random_linear_through(C.field(), p, rng)})), p, rng);
    auto b = local_length(ideal_sum(C, Ideal<F>(C.field(), C.nvars(), {random_linear_through(C.field(), p, rng)})), p, rng);
    if (a == b) return a;
  }
  throw DegenerateInput("multiplicity trials disagree");
}

// Binary form generating the saturation of the elimination ideal onto
// variables (i, j), returned dehomogenized at z_j = 1 together with the
// multiplicity of the point z_j = 0.
template <class F>
std::pair<UPoly<F>, int> binary_eliminant(const Ideal<F>& I, int i, int j) {
  const F& f = I.field();
  int n = I.nvars();
  Matrix<F> perm(f, n, n);
  // new variable order: others..., z_i, z_j
  std::vector<int> order;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) order.push_back(k);
  order.push_back(i);
  order.push_back(j);
  // old z_{order[c]} -> new z_c
  for (int c = 0; c < n; ++c) perm.at(c, order[c]) = f.one();
  std::vector<Polynomial<F>> g;
  for (auto& x : I.gens()) g.push_back(x.linear_substitute_unchecked(perm));
  auto E = eliminate(Ideal<F>(f, n, std::move(g)), n - 2);
  std::optional<UPoly<F>> acc;
  int vmin = 1 << 20;
  for (auto& e : E.gens()) {
    int D = e.degree();
    std::vector<typename F::Elem> c(D + 1, f.zero());
    int top = -1;
    for (auto& t : e.terms()) {
      int a = mono::get(t.m, 0);
      c[a] = t.c;
      top = std::max(top, a);
    }
    UPoly<F> u(f, c);
    vmin = std::min(vmin, D - u.degree());
    acc = acc ? ugcd(*acc, u) : u.monic();
  }
  if (!acc) return {UPoly<F>(f), 0};  // zero ideal: positive-dimensional image
  return {*acc, vmin};
}

template <class F>
std::vector<Polynomial<F>> substitute_all(const std::vector<Polynomial<F>>& g, const Matrix<F>& M) {
  std::vector<Polynomial<F>> out;
  for (auto& x : g) out.push_back(x.linear_substitute_unchecked(M));
  return out;
}

template <class F>
Point<F> row_times(const Point<F>& q, const Matrix<F>& M) {
  const F& f = M.field();
  Point<F> r(M.cols(), f.zero());
  for (int j = 0; j < M.cols(); ++j)
    for (int i = 0; i < M.rows(); ++i) r[j] = f.add(r[j], f.mul(q[i], M.at(i, j)));
  return r;
}

// Number of distinct geometric points of a 0-dimensional scheme.
template <class F>
long long distinct_point_count(const Ideal<F>& I, Rng& rng) {
  const auto& h = I.hilbert();
  if (h.dimension < 0) return 0;
  if (h.dimension > 0) throw std::invalid_argument("distinct_point_count needs a 0-dimensional scheme");
  int n = I.nvars();
  auto M = Matrix<F>::random_invertible(I.field(), n, rng);
  Ideal<F> J(I.field(), n, substitute_all(I.gens(), M));
  auto [u, vm] = binary_eliminant(J, n - 2, n - 1);
  return squarefree_part(u).degree() + (vm > 0 ? 1 : 0);
}

template <class F>
struct PointSet {
  std::vector<Point<F>> points;  // rational support points, normalized
  long long distinct = 0;        // geometric support size
  long long unresolved() const { return distinct - static_cast<long long>(points.size()); }
};

// Rational support points of a 0-dimensional scheme over GF(p).
inline PointSet<Zp> rational_points(const Ideal<Zp>& I, Rng& rng) {
  const Zp& f = I.field();
  PointSet<Zp> out;
  const auto& h = I.hilbert();
  if (h.dimension < 0) return out;
  if (h.dimension > 0) throw std::invalid_argument("rational_points needs a 0-dimensional scheme");
  int n = I.nvars();
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto M = Matrix<Zp>::random_invertible(f, n, rng);
    Ideal<Zp> J(f, n, substitute_all(I.gens(), M));
    auto [u, vm] = binary_eliminant(J, n - 2, n - 1);
    auto sq = squarefree_part(u);
    if (vm > 0) continue;  // a point on z_{n-1} = 0; redraw
    long long distinct = sq.degree();
    std::vector<Point<Zp>> pts;
    bool ok = true;
    for (uint32_t r : roots_mod_p(sq, rng)) {
      auto K = J.gens();
      std::vector<uint32_t> a(n, 0);
      a[n - 2] = 1;
      a[n - 1] = f.neg(r);
      K.push_back(linear_form(f, a));
      Ideal<Zp> KI(f, n, K);
      Point<Zp> q(n, 0);
      q[n - 2] = r;
      q[n - 1] = 1;
      for (int i = 0; i < n - 2 && ok; ++i) {
        auto [ui, vmi] = binary_eliminant(KI, i, n - 1);
        auto si = squarefree_part(ui);
        if (si.degree() != 1 || vmi > 0) {
          ok = false;
          break;
        }
        q[i] = f.neg(si.c[0]);
      }
      if (!ok) break;
      if (!J.vanishes_at(q)) {
        ok = false;
        break;
      }
      pts.push_back(normalize_point(f, row_times(q, M)));
    }
    if (!ok) continue;
    out.points = std::move(pts);
    out.distinct = distinct;
    return out;
  }
  throw DegenerateInput("could not separate support points");
}

}  // namespace cremona
