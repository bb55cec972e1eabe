#pragma once
// Buchberger's algorithm with Gebauer-Moeller pair pruning, normal and sugar
// selection, and a hard resource budget. Returns reduced, monic bases.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Budget {
  size_t max_pairs = 200000;
  int max_degree = 30;

  // CREMONA_MAX_PAIRS / CREMONA_MAX_DEGREE override the defaults.
  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("CREMONA_MAX_PAIRS")) b.max_pairs = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("CREMONA_MAX_DEGREE")) b.max_degree = std::atoi(s);
    return b;
  }
};

inline Budget& default_budget() {
  static Budget b = Budget::from_env();
  return b;
}

enum class Strategy { Normal, Sugar };

using Grading = std::array<uint8_t, kMaxVars>;

inline Grading standard_grading() {
  Grading g;
  g.fill(1);
  return g;
}

template <class F>
struct GPoly {
  using Elem = typename F::Elem;
  std::vector<Exp> m;
  std::vector<Elem> c;
  int sugar = 0;
  size_t size() const { return m.size(); }
  bool empty() const { return m.empty(); }
  Exp lm() const { return m.front(); }
};

template <class F>
class Reducer {
 public:
  using Elem = typename F::Elem;
  using P = GPoly<F>;

  Reducer(const F& f, const MonomialOrder& ord) : f_(f), ord_(ord) {}

  P from_poly(const Polynomial<F>& p) const {
    std::vector<size_t> idx(p.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const auto& t = p.terms();
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return ord_.greater(t[a].m, t[b].m); });
    P g;
    for (size_t i : idx) {
      g.m.push_back(t[i].m);
      g.c.push_back(t[i].c);
    }
    return g;
  }

  Polynomial<F> to_poly(const P& g, int n) const {
    std::vector<typename Polynomial<F>::Term> ts;
    for (size_t i = 0; i < g.size(); ++i) ts.push_back({g.m[i], g.c[i]});
    return Polynomial<F>::from_terms(f_, n, std::move(ts));
  }

  void make_monic(P& g) const {
    if (g.empty() || f_.is_one(g.c[0])) return;
    Elem iv = f_.inv(g.c[0]);
    for (auto& x : g.c) x = f_.mul(x, iv);
  }

  // out = a[ia..] - c * x^u * b[ib..]
  void axpy(const P& a, size_t ia, const Elem& c, Exp u, const P& b, size_t ib, P& out) const {
    out.m.clear();
    out.c.clear();
    out.m.reserve(a.size() - ia + b.size() - ib);
    out.c.reserve(a.size() - ia + b.size() - ib);
    Elem nc = f_.neg(c);
    while (ia < a.size() && ib < b.size()) {
      Exp mb = b.m[ib] + u;
      Exp ma = a.m[ia];
      if (ma == mb) {
        Elem v = f_.add(a.c[ia], f_.mul(nc, b.c[ib]));
        if (!f_.is_zero(v)) {
          out.m.push_back(ma);
          out.c.push_back(std::move(v));
        }
        ++ia;
        ++ib;
      } else if (ord_.greater(ma, mb)) {
        out.m.push_back(ma);
        out.c.push_back(a.c[ia]);
        ++ia;
      } else {
        out.m.push_back(mb);
        out.c.push_back(f_.mul(nc, b.c[ib]));
        ++ib;
      }
    }
    for (; ia < a.size(); ++ia) {
      out.m.push_back(a.m[ia]);
      out.c.push_back(a.c[ia]);
    }
    for (; ib < b.size(); ++ib) {
      out.m.push_back(b.m[ib] + u);
      out.c.push_back(f_.mul(nc, b.c[ib]));
    }
  }

  // Reduce p modulo monic divisors. With full=false only the head is reduced.
  // `skip_head` terms of p are kept untouched (used for tail reduction).
  P reduce(P p, const std::vector<const P*>& divs, bool full, size_t skip_head = 0) const {
    P done, tmp;
    done.sugar = p.sugar;
    for (size_t k = 0; k < skip_head && k < p.size(); ++k) {
      done.m.push_back(p.m[k]);
      done.c.push_back(p.c[k]);
    }
    size_t pos = std::min(skip_head, p.size());
    while (pos < p.size()) {
      Exp m = p.m[pos];
      const P* g = nullptr;
      for (const P* d : divs)
        if (mono::divides(d->m[0], m)) {
          g = d;
          break;
        }
      if (g) {
        Elem c = p.c[pos];
        axpy(p, pos + 1, c, m - g->m[0], *g, 1, tmp);
        std::swap(p.m, tmp.m);
        std::swap(p.c, tmp.c);
        pos = 0;
      } else {
        if (!full) break;
        done.m.push_back(m);
        done.c.push_back(p.c[pos]);
        ++pos;
      }
    }
    if (!full) {
      for (; pos < p.size(); ++pos) {
        done.m.push_back(p.m[pos]);
        done.c.push_back(p.c[pos]);
      }
    }
    return done;
  }

  const F& field() const { return f_; }
  const MonomialOrder& order() const { return ord_; }

 private:
  F f_;
  MonomialOrder ord_;
};

template <class F>
class GroebnerBasis {
 public:
  using Elem = typename F::Elem;
  using P = GPoly<F>;

  GroebnerBasis(const F& f, int n, const MonomialOrder& ord, std::vector<P> polys, size_t pairs)
      : f_(f), n_(n), ord_(ord), g_(std::move(polys)), pairs_(pairs) {}

  const F& field() const { return f_; }
  int nvars() const { return n_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<P>& elements() const { return g_; }
  size_t size() const { return g_.size(); }
  size_t pairs_processed() const { return pairs_; }
  bool is_unit() const { return g_.size() == 1 && g_[0].m[0] == 0; }

  std::vector<Exp> leading_monomials() const {
    std::vector<Exp> out;
    for (auto& g : g_) out.push_back(g.m[0]);
    return out;
  }

  std::vector<Polynomial<F>> polynomials() const {
    Reducer<F> r(f_, ord_);
    std::vector<Polynomial<F>> out;
    for (auto& g : g_) out.push_back(r.to_poly(g, n_));
    return out;
  }

  Polynomial<F> normal_form(const Polynomial<F>& p) const {
    if (p.field() != f_) throw FieldMismatch("normal form over a different field");
    if (p.nvars() != n_) throw std::invalid_argument("normal form in a different ring");
    Reducer<F> r(f_, ord_);
    std::vector<const P*> divs;
    for (auto& g : g_) divs.push_back(&g);
    return r.to_poly(r.reduce(r.from_poly(p), divs, true), n_);
  }

  bool contains(const Polynomial<F>& p) const { return normal_form(p).is_zero(); }

  // Every S-polynomial reduces to zero. Used by property tests.
  bool verify() const {
    Reducer<F> r(f_, ord_);
    std::vector<const P*> divs;
    for (auto& g : g_) divs.push_back(&g);
    for (size_t i = 0; i < g_.size(); ++i)
      for (size_t j = i + 1; j < g_.size(); ++j) {
        Exp l = mono::lcm(g_[i].m[0], g_[j].m[0]);
        P a, t;
        for (size_t k = 0; k < g_[i].size(); ++k) {
          a.m.push_back(g_[i].m[k] + (l - g_[i].m[0]));
          a.c.push_back(g_[i].c[k]);
        }
        r.axpy(a, 0, f_.one(), l - g_[j].m[0], g_[j], 0, t);
        if (!r.reduce(t, divs, true).empty()) return false;
      }
    return true;
  }

 private:
  F f_;
  int n_;
  MonomialOrder ord_;
  std::vector<P> g_;
  size_t pairs_;
};

template <class F>
class Buchberger {
 public:
  using Elem = typename F::Elem;
  using P = GPoly<F>;

  Buchberger(const F& f, int n, const MonomialOrder& ord, Strategy strat = Strategy::Sugar, Grading wts = standard_grading(),
             Budget budget = default_budget())
      : f_(f), n_(n), red_(f, ord), ord_(ord), strat_(strat), w_(wts), budget_(budget) {}

  GroebnerBasis<F> run(const std::vector<Polynomial<F>>& gens) {
    std::vector<P> inputs;
    for (auto& g : gens) {
      if (g.field() != f_) throw FieldMismatch("generator over a different field");
      if (g.nvars() != n_) throw std::invalid_argument("generator in a different ring");
      if (g.is_zero()) continue;
      P p = red_.from_poly(g);
      p.sugar = sugar_of(p);
      red_.make_monic(p);
      inputs.push_back(std::move(p));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const P& a, const P& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return ord_.greater(b.m[0], a.m[0]);
    });
    for (auto& p : inputs) {
      if (p.m[0] == 0) return unit();
      P h = red_.reduce(std::move(p), active_divs(), true);
      if (h.empty()) continue;
      if (h.m[0] == 0) return unit();
      red_.make_monic(h);
      insert(std::move(h));
    }
    while (!pairs_.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (++processed_ > budget_.max_pairs) throw BudgetExceeded("S-pair budget exceeded (" + std::to_string(budget_.max_pairs) + ")");
      if (mono::wdegree(pr.lcm, w_) > budget_.max_degree)
        throw BudgetExceeded("degree budget exceeded (" + std::to_string(budget_.max_degree) + ")");
      P s = spoly(pr);
      P h = red_.reduce(std::move(s), active_divs(), true);
      if (h.empty()) continue;
      if (h.m[0] == 0) return unit();
      red_.make_monic(h);
      insert(std::move(h));
    }
    return finish();
  }

 private:
  struct Pair {
    int i, j;
    Exp lcm;
    int sugar;
  };

  int sugar_of(const P& p) const {
    int s = 0;
    for (Exp m : p.m) s = std::max(s, mono::wdegree(m, w_));
    return s;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (strat_ == Strategy::Sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm != b.lcm) return ord_.greater(b.lcm, a.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::vector<const P*> active_divs() const {
    std::vector<const P*> d;
    for (int k : active_) d.push_back(&polys_[k]);
    return d;
  }

  P spoly(const Pair& pr) const {
    const P& a = polys_[pr.i];
    const P& b = polys_[pr.j];
    Exp ua = pr.lcm - a.m[0], ub = pr.lcm - b.m[0];
    P sa;
    sa.m.reserve(a.size());
    sa.c.reserve(a.size());
    for (size_t k = 1; k < a.size(); ++k) {
      sa.m.push_back(a.m[k] + ua);
      sa.c.push_back(a.c[k]);
    }
    P out;
    red_.axpy(sa, 0, f_.one(), ub, b, 1, out);
    out.sugar = pr.sugar;
    return out;
  }

  Pair make_pair(int i, int j) const {
    Exp l = mono::lcm(polys_[i].m[0], polys_[j].m[0]);
    if (mono::overflowed(l)) throw BudgetExceeded("exponent budget exceeded");
    int s = std::max(polys_[i].sugar + mono::wdegree(l - polys_[i].m[0], w_), polys_[j].sugar + mono::wdegree(l - polys_[j].m[0], w_));
    return {i, j, l, s};
  }

  void insert(P h) {
    int hi = static_cast<int>(polys_.size());
    Exp lh = h.m[0];
    polys_.push_back(std::move(h));
    // Gebauer-Moeller update.
    std::vector<Pair> C, D;
    for (int g : active_) C.push_back(make_pair(hi, g));
    for (size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      Exp lg = polys_[p.j].m[0];
      bool keep = mono::coprime(lh, lg);
      if (!keep) {
        keep = true;
        for (size_t q = k + 1; q < C.size() && keep; ++q)
          if (mono::divides(C[q].lcm, p.lcm)) keep = false;
        for (size_t q = 0; q < D.size() && keep; ++q)
          if (mono::divides(D[q].lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> nb;
    for (auto& p : pairs_) {
      bool drop = mono::divides(lh, p.lcm) && mono::lcm(polys_[p.i].m[0], lh) != p.lcm && mono::lcm(lh, polys_[p.j].m[0]) != p.lcm;
      if (!drop) nb.push_back(p);
    }
    for (auto& p : D)
      if (!mono::coprime(lh, polys_[p.j].m[0])) nb.push_back(p);
    pairs_ = std::move(nb);
    std::vector<int> na;
    for (int g : active_)
      if (!mono::divides(lh, polys_[g].m[0])) na.push_back(g);
    na.push_back(hi);
    active_ = std::move(na);
  }

  GroebnerBasis<F> unit() const {
    P one;
    one.m.push_back(0);
    one.c.push_back(f_.one());
    return GroebnerBasis<F>(f_, n_, ord_, {one}, processed_);
  }

  GroebnerBasis<F> finish() {
    std::vector<P> g;
    for (int k : active_) g.push_back(polys_[k]);
    std::sort(g.begin(), g.end(), [&](const P& a, const P& b) { return ord_.greater(b.m[0], a.m[0]); });
    for (size_t k = 0; k < g.size(); ++k) {
      std::vector<const P*> others;
      for (size_t q = 0; q < g.size(); ++q)
        if (q != k) others.push_back(&g[q]);
      g[k] = red_.reduce(std::move(g[k]), others, true, 1);
    }
    return GroebnerBasis<F>(f_, n_, ord_, std::move(g), processed_);
  }

  F f_;
  int n_;
  Reducer<F> red_;
  MonomialOrder ord_;
  Strategy strat_;
  Grading w_;
  Budget budget_;
  std::vector<P> polys_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  size_t processed_ = 0;
};

template <class F>
GroebnerBasis<F> groebner(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord = MonomialOrder::grevlex(),
                          Strategy strat = Strategy::Sugar, Grading wts = standard_grading(), Budget budget = default_budget()) {
  if (gens.empty()) throw std::invalid_argument("groebner needs at least one generator (ring size)");
  return Buchberger<F>(gens[0].field(), gens[0].nvars(), ord, strat, wts, budget).run(gens);
}

}  // namespace cremona
