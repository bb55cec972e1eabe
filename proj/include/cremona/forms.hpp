#pragma once
// Finite-dimensional spaces of forms of a fixed degree, handled as coefficient
// vectors. Linear systems, degree pieces of ideals and interpolation
// conditions all live here.

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cremona/linalg.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Degree-d monomials in n variables, grevlex descending.
inline std::vector<Exp> monomials_of_degree(int n, int d) {
  std::vector<Exp> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(mono::from_array(e, n));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](Exp a, Exp b) { return a < b; });  // equal degree: grevlex desc == integer asc
  return out;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class F>
class FormSpace {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  FormSpace(const F& field, int n, int d) : f_(field), n_(n), d_(d), monos_(monomials_of_degree(n, d)) {
    for (size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = static_cast<int>(i);
  }

  static FormSpace all(const F& field, int n, int d) {
    FormSpace s(field, n, d);
    for (size_t i = 0; i < s.monos_.size(); ++i) {
      Vec v(s.monos_.size(), field.zero());
      v[i] = field.one();
      s.basis_.push_back(std::move(v));
    }
    return s;
  }
  static FormSpace span(const F& field, int n, int d, const std::vector<Polynomial<F>>& polys) {
    FormSpace s(field, n, d);
    std::vector<Vec> rows;
    for (auto& p : polys)
      if (!p.is_zero()) rows.push_back(s.to_vector(p));
    s.basis_ = row_basis(field, rows, s.width());
    return s;
  }
  // Degree-d piece of the ideal generated by `gens`.
  static FormSpace degree_piece(const F& field, int n, int d, const std::vector<Polynomial<F>>& gens) {
    std::vector<Polynomial<F>> prods;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("degree piece of an inhomogeneous generator");
      int e = d - g.degree();
      if (e < 0) continue;
      for (Exp m : monomials_of_degree(n, e)) prods.push_back(g.times_monomial(m, field.one()));
    }
    return span(field, n, d, prods);
  }

  const F& field() const { return f_; }
  int nvars() const { return n_; }
  int degree() const { return d_; }
  int width() const { return static_cast<int>(monos_.size()); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Exp>& monomials() const { return monos_; }
  const std::vector<Vec>& basis() const { return basis_; }

  Vec to_vector(const Polynomial<F>& p) const {
    Vec v(monos_.size(), f_.zero());
    for (auto& t : p.terms()) {
      auto it = index_.find(t.m);
      if (it == index_.end()) throw std::invalid_argument("form of the wrong degree");
      v[it->second] = t.c;
    }
    return v;
  }
  Polynomial<F> from_vector(const Vec& v) const {
    std::vector<typename Polynomial<F>::Term> ts;
    for (size_t i = 0; i < v.size(); ++i)
      if (!f_.is_zero(v[i])) ts.push_back({monos_[i], v[i]});
    return Polynomial<F>::from_sorted(f_, n_, std::move(ts));
  }
  std::vector<Polynomial<F>> polynomials() const {
    std::vector<Polynomial<F>> out;
    for (auto& b : basis_) out.push_back(from_vector(b));
    return out;
  }

  // Subspace cut out by linear functionals on coefficient vectors.
  FormSpace subject_to(const std::vector<Vec>& functionals) const {
    FormSpace s = empty_like();
    if (basis_.empty()) return s;
    if (functionals.empty()) return *this;
    Matrix<F> m(f_, static_cast<int>(functionals.size()), dim());
    for (size_t r = 0; r < functionals.size(); ++r)
      for (int b = 0; b < dim(); ++b) {
        Elem acc = f_.zero();
        for (int k = 0; k < width(); ++k)
          if (!f_.is_zero(functionals[r][k]) && !f_.is_zero(basis_[b][k])) acc = f_.add(acc, f_.mul(functionals[r][k], basis_[b][k]));
        m.at(static_cast<int>(r), b) = acc;
      }
    std::vector<Vec> rows;
    for (auto& ker : m.kernel()) rows.push_back(combine(ker));
    s.basis_ = row_basis(f_, rows, width());
    return s;
  }

  // Evaluation functional at a point.
  Vec evaluation(const std::vector<Elem>& pt) const {
    Vec v(monos_.size());
    for (size_t i = 0; i < monos_.size(); ++i) v[i] = Polynomial<F>::monomial(f_, n_, monos_[i], f_.one()).evaluate_affine(pt);
    return v;
  }

  FormSpace vanishing_at(const std::vector<std::vector<Elem>>& pts) const {
    std::vector<Vec> fs;
    for (auto& p : pts) fs.push_back(evaluation(p));
    return subject_to(fs);
  }

  FormSpace intersect(const FormSpace& o) const {
    check(o);
    FormSpace s = empty_like();
    s.basis_ = intersect_spans(f_, basis_, o.basis_, width());
    return s;
  }
  FormSpace plus(const FormSpace& o) const {
    check(o);
    FormSpace s = empty_like();
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    s.basis_ = row_basis(f_, rows, width());
    return s;
  }

  bool contains(const Polynomial<F>& p) const {
    if (p.is_zero()) return true;
    std::vector<Vec> rows = basis_;
    rows.push_back(to_vector(p));
    return static_cast<int>(row_basis(f_, rows, width()).size()) == dim();
  }

  Polynomial<F> random_element(Rng& rng) const {
    Vec coeffs(dim());
    for (auto& c : coeffs) c = f_.random(rng);
    return from_vector(combine(coeffs));
  }

  Vec combine(const Vec& coeffs) const {
    Vec v(width(), f_.zero());
    for (int b = 0; b < dim(); ++b)
      if (!f_.is_zero(coeffs[b]))
        for (int k = 0; k < width(); ++k)
          if (!f_.is_zero(basis_[b][k])) v[k] = f_.add(v[k], f_.mul(coeffs[b], basis_[b][k]));
    return v;
  }

 private:
  FormSpace empty_like() const {
    FormSpace s(f_, n_, d_);
    return s;
  }
  void check(const FormSpace& o) const {
    if (o.n_ != n_ || o.d_ != d_) throw std::invalid_argument("form spaces of different shape");
    if (o.f_ != f_) throw FieldMismatch("form spaces over different fields");
  }

  F f_;
  int n_, d_;
  std::vector<Exp> monos_;
  std::unordered_map<Exp, int> index_;
  std::vector<Vec> basis_;
};

struct EmptySolutionSpace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform random form of degree d vanishing at the given points and lying in
// the given ideals.
template <class F>
Polynomial<F> random_form(int d, const F& field, Rng& rng, const std::vector<std::vector<typename F::Elem>>& points = {},
                          const std::vector<std::vector<Polynomial<F>>>& ideals = {}, int n = 4) {
  auto s = FormSpace<F>::all(field, n, d).vanishing_at(points);
  for (auto& gens : ideals) s = s.intersect(FormSpace<F>::degree_piece(field, n, d, gens));
  if (s.dim() == 0) throw EmptySolutionSpace("no nonzero form satisfies the constraints");
  for (;;) {
    auto p = s.random_element(rng);
    if (!p.is_zero()) return p;
  }
}

template <class F>
Polynomial<F> random_form(int d, const F& field, uint64_t seed, const std::vector<std::vector<typename F::Elem>>& points = {},
                          const std::vector<std::vector<Polynomial<F>>>& ideals = {}, int n = 4) {
  Rng rng(seed);
  return random_form(d, field, rng, points, ideals, n);
}

}  // namespace cremona
