#pragma once
// Sparse multivariate polynomials over an exact field, stored as term lists
// sorted descending in grevlex. Text format: "3*z0^2*z1 - 1/2*z3^2".

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/linalg.hpp"
#include "cremona/monomial.hpp"

namespace cremona {

struct InhomogeneousAdd : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Exp m;
    Elem c;
  };

  Polynomial(const F& field, int nvars) : f_(field), n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
  }

  static Polynomial constant(const F& field, int nvars, const Elem& c) { return monomial(field, nvars, 0, c); }
  static Polynomial variable(const F& field, int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    return monomial(field, nvars, mono::var(i), field.one());
  }
  static Polynomial monomial(const F& field, int nvars, Exp m, const Elem& c) {
    Polynomial p(field, nvars);
    if (!field.is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  static Polynomial from_terms(const F& field, int nvars, std::vector<Term> terms) {
    Polynomial p(field, nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_gt(a.m, b.m); });
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().m == t.m) {
        p.t_.back().c = field.add(p.t_.back().c, t.c);
        if (field.is_zero(p.t_.back().c)) p.t_.pop_back();
      } else if (!field.is_zero(t.c)) {
        p.t_.push_back(std::move(t));
      }
    }
    return p;
  }
  // Terms already sorted grevlex-descending, distinct, nonzero.
  static Polynomial from_sorted(const F& field, int nvars, std::vector<Term> terms) {
    Polynomial p(field, nvars);
    p.t_ = std::move(terms);
    return p;
  }

  const F& field() const { return f_; }
  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m == 0); }

  // Largest total degree, -1 for zero.
  int degree() const { return t_.empty() ? -1 : mono::degree(t_.front().m); }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = mono::degree(t_.front().m);
    for (auto& t : t_)
      if (mono::degree(t.m) != d) return false;
    return true;
  }

  Elem coeff(Exp m) const {
    for (auto& t : t_)
      if (t.m == m) return t.c;
    return f_.zero();
  }
  const Elem& leading_coeff() const { return t_.front().c; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.c = f_.neg(t.c);
    return r;
  }
  Polynomial operator+(const Polynomial& o) const { return add_checked(o, false); }
  Polynomial operator-(const Polynomial& o) const { return add_checked(o, true); }
  Polynomial operator*(const Polynomial& o) const {
    check_compat(o);
    if (t_.empty() || o.t_.empty()) return Polynomial(f_, n_);
    std::vector<Term> out;
    out.reserve(t_.size() * o.t_.size());
    for (auto& a : t_)
      for (auto& b : o.t_) {
        Exp m = a.m + b.m;
        if (mono::overflowed(m)) throw std::overflow_error("exponent overflow");
        out.push_back({m, f_.mul(a.c, b.c)});
      }
    return from_terms(f_, n_, std::move(out));
  }
  Polynomial scale(const Elem& c) const {
    if (f_.is_zero(c)) return Polynomial(f_, n_);
    Polynomial r = *this;
    for (auto& t : r.t_) t.c = f_.mul(t.c, c);
    return r;
  }
  Polynomial times_monomial(Exp m, const Elem& c) const {
    if (f_.is_zero(c)) return Polynomial(f_, n_);
    Polynomial r(f_, n_);
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m + m, f_.mul(t.c, c)});
    return r;  // multiplication by a monomial preserves grevlex order
  }
  Polynomial pow(int e) const {
    Polynomial r = constant(f_, n_, f_.one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  Polynomial monic() const {
    if (t_.empty()) return *this;
    return scale(f_.inv(t_.front().c));
  }
  // Sum without the homogeneity precondition.
  Polynomial add_any(const Polynomial& o) const { return merge(o, false); }
  Polynomial sub_any(const Polynomial& o) const { return merge(o, true); }

  bool operator==(const Polynomial& o) const {
    if (f_ != o.f_ || n_ != o.n_ || t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
      if (t_[i].m != o.t_[i].m || !f_.eq(t_[i].c, o.t_[i].c)) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Elem evaluate(const std::vector<Elem>& pt) const {
    if (static_cast<int>(pt.size()) != n_) throw std::invalid_argument("point dimension mismatch");
    bool nonzero = false;
    for (auto& x : pt) nonzero = nonzero || !f_.is_zero(x);
    if (!nonzero) throw std::invalid_argument("all-zero point");
    return evaluate_affine(pt);
  }
  // No projective check; used on arbitrary vectors.
  Elem evaluate_affine(const std::vector<Elem>& pt) const {
    int d = std::max(0, max_var_degree());
    std::vector<std::vector<Elem>> pw(n_, std::vector<Elem>(d + 1, f_.one()));
    for (int i = 0; i < n_; ++i)
      for (int e = 1; e <= d; ++e) pw[i][e] = f_.mul(pw[i][e - 1], pt[i]);
    Elem s = f_.zero();
    for (auto& t : t_) {
      Elem v = t.c;
      for (int i = 0; i < n_; ++i) {
        int e = mono::get(t.m, i);
        if (e) v = f_.mul(v, pw[i][e]);
      }
      s = f_.add(s, v);
    }
    return s;
  }

  Polynomial partial(int i) const {
    std::vector<Term> out;
    for (auto& t : t_) {
      int e = mono::get(t.m, i);
      if (e == 0) continue;
      Elem c = f_.mul(t.c, f_.from_int(e));
      if (f_.is_zero(c)) continue;
      out.push_back({t.m - mono::var(i), c});
    }
    return from_terms(f_, n_, std::move(out));
  }
  std::vector<Polynomial> partials() const {
    std::vector<Polynomial> r;
    for (int i = 0; i < n_; ++i) r.push_back(partial(i));
    return r;
  }

  // General substitution z_i -> images[i] (all in one target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("substitution arity");
    int tn = images.empty() ? n_ : images[0].nvars();
    int d = std::max(0, max_var_degree());
    std::vector<std::vector<Polynomial>> pw(n_);
    for (int i = 0; i < n_; ++i) {
      pw[i].push_back(constant(f_, tn, f_.one()));
      for (int e = 1; e <= d; ++e) pw[i].push_back(pw[i].back() * images[i]);
    }
    std::vector<Term> acc;
    for (auto& t : t_) {
      Polynomial v = constant(f_, tn, t.c);
      for (int i = 0; i < n_; ++i) {
        int e = mono::get(t.m, i);
        if (e) v = v * pw[i][e];
      }
      acc.insert(acc.end(), v.t_.begin(), v.t_.end());
    }
    return from_terms(f_, tn, std::move(acc));
  }

  // f(z M) with z a row vector: z_j -> sum_i M(i,j) z_i.
  // Satisfies sub(f, M N) = sub(sub(f, N), M).
  Polynomial linear_substitute(const Matrix<F>& M) const {
    if (M.rows() != n_ || M.cols() != n_) throw std::invalid_argument("substitution matrix shape");
    if (M.rank() < n_) throw std::invalid_argument("singular substitution matrix");
    return linear_substitute_unchecked(M);
  }
  Polynomial linear_substitute_unchecked(const Matrix<F>& M) const {
    std::vector<Polynomial> img;
    for (int j = 0; j < n_; ++j) {
      std::vector<Term> ts;
      for (int i = 0; i < n_; ++i) ts.push_back({mono::var(i), M.at(i, j)});
      img.push_back(from_terms(f_, n_, std::move(ts)));
    }
    return substitute(img);
  }

  // Reinterpret in a ring with more variables (existing ones keep their index
  // shifted by `offset`).
  Polynomial embed(int new_nvars, int offset = 0) const {
    Polynomial r(f_, new_nvars);
    std::vector<Term> ts;
    for (auto& t : t_) ts.push_back({t.m << (8 * offset), t.c});
    return offset == 0 ? from_sorted(f_, new_nvars, std::move(ts)) : from_terms(f_, new_nvars, std::move(ts));
  }

  int max_var_degree() const {
    int d = 0;
    for (auto& t : t_)
      for (int i = 0; i < n_; ++i) d = std::max(d, mono::get(t.m, i));
    return d;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : t_) {
      std::string c = f_.to_string(t.c);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      std::string m = monomial_string(t.m);
      if (m.empty())
        s += c;
      else if (c == "1")
        s += m;
      else
        s += c + "*" + m;
    }
    return s;
  }

  std::string monomial_string(Exp m) const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      int e = mono::get(m, i);
      if (!e) continue;
      if (!s.empty()) s += "*";
      s += "z" + std::to_string(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  static bool grevlex_gt(Exp a, Exp b) {
    int da = mono::degree(a), db = mono::degree(b);
    return da != db ? da > db : a < b;
  }

 private:
  void check_compat(const Polynomial& o) const {
    if (f_ != o.f_) throw FieldMismatch("polynomials over different fields");
    if (n_ != o.n_) throw std::invalid_argument("polynomials in different rings");
  }
  Polynomial add_checked(const Polynomial& o, bool negate) const {
    check_compat(o);
    if (!t_.empty() && !o.t_.empty()) {
      if (!is_homogeneous() || !o.is_homogeneous() || degree() != o.degree())
        throw InhomogeneousAdd("sum of forms of different degrees");
    }
    return merge(o, negate);
  }
  Polynomial merge(const Polynomial& o, bool negate) const {
    check_compat(o);
    Polynomial r(f_, n_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
      if (j == o.t_.size() || (i < t_.size() && grevlex_gt(t_[i].m, o.t_[j].m))) {
        r.t_.push_back(t_[i++]);
      } else if (i == t_.size() || grevlex_gt(o.t_[j].m, t_[i].m)) {
        r.t_.push_back({o.t_[j].m, negate ? f_.neg(o.t_[j].c) : o.t_[j].c});
        ++j;
      } else {
        Elem c = negate ? f_.sub(t_[i].c, o.t_[j].c) : f_.add(t_[i].c, o.t_[j].c);
        if (!f_.is_zero(c)) r.t_.push_back({t_[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F f_;
  int n_;
  std::vector<Term> t_;
};

// Grammar: term (('+'|'-') term)*, term = [coeff ['*']] factor ('*' factor)*,
// coeff = int | int '/' int, factor = 'z' K ['^' E].
template <class F>
Polynomial<F> parse_poly(const std::string& text, const F& field, int nvars = 4) {
  using Term = typename Polynomial<F>::Term;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::string {
    skip();
    size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw ParseError("expected integer", s);
    return text.substr(s, i - s);
  };
  std::vector<Term> terms;
  skip();
  if (i == text.size()) throw ParseError("empty input", 0);
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) {
      if (first) throw ParseError("empty input", i);
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    first = false;
    mpq_class coeff(sign);
    Exp m = 0;
    bool have_factor = false, have_coeff = false;
    size_t term_start = i;
    skip();
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      have_coeff = true;
      mpz_class num(read_int());
      mpz_class den(1);
      skip();
      if (i < text.size() && text[i] == '/') {
        ++i;
        size_t at = i;
        den = mpz_class(read_int());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      mpq_class q(num, den);
      q.canonicalize();
      coeff *= q;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i == text.size() || text[i] != 'z') throw ParseError("expected variable after '*'", i);
      }
    }
    while (true) {
      skip();
      if (i >= text.size() || text[i] != 'z') {
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
          throw ParseError(std::string("unknown variable starting with '") + text[i] + "'", i);
        break;
      }
      size_t at = i;
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("unknown variable", at);
      int k = std::stoi(read_int());
      if (k >= nvars) throw ParseError("unknown variable z" + std::to_string(k), at);
      int e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t eat = i;
        std::string es = read_int();
        if (es.size() > 2 || std::stoi(es) >= 64) throw ParseError("exponent too large", eat);
        e = std::stoi(es);
      }
      int cur = mono::get(m, k);
      if (cur + e >= 64) throw ParseError("exponent too large", at);
      m = mono::set(m, k, cur + e);
      have_factor = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i >= text.size() || text[i] != 'z') throw ParseError("expected variable after '*'", i);
      } else {
        break;
      }
    }
    if (!have_coeff && !have_factor) throw ParseError("expected term", term_start);
    terms.push_back({m, field.from_mpq(coeff)});
  }
  return Polynomial<F>::from_terms(field, nvars, std::move(terms));
}

template <class F>
std::string print_poly(const Polynomial<F>& p) {
  return p.to_string();
}

}  // namespace cremona
