#pragma once
// Rational self-maps of P^3 and the analysis pipeline: base locus, preimage of
// a generic line split by liaison, bidegree, birationality, genus, ruledness.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/ideal.hpp"

namespace cremona {

struct CommonFactor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
class RationalMap {
 public:
  using Poly = Polynomial<F>;
  using Elem = typename F::Elem;

  // Four cubics without common factor.
  static RationalMap cubic(std::vector<Poly> comps, std::string label = "", uint64_t seed = 0) {
    for (auto& c : comps)
      if (!c.is_zero() && (c.degree() != 3 || !c.is_homogeneous())) throw std::invalid_argument("components must be cubic forms");
    return any_degree(std::move(comps), std::move(label), seed);
  }

  static RationalMap any_degree(std::vector<Poly> comps, std::string label = "", uint64_t seed = 0) {
    if (comps.size() != 4) throw std::invalid_argument("a map of P^3 has four components");
    const F& f = comps[0].field();
    int d = -1;
    for (auto& c : comps) {
      if (c.field() != f) throw FieldMismatch("components over different fields");
      if (c.nvars() != 4) throw std::invalid_argument("components must be forms in z0..z3");
      if (!c.is_homogeneous()) throw std::invalid_argument("components must be homogeneous");
      if (c.is_zero()) continue;
      if (d >= 0 && c.degree() != d) throw std::invalid_argument("components of different degrees");
      d = c.degree();
    }
    if (d < 1) throw std::invalid_argument("map has no nonconstant component");
    RationalMap m(std::move(comps), d, std::move(label), seed);
    if (m.ideal().dimension() >= 2) throw CommonFactor("components share a common factor");
    return m;
  }

  const std::vector<Poly>& components() const { return c_; }
  const F& field() const { return c_[0].field(); }
  int degree() const { return d_; }
  const std::string& label() const { return label_; }
  uint64_t seed() const { return seed_; }
  const Ideal<F>& ideal() const { return I_; }

  int span_dim() const { return FormSpace<F>::span(field(), 4, d_, c_).dim(); }

  Point<F> apply(const Point<F>& p) const {
    Point<F> r;
    for (auto& c : c_) r.push_back(c.evaluate(p));
    return r;
  }

  Poly random_member(Rng& rng) const {
    for (;;) {
      Poly s(field(), 4);
      for (auto& c : c_) s = s.add_any(c.scale(field().random(rng)));
      if (!s.is_zero()) return s;
    }
  }

  // A o psi o B with the row-vector convention psi(z B).
  RationalMap conjugate(const Matrix<F>& A, const Matrix<F>& B) const {
    std::vector<Poly> inner;
    for (auto& c : c_) inner.push_back(c.linear_substitute(B));
    if (A.rank() < 4) throw std::invalid_argument("singular target matrix");
    std::vector<Poly> out;
    for (int i = 0; i < 4; ++i) {
      Poly s(field(), 4);
      for (int j = 0; j < 4; ++j) s = s.add_any(inner[j].scale(A.at(i, j)));
      out.push_back(s);
    }
    return any_degree(out, label_, seed_);
  }

 private:
  RationalMap(std::vector<Poly> c, int d, std::string label, uint64_t seed)
      : c_(std::move(c)), d_(d), label_(std::move(label)), seed_(seed), I_(c_[0].field(), 4, c_) {}
  std::vector<Poly> c_;
  int d_;
  std::string label_;
  uint64_t seed_;
  Ideal<F> I_;
};

// Reduction of a rational map modulo a prime.
inline RationalMap<Zp> reduce_mod(const RationalMap<Qq>& m, const Zp& f) {
  std::vector<Polynomial<Zp>> out;
  for (auto& c : m.components()) {
    std::vector<Polynomial<Zp>::Term> ts;
    for (auto& t : c.terms()) ts.push_back({t.m, f.from_mpq(t.c)});
    out.push_back(Polynomial<Zp>::from_terms(f, 4, std::move(ts)));
  }
  return RationalMap<Zp>::any_degree(std::move(out), m.label(), m.seed());
}

inline RationalMap<Zp> reduce_mod(const RationalMap<Zp>& m, const Zp& f) {
  if (f != m.field()) throw FieldMismatch("map already lives over another prime field");
  return m;
}

template <class F>
Polynomial<F> reduce_poly(const Polynomial<Qq>& p, const F& f) {
  std::vector<typename Polynomial<F>::Term> ts;
  for (auto& t : p.terms()) ts.push_back({t.m, f.from_mpq(t.c)});
  return Polynomial<F>::from_terms(f, p.nvars(), std::move(ts));
}

template <class F>
struct CurveRecord {
  Ideal<F> ideal;
  long long degree = 0;
  long long p_a = 1;  // the empty curve has Hilbert polynomial 0
  std::vector<std::pair<Point<F>, long long>> sing;

  static CurveRecord from_ideal(Ideal<F> I) {
    const auto& h = I.hilbert();
    CurveRecord c{I};
    if (h.dimension == 1) {
      c.degree = h.degree;
      c.p_a = h.p_a;
    } else if (h.dimension >= 0) {
      throw AnalysisError("curve ideal has dimension " + std::to_string(h.dimension));
    }
    return c;
  }
  bool empty() const { return degree == 0; }
};

enum class Verdict { Yes, No, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "inconclusive";
  }
}

struct BirationalityResult {
  Verdict verdict = Verdict::Inconclusive;
  int trials = 0;
  std::vector<long long> fiber_degrees;  // -1 marks a positive-dimensional fiber
};

template <class F>
struct LineSplit {
  Ideal<F> gamma;
  CurveRecord<F> C1, C2;
  int attempts = 0;
};

// ------------------------------------------------------------------ pieces

template <class F>
Ideal<F> base_ideal(const RationalMap<F>& psi, Rng& rng) {
  return saturate_irrelevant(psi.ideal(), rng);
}

template <class F>
long long one_dimensional_degree(const Ideal<F>& J) {
  const auto& h = J.hilbert();
  return h.dimension == 1 ? h.degree : 0;
}

template <class F>
LineSplit<F> line_preimage_split(const RationalMap<F>& psi, const Ideal<F>& J, Rng& rng) {
  const F& f = psi.field();
  long long total = static_cast<long long>(psi.degree()) * psi.degree();
  for (int attempt = 1; attempt <= 5; ++attempt) {
    auto g1 = psi.random_member(rng), g2 = psi.random_member(rng);
    Ideal<F> gamma(f, 4, {g1, g2}, true);
    const auto& hg = gamma.hilbert();
    if (hg.dimension != 1 || hg.degree != total) continue;
    auto C1i = saturate(gamma, J, rng).with_saturated(true);
    const auto& h1 = C1i.hilbert();
    if (h1.dimension != 1) continue;
    Ideal<F> C2i = Ideal<F>::unit(f, 4);
    if (h1.degree != total) C2i = ideal_quotient(gamma, generic_element(C1i, rng)).with_saturated(true);
    auto C1 = CurveRecord<F>::from_ideal(C1i);
    auto C2 = CurveRecord<F>::from_ideal(C2i);
    if (C1.degree + C2.degree != total) continue;
    if (!C2.empty() && ideal_sum(C1i, C2i).dimension() >= 1) continue;  // shared component: redraw
    return {gamma, C1, C2, attempt};
  }
  throw AnalysisError("degenerate line choices in 5 attempts");
}

template <class F>
BirationalityResult is_birational(const RationalMap<F>& psi, const Ideal<F>& J, int k, Rng& rng) {
  const F& f = psi.field();
  BirationalityResult res;
  auto fiber_degree = [&](Rng& r) -> long long {
    Point<F> x, y;
    for (int tries = 0;; ++tries) {
      if (tries >= 20) throw AnalysisError("random points keep landing in the base locus");
      x = random_point(f, 4, r);
      y = psi.apply(x);
      bool nz = false;
      for (auto& v : y) nz = nz || !f.is_zero(v);
      if (nz) break;
    }
    std::vector<Polynomial<F>> g;
    const auto& c = psi.components();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.push_back(c[i].scale(y[j]).add_any(c[j].scale(f.neg(y[i]))));
    auto Fs = saturate(Ideal<F>(f, 4, g), J, r);
    const auto& h = Fs.hilbert();
    if (h.dimension > 0) return -1;
    return h.dimension < 0 ? 0 : h.degree;
  };
  try {
    res.verdict = Verdict::Yes;
    for (int t = 0; t < k; ++t) {
      ++res.trials;
      long long d = fiber_degree(rng);
      if (d != 1) {
        long long again = fiber_degree(rng);  // stability under a fresh draw
        res.fiber_degrees.push_back(d);
        if (again == d && d != 0) {
          res.verdict = Verdict::No;
          return res;
        }
        res.verdict = Verdict::Inconclusive;
        continue;
      }
      res.fiber_degrees.push_back(d);
    }
  } catch (const BudgetExceeded&) {
    res.verdict = Verdict::Inconclusive;
  }
  return res;
}

// Length of S . C1 away from the base locus; 1 exactly for birational maps.
template <class F>
long long birationality_certificate(const RationalMap<F>& psi, const CurveRecord<F>& C1, const Ideal<F>& J, Rng& rng) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    auto S = psi.random_member(rng);
    auto cut = ideal_sum(C1.ideal, Ideal<F>(psi.field(), 4, {S}));
    if (cut.dimension() > 0) continue;
    return scheme_length(saturate(cut, J, rng));
  }
  throw AnalysisError("random members keep containing C1");
}

// Plane cubic S|h: 1 if smooth, 0 if irreducible with one node or cusp,
// nullopt when the draw is degenerate.
template <class F>
std::optional<int> plane_section_genus(const RationalMap<F>& psi, Rng& rng) {
  const F& f = psi.field();
  auto S = psi.random_member(rng);
  auto h = random_linear_form(f, 4, rng);
  // parametrize h = 0 by a 3x4 kernel basis
  Matrix<F> a(f, 1, 4);
  for (int i = 0; i < 4; ++i) a.at(0, i) = h.coeff(mono::var(i));
  auto ker = a.kernel();
  std::vector<Polynomial<F>> img;
  for (int i = 0; i < 4; ++i) {
    std::vector<typename F::Elem> co;
    for (int b = 0; b < 3; ++b) co.push_back(ker[b][i]);
    img.push_back(linear_form(f, co));
  }
  auto s = S.substitute(img);
  if (s.is_zero()) return std::nullopt;
  Ideal<F> jac(f, 3, s.partials());
  const auto& hd = jac.hilbert();
  if (hd.dimension < 0) return 1;
  if (hd.dimension > 0) return std::nullopt;
  auto sat = saturate_irrelevant(jac, rng);
  long long len = scheme_length(sat);
  if (len == 0) return 1;
  if (len <= 2 && distinct_point_count(sat, rng) == 1) return 0;
  return std::nullopt;
}

template <class F>
int genus_of_map(const RationalMap<F>& psi, Rng& rng) {
  int votes[2] = {0, 0};
  int valid = 0;
  for (int attempt = 0; attempt < 12 && valid < 3; ++attempt) {
    auto g = plane_section_genus(psi, rng);
    if (!g) continue;
    ++votes[*g];
    ++valid;
  }
  if (valid == 0) throw AnalysisError("plane sections persistently reducible");
  return votes[1] > votes[0] ? 1 : 0;
}

template <class F>
struct RuledResult {
  bool ruled = false;
  std::optional<Ideal<F>> line;  // witness double line
};

template <class F>
Ideal<F> line_through(const F& f, const Point<F>& a, const Point<F>& b) {
  Matrix<F> m(f, 2, 4);
  for (int i = 0; i < 4; ++i) {
    m.at(0, i) = a[i];
    m.at(1, i) = b[i];
  }
  std::vector<Polynomial<F>> g;
  for (auto& v : m.kernel()) g.push_back(linear_form(f, v));
  return Ideal<F>(f, 4, g, true);
}

inline RuledResult<Zp> is_ruled(const RationalMap<Zp>& psi, Rng& rng) {
  const Zp& f = psi.field();
  RuledResult<Zp> res;
  std::vector<Polynomial<Zp>> parts;
  for (auto& c : psi.components())
    for (auto& p : c.partials())
      if (!p.is_zero()) parts.push_back(p);
  auto sigma = saturate_irrelevant(Ideal<Zp>(f, 4, parts), rng);
  const auto& h = sigma.hilbert();
  if (h.dimension != 1 || h.degree != 1) return res;
  std::vector<Point<Zp>> pts;
  for (int k = 0; k < 2; ++k) {
    auto cut = ideal_sum(sigma, Ideal<Zp>(f, 4, {random_linear_form(f, 4, rng)}));
    auto ps = rational_points(saturate_irrelevant(cut, rng), rng);
    if (ps.points.size() != 1) return res;
    pts.push_back(ps.points[0]);
  }
  if (same_point(f, pts[0], pts[1])) return res;
  auto L = line_through(f, pts[0], pts[1]);
  auto L2 = ideal_product(L, L);
  for (auto& c : psi.components())
    if (!L2.contains(c)) return res;
  res.ruled = true;
  res.line = L;
  return res;
}

// Inverse by interpolation: g of degree d' with g(psi(x)) proportional to x,
// imposed as x_j g_i(psi(x)) = x_i g_j(psi(x)) at random points.
inline std::optional<RationalMap<Zp>> inverse(const RationalMap<Zp>& psi, int dprime, Rng& rng) {
  const Zp& f = psi.field();
  auto mg = monomials_of_degree(4, dprime);
  int ng = static_cast<int>(mg.size());
  int unknowns = 4 * ng;
  int npts = unknowns / 3 + 8;
  Matrix<Zp> A(f, 3 * npts, unknowns);
  auto monval = [&](Exp m, const Point<Zp>& p) {
    uint32_t v = 1;
    for (int i = 0; i < 4; ++i) v = f.mul(v, f.pow(p[i], mono::get(m, i)));
    return v;
  };
  for (int k = 0; k < npts; ++k) {
    auto x = random_point(f, 4, rng);
    auto y = psi.apply(x);
    std::vector<uint32_t> gy(ng);
    for (int j = 0; j < ng; ++j) gy[j] = monval(mg[j], y);
    int piv = 0;
    while (x[piv] == 0) ++piv;
    int row = 3 * k;
    for (int i = 0; i < 4; ++i) {
      if (i == piv) continue;
      for (int j = 0; j < ng; ++j) {
        A.at(row, i * ng + j) = f.mul(x[piv], gy[j]);
        A.at(row, piv * ng + j) = f.neg(f.mul(x[i], gy[j]));
      }
      ++row;
    }
  }
  auto ker = A.kernel();
  if (ker.size() != 1) return std::nullopt;
  std::vector<Polynomial<Zp>> comps;
  for (int i = 0; i < 4; ++i) {
    std::vector<Polynomial<Zp>::Term> ts;
    for (int j = 0; j < ng; ++j) ts.push_back({mg[j], ker[0][i * ng + j]});
    comps.push_back(Polynomial<Zp>::from_terms(f, 4, std::move(ts)));
  }
  try {
    auto g = RationalMap<Zp>::any_degree(comps, "inverse");
    for (int t = 0; t < 5; ++t) {
      auto x = random_point(f, 4, rng);
      auto back = g.apply(psi.apply(x));
      bool nz = false;
      for (auto& v : back) nz = nz || v != 0;
      if (nz && !same_point(f, back, x)) return std::nullopt;
    }
    return g;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ------------------------------------------------------------------ full analysis

struct AnalysisOptions {
  int trials = 5;
  bool certificate = true;
  bool genus = true;
  bool ruled = true;
};

template <class F>
struct MapAnalysis {
  uint32_t prime = 0;
  uint64_t seed = 0;
  int degree = 3;
  std::pair<int, int> bidegree{3, 0};
  Ideal<F> J;
  long long deg1part = 0;
  Ideal<F> theta;
  long long theta_count = 0;
  LineSplit<F> split;
  BirationalityResult birational;
  long long certificate = -1;
  int genus = -1;
  RuledResult<F> ruled;
  std::vector<std::string> warnings;

  const CurveRecord<F>& C1() const { return split.C1; }
  const CurveRecord<F>& C2() const { return split.C2; }

  // The integer identities that must hold for every analysis.
  bool degree_identity() const { return C1().degree + C2().degree == static_cast<long long>(degree) * degree; }
  bool genus_formula() const { return C2().degree - C1().degree == C2().p_a - C1().p_a; }
};

template <class F>
Ideal<F> isolated_part(const Ideal<F>& J, const CurveRecord<F>& C2, Rng& rng) {
  if (C2.empty()) return J;
  return saturate(J, C2.ideal, rng).with_saturated(true);
}

inline MapAnalysis<Zp> analyze(const RationalMap<Zp>& psi, uint64_t seed, const AnalysisOptions& opt = {}) {
  const Zp& f = psi.field();
  if (!f.is_working_prime()) throw BadPrime("working prime must exceed 1000");
  Rng rng(seed);
  MapAnalysis<Zp> a{f.prime(), seed, psi.degree(), {psi.degree(), 0}, Ideal<Zp>(f, 4), 0, Ideal<Zp>(f, 4), 0,
                    LineSplit<Zp>{Ideal<Zp>(f, 4), CurveRecord<Zp>{Ideal<Zp>(f, 4)}, CurveRecord<Zp>{Ideal<Zp>(f, 4)}}};
  Rng r_base = rng.split("base");
  a.J = base_ideal(psi, r_base);
  a.deg1part = one_dimensional_degree(a.J);
  Rng r_line = rng.split("line");
  a.split = line_preimage_split(psi, a.J, r_line);
  a.bidegree = {psi.degree(), static_cast<int>(a.split.C1.degree)};
  Rng r_theta = rng.split("theta");
  a.theta = isolated_part(a.J, a.split.C2, r_theta);
  a.theta_count = distinct_point_count(a.theta, r_theta);
  Rng r_fib = rng.split("fiber");
  a.birational = is_birational(psi, a.J, opt.trials, r_fib);
  if (opt.certificate) {
    Rng r_cert = rng.split("certificate");
    a.certificate = birationality_certificate(psi, a.split.C1, a.J, r_cert);
  }
  if (opt.genus && psi.degree() == 3) {
    Rng r_gen = rng.split("genus");
    a.genus = genus_of_map(psi, r_gen);
  }
  if (opt.ruled) {
    Rng r_rul = rng.split("ruled");
    a.ruled = is_ruled(psi, r_rul);
  }
  if (!a.degree_identity()) throw AnalysisError("degree identity violated (bad prime suspected)");
  if (!a.genus_formula()) throw AnalysisError("liaison genus formula violated (bad prime suspected)");
  if (opt.genus && opt.ruled && a.birational.verdict == Verdict::Yes && psi.degree() == 3 && (a.genus == 0) != a.ruled.ruled)
    throw AnalysisError("ruledness and genus disagree (bad prime suspected)");
  return a;
}

}  // namespace cremona
