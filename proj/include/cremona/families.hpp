#pragma once
// Seeded constructors for the families of cubic birational maps of P^3 in
// bidegrees (3,2)..(3,5), golden examples over Q, and deformation paths.

#include <functional>

#include "cremona/hudson.hpp"

namespace cremona {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Expectation {
  std::string label;
  std::string component;
  std::pair<int, int> bidegree{3, 0};
  long long deg_c2 = 0;
  std::optional<long long> pa_c2;
  HudsonCounts counts;
  int row = 0;  // 0: no Table VI row
  std::optional<PointTag> special_tag;
  std::optional<std::pair<long long, long long>> profile;
  std::optional<long long> c2_quadrics;  // graded_piece_dim(I_C2, 2)
  std::optional<long long> c2_cubics;    // graded_piece_dim(I_C2, 3)
};

struct FamilySpec {
  std::string label;
  Expectation expected;
  uint64_t seed = 0;
  std::string field;
};

template <class F>
struct Constructed {
  RationalMap<F> map;
  FamilySpec spec;
};

inline const std::vector<std::string>& family_labels() {
  static const std::vector<std::string> v = {"ruled_3_2", "ruled_3_3", "ruled_3_4", "ruled_3_5", "E2",  "E3",  "E3.5",
                                             "E4",        "E6",        "E7",        "E7.5",      "E8",  "E9",  "E12",
                                             "E13",       "E14",       "E19",       "E23",       "E24"};
  return v;
}

inline std::optional<int> ruled_degree(const std::string& label) {
  if (label.size() == 9 && label.rfind("ruled_3_", 0) == 0 && label[8] >= '2' && label[8] <= '5') return label[8] - '0';
  return std::nullopt;
}

inline Expectation expectation_for(const std::string& label) {
  Expectation e;
  e.label = label;
  e.component = component_of(label);
  auto set = [&](int d, long long deg, std::optional<long long> pa, HudsonCounts c, int row) {
    e.bidegree = {3, d};
    e.deg_c2 = deg;
    e.pa_c2 = pa;
    e.counts = c;
    e.row = row;
  };
  if (auto d = ruled_degree(label)) {
    static const int rows[] = {0, 0, 1, 5, 11, 27};
    HudsonCounts c;
    c.ordinary = 2 * *d - 4;
    set(*d, 9 - *d, std::nullopt, c, rows[*d]);
    return e;
  }
  HudsonCounts none, dp1, bin1, dpc1;
  dp1.dp = 1;
  bin1.binode = 1;
  dpc1.dpc = 1;
  auto with_ord = [](HudsonCounts c, int n) {
    c.ordinary = n;
    return c;
  };
  if (label == "E2") set(3, 6, 3, none, 2);
  else if (label == "E3") set(3, 6, 4, dp1, 3), e.special_tag = PointTag::DoublePoint, e.profile = {{2, 2}}, e.c2_quadrics = 1;
  else if (label == "E3.5") set(3, 6, 4, bin1, 0), e.special_tag = PointTag::Binode, e.c2_quadrics = 1;
  else if (label == "E4") set(3, 6, 4, dpc1, 4), e.special_tag = PointTag::DoubleContactPoint, e.profile = {{2, 4}}, e.c2_quadrics = 1;
  else if (label == "E6") set(4, 5, 1, with_ord(none, 1), 6);
  else if (label == "E7") set(4, 5, 2, with_ord(dp1, 1), 7), e.special_tag = PointTag::DoublePoint, e.profile = {{2, 2}}, e.c2_cubics = 6;
  else if (label == "E7.5") set(4, 5, 2, with_ord(bin1, 1), 0), e.special_tag = PointTag::Binode, e.c2_cubics = 6;
  else if (label == "E8") set(4, 5, 2, with_ord(bin1, 1), 8), e.special_tag = PointTag::Binode, e.profile = {{2, 3}}, e.c2_cubics = 6;
  else if (label == "E9") set(4, 5, 2, with_ord(dpc1, 1), 9), e.special_tag = PointTag::DoubleContactPoint, e.profile = {{2, 4}}, e.c2_cubics = 6;
  else if (label == "E12") set(5, 4, -1, with_ord(none, 2), 12);
  else if (label == "E13") set(5, 4, 1, with_ord(dp1, 2), 13), e.special_tag = PointTag::DoublePoint;
  else if (label == "E14") set(5, 4, 0, with_ord(dp1, 2), 14), e.special_tag = PointTag::DoublePoint;
  else if (label == "E19") {
    HudsonCounts c;
    c.dp = 2;
    c.ordinary = 2;
    set(5, 4, 1, c, 19);
    e.special_tag = PointTag::DoublePoint;
  } else if (label == "E23") {
    HudsonCounts c;
    c.contact = 1;
    set(5, 4, 0, c, 23);
    e.special_tag = PointTag::ContactPoint;
    e.c2_cubics = 7;
  } else if (label == "E24") {
    HudsonCounts c;
    c.dp = 1;
    c.contact = 1;
    set(5, 4, 1, c, 24);
    e.special_tag = PointTag::ContactPoint;
  } else {
    throw std::invalid_argument("unknown family '" + label + "'");
  }
  return e;
}

namespace fam {

template <class F>
struct Kit {
  using P = Polynomial<F>;
  using Elem = typename F::Elem;
  F f;
  Rng& rng;

  P z(int i) const { return P::variable(f, 4, i); }
  P c(const Elem& a) const { return P::constant(f, 4, a); }
  // Random nonzero form of degree d in the listed variables.
  P form(int d, std::vector<int> vars = {0, 1, 2, 3}) const {
    for (;;) {
      std::vector<typename P::Term> ts;
      for (Exp m : monomials_of_degree(static_cast<int>(vars.size()), d)) {
        Exp e = 0;
        for (size_t i = 0; i < vars.size(); ++i) e = mono::set(e, vars[i], mono::get(m, static_cast<int>(i)));
        ts.push_back({e, f.random(rng)});
      }
      auto p = P::from_terms(f, 4, std::move(ts));
      if (!p.is_zero()) return p;
    }
  }
  P ternary(int d) const { return form(d, {0, 1, 2}); }
  // Random quadric through (0:0:0:1).
  P quadric_through_p() const {
    auto q = form(2);
    return q.sub_any(P::monomial(f, 4, mono::var(3, 2), q.coeff(mono::var(3, 2))));
  }
  Point<F> point() const { return random_point(f, 4, rng); }
};

template <class F>
Point<F> e3(const F& f) {
  return {f.zero(), f.zero(), f.zero(), f.one()};
}

template <class F>
std::vector<typename F::Elem> singular_functional(const FormSpace<F>& sp, const Point<F>& p, int i) {
  const F& f = sp.field();
  std::vector<typename F::Elem> v;
  for (Exp m : sp.monomials()) v.push_back(Polynomial<F>::monomial(f, 4, m, f.one()).partial(i).evaluate_affine(p));
  return v;
}

template <class F>
FormSpace<F> singular_at(const FormSpace<F>& sp, const Point<F>& p) {
  std::vector<std::vector<typename F::Elem>> fs;
  for (int i = 0; i < 4; ++i) fs.push_back(singular_functional(sp, p, i));
  return sp.subject_to(fs);
}

// Members of sp lying in I_q^2 + (h): vanishing at q with gradient along h.
template <class F>
FormSpace<F> contact_at(const FormSpace<F>& sp, const Point<F>& q, const Polynomial<F>& h) {
  const F& f = sp.field();
  std::vector<typename F::Elem> hc(4);
  for (int i = 0; i < 4; ++i) hc[i] = h.coeff(mono::var(i));
  std::vector<std::vector<typename F::Elem>> fs{sp.evaluation(q)};
  std::vector<std::vector<typename F::Elem>> g;
  for (int i = 0; i < 4; ++i) g.push_back(singular_functional(sp, q, i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<typename F::Elem> v(sp.width());
      for (int k = 0; k < sp.width(); ++k) v[k] = f.sub(f.mul(hc[j], g[i][k]), f.mul(hc[i], g[j][k]));
      fs.push_back(v);
    }
  return sp.subject_to(fs);
}

template <class F>
Polynomial<F> det3(const std::array<std::array<Polynomial<F>, 3>, 3>& m) {
  auto t1 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  auto t2 = m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  auto t3 = m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return t1.sub_any(t2).add_any(t3);
}

template <class F>
using Mat43 = std::array<std::array<Polynomial<F>, 3>, 4>;

template <class F>
Mat43<F> random_mat43(Kit<F>& k) {
  auto r = [&] { return std::array<Polynomial<F>, 3>{k.form(1), k.form(1), k.form(1)}; };
  return {r(), r(), r(), r()};
}

template <class F>
std::array<std::array<Polynomial<F>, 3>, 3> drop_row(const Mat43<F>& M, int r) {
  std::array<std::array<Polynomial<F>, 3>, 3> out{{{M[0][0], M[0][0], M[0][0]}, {M[0][0], M[0][0], M[0][0]}, {M[0][0], M[0][0], M[0][0]}}};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != r) out[k++] = M[i];
  return out;
}

template <class F>
RationalMap<F> finish(const FormSpace<F>& lam, const std::string& label, uint64_t seed) {
  if (lam.dim() != 4) throw ConstructionError(label + ": linear system has dimension " + std::to_string(lam.dim()));
  return RationalMap<F>::cubic(lam.polynomials(), label, seed);
}

template <class F>
RationalMap<F> with_retries(const std::string& label, uint64_t seed, const std::function<RationalMap<F>(Rng&)>& build) {
  std::string last;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng = Rng(seed).split(label).split(static_cast<uint64_t>(attempt));
    try {
      return build(rng);
    } catch (const ConstructionError& e) {
      last = e.what();
    } catch (const CommonFactor& e) {
      last = e.what();
    }
  }
  throw ConstructionError("degenerate sample after 10 attempts: " + last);
}

}  // namespace fam

// ------------------------------------------------------------------ ruled

// I_delta^2 with 5-d rulings and 2d-4 points on a random ruled cubic with
// double line delta = {z0 = z1 = 0}. With degenerate set, two of the points
// share a ruling, which drops the map to ruled_{3,d-1}.
template <class F>
RationalMap<F> ruled(int d, uint64_t seed, const F& f, bool degenerate = false) {
  if (d < 2 || d > 5) throw std::invalid_argument("ruled maps need 2 <= d <= 5");
  if (degenerate && d < 3) throw ConstructionError(ruled_label(d) + ": no two base points to put on one ruling");
  using Elem = typename F::Elem;
  std::string label = ruled_label(degenerate ? d - 1 : d);
  return fam::with_retries<F>(label, seed ^ (degenerate ? 0xd6ULL : 0) ^ static_cast<uint64_t>(d), [&](Rng& rng) {
    fam::Kit<F> k{f, rng};
    auto A = k.form(1), B = k.form(1), C = k.form(1);
    auto S = k.z(0) * k.z(0) * A + k.z(0) * k.z(1) * B + k.z(1) * k.z(1) * C;
    // Ruling in the plane z1 = lam z0: kernel of a 2x4 system.
    auto ruling = [&](const Elem& lam) {
      Elem l2 = f.mul(lam, lam);
      std::vector<Elem> cv(4);
      for (int i = 0; i < 4; ++i)
        cv[i] = f.add(A.coeff(mono::var(i)), f.add(f.mul(lam, B.coeff(mono::var(i))), f.mul(l2, C.coeff(mono::var(i)))));
      std::vector<Elem> r1{f.neg(lam), f.one(), f.zero(), f.zero()};
      std::vector<Elem> r2{f.add(cv[0], f.mul(lam, cv[1])), f.zero(), cv[2], cv[3]};
      auto ker = Matrix<F>::from_rows(f, {r1, r2}).kernel();
      if (ker.size() != 2) throw ConstructionError(label + ": degenerate ruling");
      return ker;
    };
    auto comb = [&](const std::vector<std::vector<Elem>>& ker, const Elem& a, const Elem& b) {
      Point<F> p(4);
      for (int i = 0; i < 4; ++i) p[i] = f.add(f.mul(a, ker[0][i]), f.mul(b, ker[1][i]));
      return p;
    };
    auto lam_space = FormSpace<F>::degree_piece(f, 4, 3, {k.z(0) * k.z(0), k.z(0) * k.z(1), k.z(1) * k.z(1)});
    std::vector<Point<F>> pts;
    // Distinct rulings, apart from the deliberately shared one.
    std::vector<Elem> used;
    auto fresh = [&](const Elem& lam) {
      for (auto& u : used)
        if (f.eq(u, lam)) throw ConstructionError(label + ": two base points on one ruling");
      used.push_back(lam);
      return lam;
    };
    for (int i = 0; i < 5 - d; ++i) {
      auto ker = ruling(fresh(f.random(rng)));
      for (int j = 0; j < 4; ++j) pts.push_back(comb(ker, f.one(), f.from_int(j)));
      pts.push_back(comb(ker, f.zero(), f.one()));
    }
    std::optional<Elem> shared;
    for (int i = 0; i < 2 * d - 4; ++i) {
      Elem lam = f.random(rng);
      if (degenerate && i == 1)
        lam = *shared;
      else
        lam = fresh(lam);
      if (degenerate && i == 0) shared = lam;
      pts.push_back(comb(ruling(lam), f.random_nonzero(rng), f.random_nonzero(rng)));
    }
    auto lam = lam_space.vanishing_at(pts);
    // S must be smooth at random points off delta.
    for (int t = 0; t < 3; ++t) {
      auto p = comb(ruling(f.random(rng)), f.random_nonzero(rng), f.random_nonzero(rng));
      bool sing = true;
      for (auto& g : S.partials()) sing = sing && f.is_zero(g.evaluate(p));
      if (sing) throw ConstructionError(label + ": ruled cubic singular off the double line");
    }
    if (!lam.contains(S)) throw ConstructionError(label + ": ruled cubic not in the system");
    return fam::finish(lam, label, seed);
  });
}

// ------------------------------------------------------------------ (3,3)

template <class F>
RationalMap<F> determinantal(uint64_t seed, const F& f) {
  return fam::with_retries<F>("E2", seed, [&](Rng& rng) {
    fam::Kit<F> k{f, rng};
    auto M = fam::random_mat43(k);
    std::vector<Polynomial<F>> comps;
    for (int i = 0; i < 4; ++i) {
      auto m = fam::det3(fam::drop_row(M, i));
      comps.push_back(i % 2 ? -m : m);
    }
    return fam::finish(FormSpace<F>::span(f, 4, 3, comps), "E2", seed);
  });
}

// I_p Q + (S) with p = (0:0:0:1).
template <class F>
RationalMap<F> dejonquieres(const std::string& variant, uint64_t seed, const F& f) {
  if (variant != "E3" && variant != "E3.5" && variant != "E4") throw std::invalid_argument("unknown de Jonquieres variant " + variant);
  return fam::with_retries<F>(variant, seed, [&](Rng& rng) {
    fam::Kit<F> k{f, rng};
    auto l = k.ternary(1);
    auto Q = variant == "E4" ? k.ternary(2) : k.z(3) * l + k.ternary(2);
    auto s2 = variant == "E3.5" ? l * k.ternary(1) : k.ternary(2);
    auto S = k.z(3) * s2 + k.ternary(3);
    if (variant == "E4" && detail::quadric_rank(detail::jet(Q, 2)) != 3) throw ConstructionError("E4: cone of low rank");
    return fam::finish(FormSpace<F>::span(f, 4, 3, {k.z(0) * Q, k.z(1) * Q, k.z(2) * Q, S}), variant, seed);
  });
}

// ------------------------------------------------------------------ (3,4)

// The 2x2 minors of M_t, restricted to cubics through p1.
template <class F>
RationalMap<F> elliptic_quintic_path(const F& f, const typename F::Elem& t, uint64_t seed, const std::string& label) {
  return fam::with_retries<F>("E6-path", seed, [&](Rng& rng) {
    fam::Kit<F> k{f, rng};
    std::array<Polynomial<F>, 4> L{k.form(1), k.form(1), k.form(1), k.form(1)};
    auto p1 = k.point();
    auto z0 = k.z(0), z1 = k.z(1), z2 = k.z(2), z3 = k.z(3), T = k.c(t);
    auto Q = z0 * z3 - z1 * z2;
    auto q1 = z2 * z2 + z0 * L[1] + T * z3 * L[2];
    auto q2 = -(z2 * z3) - z1 * L[1] + T * z3 * L[3];
    auto q3 = -(z2 * L[0]) - z1 * L[2] - z0 * L[3];
    std::array<Polynomial<F>, 4> r1{T * z3, z0, -z1, -z2};
    std::array<Polynomial<F>, 4> r2{(T * z3 * L[0]).add_any(Q), q1, q2, q3};
    std::vector<Polynomial<F>> minors;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) minors.push_back((r1[i] * r2[j]).sub_any(r1[j] * r2[i]));
    auto span = FormSpace<F>::span(f, 4, 3, minors);
    if (span.dim() != 5) throw ConstructionError("E6: minors span dimension " + std::to_string(span.dim()));
    return fam::finish(span.vanishing_at({p1}), label, seed);
  });
}

// (Q I_p, S1, S2) through p1 with p = (0:0:0:1); Q, S1, S2 in determinantal
// form, or obtained by linkage from a line of a cone for E8.
template <class F>
RationalMap<F> cuboquartic(const std::string& variant, uint64_t seed, const F& f) {
  using Elem = typename F::Elem;
  if (variant == "E6") {
    Rng r = Rng(seed).split("E6-t");
    return elliptic_quintic_path(f, f.random_nonzero(r), seed, "E6");
  }
  if (variant != "E7" && variant != "E7.5" && variant != "E8" && variant != "E9")
    throw std::invalid_argument("unknown (3,4) variant " + variant);
  return fam::with_retries<F>(variant, seed, [&](Rng& rng) {
    fam::Kit<F> k{f, rng};
    auto p = fam::e3(f);
    Polynomial<F> Q(f, 4), S1(f, 4), S2(f, 4);
    if (variant == "E8") {
      auto Qc = k.z(0) * k.ternary(1) + k.z(1) * k.ternary(1);
      if (detail::quadric_rank(detail::jet(Qc, 2)) != 3) throw ConstructionError("E8: cone of low rank");
      // Quadratic part of S1 at p is h m with m through the direction of l,
      // so h is the fixed plane of the binode.
      auto h = k.ternary(1);
      auto mu0 = k.c(f.random_nonzero(rng)), mu1 = k.c(f.random_nonzero(rng));
      auto A = k.z(3) * mu0 * h + k.ternary(2), B = k.z(3) * mu1 * h + k.ternary(2);
      Q = Qc;
      S1 = k.z(0) * A + k.z(1) * B;
      Ideal<F> CI(f, 4, {Q, S1});
      auto C2 = ideal_quotient(CI, Ideal<F>(f, 4, {k.z(0), k.z(1)}));
      auto V = fam::singular_at(FormSpace<F>::degree_piece(f, 4, 3, C2.gens()), p);
      auto dirs = Matrix<F>::from_rows(f, {{h.coeff(mono::var(0)), h.coeff(mono::var(1)), h.coeff(mono::var(2))}}).kernel();
      if (dirs.size() != 2) throw ConstructionError("E8: degenerate plane");
      dirs.push_back({f.add(dirs[0][0], dirs[1][0]), f.add(dirs[0][1], dirs[1][1]), f.add(dirs[0][2], dirs[1][2])});
      std::vector<std::vector<Elem>> jet_conds;
      for (auto& v : dirs) {
        std::vector<Elem> row;
        for (Exp m : V.monomials())
          row.push_back(mono::get(m, 3) == 1 ? Polynomial<F>::monomial(f, 4, mono::set(m, 3, 0), f.one()).evaluate({v[0], v[1], v[2], f.zero()})
                                             : f.zero());
        jet_conds.push_back(row);
      }
      auto W = V.subject_to(jet_conds);
      if (W.dim() != 5) throw ConstructionError("E8: binodal cubics of dimension " + std::to_string(W.dim()));
      S2 = W.random_element(rng);
    } else {
      Elem a = f.random_nonzero(rng);
      auto L0 = k.ternary(1) + k.z(3).scale(a);
      auto L1 = variant == "E9" ? k.ternary(1) : k.form(1);
      auto L2 = variant == "E9" ? k.ternary(1) : k.form(1);
      Elem b = L1.coeff(mono::var(3));
      Polynomial<F> L3(f, 4);
      if (variant != "E9") L3 = k.ternary(1) + k.z(3).scale(f.div(f.mul(b, L2.coeff(mono::var(3))), a));
      Q = (L0 * L3).sub_any(L1 * L2);
      auto Q2 = k.ternary(2);
      Polynomial<F> Q1 = k.ternary(2);
      if (variant == "E7.5") {
        // Quadratic part a Q1 + b Q2 at p made divisible by the tangent plane.
        std::vector<typename Polynomial<F>::Term> ts;
        for (auto& t : Q.terms())
          if (mono::get(t.m, 3) == 1) ts.push_back({mono::set(t.m, 3, 0), t.c});
        auto T = Polynomial<F>::from_terms(f, 4, std::move(ts));
        if (T.is_zero()) throw ConstructionError("E7.5: quadric singular at p");
        Q1 = (T * k.ternary(1) - Q2.scale(b)).scale(f.inv(a));
      }
      S1 = (L0 * Q1).add_any(L1 * Q2);
      S2 = (L2 * Q1).add_any(L3 * Q2);
    }
    auto p1 = k.point();
    auto span = FormSpace<F>::span(f, 4, 3, {k.z(0) * Q, k.z(1) * Q, k.z(2) * Q, S1, S2});
    if (span.dim() != 5) throw ConstructionError(variant + ": system dimension " + std::to_string(span.dim()));
    return fam::finish(span.vanishing_at({p1}), variant, seed);
  });
}

// ------------------------------------------------------------------ (3,5)

template <class F>
std::vector<Polynomial<F>> twisted_cubic(const F& f) {
  auto z = [&](int i) { return Polynomial<F>::variable(f, 4, i); };
  return {z(0) * z(2) - z(1) * z(1), z(0) * z(3) - z(1) * z(2), z(1) * z(3) - z(2) * z(2)};
}

template <class F>
std::vector<Polynomial<F>> products(const std::vector<Polynomial<F>>& a, const std::vector<Polynomial<F>>& b) {
  std::vector<Polynomial<F>> out;
  for (auto& x : a)
    for (auto& y : b) out.push_back(x * y);
  return out;
}

// J_t and the contact scheme at q; t = 0 gives the E24 limit.
template <class F>
FormSpace<F> quartic_on_quadric_path(fam::Kit<F>& k, const typename F::Elem& t, const std::array<Polynomial<F>, 3>& abc) {
  const F& f = k.f;
  auto T = k.c(t);
  auto Z0 = k.z(0) + T * k.z(3), Z1 = k.z(1), Z2 = k.z(2), Z3 = k.z(0) - T * k.z(3);
  auto& [a, b, c] = abc;
  auto Qt = Z1 * Z2 - Z0 * Z3;
  auto S0 = a * Z0 * Z2 + b * Z0 * Z3 + c * Z1 * Z3;
  auto S1 = a * Z0 * Z0 + b * Z0 * Z1 + c * Z1 * Z1;
  auto S2 = a * Z2 * Z2 + b * Z2 * Z3 + c * Z3 * Z3;
  return FormSpace<F>::span(f, 4, 3, {Qt * k.z(0), Qt * k.z(1), Qt * k.z(2), Qt * k.z(3), S0, S1, S2});
}

template <class F>
RationalMap<F> cuboquintic(const std::string& variant, uint64_t seed, const F& f) {
  static const std::vector<std::string> known = {"E12", "E13", "E14", "E19", "E23", "E24"};
  if (std::find(known.begin(), known.end(), variant) == known.end()) throw std::invalid_argument("unknown (3,5) variant " + variant);
  return fam::with_retries<F>(variant, seed, [&](Rng& rng) {
    fam::Kit<F> k{f, rng};
    auto z = [&](int i) { return k.z(i); };
    FormSpace<F> sys(f, 4, 3);
    if (variant == "E12" || variant == "E14" || variant == "E19") {
      std::vector<Polynomial<F>> line;
      if (variant == "E12") line = {k.form(1), k.form(1)};
      if (variant == "E14") line = {k.form(1, {1, 2, 3}), k.form(1, {1, 2, 3})};  // through (1:0:0:0) on the cubic
      if (variant == "E19") line = {z(1), z(2)};                                 // secant through (1:0:0:0), (0:0:0:1)
      auto span = FormSpace<F>::span(f, 4, 3, products(twisted_cubic(f), line));
      if (span.dim() != 6) throw ConstructionError(variant + ": product space dimension " + std::to_string(span.dim()));
      sys = span.vanishing_at({k.point(), k.point()});
    } else if (variant == "E13") {
      auto Q1 = k.quadric_through_p(), Q2 = k.quadric_through_p();
      auto span = FormSpace<F>::span(f, 4, 3, products<F>({Q1, Q2}, {z(0), z(1), z(2)}));
      if (span.dim() != 6) throw ConstructionError("E13: product space dimension " + std::to_string(span.dim()));
      sys = span.vanishing_at({k.point(), k.point()});
    } else {
      std::array<Polynomial<F>, 3> abc{k.form(1), k.form(1), k.form(1)};
      FormSpace<F> J(f, 4, 3);
      if (variant == "E23") {
        auto Q = z(0) * z(3) - z(1) * z(2);
        auto& [a, b, c] = abc;
        auto S0 = a * z(0) * z(2) + b * z(0) * z(3) + c * z(1) * z(3);
        auto S1 = a * z(0) * z(0) + b * z(0) * z(1) + c * z(1) * z(1);
        auto S2 = a * z(2) * z(2) + b * z(2) * z(3) + c * z(3) * z(3);
        J = FormSpace<F>::span(f, 4, 3, {Q * z(0), Q * z(1), Q * z(2), Q * z(3), S0, S1, S2});
      } else {
        auto& [a, b, c] = abc;
        auto Q0 = z(1) * z(2) - z(0) * z(0);
        auto Qp = a * z(2) + b * z(0) + c * z(1);
        J = FormSpace<F>::span(f, 4, 3, {Q0 * z(0), Q0 * z(1), Q0 * z(2), Q0 * z(3), z(0) * Qp, z(1) * Qp, z(2) * Qp});
      }
      if (J.dim() != 7) throw ConstructionError(variant + ": curve cubics of dimension " + std::to_string(J.dim()));
      auto q = k.point();
      sys = fam::contact_at(J, q, random_linear_through(f, q, rng));
    }
    return fam::finish(sys, variant, seed);
  });
}

// ------------------------------------------------------------------ dispatch

template <class F>
Constructed<F> construct(const std::string& label, uint64_t seed, const F& f, bool degenerate = false) {
  auto spec = [&](const std::string& l) { return FamilySpec{l, expectation_for(l), seed, f.descriptor()}; };
  if (auto d = ruled_degree(label)) {
    auto m = ruled(*d, seed, f, degenerate);
    return {m, spec(ruled_label(degenerate ? *d - 1 : *d))};
  }
  if (degenerate) throw std::invalid_argument("degeneration switch applies to ruled families only");
  if (label == "E2") return {determinantal(seed, f), spec(label)};
  if (label == "E3" || label == "E3.5" || label == "E4") return {dejonquieres(label, seed, f), spec(label)};
  if (label == "E6" || label == "E7" || label == "E7.5" || label == "E8" || label == "E9") return {cuboquartic(label, seed, f), spec(label)};
  return {cuboquintic(label, seed, f), spec(label)};
}

// ------------------------------------------------------------------ golden examples over Q

struct NamedMap {
  std::string name;
  RationalMap<Qq> map;
};

inline std::vector<Polynomial<Qq>> parse_all(const std::vector<std::string>& texts) {
  Qq q;
  std::vector<Polynomial<Qq>> out;
  for (auto& t : texts) out.push_back(parse_poly(t, q));
  return out;
}

inline FormSpace<Qq> through_points(const std::vector<Polynomial<Qq>>& gens, const std::vector<Point<Qq>>& pts) {
  return FormSpace<Qq>::span(Qq{}, 4, 3, gens).vanishing_at(pts);
}

inline Point<Qq> qpoint(std::initializer_list<long> v) {
  Point<Qq> p;
  for (long x : v) p.push_back(mpq_class(x));
  return p;
}

// Pinned general points for the golden examples.
inline Point<Qq> golden_p1() { return qpoint({3, -1, 2, 5}); }
inline Point<Qq> golden_p2() { return qpoint({-2, 5, 1, 3}); }

inline std::vector<std::string> a1_generators() {
  return {"z1*z2^2 - z2^3",         "z0*z2^2 - z2^3",         "z1^2*z2 - z2^3 - z0*z1*z3 + z2^2*z3",
          "z0*z1*z2 - z2^3",        "z0^2*z2 - z2^3",         "z0^2*z1 - z2^3"};
}

inline std::vector<std::string> a2_generators() {
  return {"z0*z2^2 - z1*z2^2",
          "z0*z1*z2 - z1^2*z2",
          "z0^2*z2 - z1^2*z2",
          "2*z1^3 + z2^3 + z1^2*z3 - z0*z2*z3",
          "2*z0*z1^2 + z2^3 + z1^2*z3 - z0*z2*z3",
          "2*z0^2*z1 + z2^3 + z1^2*z3 - z0*z2*z3"};
}

template <class F>
std::vector<Polynomial<F>> pro_inter_generators(const F& f, const typename F::Elem& eps) {
  auto z = [&](int i) { return Polynomial<F>::variable(f, 4, i); };
  auto m = z(0) * z(1);
  return {m * z(0), m * z(1), m * z(2), z(0) * z(0) * z(2) + (z(0) * z(2) * z(2)).scale(eps), z(1) * z(1) * z(3)};
}

inline RationalMap<Qq> pro_inter(long eps) {
  Qq q;
  return RationalMap<Qq>::cubic(
      through_points(pro_inter_generators(q, q.from_int(eps)), {golden_p2()}).polynomials(), "pro-inter(" + std::to_string(eps) + ")");
}

inline std::vector<NamedMap> special_examples() {
  std::vector<NamedMap> out;
  out.push_back({"ruled-involution", RationalMap<Qq>::cubic(parse_all({"z0*z1^2", "z0^2*z1", "z0^2*z2", "z1^2*z3"}), "ruled-involution")});
  out.push_back({"dJ-ruled", RationalMap<Qq>::cubic(parse_all({"z0^3", "z0^2*z1", "z0^2*z2", "z1^2*z3"}), "dJ-ruled")});
  out.push_back({"pro-inter", pro_inter(1)});
  out.push_back({"pro-inter-0", pro_inter(0)});
  out.push_back({"a1-example", RationalMap<Qq>::cubic(through_points(parse_all(a1_generators()), {golden_p1(), golden_p2()}).polynomials(),
                                                      "a1-example")});
  out.push_back({"a2-example", RationalMap<Qq>::cubic(through_points(parse_all(a2_generators()), {golden_p1(), golden_p2()}).polynomials(),
                                                      "a2-example")});
  return out;
}

inline std::optional<RationalMap<Qq>> special_example(const std::string& name) {
  for (auto& e : special_examples())
    if (e.name == name) return e.map;
  return std::nullopt;
}

// ------------------------------------------------------------------ deformation paths

enum class PathName { DetToDJ, E6ToE7, RuledJump, E24ToE23 };

inline const char* path_name(PathName p) {
  switch (p) {
    case PathName::DetToDJ: return "det_to_dJ";
    case PathName::E6ToE7: return "E6_to_E7";
    case PathName::RuledJump: return "ruled_jump";
    case PathName::E24ToE23: return "E24_to_E23";
  }
  return "?";
}

inline std::optional<PathName> parse_path(const std::string& s) {
  for (auto p : {PathName::DetToDJ, PathName::E6ToE7, PathName::RuledJump, PathName::E24ToE23})
    if (s == path_name(p)) return p;
  return std::nullopt;
}

// Expected label (or component) at parameter zero and away from zero.
inline std::string path_expected(PathName p, bool at_zero) {
  switch (p) {
    case PathName::DetToDJ: return at_zero ? "E3" : "E2";
    case PathName::E6ToE7: return at_zero ? "E7" : "E6";
    case PathName::RuledJump: return at_zero ? "ruled_3_3" : "E6";
    case PathName::E24ToE23: return at_zero ? "E24" : "E23";
  }
  return "";
}

// Member of the path at parameter t. Random ingredients depend on the seed
// only, so all parameters share them.
template <class F>
RationalMap<F> path_map(PathName path, const F& f, const typename F::Elem& t, uint64_t seed) {
  std::string label = std::string(path_name(path)) + "@" + f.to_string(t);
  switch (path) {
    case PathName::DetToDJ:
      return fam::with_retries<F>("det_to_dJ", seed, [&](Rng& rng) {
        fam::Kit<F> k{f, rng};
        auto O = Polynomial<F>(f, 4);
        fam::Mat43<F> A{{{O, O, O}, {-k.z(1), -k.z(2), O}, {k.z(0), O, -k.z(2)}, {O, k.z(0), k.z(1)}}};
        auto B = fam::random_mat43(k);
        std::vector<Polynomial<F>> comps;
        for (int i = 0; i < 4; ++i) {
          auto Ai = fam::drop_row(A, i), Bi = fam::drop_row(B, i);
          if (!f.is_zero(t)) {
            auto Mi = Ai;
            for (int r = 0; r < 3; ++r)
              for (int c = 0; c < 3; ++c) Mi[r][c] = Ai[r][c].add_any(Bi[r][c].scale(t));
            comps.push_back(fam::det3(Mi));
          } else {
            // Coefficient of t: one column taken from B.
            Polynomial<F> s(f, 4);
            for (int c = 0; c < 3; ++c) {
              auto Mi = Ai;
              for (int r = 0; r < 3; ++r) Mi[r][c] = Bi[r][c];
              s = s.add_any(fam::det3(Mi));
            }
            comps.push_back(s);
          }
        }
        return fam::finish(FormSpace<F>::span(f, 4, 3, comps), label, seed);
      });
    case PathName::E6ToE7:
      return elliptic_quintic_path(f, t, seed, label);
    case PathName::RuledJump:
      return fam::with_retries<F>("ruled_jump", seed, [&](Rng& rng) {
        fam::Kit<F> k{f, rng};
        auto span = FormSpace<F>::span(f, 4, 3, pro_inter_generators(f, t));
        return fam::finish(span.vanishing_at({k.point()}), label, seed);
      });
    case PathName::E24ToE23:
      return fam::with_retries<F>("E24_to_E23", seed, [&](Rng& rng) {
        fam::Kit<F> k{f, rng};
        std::array<Polynomial<F>, 3> abc{k.form(1), k.form(1), k.form(1)};
        auto q = k.point();
        auto h = random_linear_through(f, q, rng);
        auto J = quartic_on_quadric_path(k, t, abc);
        if (J.dim() != 7) throw ConstructionError("E24_to_E23: curve cubics of dimension " + std::to_string(J.dim()));
        return fam::finish(fam::contact_at(J, q, h), label, seed);
      });
  }
  throw std::invalid_argument("unknown path");
}

struct DeformSample {
  long long t = 0;
  MapAnalysis<Zp> analysis;
  HudsonVector hudson;
  std::optional<Classification> cls;
  std::string expected;
  std::string error;
  bool ok = false;
};

inline DeformSample deform_one(PathName path, long long t, const Zp& f, uint64_t seed) {
  auto m = path_map(path, f, f.from_int(t), seed);
  DeformSample s{t, analyze(m, seed)};
  s.hudson = hudson_vector(m, s.analysis, seed);
  s.expected = path_expected(path, t == 0);
  try {
    s.cls = classify_component(s.analysis, s.hudson);
    s.ok = s.analysis.birational.verdict == Verdict::Yes && (s.cls->label == s.expected || s.cls->component == s.expected);
  } catch (const ComponentError& e) {
    s.error = e.what();
  }
  return s;
}

inline std::vector<DeformSample> deform(PathName path, const std::vector<long long>& samples, const Zp& f, uint64_t seed) {
  std::vector<DeformSample> out;
  for (long long t : samples) out.push_back(deform_one(path, t, f, seed));
  return out;
}

}  // namespace cremona
