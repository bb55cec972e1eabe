#pragma once
// The ten acceptance criteria, shared by the acceptance binary and
// `cremona-lab verify`.

#include <functional>

#include "cremona/scan.hpp"

namespace cremona {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::optional<uint32_t> prime;  // forced working prime; bad values are replaced
  std::string table_path = default_table_path();
  std::vector<int> only;  // empty: all criteria
};

namespace acc {

struct Context {
  AcceptanceOptions opt;
  int bad_prime_retries = 0;
  std::vector<std::string> notes;

  // Field for sample `i` of a criterion; a forced prime is used when usable.
  Zp field(const std::string& tag, uint64_t i) {
    if (opt.prime) {
      if (*opt.prime > 1000 && *opt.prime < (1u << 31) && is_prime_u64(*opt.prime)) return Zp(*opt.prime);
      ++bad_prime_retries;
    }
    Rng r = Rng(i).split("acceptance").split(tag);
    return Zp(random_prime(r));
  }
};

struct Check {
  int total = 0, failed = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      ++failed;
      if (first.size() < 5) first.push_back(what);
    }
  }
  std::string summary(const std::string& extra = "") const {
    std::string s = std::to_string(total - failed) + "/" + std::to_string(total) + " checks";
    if (!extra.empty()) s += "; " + extra;
    for (auto& f : first) s += "; FAIL " + f;
    return s;
  }
  bool ok() const { return failed == 0 && total > 0; }
};

inline std::string tag(const std::string& label, uint64_t seed) { return label + "#" + std::to_string(seed); }

// Construct over a fresh prime and analyze; retried once with a new prime if
// the analysis detects a bad prime.
inline std::pair<Constructed<Zp>, FullAnalysis> sample(Context& ctx, const std::string& label, uint64_t seed) {
  for (int attempt = 0;; ++attempt) {
    Zp f = attempt == 0 ? ctx.field(label, seed) : ctx.field(label + "/retry" + std::to_string(attempt), seed);
    try {
      auto c = construct(label, seed, f);
      auto r = analyze_full(c.map, seed);
      return {c, r};
    } catch (const AnalysisError&) {
      if (attempt >= 2) throw;
    }
  }
}

inline const PointReport* find_point(const HudsonVector& v, PointTag t) {
  for (auto& p : v.points)
    if (p.type.tag == t) return &p;
  return nullptr;
}

// ------------------------------------------------------------------ 1

inline CriterionResult degree_identity(Context& ctx) {
  Check ck;
  const auto& labels = family_labels();
  for (int i = 0; i < 50; ++i) {
    auto label = labels[static_cast<size_t>(i) % labels.size()];
    uint64_t seed = 1000 + static_cast<uint64_t>(i);
    auto [c, r] = sample(ctx, label, seed);
    const auto& a = r.a;
    int d = a.bidegree.second;
    ck.expect(a.degree_identity(), tag(label, seed) + " deg C1 + deg C2 != 9");
    ck.expect(a.genus_formula(), tag(label, seed) + " liaison genus formula");
    Rng rng = Rng(seed).split("inverse");
    auto inv = inverse(c.map, d, rng);
    ck.expect(inv.has_value() && inv->degree() + a.C2().degree == 9, tag(label, seed) + " no inverse of degree 9 - deg C2");
  }
  return {1, "degree identity", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 2

inline CriterionResult family_invariants(Context& ctx) {
  Check ck;
  std::optional<std::vector<TableRow>> table;
  try {
    table = load_table(ctx.opt.table_path);
  } catch (const TableIntegrityError& e) {
    ck.expect(false, std::string("Table VI integrity: ") + e.what());
  }
  for (auto label : {"E2", "E3", "E6", "E7", "E12", "E13", "E14", "E19", "E23", "E24"}) {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      auto [c, r] = sample(ctx, label, seed);
      const auto& e = c.spec.expected;
      const auto& a = r.a;
      auto t = tag(label, seed);
      ck.expect(r.birational(), t + " not birational");
      ck.expect(a.bidegree == e.bidegree, t + " bidegree");
      ck.expect(a.C2().degree == e.deg_c2 && a.C2().p_a == e.pa_c2.value_or(a.C2().p_a), t + " C2 (degree, p_a)");
      if (e.c2_quadrics) ck.expect(graded_piece_dim(a.C2().ideal, 2) == *e.c2_quadrics, t + " quadrics through C2");
      if (e.c2_cubics) ck.expect(graded_piece_dim(a.C2().ideal, 3) == *e.c2_cubics, t + " cubics through C2");
      if (std::string(label) == "E7") {
        // I_C2 is generated by its quadric and two more cubics.
        const auto& C2 = a.C2().ideal;
        auto Q = FormSpace<Zp>::degree_piece(C2.field(), 4, 2, C2.gb().polynomials());
        auto cubics = FormSpace<Zp>::degree_piece(C2.field(), 4, 3, C2.gb().polynomials());
        auto qz = FormSpace<Zp>::degree_piece(C2.field(), 4, 3, Q.polynomials());
        auto gens = Q.polynomials();
        for (auto& g : cubics.polynomials())
          if (!qz.contains(g) && gens.size() < 3) {
            gens.push_back(g);
            qz = qz.plus(FormSpace<Zp>::span(C2.field(), 4, 3, {g}));
          }
        ck.expect(gens.size() == 3 && Ideal<Zp>(C2.field(), 4, gens).equals(C2), t + " I_C2 != (Q, S1, S2)");
      }
      if (table && r.hudson) {
        auto rows = match_table(*r.hudson, *table);
        ck.expect(rows.size() == 1 && rows[0].number == e.row, t + " Table VI row");
      }
    }
  }
  return {2, "family invariants", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 3

struct Control {
  std::string name;
  std::vector<std::string> comps;
  long long fiber;  // frozen oracle value; -1 for a positive-dimensional fiber
};

inline const std::vector<Control>& nonbirational_controls() {
  static const std::vector<Control> c = {
      {"cubes", {"z0^3", "z1^3", "z2^3", "z3^3"}, 27},
      {"cone", {"z0^3", "z1^3", "z2^3", "z0*z1*z2"}, -1},
      {"double-cover", {"z0^3", "z0*z1^2", "z0*z2^2", "z3^3"}, 12},
  };
  return c;
}

inline CriterionResult birationality_cross_validation(Context& ctx) {
  Check ck;
  for (auto& label : family_labels())
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      auto [c, r] = sample(ctx, label, seed);
      ck.expect(r.birational(), tag(label, seed) + " oracle says not birational");
      ck.expect((r.a.certificate == 1) == r.birational(), tag(label, seed) + " certificate disagrees with oracle");
    }
  for (auto& ex : special_examples()) {
    auto r = analyze_rational(ex.map, 3, ctx.opt.prime);
    ck.expect(r.birational() && r.a.certificate == 1, ex.name + " certificate/oracle");
  }
  for (auto& ctl : nonbirational_controls())
    for (uint64_t i = 0; i < 2; ++i) {
      Zp f = ctx.field("control-" + ctl.name, i);
      std::vector<Polynomial<Zp>> comps;
      for (auto& s : ctl.comps) comps.push_back(parse_poly(s, f));
      auto a = analyze(RationalMap<Zp>::cubic(comps, ctl.name), 7 + i);
      bool fibers = !a.birational.fiber_degrees.empty();
      for (auto x : a.birational.fiber_degrees) fibers = fibers && x == ctl.fiber;
      ck.expect(a.birational.verdict == Verdict::No, ctl.name + " oracle verdict");
      ck.expect(a.certificate != 1, ctl.name + " certificate claims birational");
      ck.expect(fibers, ctl.name + " fiber degree differs from " + std::to_string(ctl.fiber));
      if (ctl.fiber > 0) ck.expect(a.certificate == ctl.fiber, ctl.name + " certificate differs from fiber degree");
    }
  return {3, "birationality cross-validation", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 4

inline CriterionResult ruled_dichotomy(Context& ctx) {
  Check ck;
  for (int d = 2; d <= 5; ++d)
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      auto label = ruled_label(d);
      auto [c, r] = sample(ctx, label, seed);
      const auto& a = r.a;
      ck.expect(a.genus == 0 && a.ruled.ruled && a.deg1part < 9 - d, tag(label, seed) + " not ruled-like");
    }
  for (int d = 3; d <= 5; ++d) {
    std::vector<std::string> pool;
    for (auto& l : family_labels())
      if (!ruled_degree(l) && expectation_for(l).bidegree.second == d) pool.push_back(l);
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      auto label = pool[seed % pool.size()];
      auto [c, r] = sample(ctx, label, 100 + seed);
      const auto& a = r.a;
      ck.expect(a.genus == 1 && !a.ruled.ruled && a.deg1part == 9 - d, tag(label, 100 + seed) + " not generic-like");
    }
  }
  return {4, "ruled dichotomy", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 5

inline CriterionResult hudson_point_types(Context& ctx) {
  Check ck;
  for (auto label : {"E3", "E3.5", "E4", "E7", "E8", "E9", "E23"}) {
    auto e = expectation_for(label);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      auto [c, r] = sample(ctx, label, seed);
      auto t = tag(label, seed);
      if (!r.hudson) {
        ck.expect(false, t + " no Hudson vector");
        continue;
      }
      const auto& v = *r.hudson;
      ck.expect(v.counts == e.counts, t + " counts " + v.counts.to_string());
      auto* p = find_point(v, *e.special_tag);
      ck.expect(p != nullptr, t + " no " + tag_name(*e.special_tag));
      if (!p) continue;
      if (std::string(label) == "E3") ck.expect(p->type.rank == 3, t + " rank " + std::to_string(p->type.rank));
      if (*e.special_tag == PointTag::Binode) ck.expect(p->type.fixed_plane.has_value(), t + " binode without a plane");
      if (e.profile)
        ck.expect(p->profile && p->profile->d1 == e.profile->first && p->profile->d2 == e.profile->second, t + " tangent profile");
      if (std::string(label) == "E23") {
        // The contact point is the only base point off C2.
        Rng rng(seed);
        auto pts = rational_points(r.a.theta, rng);
        ck.expect(r.a.theta_count == 1 && pts.distinct == 1 && pts.points.size() == 1 && same_point(Zp(r.a.prime), pts.points[0], p->point) && v.counts.ordinary == 0,
                  t + " base points besides the contact point");
      }
    }
  }
  return {5, "Hudson point types", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 6

inline CriterionResult missing_rows(Context& ctx) {
  Check ck;
  std::optional<std::vector<TableRow>> table;
  try {
    table = load_table(ctx.opt.table_path);
  } catch (const TableIntegrityError& e) {
    ck.expect(false, std::string("Table VI integrity: ") + e.what());
  }
  if (table)
    for (auto label : {"E3.5", "E7.5"})
      for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto [c, r] = sample(ctx, label, seed);
        auto t = tag(label, seed);
        ck.expect(r.cls && r.cls->label == label, t + " classified as " + (r.cls ? r.cls->label : r.cls_error));
        ck.expect(r.hudson && match_table(*r.hudson, *table).empty(), t + " matched a Table VI row");
        ck.expect(r.missing_note.has_value(), t + " not flagged as a missing row");
      }
  return {6, "missing-row regressions", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 7

inline CriterionResult deformation_endpoints(Context& ctx) {
  Check ck;
  const std::vector<long long> ts = {0, 1, 5};
  for (auto path : {PathName::DetToDJ, PathName::E6ToE7, PathName::RuledJump, PathName::E24ToE23}) {
    Zp f = ctx.field(path_name(path), 0);
    for (auto& s : deform(path, ts, f, 17)) {
      auto t = std::string(path_name(path)) + "@" + std::to_string(s.t);
      const auto& a = s.analysis;
      ck.expect(s.ok, t + " endpoint " + (s.cls ? s.cls->label : s.error) + " expected " + s.expected);
      switch (path) {
        case PathName::DetToDJ:
          ck.expect(a.C2().p_a == (s.t == 0 ? 4 : 3) && a.bidegree.second == 3, t + " C2 genus");
          break;
        case PathName::E6ToE7:
          ck.expect(a.C2().degree == 5 && a.C2().p_a == (s.t == 0 ? 2 : 1), t + " C2 (5, p_a)");
          if (s.t == 0) ck.expect(graded_piece_dim(a.C2().ideal, 2) == 1, t + " C2 not on a quadric");
          break;
        case PathName::RuledJump:
          ck.expect(s.t == 0 ? (a.ruled.ruled && a.bidegree.second == 3) : (!a.ruled.ruled && a.bidegree.second == 4), t + " ruledness");
          break;
        case PathName::E24ToE23:
          ck.expect(a.bidegree.second == 5 && a.C2().p_a == (s.t == 0 ? 1 : 0), t + " C2 genus");
          break;
      }
    }
  }
  return {7, "deformation endpoints", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 8

inline CriterionResult emptiness_scan(Context& ctx) {
  ScanOptions so;
  for (auto& l : family_labels())
    if (l != "ruled_3_2") so.families.push_back(l);  // (3,2) lies outside the emptiness statement
  so.count = 500;
  so.seed_start = 5000;
  if (ctx.opt.prime && *ctx.opt.prime > 1000 && is_prime_u64(*ctx.opt.prime)) so.prime = ctx.opt.prime;
  auto s = run_scan(so);
  int pairs = s.samples;
  for (auto& r : s.records)
    if (!r.contains("p2")) --pairs;
  bool pass = s.emptiness_violations == 0 && pairs >= 490;
  std::string detail = std::to_string(pairs) + " (d,p2) pairs, " + std::to_string(s.emptiness_violations) + " outside the allowed set, " +
                       std::to_string(s.failures) + " sample failures";
  return {8, "emptiness scan", pass, detail};
}

// ------------------------------------------------------------------ 9

inline CriterionResult golden_examples(Context&) {
  Check ck;
  Qq q;
  auto p = fam::e3(q);
  auto z = [&](int i) { return Polynomial<Qq>::variable(q, 4, i); };
  auto dpc = [&](const Polynomial<Qq>& cone) {
    std::vector<Polynomial<Qq>> g{cone};
    for (auto m : monomials_of_degree(3, 3)) g.push_back(Polynomial<Qq>::monomial(q, 4, m, q.one()));
    return Ideal<Qq>(q, 4, g);
  };
  // The printed generators are the intersection of the curve and dpc ideals.
  auto c2a = ideal_intersection(
      ideal_intersection(Ideal<Qq>(q, 4, {z(2) * z(2), z(0) * z(2), z(0) * z(0), z(0) * z(3) - z(1) * z(2)}), Ideal<Qq>(q, 4, {z(1), z(2)})),
      Ideal<Qq>(q, 4, {z(0) - z(2), z(1) - z(2)}));
  ck.expect(ideal_intersection(c2a, dpc(z(2) * z(2) * z(3) - z(0) * z(1) * z(3))).equals(Ideal<Qq>(q, 4, parse_all(a1_generators()))),
            "a1 generators");
  auto c3 = Ideal<Qq>(q, 4, {z(1) - z(0), parse_poly("z1^2*z3 - z1*z2*z3 + z0^3 + z1^3 + z2^3", q)});
  auto c2b = ideal_intersection(c3, Ideal<Qq>(q, 4, {z(1), z(2)}));
  ck.expect(ideal_intersection(c2b, dpc(z(1) * z(1) - z(0) * z(2))).equals(Ideal<Qq>(q, 4, parse_all(a2_generators()))), "a2 generators");

  for (auto name : {"a1-example", "a2-example"}) {
    auto m = *special_example(name);
    Rng rng = Rng(9).split(name);
    auto J = base_ideal(m, rng);
    auto sp = line_preimage_split(m, J, rng);
    long long both = multiplicity_at(sp.gamma, p, rng);
    long long m1 = multiplicity_at(sp.C1.ideal, p, rng), m2 = multiplicity_at(sp.C2.ideal, p, rng);
    std::string got = std::string(name) + " mult C1uC2/C1/C2 = " + std::to_string(both) + "/" + std::to_string(m1) + "/" + std::to_string(m2);
    if (std::string(name) == "a1-example")
      ck.expect(both == 6 && m2 == 4, got);
    else
      ck.expect(both == 6 && m1 == 3 && m2 == 3, got);
  }
  return {9, "golden examples over Q", ck.ok(), ck.summary()};
}

// ------------------------------------------------------------------ 10

inline Ideal<Zp> monomial_ideal(const Zp& f, const std::vector<Exp>& ms) {
  std::vector<Polynomial<Zp>> g;
  for (auto m : ms) g.push_back(Polynomial<Zp>::monomial(f, 4, m, f.one()));
  return Ideal<Zp>(f, 4, g);
}

inline std::vector<Exp> oracle_intersection(const std::vector<Exp>& a, const std::vector<Exp>& b) {
  std::vector<Exp> out;
  for (auto x : a)
    for (auto y : b) out.push_back(mono::lcm(x, y));
  return out;
}

inline std::vector<Exp> oracle_quotient(const std::vector<Exp>& a, const std::vector<Exp>& b) {
  std::optional<std::vector<Exp>> acc;
  for (auto y : b) {
    std::vector<Exp> q;
    for (auto x : a) q.push_back(x - mono::gcd(x, y));
    acc = acc ? oracle_intersection(*acc, q) : q;
  }
  return *acc;
}

inline CriterionResult kernel_properties(Context& ctx) {
  Check ck;
  Zp f = ctx.field("kernel", 0);
  Rng rng = Rng(10).split("kernel");
  std::vector<Ideal<Zp>> samples;
  for (int i = 0; i < 8; ++i) {
    std::vector<Polynomial<Zp>> g;
    int k = 2 + i % 3;
    for (int j = 0; j < k; ++j) g.push_back(random_form(2 + (i + j) % 2, f, rng));
    samples.emplace_back(f, 4, g);
  }
  for (auto label : {"E2", "E7", "E13", "E23"}) {
    auto c = construct(label, 4, f);
    auto a = analyze(c.map, 4);
    samples.push_back(a.C2().ideal);
    samples.push_back(c.map.ideal());
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    auto& I = samples[i];
    auto s = "ideal " + std::to_string(i);
    ck.expect(I.gb().verify(), s + " S-pairs do not reduce to zero");
    ck.expect(I.gb(MonomialOrder::lex()).verify(), s + " lex S-pairs");
    auto sat = saturate_irrelevant(I, rng);
    ck.expect(saturate_irrelevant(sat, rng).equals(sat), s + " saturation not idempotent");
    auto J = Ideal<Zp>(f, 4, {random_linear_form(f, 4, rng), random_linear_form(f, 4, rng)});
    auto sj = saturate(I, J, rng);
    ck.expect(saturate(sj, J, rng).equals(sj), s + " saturation by a line not idempotent");
    auto M = Matrix<Zp>::random_invertible(f, 4, rng);
    std::vector<Polynomial<Zp>> moved;
    for (auto& g : I.gens()) moved.push_back(g.linear_substitute(M));
    ck.expect(Ideal<Zp>(f, 4, moved).hilbert().numerator == I.hilbert().numerator, s + " Hilbert series moved");
  }
  // Monomial oracle: every pair of principal monomial ideals of degree <= 4,
  // then seeded pairs with up to four generators.
  std::vector<Exp> monos;
  for (int d = 0; d <= 4; ++d)
    for (auto m : monomials_of_degree(4, d)) monos.push_back(m);
  auto compare = [&](const std::vector<Exp>& a, const std::vector<Exp>& b) {
    auto A = monomial_ideal(f, a), B = monomial_ideal(f, b);
    ck.expect(ideal_intersection(A, B).equals(monomial_ideal(f, oracle_intersection(a, b))), "intersection oracle");
    ck.expect(ideal_quotient(A, B).equals(monomial_ideal(f, oracle_quotient(a, b))), "quotient oracle");
  };
  for (auto x : monos)
    for (auto y : monos) compare({x}, {y});
  Rng mr = Rng(10).split("monomial");
  for (int i = 0; i < 1500; ++i) {
    std::vector<Exp> a, b;
    int na = 1 + static_cast<int>(mr.below(4)), nb = 1 + static_cast<int>(mr.below(4));
    for (int k = 0; k < na; ++k) a.push_back(monos[mr.below(monos.size())]);
    for (int k = 0; k < nb; ++k) b.push_back(monos[mr.below(monos.size())]);
    compare(a, b);
  }
  return {10, "kernel property suites", ck.ok(), ck.summary()};
}

}  // namespace acc

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  int bad_prime_retries = 0;
  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](auto& r) { return r.pass; });
  }
};

inline AcceptanceReport run_acceptance(const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& on_result = {}) {
  acc::Context ctx{opt};
  using Fn = CriterionResult (*)(acc::Context&);
  const std::vector<std::pair<Fn, double>> criteria = {
      {acc::degree_identity, 600}, {acc::family_invariants, 0},    {acc::birationality_cross_validation, 0},
      {acc::ruled_dichotomy, 0},   {acc::hudson_point_types, 0},   {acc::missing_rows, 0},
      {acc::deformation_endpoints, 0}, {acc::emptiness_scan, 0},   {acc::golden_examples, 0},
      {acc::kernel_properties, 300}};
  AcceptanceReport rep;
  for (size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = criteria[i].first(ctx);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].second > 0 && r.seconds > criteria[i].second) {
      r.pass = false;
      r.detail += "; over the " + std::to_string(static_cast<int>(criteria[i].second)) + " s budget";
    }
    rep.results.push_back(r);
    if (on_result) on_result(r);
  }
  rep.bad_prime_retries = ctx.bad_prime_retries;
  return rep;
}

inline std::string result_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + ". " + r.name + " [" + buf + "]: " + r.detail;
}

}  // namespace cremona
