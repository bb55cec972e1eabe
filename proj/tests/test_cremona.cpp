#include <gtest/gtest.h>

#include "cremona/report.hpp"

using namespace cremona;

namespace {

const Zp kF(1000003);

RationalMap<Zp> map_of(std::initializer_list<const char*> comps, const Zp& f = kF) {
  std::vector<Polynomial<Zp>> c;
  for (auto s : comps) c.push_back(parse_poly(s, f));
  return RationalMap<Zp>::cubic(c);
}

// (1/z0 : 1/z1 : 1/z2 : 1/z3) written as cubics.
RationalMap<Zp> standard_involution() { return map_of({"z1*z2*z3", "z0*z2*z3", "z0*z1*z3", "z0*z1*z2"}); }

}  // namespace

TEST(RationalMap, RejectsBadComponents) {
  EXPECT_THROW(map_of({"z0^3", "z0^2*z1", "z0^2*z2", "z0^2*z3"}), CommonFactor);
  EXPECT_THROW(RationalMap<Zp>::cubic({parse_poly("z0^2", kF), parse_poly("z1^2", kF), parse_poly("z2^2", kF), parse_poly("z3^2", kF)}),
               std::invalid_argument);
  EXPECT_THROW(analyze(map_of({"z0^3", "z1^3", "z2^3", "z3^3"}, Zp(7)), 1), BadPrime);
}

TEST(Analysis, StandardInvolution) {
  auto a = analyze(standard_involution(), 1);
  EXPECT_EQ(a.bidegree, std::make_pair(3, 3));
  EXPECT_EQ(a.deg1part, 6);  // the six edges of the coordinate tetrahedron
  EXPECT_EQ(a.C1().degree, 3);
  EXPECT_EQ(a.C1().p_a, 0);
  EXPECT_EQ(a.C2().degree, 6);
  EXPECT_EQ(a.C2().p_a, 3);
  EXPECT_EQ(a.birational.verdict, Verdict::Yes);
  EXPECT_EQ(a.certificate, 1);
  EXPECT_EQ(a.genus, 1);
  EXPECT_FALSE(a.ruled.ruled);
}

TEST(Analysis, StandardInvolutionIsItsOwnInverse) {
  Rng rng(3);
  auto inv = inverse(standard_involution(), 3, rng);
  ASSERT_TRUE(inv.has_value());
  for (int i = 0; i < 4; ++i) EXPECT_EQ(inv->components()[i].monic(), standard_involution().components()[i]);
}

// Frozen oracle values for maps of degree > 1 onto their image.
TEST(Analysis, NonBirationalControls) {
  auto cubes = analyze(map_of({"z0^3", "z1^3", "z2^3", "z3^3"}), 7);
  EXPECT_EQ(cubes.birational.verdict, Verdict::No);
  EXPECT_EQ(cubes.birational.fiber_degrees.at(0), 27);
  EXPECT_EQ(cubes.certificate, 27);

  auto cone = analyze(map_of({"z0^3", "z1^3", "z2^3", "z0*z1*z2"}), 7);
  EXPECT_EQ(cone.birational.verdict, Verdict::No);
  EXPECT_EQ(cone.birational.fiber_degrees.at(0), -1);
  EXPECT_NE(cone.certificate, 1);

  auto cover = analyze(map_of({"z0^3", "z0*z1^2", "z0*z2^2", "z3^3"}), 7);
  EXPECT_EQ(cover.birational.verdict, Verdict::No);
  EXPECT_EQ(cover.birational.fiber_degrees.at(0), 12);
  EXPECT_EQ(cover.certificate, 12);

  Rng rng(11);
  std::vector<Polynomial<Zp>> g;
  for (int i = 0; i < 4; ++i) g.push_back(random_form(3, kF, rng));
  auto generic = analyze(RationalMap<Zp>::cubic(g), 7);
  EXPECT_EQ(generic.birational.verdict, Verdict::No);
  EXPECT_EQ(generic.birational.fiber_degrees.at(0), 27);
}

TEST(Analysis, DeterministicPerSeed) {
  auto m = construct("E7", 3, kF).map;
  auto a = report_json(analyze_full(m, 5)), b = report_json(analyze_full(m, 5));
  EXPECT_EQ(a.dump(), b.dump());
}

// Invariants do not depend on coordinates in source or target.
TEST(Analysis, ConjugationEquivariance) {
  Rng rng(1);
  for (auto label : {"E2", "E7", "E13", "E23", "ruled_3_4"}) {
    auto m = construct(label, 5, kF).map;
    auto A = Matrix<Zp>::random_invertible(kF, 4, rng), B = Matrix<Zp>::random_invertible(kF, 4, rng);
    auto r0 = analyze_full(m, 5), r1 = analyze_full(m.conjugate(A, B), 5);
    EXPECT_EQ(r0.a.bidegree, r1.a.bidegree) << label;
    EXPECT_EQ(r0.a.C2().degree, r1.a.C2().degree) << label;
    EXPECT_EQ(r0.a.C2().p_a, r1.a.C2().p_a) << label;
    EXPECT_EQ(r0.a.deg1part, r1.a.deg1part) << label;
    EXPECT_EQ(r0.a.genus, r1.a.genus) << label;
    ASSERT_TRUE(r0.hudson && r1.hudson);
    EXPECT_EQ(r0.hudson->counts, r1.hudson->counts) << label;
    ASSERT_TRUE(r0.cls && r1.cls);
    EXPECT_EQ(r0.cls->label, r1.cls->label) << label;
  }
}

TEST(Inverse, DegreeMatchesLiaison) {
  for (auto label : {"E2", "E3", "E6", "E12", "E24", "ruled_3_5"}) {
    auto c = construct(label, 2, kF);
    auto a = analyze(c.map, 2);
    Rng rng(4);
    auto inv = inverse(c.map, a.bidegree.second, rng);
    ASSERT_TRUE(inv.has_value()) << label;
    EXPECT_EQ(inv->degree() + a.C2().degree, 9) << label;
    Rng wrong(4);
    EXPECT_FALSE(inverse(c.map, a.bidegree.second - 1, wrong).has_value()) << label;
  }
}

// The inverse of a determinantal map is determinantal again.
TEST(Inverse, DeterminantalInverseIsDeterminantal) {
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    auto c = construct("E2", seed, kF);
    Rng rng(seed);
    auto inv = inverse(c.map, 3, rng);
    ASSERT_TRUE(inv.has_value());
    auto r = analyze_full(*inv, seed);
    EXPECT_EQ(r.a.bidegree, std::make_pair(3, 3));
    EXPECT_EQ(r.a.C2().degree, 6);
    EXPECT_EQ(r.a.C2().p_a, 3);
    ASSERT_TRUE(r.cls);
    EXPECT_EQ(r.cls->label, "E2");
  }
}

TEST(Analysis, RationalMapsUseGoodPrimes) {
  auto m = *special_example("ruled-involution");
  auto r = analyze_rational(m, 1);
  EXPECT_EQ(r.a.bidegree, std::make_pair(3, 3));
  EXPECT_TRUE(r.a.ruled.ruled);
  EXPECT_EQ(r.a.genus, 0);
  EXPECT_GT(r.a.prime, 1000u);

  // A pinned prime that is too small is replaced and the retry is reported.
  auto retry = analyze_rational(m, 1, 7u);
  EXPECT_EQ(retry.primes.size(), 2u);
  EXPECT_EQ(retry.primes[0], 7u);
  ASSERT_FALSE(retry.a.warnings.empty());
  EXPECT_NE(retry.a.warnings.back().find("bad prime retry"), std::string::npos);
}

TEST(Analysis, ReductionHitsDenominators) {
  Qq q;
  std::vector<Polynomial<Qq>> c;
  for (auto s : {"1/1000003*z0^3 + z1^3", "z1^3", "z2^3", "z3^3"}) c.push_back(parse_poly(s, q));
  EXPECT_THROW(reduce_mod(RationalMap<Qq>::cubic(c), kF), BadPrime);
  EXPECT_NO_THROW(reduce_mod(RationalMap<Qq>::cubic(c), Zp(1000033)));
}

TEST(Identities, HoldOnEveryFamily) {
  for (auto& label : family_labels()) {
    auto a = analyze(construct(label, 9, kF).map, 9);
    EXPECT_TRUE(a.degree_identity()) << label;
    EXPECT_TRUE(a.genus_formula()) << label;
    EXPECT_EQ(a.genus == 0, a.ruled.ruled) << label;
  }
}
