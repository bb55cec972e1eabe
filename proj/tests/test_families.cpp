#include <gtest/gtest.h>

#include "cremona/scan.hpp"

using namespace cremona;

namespace {

const Zp kF(1000003);

bool matches(const FullAnalysis& r, const Expectation& e) { return meets_expectation(r, e); }

std::string got(const FullAnalysis& r) {
  return "(3," + std::to_string(r.a.bidegree.second) + ") C2 " + std::to_string(r.a.C2().degree) + "/" + std::to_string(r.a.C2().p_a) +
         " " + (r.hudson ? r.hudson->counts.to_string() : "-") + " " + (r.cls ? r.cls->label : r.cls_error);
}

}  // namespace

TEST(Expectations, ConsistentWithDegreeIdentity) {
  for (auto& label : family_labels()) {
    auto e = expectation_for(label);
    EXPECT_EQ(e.label, label);
    EXPECT_EQ(e.deg_c2, 9 - e.bidegree.second) << label;
    EXPECT_EQ(e.component, component_of(label)) << label;
  }
  EXPECT_EQ(family_labels().size(), 19u);
}

TEST(Constructors, EveryFamilyOverPrimeField) {
  for (auto& label : family_labels())
    for (uint64_t seed = 1; seed <= 4; ++seed) {
      auto c = construct(label, seed, kF);
      EXPECT_EQ(c.spec.label, label);
      EXPECT_EQ(c.spec.field, "gf:1000003");
      auto r = analyze_full(c.map, seed);
      EXPECT_TRUE(matches(r, c.spec.expected)) << label << "#" << seed << " got " << got(r);
    }
}

TEST(Constructors, EveryFamilyOverRationals) {
  for (auto& label : family_labels()) {
    auto c = construct(label, 2, Qq{});
    auto r = analyze_rational(c.map, 2);
    EXPECT_TRUE(matches(r, c.spec.expected)) << label << " got " << got(r);
  }
}

TEST(Constructors, DeterministicPerSeed) {
  for (auto label : {"E2", "E8", "E23", "ruled_3_4"}) {
    auto a = construct(label, 11, kF).map.components(), b = construct(label, 11, kF).map.components();
    auto c = construct(label, 12, kF).map.components();
    EXPECT_EQ(a, b) << label;
    EXPECT_NE(a, c) << label;
  }
  EXPECT_EQ(construct("E13", 3, Qq{}).map.components(), construct("E13", 3, Qq{}).map.components());
}

// Two base points on one ruling drop a ruled map to the next bidegree.
TEST(Constructors, DegenerationSwitch) {
  for (int d : {5, 4}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      auto c = construct(ruled_label(d), seed, kF, true);
      EXPECT_EQ(c.spec.label, ruled_label(d - 1));
      auto r = analyze_full(c.map, seed);
      EXPECT_EQ(r.a.bidegree.second, d - 1) << d << "#" << seed;
      ASSERT_TRUE(r.cls);
      EXPECT_EQ(r.cls->label, ruled_label(d - 1));
    }
  }
  EXPECT_THROW(construct("ruled_3_2", 1, kF, true), ConstructionError);
  EXPECT_THROW(construct("E7", 1, kF, true), std::invalid_argument);
}

TEST(Constructors, RuledMapsDoNotSilentlyDegenerateOverQ) {
  // Small random coefficients over Q once put two base points on one ruling.
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    auto r = analyze_rational(construct("ruled_3_5", seed, Qq{}).map, seed);
    EXPECT_EQ(r.a.bidegree.second, 5) << seed;
  }
}

TEST(Specials, KnownInvariants) {
  auto a = [](const char* name) { return analyze_rational(*special_example(name), 1); };
  auto inv = a("ruled-involution");
  EXPECT_EQ(inv.a.bidegree, std::make_pair(3, 3));
  EXPECT_TRUE(inv.a.ruled.ruled);

  auto dj = a("dJ-ruled");
  EXPECT_TRUE(dj.a.ruled.ruled);
  EXPECT_EQ(dj.a.C2().degree, 6);
  EXPECT_EQ(dj.a.C2().p_a, 4);

  auto pro = a("pro-inter");
  EXPECT_EQ(pro.a.bidegree, std::make_pair(3, 4));
  EXPECT_EQ(pro.a.C2().degree, 5);
  EXPECT_EQ(pro.a.C2().p_a, 2);
  EXPECT_FALSE(pro.a.ruled.ruled);

  auto pro0 = a("pro-inter-0");
  ASSERT_TRUE(pro0.cls);
  EXPECT_EQ(pro0.cls->label, "ruled_3_3");
  EXPECT_FALSE(special_example("no-such-map"));
}

TEST(Golden, A1A2Examples) {
  Qq q;
  Point<Qq> p{0, 0, 0, 1};
  struct Row {
    const char* name;
    std::pair<int, int> c1, c2;
    long long mg, m1, m2;
  };
  for (auto& row : {Row{"a1-example", {5, 1}, {4, 0}, 6, 2, 4}, Row{"a2-example", {5, 2}, {4, 1}, 6, 3, 3}}) {
    auto m = *special_example(row.name);
    Rng rng(9);
    auto J = base_ideal(m, rng);
    auto sp = line_preimage_split(m, J, rng);
    EXPECT_EQ(sp.C1.degree, row.c1.first) << row.name;
    EXPECT_EQ(sp.C1.p_a, row.c1.second) << row.name;
    EXPECT_EQ(sp.C2.degree, row.c2.first) << row.name;
    EXPECT_EQ(sp.C2.p_a, row.c2.second) << row.name;
    EXPECT_EQ(multiplicity_at(sp.gamma, p, rng), row.mg) << row.name;
    EXPECT_EQ(multiplicity_at(sp.C1.ideal, p, rng), row.m1) << row.name;
    EXPECT_EQ(multiplicity_at(sp.C2.ideal, p, rng), row.m2) << row.name;
  }
}

TEST(Deformation, EndpointsAlongEveryPath) {
  for (auto path : {PathName::DetToDJ, PathName::E6ToE7, PathName::RuledJump, PathName::E24ToE23}) {
    for (auto& s : deform(path, {0, 1, 5}, kF, 3)) {
      EXPECT_TRUE(s.ok) << path_name(path) << "@" << s.t << ": " << (s.cls ? s.cls->label : s.error) << " expected " << s.expected;
    }
  }
  EXPECT_EQ(parse_path("E6_to_E7"), PathName::E6ToE7);
  EXPECT_FALSE(parse_path("nowhere"));
}

TEST(Deformation, SpecialFibreInvariants) {
  auto dj = deform(PathName::DetToDJ, {0, 2}, kF, 5);
  EXPECT_EQ(dj[0].analysis.C2().p_a, 4);
  EXPECT_EQ(dj[1].analysis.C2().p_a, 3);
  EXPECT_EQ(dj[0].hudson.counts.dp, 1);

  auto e = deform(PathName::E6ToE7, {0, 2}, kF, 5);
  EXPECT_EQ(e[0].analysis.C2().p_a, 2);
  EXPECT_EQ(e[1].analysis.C2().p_a, 1);
  EXPECT_EQ(graded_piece_dim(e[0].analysis.C2().ideal, 2), 1);
  EXPECT_EQ(graded_piece_dim(e[1].analysis.C2().ideal, 2), 0);

  auto rj = deform(PathName::RuledJump, {0, 2}, kF, 5);
  EXPECT_TRUE(rj[0].analysis.ruled.ruled);
  EXPECT_EQ(rj[0].analysis.bidegree.second, 3);
  EXPECT_FALSE(rj[1].analysis.ruled.ruled);
  EXPECT_EQ(rj[1].analysis.bidegree.second, 4);
}

TEST(Scan, RecordsAndEmptiness) {
  ScanOptions opt;
  opt.families = expand_families("3-5");
  opt.count = 12;
  opt.jobs = 3;
  auto s = run_scan(opt);
  EXPECT_EQ(s.samples, 12);
  EXPECT_EQ(s.failures, 0);
  EXPECT_EQ(s.emptiness_violations, 0);
  for (auto& [k, n] : s.histogram) EXPECT_TRUE(genus_pair_allowed(std::get<0>(k), std::get<1>(k)));
  // Same options give the same records regardless of worker count.
  opt.jobs = 1;
  auto t = run_scan(opt);
  for (size_t i = 0; i < s.records.size(); ++i) EXPECT_EQ(s.records[i].dump(), t.records[i].dump());
}

TEST(Scan, FamilyExpansion) {
  EXPECT_EQ(expand_families("all").size(), family_labels().size());
  EXPECT_EQ(expand_families("ruled").size(), 4u);
  EXPECT_EQ(expand_families("3-3"), (std::vector<std::string>{"ruled_3_3", "E2", "E3", "E3.5", "E4"}));
  EXPECT_EQ(expand_families("E2,E2,E7"), (std::vector<std::string>{"E2", "E7"}));
  EXPECT_THROW(expand_families("E99"), std::invalid_argument);
  EXPECT_THROW(expand_families("3-7"), std::invalid_argument);
  EXPECT_TRUE(genus_pair_allowed(4, 2));
  EXPECT_FALSE(genus_pair_allowed(4, 3));
  EXPECT_FALSE(genus_pair_allowed(5, 2));
}
