#include <gtest/gtest.h>

#include "cremona/report.hpp"

using namespace cremona;

namespace {

const Zp kF(1000003);
const Point<Zp> kP{0, 0, 0, 1};

Polynomial<Zp> z(int i) { return Polynomial<Zp>::variable(kF, 4, i); }
Polynomial<Zp> lin(Rng& rng) { return random_form(1, kF, rng, {}, {}, 3).embed(4); }
Polynomial<Zp> quad(Rng& rng) { return random_form(2, kF, rng, {}, {}, 3).embed(4); }
Polynomial<Zp> cub(Rng& rng) { return random_form(3, kF, rng, {}, {}, 3).embed(4); }

// Cubic z3^2 l + z3 q + c with the given jets at p = (0:0:0:1).
Polynomial<Zp> with_jets(const Polynomial<Zp>& l, const Polynomial<Zp>& q, const Polynomial<Zp>& c) {
  Polynomial<Zp> g = c;
  if (!q.is_zero()) g = g + z(3) * q;
  if (!l.is_zero()) g = g + z(3) * z(3) * l;
  return g;
}

PointType<Zp> classify(const std::vector<Polynomial<Zp>>& lam, uint64_t seed = 1) {
  Rng rng(seed);
  return classify_point(lam, kP, rng);
}

}  // namespace

TEST(ClassifyPoint, NotABasePoint) {
  Rng rng(1);
  std::vector<Polynomial<Zp>> lam;
  for (int i = 0; i < 4; ++i) lam.push_back(random_form(3, kF, rng));
  EXPECT_FALSE(classify(lam).base_point);
}

TEST(ClassifyPoint, OrdinaryBasePoint) {
  Rng rng(2);
  std::vector<Polynomial<Zp>> lam;
  for (int i = 0; i < 4; ++i) lam.push_back(with_jets(lin(rng), quad(rng), cub(rng)));
  auto t = classify(lam);
  EXPECT_TRUE(t.base_point);
  EXPECT_EQ(t.tag, PointTag::Ordinary);
}

TEST(ClassifyPoint, ContactAndOsculation) {
  Rng rng(3);
  auto h = lin(rng), q = quad(rng);
  std::vector<Polynomial<Zp>> contact, osc;
  for (int i = 0; i < 4; ++i) {
    auto a = kF.random_nonzero(rng);
    contact.push_back(with_jets(h.scale(a), quad(rng), cub(rng)));
    osc.push_back(with_jets(h.scale(a), q.scale(a), cub(rng)));
  }
  EXPECT_EQ(classify(contact).tag, PointTag::ContactPoint);
  EXPECT_EQ(classify(osc).tag, PointTag::OsculationPoint);
}

TEST(ClassifyPoint, DoublePointTypes) {
  Rng rng(4);
  Polynomial<Zp> zero(kF, 4);
  auto h = lin(rng), q = quad(rng);
  std::vector<Polynomial<Zp>> dp, binode, dpc;
  for (int i = 0; i < 4; ++i) {
    dp.push_back(with_jets(zero, quad(rng), cub(rng)));
    binode.push_back(with_jets(zero, h * lin(rng), cub(rng)));
    dpc.push_back(with_jets(zero, q.scale(kF.random_nonzero(rng)), cub(rng)));
  }
  auto t = classify(dp);
  EXPECT_EQ(t.tag, PointTag::DoublePoint);
  EXPECT_EQ(t.rank, 3);
  auto b = classify(binode);
  EXPECT_EQ(b.tag, PointTag::Binode);
  ASSERT_TRUE(b.fixed_plane.has_value());
  EXPECT_EQ(b.fixed_plane->monic(), h.monic());
  EXPECT_EQ(classify(dpc).tag, PointTag::DoubleContactPoint);
}

// The binode plane divides the tangent cone of every member: each Hessian at
// the binode vanishes on vectors of the plane. Checked directly, without the
// chart used by the classifier.
TEST(Binode, PlaneDividesEveryTangentCone) {
  for (auto label : {"E3.5", "E7.5", "E8"}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      auto c = construct(label, seed, kF);
      auto r = analyze_full(c.map, seed);
      ASSERT_TRUE(r.hudson) << label;
      const PointReport* bin = nullptr;
      for (auto& p : r.hudson->points)
        if (p.type.tag == PointTag::Binode) bin = &p;
      ASSERT_NE(bin, nullptr) << label;
      const auto& h = *bin->type.fixed_plane;
      EXPECT_EQ(h.evaluate(bin->point), 0u);
      Rng rng(seed);
      for (auto& g : c.map.components()) {
        for (int t = 0; t < 3; ++t) {
          Point<Zp> v = random_point(kF, 4, rng);
          // Project v onto the plane along a point off it.
          Point<Zp> off = random_point(kF, 4, rng);
          auto hv = h.evaluate(v), ho = h.evaluate(off);
          for (int i = 0; i < 4; ++i) v[i] = kF.sub(kF.mul(ho, v[i]), kF.mul(hv, off[i]));
          ASSERT_EQ(h.evaluate(v), 0u);
          Zp::Elem s = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              s = kF.add(s, kF.mul(g.partial(i).partial(j).evaluate(bin->point), kF.mul(v[i], v[j])));
          EXPECT_EQ(s, 0u) << label << "#" << seed;
        }
      }
    }
  }
}

TEST(Table, LoadsWithChecksum) {
  auto rows = load_table();
  ASSERT_EQ(rows.size(), 75u);
  std::map<int, int> per_d;
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].number, static_cast<int>(i) + 1);
    ++per_d[rows[i].d];
  }
  EXPECT_EQ(per_d, (std::map<int, int>{{2, 1}, {3, 4}, {4, 6}, {5, 16}, {6, 25}, {7, 14}, {8, 5}, {9, 4}}));
}

TEST(Table, CorruptionIsDetected) {
  auto text = read_file(default_table_path());
  EXPECT_NO_THROW(parse_table(text));
  auto bad = text;
  bad[bad.size() / 2] = bad[bad.size() / 2] == '1' ? '2' : '1';
  EXPECT_THROW(parse_table(bad), TableIntegrityError);
  EXPECT_THROW(load_table("/nonexistent/table.tsv"), std::exception);
}

TEST(Table, ExpectedRowsAgreeWithEncodedCounts) {
  auto rows = load_table();
  for (auto& label : family_labels()) {
    auto e = expectation_for(label);
    if (e.row == 0) continue;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.number == e.row; });
    ASSERT_NE(it, rows.end()) << label;
    EXPECT_EQ(it->d, e.bidegree.second) << label;
    EXPECT_EQ(it->counts, e.counts) << label;
  }
}

TEST(Table, EveryConstructedFamilyMatchesItsRow) {
  for (auto& label : family_labels()) {
    auto c = construct(label, 4, kF);
    auto r = analyze_full(c.map, 4);
    ASSERT_TRUE(r.hudson) << label;
    auto rows = match_table(*r.hudson);
    if (c.spec.expected.row == 0) {
      EXPECT_TRUE(rows.empty()) << label;
      EXPECT_TRUE(r.missing_note.has_value()) << label;
    } else {
      ASSERT_EQ(rows.size(), 1u) << label;
      EXPECT_EQ(rows[0].number, c.spec.expected.row) << label;
    }
  }
}

TEST(Components, LabelsMapToComponents) {
  EXPECT_EQ(component_of("E3"), "E2");
  EXPECT_EQ(component_of("E4"), "E2");
  EXPECT_EQ(component_of("E9"), "E6");
  EXPECT_EQ(component_of("E8"), "E6");
  EXPECT_EQ(component_of("E14"), "E12");
  EXPECT_EQ(component_of("E19"), "E12");
  EXPECT_EQ(component_of("E13"), "E13");
  EXPECT_EQ(component_of("E24"), "E23");
  EXPECT_EQ(component_of("ruled_3_4"), "ruled_3_4");
  EXPECT_EQ(component_of("E99"), "");
  EXPECT_TRUE(missing_row_note("E3.5"));
  EXPECT_TRUE(missing_row_note("E7.5"));
  EXPECT_FALSE(missing_row_note("E7"));
}

TEST(Components, StandardInvolutionIsDeterminantal) {
  std::vector<Polynomial<Zp>> c;
  for (auto s : {"z1*z2*z3", "z0*z2*z3", "z0*z1*z3", "z0*z1*z2"}) c.push_back(parse_poly(s, kF));
  auto r = analyze_full(RationalMap<Zp>::cubic(c), 1);
  ASSERT_TRUE(r.hudson && r.cls);
  EXPECT_EQ(r.hudson->counts.dp, 4);
  EXPECT_EQ(r.hudson->lines_found, 6);
  EXPECT_EQ(r.cls->label, "E2");
  EXPECT_TRUE(r.rows.empty());  // reducible C2: not a general member of any row
}
