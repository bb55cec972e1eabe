#include <gtest/gtest.h>

#include "cremona/ideal.hpp"

using namespace cremona;

namespace {

const Zp kF(1000003);

Polynomial<Zp> z(int i) { return Polynomial<Zp>::variable(kF, 4, i); }
Polynomial<Zp> P(const std::string& s) { return parse_poly(s, kF); }
Ideal<Zp> I(std::vector<Polynomial<Zp>> g) { return Ideal<Zp>(kF, 4, std::move(g)); }

Ideal<Zp> twisted_cubic() { return I({P("z0*z2 - z1^2"), P("z0*z3 - z1*z2"), P("z1*z3 - z2^2")}); }

Ideal<Zp> monomial_ideal(const std::vector<Exp>& ms) {
  std::vector<Polynomial<Zp>> g;
  for (auto m : ms) g.push_back(Polynomial<Zp>::monomial(kF, 4, m, 1));
  return I(g);
}

std::vector<Exp> small_monomials() {
  std::vector<Exp> out;
  for (int d = 0; d <= 3; ++d)
    for (auto m : monomials_of_degree(4, d)) out.push_back(m);
  return out;
}

}  // namespace

// Frozen Hilbert data of standard curves: (degree, arithmetic genus).
TEST(Hilbert, StandardCurves) {
  auto line = I({z(0), z(1)}).hilbert();
  EXPECT_EQ(line.dimension, 1);
  EXPECT_EQ(line.degree, 1);
  EXPECT_EQ(line.p_a, 0);

  auto tc = twisted_cubic().hilbert();
  EXPECT_EQ(tc.degree, 3);
  EXPECT_EQ(tc.p_a, 0);

  auto ci22 = I({P("z0^2 + z1*z2"), P("z1^2 - z2*z3 + z0*z3")}).hilbert();
  EXPECT_EQ(ci22.degree, 4);
  EXPECT_EQ(ci22.p_a, 1);

  auto ci23 = I({P("z0*z3 - z1*z2"), P("z0^3 + z1^3 + z2^3 + z3^3")}).hilbert();
  EXPECT_EQ(ci23.degree, 6);
  EXPECT_EQ(ci23.p_a, 4);

  auto ci33 = I({P("z0^3 + z1^2*z2"), P("z2^3 + z3^2*z0 + z1^3")}).hilbert();
  EXPECT_EQ(ci33.degree, 9);
  EXPECT_EQ(ci33.p_a, 10);
}

TEST(Hilbert, PointsAndEmpty) {
  Rng rng(1);
  auto s = FormSpace<Zp>::all(kF, 4, 2);
  std::vector<std::vector<Zp::Elem>> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(random_point(kF, 4, rng));
  auto five = I(s.vanishing_at(pts).polynomials());
  EXPECT_EQ(five.hilbert().dimension, 0);
  EXPECT_EQ(five.hilbert().degree, 5);
  EXPECT_EQ(distinct_point_count(five, rng), 5);
  auto found = rational_points(five, rng);
  EXPECT_EQ(found.points.size(), 5u);
  for (auto& p : pts) {
    bool hit = false;
    for (auto& q : found.points) hit = hit || same_point(kF, p, q);
    EXPECT_TRUE(hit);
  }
  EXPECT_EQ(I({z(0), z(1), z(2), z(3)}).hilbert().dimension, -1);
}

TEST(Hilbert, FunctionMatchesGradedPieces) {
  auto C = twisted_cubic();
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(C.hilbert().hilbert_function(k) + graded_piece_dim(C, k), static_cast<long long>(monomials_of_degree(4, k).size()));
    if (k >= 1) EXPECT_EQ(C.hilbert().hilbert_polynomial(k), 3 * k + 1);
  }
}

TEST(Groebner, BasesPassBuchbergerCriterion) {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    std::vector<Polynomial<Zp>> g;
    for (int k = 0; k < 3; ++k) g.push_back(random_form(2 + (t + k) % 2, kF, rng));
    auto J = I(g);
    EXPECT_TRUE(J.gb().verify());
    EXPECT_TRUE(J.gb(MonomialOrder::lex()).verify());
    for (auto& x : g) EXPECT_TRUE(J.contains(x));
  }
}

TEST(Groebner, MembershipIsOrderIndependent) {
  Rng rng(3);
  auto C = twisted_cubic();
  auto lex = groebner(C.gens(), MonomialOrder::lex());
  for (int t = 0; t < 20; ++t) {
    auto a = random_form(1, kF, rng), b = random_form(2, kF, rng);
    auto inside = C.gens()[0] * a + C.gens()[2] * a;
    EXPECT_TRUE(lex.contains(inside));
    EXPECT_EQ(C.contains(b), lex.contains(b));
  }
}

TEST(Groebner, BudgetStopsLargeComputations) {
  Budget saved = default_budget();
  default_budget().max_pairs = 2;
  Rng rng(4);
  std::vector<Polynomial<Zp>> g;
  for (int k = 0; k < 4; ++k) g.push_back(random_form(3, kF, rng));
  EXPECT_THROW(groebner(g), BudgetExceeded);
  default_budget() = saved;
}

TEST(Saturation, Idempotent) {
  Rng rng(5);
  auto m = I({z(0), z(1), z(2), z(3)});
  for (int t = 0; t < 6; ++t) {
    std::vector<Polynomial<Zp>> g;
    for (int k = 0; k < 3; ++k) g.push_back(random_form(2, kF, rng));
    auto J = ideal_product(I(g), m);
    auto S = saturate_irrelevant(J, rng);
    EXPECT_TRUE(saturate_irrelevant(S, rng).equals(S));
    EXPECT_TRUE(S.equals(I(g)));
  }
}

TEST(Saturation, RemovesEmbeddedPoint) {
  Rng rng(6);
  // Line z0 = z1 = 0 with an embedded point at (0:0:0:1).
  auto J = ideal_intersection(I({z(0), z(1)}), I({z(0) * z(0), z(1), z(2)}));
  auto line = I({z(0), z(1)});
  EXPECT_FALSE(J.equals(line));
  EXPECT_TRUE(saturate(J, I({z(0), z(1), z(2)}), rng).equals(line));
  EXPECT_TRUE(saturate_by_element(J, z(2)).equals(line));
}

TEST(MonomialOracle, IntersectionIsLcm) {
  auto ms = small_monomials();
  for (auto a : ms)
    for (auto b : ms) EXPECT_TRUE(ideal_intersection(monomial_ideal({a}), monomial_ideal({b})).equals(monomial_ideal({mono::lcm(a, b)})));
}

TEST(MonomialOracle, QuotientDividesByGcd) {
  auto ms = small_monomials();
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    std::vector<Exp> a;
    for (int k = 0; k < 3; ++k) a.push_back(ms[rng.below(ms.size())]);
    Exp b = ms[rng.below(ms.size())];
    std::vector<Exp> q;
    for (auto x : a) q.push_back(x - mono::gcd(x, b));
    EXPECT_TRUE(ideal_quotient(monomial_ideal(a), Polynomial<Zp>::monomial(kF, 4, b, 1)).equals(monomial_ideal(q)));
  }
}

TEST(Hilbert, InvariantUnderCoordinateChange) {
  Rng rng(8);
  for (auto J : {twisted_cubic(), I({z(0) * z(1), z(1) * z(2) * z(3)}), I({z(0) * z(0), z(0) * z(1), z(1) * z(1) * z(3)})}) {
    auto M = Matrix<Zp>::random_invertible(kF, 4, rng);
    EXPECT_EQ(I(substitute_all(J.gens(), M)).hilbert().numerator, J.hilbert().numerator);
  }
}

TEST(Local, MultiplicityAndLength) {
  Rng rng(9);
  Point<Zp> p{0, 0, 0, 1};
  // Plane nodal cubic with its node at p.
  auto nodal = I({z(0), P("z1^2*z3 - z2^2*z3 - z2^3")});
  EXPECT_EQ(multiplicity_at(nodal, p, rng), 2);
  EXPECT_EQ(multiplicity_at(twisted_cubic(), Point<Zp>{0, 0, 0, 1}, rng), 1);
  // Fat point (z0, z1, z2)^2 has length 4.
  auto fat = I({z(0) * z(0), z(0) * z(1), z(0) * z(2), z(1) * z(1), z(1) * z(2), z(2) * z(2)});
  EXPECT_EQ(local_length(fat, p, rng), 4);
}

// Projection from (1:0:0:0), a point of the curve, gives a plane conic.
TEST(Elimination, ProjectsTwistedCubicToConic) {
  auto E = eliminate(twisted_cubic(), 1);
  ASSERT_EQ(E.nvars(), 3);
  EXPECT_TRUE(E.equals(Ideal<Zp>(kF, 3, {parse_poly("z1^2 - z0*z2", kF, 3)})));
}
