#include <gtest/gtest.h>

#include "cremona/ideal.hpp"

using namespace cremona;

namespace {

const Zp kF(1000003);

Polynomial<Zp> z(int i) { return Polynomial<Zp>::variable(kF, 4, i); }

Polynomial<Zp> random_poly(int d, Rng& rng) { return random_form(d, kF, rng); }

}  // namespace

TEST(Field, PrimalityAgreesWithTrialDivision) {
  auto slow = [](uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q = 2; q * q <= n; ++q)
      if (n % q == 0) return false;
    return true;
  };
  for (uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime_u64(n), slow(n)) << n;
  EXPECT_TRUE(is_prime_u64(2147483647ULL));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Field, ZpRejectsCompositeModulus) {
  EXPECT_THROW(Zp(1000001), std::invalid_argument);
  EXPECT_THROW(Zp(1ULL << 31), std::invalid_argument);
  EXPECT_FALSE(Zp(7).is_working_prime());
  EXPECT_TRUE(kF.is_working_prime());
}

TEST(Field, ZpInversesAndFermat) {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto a = kF.random_nonzero(rng);
    EXPECT_EQ(kF.mul(a, kF.inv(a)), kF.one());
    EXPECT_EQ(kF.pow(a, kF.prime() - 1), kF.one());
  }
}

TEST(Field, RationalReduction) {
  mpq_class q(7, 3);
  auto r = kF.from_mpq(q);
  EXPECT_EQ(kF.mul(r, kF.from_int(3)), kF.from_int(7));
  EXPECT_EQ(kF.from_int(-1), kF.prime() - 1);
  EXPECT_THROW(kF.from_mpq(mpq_class(1, 1000003)), BadPrime);
}

TEST(Field, QqIsExact) {
  Qq q;
  mpq_class a(1, 3), b(2, 7);
  EXPECT_EQ(q.add(a, b), mpq_class(13, 21));
  EXPECT_EQ(q.mul(q.inv(b), b), q.one());
  mpq_class c(-5, 10);
  c.canonicalize();
  EXPECT_EQ(q.to_string(c), "-1/2");
}

TEST(Rng, DeterministicAndSplitsIndependent) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c = Rng(42).split("x"), d = Rng(42).split("y");
  EXPECT_NE(c.next(), d.next());
  EXPECT_EQ(Rng(42).split(3u).next(), Rng(42).split(3u).next());
  Rng r(5);
  for (int i = 0; i < 200; ++i) {
    auto p = random_prime(r);
    EXPECT_TRUE(is_prime_u64(p));
    EXPECT_GE(p, 1000003u);
  }
}

TEST(Monomial, PackedOpsMatchExponentArrays) {
  auto all = monomials_of_degree(4, 0);
  for (int d = 1; d <= 4; ++d)
    for (auto m : monomials_of_degree(4, d)) all.push_back(m);
  for (auto a : all)
    for (auto b : all) {
      bool div = true;
      for (int i = 0; i < 4; ++i) {
        div = div && mono::get(a, i) <= mono::get(b, i);
        EXPECT_EQ(mono::get(mono::lcm(a, b), i), std::max(mono::get(a, i), mono::get(b, i)));
        EXPECT_EQ(mono::get(mono::gcd(a, b), i), std::min(mono::get(a, i), mono::get(b, i)));
      }
      EXPECT_EQ(mono::divides(a, b), div);
      EXPECT_EQ(mono::degree(a + b), mono::degree(a) + mono::degree(b));
    }
}

TEST(Monomial, CountsOfDegreePieces) {
  EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(monomials_of_degree(4, 0).size(), 1u);
}

TEST(Polynomial, RingAxioms) {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    auto a = random_poly(2, rng), b = random_poly(2, rng), c = random_poly(1, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, EvaluationIsAHomomorphism) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    auto a = random_poly(2, rng), b = random_poly(3, rng);
    std::vector<Zp::Elem> x{kF.random(rng), kF.random(rng), kF.random(rng), kF.random(rng)};
    EXPECT_EQ((a * b).evaluate(x), kF.mul(a.evaluate(x), b.evaluate(x)));
    EXPECT_EQ(a.add_any(b).evaluate(x), kF.add(a.evaluate(x), b.evaluate(x)));
  }
}

TEST(Polynomial, EulerIdentity) {
  Rng rng(4);
  for (int d = 1; d <= 4; ++d) {
    auto g = random_poly(d, rng);
    Polynomial<Zp> s(kF, 4);
    for (int i = 0; i < 4; ++i) s = s.add_any(z(i) * g.partial(i));
    EXPECT_EQ(s, g.scale(kF.from_int(d)));
  }
}

TEST(Polynomial, MixedDegreeAddNeedsExplicitCall) {
  EXPECT_THROW(z(0) + z(1) * z(2), InhomogeneousAdd);
  EXPECT_FALSE(z(0).add_any(z(1) * z(2)).is_homogeneous());
}

TEST(Polynomial, ParsePrintRoundTrip) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto g = random_poly(3, rng);
    EXPECT_EQ(parse_poly(g.to_string(), kF), g);
  }
  Qq q;
  auto h = parse_poly("1/2*z0^2*z3 - 3*z1*z2^2 + z3^3", q);
  EXPECT_EQ(parse_poly(h.to_string(), q), h);
  EXPECT_EQ(h.coeff(mono::make({2, 0, 0, 1})), mpq_class(1, 2));
  EXPECT_THROW(parse_poly("z0^2 +* z1", kF), ParseError);
  EXPECT_THROW(parse_poly("z7", kF), ParseError);
}

TEST(Polynomial, LinearSubstitutionInverts) {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    auto g = random_poly(3, rng);
    auto M = Matrix<Zp>::random_invertible(kF, 4, rng);
    EXPECT_EQ(g.linear_substitute(M).linear_substitute(*M.inverse()), g);
  }
}

TEST(Matrix, RankNullityAndDeterminant) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    int r = 1 + static_cast<int>(rng.below(5)), c = 1 + static_cast<int>(rng.below(6));
    auto A = Matrix<Zp>::random(kF, r, c, rng);
    auto ker = A.kernel();
    EXPECT_EQ(A.rank() + static_cast<int>(ker.size()), c);
    for (auto& v : ker)
      for (int i = 0; i < r; ++i) {
        Zp::Elem s = 0;
        for (int j = 0; j < c; ++j) s = kF.add(s, kF.mul(A.at(i, j), v[j]));
        EXPECT_EQ(s, 0u);
      }
    auto M = Matrix<Zp>::random(kF, 4, 4, rng), N = Matrix<Zp>::random(kF, 4, 4, rng);
    EXPECT_EQ((M * N).det(), kF.mul(M.det(), N.det()));
  }
}

TEST(FormSpace, PointConditionsAreIndependent) {
  Rng rng(8);
  std::vector<std::vector<Zp::Elem>> pts;
  for (int k = 0; k <= 10; ++k) {
    EXPECT_EQ(FormSpace<Zp>::all(kF, 4, 3).vanishing_at(pts).dim(), 20 - k);
    pts.push_back(random_point(kF, 4, rng));
  }
}

TEST(FormSpace, DegreePieceOfAnIdeal) {
  // Cubics in (z0, z1): everything except the 4 cubics in z2, z3.
  auto s = FormSpace<Zp>::degree_piece(kF, 4, 3, {z(0), z(1)});
  EXPECT_EQ(s.dim(), 16);
  EXPECT_TRUE(s.contains(z(0) * z(2) * z(3)));
  EXPECT_FALSE(s.contains(z(2) * z(2) * z(3)));
}
