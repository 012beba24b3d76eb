#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "peirce/poly1.h"
#include "peirce/poly3.h"
#include "peirce/rational.h"
#include "peirce/roots.h"

namespace peirce {
namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

const Poly1 kT = Poly1::variable();
const Poly3 kA = Poly3::var(Var::kA);
const Poly3 kB = Poly3::var(Var::kB);
const Poly3 kP = Poly3::var(Var::kP);

TEST(RationalTest, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("3/6"), R(1, 2));
  EXPECT_EQ(Rational::parse(" -7 "), R(-7));
  EXPECT_EQ(Rational::parse("12345678901234567890/3").str(), "4115226300411522630");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST(RationalTest, ArithmeticAndOrder) {
  EXPECT_EQ(R(1, 2) + R(1, 3), R(5, 6));
  EXPECT_EQ(R(1, 2) * R(2, 3), R(1, 3));
  EXPECT_EQ(R(1, 2) / R(1, 4), R(2));
  EXPECT_THROW(R(1) / R(0), std::domain_error);
  EXPECT_LT(R(-1, 2), R(1, 3));
  EXPECT_EQ(pow(R(2, 3), 3), R(8, 27));
  EXPECT_EQ(pow(R(2), 100).str(), "1267650600228229401496703205376");
}

TEST(Poly1Test, RenderingUsesDescendingExponents) {
  Poly1 f{R(0), R(1), R(-3), R(2)};
  EXPECT_EQ(f.str(), "2*t^3 - 3*t^2 + t");
  EXPECT_EQ(Poly1().str(), "0");
  EXPECT_EQ(Poly1({R(-1, 2), R(0), R(1, 3)}).str(), "1/3*t^2 - 1/2");
  EXPECT_EQ(Poly1({R(0), R(-1)}).str(), "-t");
}

TEST(Poly1Test, EvalAndDerivative) {
  // 2t^2 + t at 1/2 is rho(z^3, 1/2) = 1.
  EXPECT_EQ(Poly1({R(0), R(1), R(2)}).eval(R(1, 2)), R(1));
  // t(2t - 1)(t - 1) = 2t^3 - 3t^2 + t; derivative at 1/2 is -1/2.
  Poly1 f = kT * Poly1({R(-1), R(2)}) * Poly1({R(-1), R(1)});
  EXPECT_EQ(f, Poly1({R(0), R(1), R(-3), R(2)}));
  EXPECT_EQ(f.derivative().eval(R(1, 2)), R(-1, 2));
}

TEST(Poly1Test, ExactDivision) {
  Poly1 f{R(0), R(1), R(-3), R(2)};
  EXPECT_EQ(divide_exact(f, Poly1::linear_factor(R(1))), Poly1({R(0), R(-1), R(2)}));
  EXPECT_EQ(divide_exact(f, Poly1(1)), f);
  EXPECT_THROW(divide_exact(f, Poly1::linear_factor(R(2))), InexactDivision);
  EXPECT_THROW(divmod(f, Poly1()), std::domain_error);
}

TEST(Poly1Test, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Poly1 f = oracle::random_poly1(rng, 5);
    Poly1 g = oracle::random_poly1(rng, 5);
    Poly1 h = oracle::random_poly1(rng, 5);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f - f).is_zero());
    Rational x = oracle::random_rational(rng);
    EXPECT_EQ((f * g).eval(x), f.eval(x) * g.eval(x));
    if (!g.is_zero()) {
      auto [q, r] = divmod(f, g);
      EXPECT_EQ(g * q + r, f);
      EXPECT_LT(r.degree(), g.degree() > 0 ? g.degree() : 0);
    }
  }
}

TEST(Poly1Test, ComposeAndGcd) {
  Poly1 f{R(1), R(0), R(1)};  // t^2 + 1
  EXPECT_EQ(f.compose(Poly1({R(1), R(1)})), Poly1({R(2), R(2), R(1)}));
  Poly1 a = Poly1::linear_factor(R(1, 2)) * Poly1::linear_factor(R(3));
  Poly1 b = Poly1::linear_factor(R(1, 2)) * Poly1::linear_factor(R(-4));
  EXPECT_EQ(gcd(a * R(6), b * R(-2)), Poly1::linear_factor(R(1, 2)));
}

TEST(Poly3Test, BasicArithmetic) {
  EXPECT_EQ((kP * (kA + kB)).str(), "a*p + b*p");
  Poly3 f = kP * kP * R(2) + kA * kB * R(-8) + R(1, 2);
  EXPECT_EQ(f.str(), "2*p^2 - 8*a*b + 1/2");
  EXPECT_EQ(f.eval(R(1), R(2), R(3)), R(18 - 16) + R(1, 2));
  EXPECT_EQ(f.swap(Var::kA, Var::kB), f);
  EXPECT_EQ(f.derivative(Var::kP), kP * R(4));
  EXPECT_EQ(f.substitute(Var::kB, R(1, 2)), kP * kP * R(2) + kA * R(-4) + R(1, 2));
  EXPECT_EQ(f.specialize_ab(R(1), R(1)), Poly1({R(-15, 2), R(0), R(2)}));
}

TEST(Poly3Test, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    Poly3 f = oracle::random_poly3(rng, 3, 4);
    Poly3 g = oracle::random_poly3(rng, 3, 4);
    Poly3 h = oracle::random_poly3(rng, 2, 3);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    Rational a = oracle::random_rational(rng);
    Rational b = oracle::random_rational(rng);
    Rational p = oracle::random_rational(rng);
    EXPECT_EQ((f * g).eval(a, b, p), f.eval(a, b, p) * g.eval(a, b, p));
    if (!g.is_zero()) EXPECT_EQ(divide_exact(f * g, g), f);
  }
}

TEST(Poly3Test, ExactDivision) {
  // (p^2 - a^2) / (p - a) = p + a
  EXPECT_EQ(divide_exact(kP * kP - kA * kA, kP - kA), kP + kA);
  EXPECT_THROW(divide_exact(kP * kP + kA, kP - kA), InexactDivision);
}

TEST(Poly3Test, DividedDifference) {
  Poly1 rho{R(0), R(1), R(2)};  // 2t^2 + t
  Poly3 dd = divided_difference(rho, Var::kP, Var::kA);
  EXPECT_EQ(dd, kP * R(2) + kA * R(2) + R(1));
  EXPECT_EQ(dd * (kP - kA), Poly3::from_poly1(rho, Var::kP) - Poly3::from_poly1(rho, Var::kA));
}

TEST(Poly3Test, ComposeWithPoly3) {
  Poly1 f{R(1), R(0), R(1)};
  Poly3 two_ab = kA * kB * R(2);
  EXPECT_EQ(compose(f, two_ab), kA * kA * kB * kB * R(4) + R(1));
}

void ExpectReconstructs(const Poly1& f, const RationalRoots& rr) {
  Poly1 prod = rr.residual;
  for (const auto& r : rr.roots) prod *= pow(Poly1::linear_factor(r.root), r.multiplicity);
  EXPECT_EQ(prod, f);
  for (const auto& r : rr.roots) {
    EXPECT_TRUE(f.eval(r.root).is_zero());
  }
}

TEST(RationalRootsTest, JordanPolynomial) {
  Poly1 f{R(0), R(1), R(-3), R(2)};
  auto rr = rational_roots(f);
  ASSERT_EQ(rr.roots.size(), 3u);
  EXPECT_EQ(rr.roots[0], (RootMultiplicity{R(0), 1}));
  EXPECT_EQ(rr.roots[1], (RootMultiplicity{R(1, 2), 1}));
  EXPECT_EQ(rr.roots[2], (RootMultiplicity{R(1), 1}));
  EXPECT_TRUE(rr.residual.is_constant());
  ExpectReconstructs(f, rr);
}

TEST(RationalRootsTest, HsiangPolynomial) {
  Poly1 f = Poly1({R(-1), R(2)}) * Poly1({R(1), R(2)}) * Poly1({R(1), R(1)}) * R(2);
  auto rr = rational_roots(f);
  ASSERT_EQ(rr.roots.size(), 3u);
  EXPECT_EQ(rr.roots[0].root, R(-1));
  EXPECT_EQ(rr.roots[1].root, R(-1, 2));
  EXPECT_EQ(rr.roots[2].root, R(1, 2));
  EXPECT_EQ(format_factorization(rr), "2*(t + 1)*(2*t + 1)*(2*t - 1)");
}

TEST(RationalRootsTest, NoRationalRoots) {
  Poly1 f{R(-2), R(0), R(1)};
  auto rr = rational_roots(f);
  EXPECT_TRUE(rr.roots.empty());
  EXPECT_EQ(rr.residual, f);
  EXPECT_THROW(rational_roots(Poly1()), std::invalid_argument);
}

TEST(RationalRootsTest, MultiplicitiesAndMixedFactors) {
  // (t - 3/7)^3 (t + 5)^2 t (t^2 + t + 1)
  Poly1 f = pow(Poly1::linear_factor(R(3, 7)), 3) * pow(Poly1::linear_factor(R(-5)), 2) *
            kT * Poly1({R(1), R(1), R(1)}) * R(-11, 3);
  auto rr = rational_roots(f);
  ASSERT_EQ(rr.roots.size(), 3u);
  EXPECT_EQ(rr.roots[0], (RootMultiplicity{R(-5), 2}));
  EXPECT_EQ(rr.roots[1], (RootMultiplicity{R(0), 1}));
  EXPECT_EQ(rr.roots[2], (RootMultiplicity{R(3, 7), 3}));
  EXPECT_EQ(rr.residual.degree(), 2);
  ExpectReconstructs(f, rr);
}

TEST(RationalRootsTest, CloseRootsAreSeparated) {
  Poly1 f = Poly1::linear_factor(R(1000, 1001)) * Poly1::linear_factor(R(1001, 1002)) *
            Poly1::linear_factor(R(-1, 1000000));
  auto rr = rational_roots(f);
  ASSERT_EQ(rr.roots.size(), 3u);
  ExpectReconstructs(f, rr);
}

TEST(RationalRootsTest, RandomProductsReconstruct) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<unsigned> mult(1, 3);
  for (int i = 0; i < 150; ++i) {
    std::set<Rational> planted;
    Poly1 f(oracle::random_nonzero_rational(rng));
    for (int k = count(rng); k > 0; --k) {
      Rational r = oracle::random_rational(rng);
      planted.insert(r);
      f *= pow(Poly1::linear_factor(r), mult(rng));
    }
    if (i % 3 == 0) f *= Poly1({R(3), R(0), R(1)});  // irreducible t^2 + 3
    auto rr = rational_roots(f);
    ExpectReconstructs(f, rr);
    std::set<Rational> found;
    for (const auto& r : rr.roots) found.insert(r.root);
    EXPECT_EQ(found, planted);
    EXPECT_TRUE(rr.residual.degree() != 1);
  }
}

}  // namespace
}  // namespace peirce
