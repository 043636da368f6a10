#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quartic/algebra/field.hpp"
#include "quartic/algebra/quadext.hpp"
#include "quartic/algebra/series.hpp"

using namespace quartic::algebra;

namespace {

const FieldContext& U = FieldContext::u_side();

FieldElement cst(long n, long d = 1) { return FieldElement::constant(U, Rational(n, d)); }

// Uniformly random small field element for property tests.
FieldElement random_element(std::mt19937& rng, int maxDeg = 2) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, maxDeg);
  Poly2 P, Q;
  for (int i = 0; i <= deg(rng); ++i)
    for (int j = 0; j <= deg(rng); ++j) {
      P.set_coeff(i, j, BigInt(coef(rng)));
      Q.set_coeff(i, j, BigInt(coef(rng)));
    }
  int dA = deg(rng) % 2;
  return FieldElement::from_parts(U, P, Q, BigInt(1 + std::abs(coef(rng))), 0, 0, dA);
}

// r0 = (-1 + w)/(6u) on the u side.
FieldElement r0_u() {
  auto w = FieldElement::w(U);
  auto u = FieldElement::y(U);
  return (w - cst(1)) / (u * cst(6));
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("defining relation w*w = 1 + 12 kappa u") {
  auto w = FieldElement::w(U);
  auto rel = FieldElement::from_parts(U, Poly2(1) + Poly2::mono(BigInt(12), 1, 1), Poly2(),
                                      BigInt(1), 0, 0, 0);
  CHECK(w * w == rel);
  CHECK((w - cst(1)) * (w + cst(1)) ==
        FieldElement::x(U) * FieldElement::y(U) * cst(12));
}

TEST_CASE("implicit differentiation of w") {
  auto w = FieldElement::w(U);
  auto u = FieldElement::y(U);
  // d w / d kappa = 6u/w
  CHECK(w.dkappa() == cst(6) * u / w);
  // d w / d u = 6 kappa / w
  CHECK(w.dvar() == cst(6) * FieldElement::x(U) / w);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a + (b + c) == (a + b) + c);
    if (!a.is_zero()) {
      CHECK(a / a == cst(1));
      CHECK(b / a * a == b);
    }
  }
  CHECK_THROWS_AS(cst(1) / cst(0), DivisionByZeroElement);
}

TEST_CASE("product rule for dkappa") {
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    auto a = random_element(rng), b = random_element(rng);
    CHECK((a * b).dkappa() == a.dkappa() * b + a * b.dkappa());
    CHECK((a * b).dvar() == a.dvar() * b + a * b.dvar());
  }
}

TEST_CASE("series expansion of w at kappa=1") {
  auto w = FieldElement::w(U);
  Series s = w.expand_at_zero(Rational(1), 2);
  CHECK(s[0] == Rational(1));
  CHECK(s[1] == Rational(6));
  CHECK(s[2] == Rational(-18));
}

TEST_CASE("series expansion of r0 has (-3)^j Catalan coefficients") {
  Series s = r0_u().expand_at_zero(Rational(1), 6);
  for (int j = 0; j <= 6; ++j) {
    Rational expect = pow_rat(Rational(-3), j) * Rational(catalan(j));
    CHECK(s[j] == expect);
  }
}

TEST_CASE("series of a constant") {
  Series s = cst(5).expand_at_zero(Rational(1), 3);
  CHECK(s[0] == Rational(5));
  CHECK(s[1] == Rational(0));
  CHECK(s[3] == Rational(0));
}

TEST_CASE("derivative and expansion commute") {
  std::mt19937 rng(3);
  for (int it = 0; it < 10; ++it) {
    auto a = random_element(rng);
    int J = 6;
    Series lhs, rhs;
    try {
      lhs = a.dvar().expand_at_zero(Rational(1), J - 1);
      rhs = a.expand_at_zero(Rational(1), J).derivative();
    } catch (const SeriesPole&) {
      continue;  // random element with a genuine pole at u=0
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("genuine series pole throws") {
  auto u = FieldElement::y(U);
  CHECK_THROWS_AS((cst(1) / u).expand_at_zero(Rational(1), 3), SeriesPole);
}

TEST_CASE("singular expansion of r0 at u = -1/12") {
  // r0 = 2 kappa + C0 sqrt(u + 1/(12 kappa)) + ... with C0(1) = -4 sqrt(3).
  auto sing = r0_u().expand_at_singularity(Rational(1));
  CHECK(sing.regular);
  CHECK(sing.twiceExponent == 0);
  CHECK(sing.coeff[0] == Sqrt3(Rational(2)));
  CHECK(sing.coeff[1] == Sqrt3(Rational(0), Rational(-4)));
}

TEST_CASE("singular expansion of a constant is regular") {
  auto sing = cst(7).expand_at_singularity(Rational(1));
  CHECK(sing.regular);
  CHECK(sing.twiceExponent == 0);
  CHECK(sing.coeff[0] == Sqrt3(Rational(7)));
}

TEST_CASE("QuadExt arithmetic and printing") {
  Sqrt3 a(Rational(1, 2), Rational(3));
  Sqrt3 b(Rational(0), Rational(1));
  CHECK(a * b == Sqrt3(Rational(9), Rational(1, 2)));
  CHECK((a / a) == Sqrt3(Rational(1)));
  CHECK(to_string(Sqrt3(Rational(0), Rational(49, 71663616))) ==
        "49*sqrt(3)/71663616");
  Sqrt6 c = Sqrt6::sqrtd();
  CHECK(c * c == Sqrt6(Rational(6)));
}

TEST_CASE("series utilities") {
  Series g = Series::geometric(Rational(2), 5);
  CHECK(g[3] == Rational(8));
  CHECK(g * g.inverse() == [] {
    Series one(5);
    one[0] = Rational(1);
    return one;
  }());
  Series f(4);
  f[0] = Rational(1);
  f[1] = Rational(12);
  Series r = f.sqrt1();
  CHECK(r * r == f);
}
