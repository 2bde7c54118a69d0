#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foliasep/algebra.hpp"
#include "foliasep/errors.hpp"
#include "foliasep/series.hpp"

using namespace foliasep;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();
const FieldElement I = FieldElement::imaginary_unit();

FieldElement random_element(std::mt19937& rng, long d) {
  std::uniform_int_distribution<int> u(-5, 5);
  auto r = [&] { return BigRational(u(rng), 1 + std::abs(u(rng))); };
  if (d == 0) return FieldElement::gaussian(r(), r());
  return FieldElement::extension(r(), r(), r(), r(), d);
}

BiPoly random_poly(std::mt19937& rng, int deg, bool gaussian) {
  std::uniform_int_distribution<int> u(-3, 3);
  BiPoly p;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) {
      int a = u(rng);
      if (a == 0 || u(rng) > 0) continue;
      p += BiPoly::monomial(gaussian ? FieldElement::gaussian(a, u(rng)) : FieldElement(a), i, j);
    }
  return p;
}

TruncSeries random_series(std::mt19937& rng, int n, int prec) {
  std::uniform_int_distribution<int> u(-4, 4);
  std::vector<FieldElement> c;
  for (int k = 0; k <= n; ++k) c.push_back(FieldElement::gaussian(u(rng), u(rng)));
  return TruncSeries(c, prec);
}

}  // namespace

TEST_CASE("big rationals are canonical") {
  BigRational r(6, -4);
  r.canonicalize();
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
}

TEST_CASE("field axioms on random triples, including sqrt extensions") {
  std::mt19937 rng(7);
  for (long d : {0L, 2L, 3L, 5L}) {
    for (int n = 0; n < 40; ++n) {
      FieldElement a = random_element(rng, d), b = random_element(rng, d), c = random_element(rng, d);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).radical_conj() == a.radical_conj() + b.radical_conj());
    }
  }
}

TEST_CASE("mixing radicands is rejected") {
  auto s2 = FieldElement::sqrt_rational(2), s3 = FieldElement::sqrt_rational(3);
  CHECK(s2 * s2 == FieldElement(2));
  CHECK_THROWS_AS(s2 + s3, Error);
  try {
    (void)(s2 * s3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedExtension);
  }
}

TEST_CASE("poly_order") {
  CHECK(poly_order(X * X * Y + Y.pow(4)) == 3);
  CHECK(!poly_order(BiPoly()).has_value());
  CHECK(poly_order(Y * Y + X.pow(4)) == 2);
}

TEST_CASE("univariate roots are certified exactly") {
  UPoly t = UPoly::variable();
  auto r = roots(t * (t * t + UPoly(FieldElement(1))));
  REQUIRE(r.size() == 3);
  for (const auto& z : r) CHECK((z * (z * z + FieldElement(1))).is_zero());
  auto q = roots(t * t - UPoly(FieldElement(2)));
  REQUIRE(q.size() == 2);
  CHECK(q[0] * q[0] == FieldElement(2));
  auto w = roots(t * t - t - UPoly(FieldElement(1)));
  REQUIRE(w.size() == 2);
  CHECK(w[0] + w[1] == FieldElement(1));
  CHECK_THROWS_AS(roots(t * t * t - UPoly(FieldElement(2))), Error);
}

TEST_CASE("substitute_series") {
  PuiseuxParam cusp{TruncSeries(std::vector<FieldElement>{0, 0, 1}, 12), TruncSeries(std::vector<FieldElement>{0, 0, 0, 1}, 12)};
  TruncSeries z = substitute_series(Y * Y - X.pow(3), cusp);
  CHECK(z.vanishes_to_precision());
  CHECK(z.precision() >= 12);
  CHECK_THROWS_AS(z.ord(), Error);
  CHECK(substitute_series(X, cusp).ord() == 2);
  BiPoly polar = Y.scaled(FieldElement(2 * 5)) - (X * X).scaled(FieldElement(3 * 7));
  TruncSeries s = substitute_series(polar, cusp);
  CHECK(s.ord() == 3);
  CHECK(s.coeff(3) == FieldElement(10));
  CHECK(s.coeff(4) == FieldElement(-21));
}

TEST_CASE("substitute_series is a ring homomorphism up to precision") {
  std::mt19937 rng(11);
  for (int n = 0; n < 30; ++n) {
    BiPoly p = random_poly(rng, 4, true), q = random_poly(rng, 4, true);
    PuiseuxParam g{random_series(rng, 6, 10).shifted_down(0) * TruncSeries::variable(),
                   random_series(rng, 6, 10) * TruncSeries::variable()};
    TruncSeries sp = substitute_series(p, g), sq = substitute_series(q, g);
    CHECK(agree(substitute_series(p + q, g), sp + sq));
    TruncSeries spq = substitute_series(p * q, g);
    CHECK(agree(spq, sp * sq));
    CHECK(spq.precision() >= 10);
  }
}

TEST_CASE("series precision is tracked") {
  TruncSeries a(std::vector<FieldElement>{0, 1, 2}, 5);
  TruncSeries b(std::vector<FieldElement>{0, 0, 3}, 4);
  CHECK((a + b).precision() == 4);
  CHECK((a * b).precision() == 1 + 4);
  CHECK(a.derivative().precision() == 4);
  CHECK_THROWS_AS(a.coeff(6), Error);
  TruncSeries q = divide(a * b, b);
  CHECK(agree(q, a));
  CHECK(a.conj().conj().stored() == a.stored());
}

TEST_CASE("resultant_y") {
  CHECK(resultant_y(Y, X * X) == UPoly::monomial(FieldElement(1), 2));
  UPoly r = resultant_y(Y * Y - X.pow(3), Y);
  CHECK(r.order() == 3);
  CHECK(r.degree() == 3);
  FieldElement c(5);
  UPoly s = resultant_y(Y.scaled(FieldElement(2)) + X.scaled(FieldElement(2) * c), (X * X).scaled(FieldElement(3)));
  CHECK(s.order() == 2);
  CHECK_THROWS_AS(resultant_y(X * Y, Y), Error);
}

TEST_CASE("bivariate gcd and exact division") {
  BiPoly a = (Y - X * X) * (Y + X) * (X + BiPoly(1));
  BiPoly b = (Y - X * X) * (Y * Y + X.pow(3)) * (X + BiPoly(1));
  CHECK(gcd(a, b) == normalized((Y - X * X) * (X + BiPoly(1))));
  CHECK(gcd(Y * Y - X.pow(3), Y).is_constant());
  CHECK(divides(Y + X, a));
  CHECK(!divides(Y - X, a));
}

TEST_CASE("squarefree_factor") {
  auto f = squarefree_factor(X * X * Y);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == X);
  CHECK(f[0].multiplicity == 2);
  CHECK(f[1].factor == Y);
  auto g = squarefree_factor(Y * Y + X * X);
  REQUIRE(g.size() == 2);
  for (const auto& h : g) {
    CHECK(h.multiplicity == 1);
    CHECK(h.factor.total_degree() == 1);
  }
  CHECK((multiply_out(g) == Y * Y + X * X));
  auto k = squarefree_factor(Y * Y - Y + X.pow(4));
  REQUIRE(k.size() == 1);
  CHECK(k[0].factor == Y * Y - Y + X.pow(4));
  auto e = squarefree_factor(Y * Y + X.pow(4));
  CHECK(e.size() == 2);
}

TEST_CASE("squarefree_factor multiplies back to the input") {
  std::mt19937 rng(3);
  for (int n = 0; n < 40; ++n) {
    BiPoly a = random_poly(rng, 3, n % 2 == 0), b = random_poly(rng, 2, false);
    if (a.is_zero() || b.is_zero()) continue;
    BiPoly p = a * a * b;
    auto f = squarefree_factor(p);
    BiPoly m = multiply_out(f);
    BiPoly q;
    REQUIRE(try_divide(p, m, q));
    CHECK(q.is_constant());
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j) CHECK(gcd(f[i].factor, f[j].factor).is_constant());
  }
}

TEST_CASE("linear_change") {
  FieldElement c(3);
  CHECK(linear_change(Y, {{{1, 0}, {c, 1}}}) == Y + X.scaled(c));
  try {
    linear_change(X * X + Y * Y, {{{1, 0}, {I, 0}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int n = 0; n < 100; ++n) {
    BiPoly p = random_poly(rng, 4, true);
    Matrix2 m{{{u(rng), u(rng)}, {u(rng), u(rng)}}};
    if (p.is_zero() || det(m).is_zero()) continue;
    CHECK(poly_order(linear_change(p, m)) == poly_order(p));
  }
}

TEST_CASE("conjugation is involutive on polynomials and series") {
  BiPoly p = Y.scaled(I) + X.scaled(FieldElement::extension(1, 2, 3, 4, 2));
  CHECK(p.conj().conj() == p);
  CHECK(p.conj() != p);
}
