#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foliasep/errors.hpp"
#include "foliasep/foliation.hpp"
#include "foliasep/parser.hpp"

using namespace foliasep;

namespace {

FoliationGerm germ(const std::string& p, const std::string& q) {
  return FoliationGerm(parse_polynomial(p), parse_polynomial(q));
}

// w = y(1 + mu x^k) dx + x^(k+1) dy
FoliationGerm saddle_node(int k, const BigRational& mu) {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  return FoliationGerm::from_form(y * (BiPoly(1) + x.pow(k).scaled(FieldElement(mu))), x.pow(k + 1));
}

const FoliationGerm kExample = germ("y^2 + x^4", "-x*y + x^5 + x*y^2");
const FoliationGerm kCusp = germ("2*y", "3*x^2");
const FoliationGerm kCenter = germ("y", "-x");

}  // namespace

TEST_CASE("algebraic multiplicity") {
  CHECK(algebraic_multiplicity(kCenter) == 1);
  CHECK(algebraic_multiplicity(kExample) == 2);
  CHECK(algebraic_multiplicity(kCusp) == 1);
}

TEST_CASE("milnor number against the jet oracle") {
  CHECK(milnor_number(kCenter) == 1);
  CHECK(milnor_number(kExample) == 6);
  CHECK(milnor_number(kCusp) == 2);
  CHECK(milnor_oracle(germ("x", "y"), 4) == 1);
  CHECK(milnor_oracle(kCusp, 4) == 2);
  CHECK(milnor_oracle(kExample, 12) == 6);
  CHECK_THROWS_AS(milnor_oracle(kExample, 3), Error);
  for (int k = 1; k <= 5; ++k) CHECK(milnor_number(saddle_node(k, 1)) == k + 1);
}

TEST_CASE("multiplicity and milnor number are invariant under linear changes") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> u(-3, 3);
  std::vector<FoliationGerm> fields = {kExample, kCusp, kCenter, saddle_node(2, BigRational(1, 3)),
                                       germ("x^2 - y^3 + x*y", "y^2 + 2*x^3")};
  for (const auto& F : fields) {
    int nu = algebraic_multiplicity(F), mu = milnor_number(F);
    for (int n = 0; n < 6; ++n) {
      Matrix2 m{{{u(rng), u(rng)}, {u(rng), u(rng)}}};
      if (det(m).is_zero()) continue;
      FoliationGerm G = F.linear_change(m);
      CHECK(algebraic_multiplicity(G) == nu);
      CHECK(milnor_number(G) == mu);
      CHECK(milnor_oracle(G, 16) == mu);
    }
  }
}

TEST_CASE("isolation is checked") {
  CHECK_THROWS_AS(require_isolated(germ("x*y", "x*y")), Error);
  CHECK_NOTHROW(require_isolated(germ("x*(1+x)", "y*(1+x)")));
  CHECK(milnor_number(germ("x*(1+x)", "y*(1+x)")) == 1);
}

TEST_CASE("classification") {
  auto hyp = classify_singularity(germ("x", "-y"));
  CHECK(hyp.tag == SingularityTag::NonDegenerateSimple);
  REQUIRE(hyp.rational_ratio.has_value());
  CHECK(*hyp.rational_ratio == -1);
  auto sn = classify_singularity(FoliationGerm::from_form(BiPoly::y(), BiPoly::x().pow(2)));
  CHECK(sn.tag == SingularityTag::SaddleNode);
  CHECK(sn.weak_index == 2);
  CHECK(classify_singularity(germ("x", "2*y")).tag == SingularityTag::NonSimple);
  CHECK(classify_singularity(germ("x", "y")).tag == SingularityTag::NonSimple);
  CHECK(classify_singularity(germ("y", "0*x + x^2")).tag == SingularityTag::NonSimple);
  CHECK(classify_singularity(germ("1 + x", "y")).tag == SingularityTag::Regular);
  auto irr = classify_singularity(germ("x + y", "x"));  // eigenvalues (1 +- sqrt 5)/2
  CHECK(irr.tag == SingularityTag::NonDegenerateSimple);
  CHECK(irr.eigenvalues.has_value());
  auto center = classify_singularity(kCenter);
  CHECK(center.tag == SingularityTag::NonDegenerateSimple);
  REQUIRE(center.eigenvalues.has_value());
  CHECK(!(*center.eigenvalues)[0].is_real());
  // x d/dx + sqrt(2) y d/dy: irrational ratio is simple
  FoliationGerm root2(BiPoly::x(), BiPoly::y().scaled(FieldElement::sqrt_rational(2)));
  CHECK(classify_singularity(root2).tag == SingularityTag::NonDegenerateSimple);
}

TEST_CASE("weak index of the normal form family") {
  for (int k = 1; k <= 5; ++k)
    for (BigRational mu : {BigRational(0), BigRational(1), BigRational(-3, 2)}) {
      auto c = classify_singularity(saddle_node(k, mu));
      CHECK(c.tag == SingularityTag::SaddleNode);
      CHECK(c.weak_index == k + 1);
    }
}

TEST_CASE("weak index after the first blow-up of the example field") {
  // chart (x, u) written with u as y: x' = x P(x,ux)/x^2, u' = (Q - uP)(x,ux)/x^2
  FoliationGerm G = germ("y^2*x + x^3", "-y + x^3 + y^2*x - y^3 - y*x^2");
  auto data = weak_index_data(G);
  CHECK(data.index == 3);
  CHECK(data.leading == FieldElement(1));
  CHECK(data.center_manifold.coeff(1).is_zero());
  CHECK(data.center_manifold.coeff(2).is_zero());
  CHECK(!data.center_manifold.coeff(3).is_zero());
}

TEST_CASE("invariant curves") {
  CHECK(is_invariant(germ("x", "y"), BiPoly::y()));
  FoliationGerm rot = germ("y", "-x");
  CHECK(is_invariant(rot, parse_polynomial("y - i*x")));
  CHECK(!is_invariant(kCusp, BiPoly::x()));
  CHECK(is_invariant(kCusp, parse_polynomial("y^2 - x^3")));
  PuiseuxParam cusp{TruncSeries::exact({0, 0, 1}), TruncSeries::exact({0, 0, 0, 1})};
  CHECK(is_invariant(kCusp, cusp));
}

TEST_CASE("invariant graph solver") {
  // w = y(1+x) dx + x^2 dy: weak separatrix is y = 0
  FoliationGerm sn = FoliationGerm::from_form(parse_polynomial("y*(1+x)"), parse_polynomial("x^2"));
  TruncSeries phi = invariant_graph(sn.P, sn.Q, 12);
  CHECK(phi.vanishes_to_precision());
  // regular leaf of x' = 1, y' = x: y = x^2/2
  TruncSeries leaf = invariant_graph(BiPoly(1), BiPoly::x(), 10);
  CHECK(leaf.coeff(2) == FieldElement(BigRational(1, 2)));
  CHECK(leaf.coeff(3).is_zero());
  // x d/dx - y d/dy + x^2 d/dy: unstable curve y = x^2/3
  TruncSeries g = invariant_graph(parse_polynomial("x"), parse_polynomial("-y + x^2"), 10);
  CHECK(g.coeff(2) == FieldElement(BigRational(1, 3)));
  PuiseuxParam gp = graph_param(g);
  CHECK(is_invariant(germ("x", "-y + x^2"), gp));
  // resonant: x d/dx + (2y + x^2) d/dy has no analytic invariant graph
  CHECK_THROWS_AS(invariant_graph(parse_polynomial("x"), parse_polynomial("2*y + x^2"), 6), Error);
}

TEST_CASE("parser") {
  auto spec = parse_input("P = y^2 + x^4; Q = -x*y + x^5 + x*y^2;");
  CHECK(spec.P == kExample.P);
  CHECK(spec.Q == kExample.Q);
  CHECK(spec.field == FieldTag::Rational);
  auto c = parse_input("P = y; Q = \xE2\x88\x92x;");
  CHECK(c.Q == -BiPoly::x());
  CHECK(parse_input(print_input(spec)).P == spec.P);
  CHECK(parse_polynomial("(x + i*y)^2/2") ==
        parse_polynomial("x^2/2 + i*x*y - y^2/2"));
  try {
    parse_input("P = x*y; Q = x*y;");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIsolated);
  }
  try {
    parse_input("P = x +;\nQ = y;");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_polynomial("x/y"), SyntaxError);
}
