#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "foliasep/blowup.hpp"
#include "foliasep/errors.hpp"
#include "foliasep/parser.hpp"

using namespace foliasep;

namespace {

FoliationGerm germ(const std::string& p, const std::string& q) {
  return FoliationGerm(parse_polynomial(p), parse_polynomial(q));
}

const FoliationGerm kExample = germ("y^2 + x^4", "-x*y + x^5 + x*y^2");
const FoliationGerm kCusp = germ("2*y", "3*x^2");
const FoliationGerm kRadial = germ("x", "y");
const FoliationGerm kTangentSN = germ("x^2", "y^2 + x*y");

std::vector<int> weights(const ReductionTree& t) {
  std::vector<int> w;
  for (const auto& c : t.components) w.push_back(c.weight);
  return w;
}

// A point of the component of blow-up b avoiding every recorded point.
FieldElement free_coord(const ReductionTree& t, int b) {
  for (long k = 1;; ++k) {
    FieldElement c(k % 2 ? (k + 1) / 2 : -k / 2);
    if (t.find_point(b, ChartKind::U, c) < 0) return c;
  }
}

}  // namespace

TEST_CASE("single blow-ups") {
  auto r = blowup(kRadial);
  CHECK(r.dicritical);
  CHECK(r.m == 2);
  CHECK(r.chart_u.P == BiPoly(1));
  CHECK(r.chart_u.Q.is_zero());

  auto c = blowup(germ("y", "-x"));
  CHECK(!c.dicritical);
  CHECK(c.m == 1);
  auto along = roots(c.chart_u.Q.restrict_x0());
  REQUIRE(along.size() == 2);
  for (const auto& u : along) {
    CHECK(u * u == FieldElement(-1));
    FoliationGerm g = c.chart_u;
    auto cls = classify_singularity(FoliationGerm(g.P.translated(0, u), g.Q.translated(0, u)));
    CHECK(cls.tag == SingularityTag::NonDegenerateSimple);
  }
}

TEST_CASE("radial reduction") {
  auto t = reduce_singularities(kRadial);
  REQUIRE(t.blowups.size() == 1);
  CHECK(t.blowups[0].dicritical);
  CHECK(t.blowups[0].m == 2);
  CHECK(t.final_singularities().empty());
  CHECK(component_valence(t, 0) == 0);
  CHECK(tangency_excess(t) == 0);
}

TEST_CASE("example field reduction") {
  auto t = reduce_singularities(kExample);
  REQUIRE(t.blowups.size() == 1);
  CHECK(!t.blowups[0].dicritical);
  CHECK(t.blowups[0].m == 2);
  auto fin = t.final_singularities();
  REQUIRE(fin.size() == 3);
  int real_count = 0;
  for (int id : fin) {
    const auto& p = t.points[id];
    CHECK(p.is_trace());
    if (p.is_real()) {
      ++real_count;
      CHECK(p.coord.is_zero());
      CHECK(p.cls.tag == SingularityTag::SaddleNode);
      CHECK(p.cls.weak_index == 3);
      // strong direction along D1 = {s = 0}
      CHECK(p.cls.strong_direction[0].is_zero());
      CHECK(!t.weak_component(id).has_value());
    } else {
      CHECK(p.cls.tag == SingularityTag::NonDegenerateSimple);
      CHECK(p.coord * p.coord == FieldElement(-1));
      CHECK(t.points[p.conjugate].coord == p.coord.conj());
    }
  }
  CHECK(real_count == 1);
  CHECK(tangency_excess(t) == 0);
  CHECK(tangency_excess(t, 0, true) == 0);
}

TEST_CASE("cusp reduction") {
  auto t = reduce_singularities(kCusp);
  CHECK(t.blowups.size() == 3);
  CHECK(weights(t) == std::vector<int>{1, 1, 2});
  CHECK(component_valence(t, 0) == 1);
  CHECK(component_valence(t, 1) == 1);
  CHECK(component_valence(t, 2) == 2);
  CHECK(t.tangent_saddle_nodes().empty());
  for (int id : t.final_singularities()) CHECK(t.points[id].cls.tag == SingularityTag::NonDegenerateSimple);
  auto pass = strict_transform_curve(t, parse_polynomial("y^2 - x^3"));
  std::vector<int> centers;
  for (const auto& p : pass)
    if (p.center) centers.push_back(p.nu);
  CHECK(centers == std::vector<int>{2, 1, 1});
  PuiseuxParam cusp{TruncSeries::exact({0, 0, 1}), TruncSeries::exact({0, 0, 0, 1})};
  std::vector<int> by_param;
  for (const auto& p : strict_transform_curve(t, cusp))
    if (p.center) by_param.push_back(p.nu);
  CHECK(by_param == centers);
}

TEST_CASE("tangent saddle-node field") {
  CHECK(milnor_number(kTangentSN) == 4);
  auto t = reduce_singularities(kTangentSN);
  REQUIRE(t.blowups.size() == 1);
  CHECK(!t.blowups[0].dicritical);
  auto sn = t.tangent_saddle_nodes();
  REQUIRE(sn.size() == 1);
  CHECK(t.points[sn[0]].coord.is_zero());
  CHECK(t.points[sn[0]].chart == ChartKind::U);
  CHECK(t.points[sn[0]].cls.weak_index == 2);
  CHECK(tangency_excess(t) == 1);
  CHECK(tangency_excess(t, 0, true) == 1);
  int saddles = 0;
  for (int id : t.final_singularities())
    if (t.points[id].cls.tag == SingularityTag::NonDegenerateSimple) ++saddles;
  CHECK(saddles == 1);
}

TEST_CASE("relative tangency excess restarts weights") {
  // blow-down of the tangent saddle-node field: x -> x, y -> x y.
  auto t = reduce_singularities(kTangentSN);
  CHECK(relative_weight(t, 0, 0) == 1);
  CHECK(tangency_excess(t, t.tangent_saddle_nodes()[0]) == 0);
}

TEST_CASE("simple germs are not blown up") {
  auto t = reduce_singularities(germ("x", "-y + x^2"));
  CHECK(t.blowups.empty());
  CHECK(t.final_singularities() == std::vector<int>{0});
  CHECK(tangency_excess(t) == 0);
}

TEST_CASE("weights equal the multiplicity of curvettes") {
  for (const auto& F : {kCusp, kExample, kTangentSN, germ("y^2 - x^3", "x*y"), germ("x^3", "y^3 + x^2*y")}) {
    auto t = reduce_singularities(F);
    for (const auto& c : t.components) {
      FieldElement u = free_coord(t, c.blowup);
      PuiseuxParam curvette{TruncSeries::variable(), TruncSeries::exact({})};
      PuiseuxParam down = t.push_down(c.blowup, ChartKind::U, u, curvette);
      CHECK(down.multiplicity() == c.weight);
    }
    for (const auto& b : t.blowups) CHECK(b.m == algebraic_multiplicity(t.points[b.center].germ) + (b.dicritical ? 1 : 0));
  }
}

TEST_CASE("charts agree on the overlap") {
  for (const auto& F : {kExample, kCusp, kTangentSN}) {
    auto r = blowup(F);
    // (s, u) and (s', v) = (s u, 1/u) describe the same point; compare the induced directions.
    for (long k : {2L, -3L}) {
      FieldElement u(k), s(BigRational(1, 5));
      FieldElement su = r.chart_u.P.eval(s, u), uu = r.chart_u.Q.eval(s, u);
      FieldElement s2 = s * u, v = u.inverse();
      FieldElement sv = r.chart_v.P.eval(s2, v), vv = r.chart_v.Q.eval(s2, v);
      // d(s') = u ds + s du, dv = -du / u^2 : vectors must be parallel
      FieldElement a = u * su + s * uu, b = -uu / (u * u);
      CHECK((a * vv - b * sv).is_zero());
    }
  }
}

TEST_CASE("conjugation involution") {
  auto t = reduce_singularities(germ("y + x^2", "-x + y^3"));
  CHECK(t.symmetric);
  for (const auto& p : t.points) {
    REQUIRE(p.conjugate >= 0);
    CHECK(t.points[p.conjugate].conjugate == p.id);
    CHECK(t.points[p.conjugate].germ.P == p.germ.P.conj());
    CHECK(t.points[p.conjugate].cls.tag == p.cls.tag);
  }
}

TEST_CASE("dot export") {
  auto r = export_dot(reduce_singularities(kRadial));
  CHECK(r.find("D1 \xCF\x81=1 val=0 dicritical") != std::string::npos);
  auto c = export_dot(reduce_singularities(kCusp));
  CHECK(c.find("D3 \xCF\x81=2 val=2") != std::string::npos);
  CHECK(export_dot(reduce_singularities(kCusp)) == c);
}

TEST_CASE("strict transform of lines") {
  auto t = reduce_singularities(kRadial);
  auto pass = strict_transform_curve(t, BiPoly::y());
  REQUIRE(pass.size() == 2);
  CHECK(pass[1].point == -1);
  CHECK(pass[1].coord.is_zero());
  CHECK(pass[1].nu == 1);
  auto e = reduce_singularities(kExample);
  auto line = strict_transform_curve(e, parse_polynomial("y - 2*x"));
  REQUIRE(line.size() == 2);
  CHECK(line[1].point == -1);
  CHECK(line[1].nu == 1);
}
