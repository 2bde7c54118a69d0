#include "foliasep/polar.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "foliasep/algebra.hpp"
#include "foliasep/errors.hpp"

namespace foliasep {

ProjectivePair polar_sample(int seed, int k) {
  std::mt19937 gen(static_cast<unsigned>(seed) * 2654435761u + 17u);
  std::set<std::pair<long, long>> seen;
  int drawn = 0;
  for (int height = 1;; ++height) {
    std::uniform_int_distribution<long> d(-height, height);
    for (int tries = 0; tries < 4; ++tries) {
      long a = d(gen), b = d(gen);
      if (a == 0 && b == 0) continue;
      long g = std::gcd(a, b);
      a /= g;
      b /= g;
      if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
      }
      if (!seen.insert({a, b}).second) continue;
      if (drawn++ == k) return {BigRational(a), BigRational(b)};
    }
  }
}

std::string check_polar_sample(const FoliationGerm& F, const BigRational& a, const BigRational& b,
                               PolarCertificate& cert) {
  cert = PolarCertificate{};
  BiPoly eq = polar_equation(F, a, b);
  if (eq.is_zero()) return "equation vanishes";
  cert.order_matches = eq.order() == algebraic_multiplicity(F);
  cert.squarefree = true;
  cert.no_invariant_component = true;
  for (const auto& f : squarefree_factor(eq)) {
    if (!f.factor.coeff(0, 0).is_zero()) continue;
    if (f.multiplicity > 1) cert.squarefree = false;
    if (is_invariant(F, f.factor)) cert.no_invariant_component = false;
  }
  // An invariant polar branch is tangent to (b, a) at each of its points, hence the line ax - by.
  BiPoly line = BiPoly::x() * BiPoly(FieldElement(a)) - BiPoly::y() * BiPoly(FieldElement(b));
  if (divides(line, eq)) cert.no_invariant_component = false;
  if (!cert.order_matches) return "order differs from the multiplicity";
  if (!cert.squarefree) return "not squarefree";
  if (!cert.no_invariant_component) return "has an invariant component";
  return "";
}

PolarCurve polar_curve(const FoliationGerm& F0, const SeparatrixDivisor& B, std::optional<ProjectivePair> hint,
                       int seed) {
  FoliationGerm F = F0.at_origin();
  if (F.is_radial()) throw Error(ErrorCode::RadialFoliation, "the radial foliation has no generic polar");
  PolarCurve out;
  std::vector<int> window;  // indices into out.samples of consecutive certified samples
  int k = 0;
  for (int n = 0; n < kPolarSampleLimit; ++n) {
    ProjectivePair ab;
    if (n == 0 && hint) {
      ab = *hint;
    } else {
      do ab = polar_sample(seed, k++);
      while (hint && ab.first * hint->second == ab.second * hint->first);
    }
    PolarSample s{ab.first, ab.second, "", std::nullopt};
    PolarCertificate cert;
    s.rejection = check_polar_sample(F, ab.first, ab.second, cert);
    if (s.rejection.empty()) s.p0 = intersection_number(B, polar_equation(F, ab.first, ab.second));
    out.samples.push_back(s);
    if (!s.rejection.empty()) continue;
    window.push_back(static_cast<int>(out.samples.size()) - 1);
    if (static_cast<int>(window.size()) < kPolarConsistentSamples) continue;
    if (window.size() > static_cast<size_t>(kPolarConsistentSamples)) window.erase(window.begin());
    bool same = true;
    for (int w : window) same = same && out.samples[w].p0 == out.samples[window.front()].p0;
    if (!same) {
      out.warnings.push_back("polar samples disagree on p0; resampling");
      continue;
    }
    const PolarSample& chosen = out.samples[window.front()];
    out.a = chosen.a;
    out.b = chosen.b;
    out.equation = polar_equation(F, chosen.a, chosen.b);
    check_polar_sample(F, chosen.a, chosen.b, out.certificate);
    out.certificate.samples_consistent = true;
    out.p0 = *chosen.p0;
    return out;
  }
  std::string why;
  for (const auto& s : out.samples)
    why += " (" + rational_to_string(s.a) + ":" + rational_to_string(s.b) + ") " +
           (s.rejection.empty() ? "p0=" + std::to_string(*s.p0) : s.rejection) + ";";
  throw Error(ErrorCode::GenericityExhausted, "no stable generic polar in " + std::to_string(kPolarSampleLimit) +
                                                  " samples:" + why);
}

int tangency_order(const FoliationGerm& F0, const PuiseuxParam& gamma) {
  FoliationGerm F = F0.at_origin();
  TruncSeries r = substitute_series(F.P, gamma) * gamma.y.derivative() -
                  substitute_series(F.Q, gamma) * gamma.x.derivative();
  if (r.vanishes_to_precision()) {
    if (r.is_exact()) throw Error(ErrorCode::InvariantBranch, "branch is invariant");
    throw Error(ErrorCode::TruncationExhausted,
                "tangency residual vanishes to order " + std::to_string(r.precision()));
  }
  int tg = r.ord();
  if (!F.is_exact() && tg > F.jet_order)
    throw Error(ErrorCode::TruncationExhausted, "tangency order exceeds the exact jet of the germ");
  return tg;
}

int intersection_number(const SeparatrixDivisor& B, const BiPoly& f) {
  int total = 0;
  for (size_t k = 0; k < B.members.size(); ++k) {
    if (B.coefficients[k] == 0) continue;
    TruncSeries s = substitute_series(f, B.members[k].param);
    if (s.vanishes_to_precision())
      throw Error(ErrorCode::TruncationExhausted,
                  "curve contains separatrix " + std::to_string(B.members[k].id) + " to its guaranteed order");
    total += B.coefficients[k] * s.ord();
  }
  return total;
}

int polar_intersection(const SeparatrixDivisor& B, const PolarCurve& polar) {
  return intersection_number(B, polar.equation);
}

namespace {

int sum_excess(const ReductionTree& tree, const std::vector<CurvePassage>& passages, bool real_only) {
  int tau = 0;
  for (const auto& p : passages)
    if (p.center) tau += tangency_excess(tree, p.point, real_only) * p.nu;
  return tau;
}

}  // namespace

int tangency_excess_along(const ReductionTree& tree, const PuiseuxParam& gamma, bool real_only) {
  return sum_excess(tree, strict_transform_curve(tree, gamma), real_only);
}

int tangency_excess_along(const ReductionTree& tree, const BiPoly& f, bool real_only) {
  return sum_excess(tree, strict_transform_curve(tree, f), real_only);
}

PuiseuxParam regular_leaf(const FoliationGerm& F0, int N) {
  FoliationGerm F = F0.at_origin();
  if (!F.P.coeff(0, 0).is_zero()) return graph_param(invariant_graph(F.P, F.Q, N, F.jet_order));
  if (!F.Q.coeff(0, 0).is_zero()) {
    PuiseuxParam g = graph_param(invariant_graph(F.Q.swapped(), F.P.swapped(), N, F.jet_order));
    return {g.y, g.x};
  }
  throw Error(ErrorCode::InvalidArgument, "regular_leaf needs a regular point");
}

namespace {

BigRational small_rational(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return BigRational(num(gen), den(gen));
}

BiPoly poly_in_x(const std::vector<BigRational>& c) {
  BiPoly out;
  BiPoly pw(1);
  for (const auto& v : c) {
    out = out + pw * BiPoly(FieldElement(v));
    pw = pw * BiPoly::x();
  }
  return out;
}

}  // namespace

TestBranch random_branch(const ReductionTree& tree, unsigned seed) {
  std::mt19937 gen(seed * 747796405u + 2891336453u);
  std::uniform_int_distribution<int> die(0, 11);
  // Coefficients c1, c2, c3 of y = c1 x + c2 x^2 + c3 x^3, steered along chart-U points.
  std::vector<BigRational> c(4, BigRational(0));
  int point = 0;
  bool steering = true;
  for (int k = 1; k <= 3; ++k) {
    BigRational v = small_rational(gen);
    if (steering && point >= 0 && !tree.points[point].is_final() && die(gen) < 8) {
      std::vector<int> kids;
      for (int id : tree.blowups[tree.points[point].child_blowup].points)
        if (tree.points[id].chart == ChartKind::U && tree.points[id].coord.is_rational()) kids.push_back(id);
      if (!kids.empty()) {
        point = kids[std::uniform_int_distribution<size_t>(0, kids.size() - 1)(gen)];
        v = tree.points[point].coord.re();
      } else {
        steering = false;
      }
    } else {
      steering = false;
    }
    c[k] = v;
  }
  TestBranch out;
  int shape = die(gen);
  if (shape < 7) {
    std::vector<FieldElement> ys(c.begin(), c.end());
    out.gamma = {TruncSeries::variable(), TruncSeries::exact(ys)};
    out.equation = BiPoly::y() - poly_in_x(c);
  } else if (shape < 10) {
    // (t^2, c1 t^2 + d t^3): (y - c1 x)^2 = d^2 x^3.
    BigRational d = small_rational(gen);
    if (d == 0) d = 1;
    out.gamma = {TruncSeries::exact({FieldElement(), FieldElement(), FieldElement(1)}),
                 TruncSeries::exact({FieldElement(), FieldElement(), FieldElement(c[1]), FieldElement(d)})};
    BiPoly l = BiPoly::y() - BiPoly::x() * BiPoly(FieldElement(c[1]));
    out.equation = l * l - BiPoly(FieldElement(d * d)) * BiPoly::x() * BiPoly::x() * BiPoly::x();
  } else {
    // Tangent to the y-axis: x = c2 y^2 + c3 y^3.
    std::vector<FieldElement> xs = {FieldElement(), FieldElement(), FieldElement(c[2] == 0 ? BigRational(1) : c[2]),
                                    FieldElement(c[3])};
    out.gamma = {TruncSeries::exact(xs), TruncSeries::variable()};
    out.equation = BiPoly::x() - poly_in_x({BigRational(0), BigRational(0), xs[2].re(), xs[3].re()}).swapped();
  }
  return out;
}

BranchCheck check_branch(const ReductionTree& tree, const std::vector<Separatrix>& isolated,
                         const SeparatrixDivisor& B, const TestBranch& branch, int N) {
  const FoliationGerm& F = tree.root_germ;
  BranchCheck out;
  out.branch = branch;
  const PuiseuxParam& g = branch.gamma;
  out.nu_gamma = g.multiplicity();
  out.tg0 = tangency_order(F, g);

  // One blow-up at the origin, independently of the tree.
  BlowupCharts charts = blowup(F);
  out.m = charts.m;
  int ox = g.x.valuation_bound(), oy = g.y.valuation_bound();
  if (ox <= oy) {
    TruncSeries u = divide(g.y, g.x);
    FieldElement c = u.coeff(0);
    FoliationGerm G = charts.chart_u;
    FoliationGerm Gc(G.P.translated(FieldElement(), c), G.Q.translated(FieldElement(), c));
    Gc.jet_order = G.jet_order;
    out.tg_q = tangency_order(Gc, {g.x, u - TruncSeries::constant(c)});
  } else {
    out.tg_q = tangency_order(charts.chart_v, {g.y, divide(g.x, g.y)});
  }
  out.blowup_formula = out.tg0 == out.m * out.nu_gamma + out.tg_q;

  std::vector<CurvePassage> passages = strict_transform_curve(tree, g);
  for (const auto& p : passages)
    if (p.center) out.kappa_steps.push_back(tangency_excess(tree, p.point) * p.nu);
  out.tau_along = sum_excess(tree, passages, false);

  std::vector<CurvetteSite> sites;
  const CurvePassage& exit = passages.back();
  if (exit.blowup >= 0) {
    int comp = tree.blowups[exit.blowup].component;
    bool trace = exit.point < 0 ||
                 (tree.points[exit.point].component_count() == 1 && !tree.points[exit.point].cls.is_singular());
    if (tree.components[comp].dicritical && trace) sites.push_back({comp, exit.chart, exit.coord});
  }
  SeparatrixDivisor adapted = sites.empty() ? B : balanced_divisor(tree, isolated, false, N, sites);
  out.B_gamma = intersection_number(adapted, branch.equation);
  out.kappa0 = out.tg0 + 1 - out.B_gamma;
  out.intersection_formula = out.B_gamma == out.tg0 + 1 - out.tau_along;
  out.B_gamma_default = intersection_number(B, branch.equation);
  out.exit_defect = out.tg0 + 1 - out.tau_along - out.B_gamma_default;
  return out;
}

PolarReport check_polar_identities(const ReductionTree& tree, const std::vector<Separatrix>& isolated,
                                   const SeparatrixDivisor& B, int mu0, int N, int branch_count, int seed,
                                   std::optional<ProjectivePair> hint) {
  const FoliationGerm& F = tree.root_germ;
  PolarReport r;
  r.mu0 = mu0;
  r.nu0 = algebraic_multiplicity(F);
  r.tau0 = tangency_excess(tree);
  r.polar_applicable = !F.is_radial();
  bool ok = true;
  if (r.polar_applicable) {
    r.polar = polar_curve(F, B, hint, seed);
    r.tau_along_polar = tangency_excess_along(tree, r.polar.equation);
    r.polar_identity.name = "polar";
    r.polar_identity.lhs = r.polar.p0;
    r.polar_identity.rhs = r.mu0 + r.nu0 - r.tau_along_polar;
    r.polar_identity.holds = r.polar_identity.lhs == r.polar_identity.rhs;
    r.polar_identity.route = "lhs: polar equation along the balanced divisor; rhs: mu0 + nu0 - excess along the polar";
    ok = r.polar_identity.holds && r.polar.certificate.complete();
  }
  for (unsigned s = 0; static_cast<int>(r.branches.size()) < branch_count && s < 40u * branch_count; ++s) {
    TestBranch b = random_branch(tree, static_cast<unsigned>(seed) * 1000u + s);
    try {
      r.branches.push_back(check_branch(tree, isolated, B, b, N));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvariantBranch) throw;
    }
  }
  for (const auto& b : r.branches) ok = ok && b.blowup_formula && b.intersection_formula;
  r.all_hold = ok && static_cast<int>(r.branches.size()) == branch_count;
  return r;
}

PolarReport check_polar_identities(const FoliationGerm& F0, int branch_count, int seed,
                                   std::optional<ProjectivePair> hint) {
  FoliationGerm F = F0.at_origin();
  ReductionTree tree = reduce_singularities(F);
  int mu = milnor_number(F);
  for (int N = 2 * mu + 4;; N *= 2) {
    auto iso = enumerate_separatrices(tree, N);
    auto B = balanced_divisor(tree, iso, true, N);
    try {
      return check_polar_identities(tree, iso, B, mu, N, branch_count, seed, hint);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationExhausted || N > 4 * mu + 8) throw;
    }
  }
}

}  // namespace foliasep
