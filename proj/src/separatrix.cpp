#include "foliasep/separatrix.hpp"

#include <algorithm>

#include "foliasep/errors.hpp"

namespace foliasep {

std::string kind_name(SeparatrixKind k) { return k == SeparatrixKind::Isolated ? "isolated" : "dicritical"; }

std::string reality_name(Reality r) {
  switch (r) {
    case Reality::Real: return "real";
    case Reality::PurelyComplex: return "purely-complex";
    case Reality::Unknown: return "unknown";
  }
  return "?";
}

std::string convergence_name(Convergence c) {
  return c == Convergence::ConvergentCertified ? "convergent-certified" : "formal-only";
}

Separatrix Separatrix::conj() const {
  Separatrix s = *this;
  s.param = param.conj();
  s.attachment = attachment.conj();
  return s;
}

SeparatrixDivisor SeparatrixDivisor::real_part() const {
  SeparatrixDivisor out;
  for (size_t k = 0; k < members.size(); ++k) {
    if (members[k].reality != Reality::Real) continue;
    out.members.push_back(members[k]);
    out.coefficients.push_back(coefficients[k]);
  }
  return out;
}

namespace {

std::array<FieldElement, 2> kernel_vector(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                          const FieldElement& d) {
  if (!a.is_zero() || !b.is_zero()) return {-b, a};
  return {-d, c};
}

PuiseuxParam apply_axes(const Matrix2& m, const TruncSeries& s, const TruncSeries& t) {
  return {s.scaled(m[0][0]) + t.scaled(m[0][1]), s.scaled(m[1][0]) + t.scaled(m[1][1])};
}

void require_order(const Separatrix& s, int N) {
  if (s.precision() < N)
    throw Error(ErrorCode::TruncationExhausted, "separatrix known to order " + std::to_string(s.precision()) +
                                                    ", requested " + std::to_string(N));
}

}  // namespace

LocalInvariantCurve local_invariant_curve(const FoliationGerm& germ, CurveChoice which, int N) {
  FoliationGerm G = germ.at_origin();
  SingularityClass cls = classify_singularity(G);
  if (!cls.is_simple()) throw Error(ErrorCode::NotSimple, "local invariant curves need a simple singularity");
  FieldElement a = G.P.coeff(1, 0), b = G.P.coeff(0, 1), c = G.Q.coeff(1, 0), d = G.Q.coeff(0, 1);
  std::array<FieldElement, 2> v, w;
  if (cls.tag == SingularityTag::SaddleNode) {
    bool strong = which == CurveChoice::Strong || which == CurveChoice::Eigen1;
    v = strong ? cls.strong_direction : cls.weak_direction;
    w = strong ? cls.weak_direction : cls.strong_direction;
  } else {
    if (which == CurveChoice::Strong || which == CurveChoice::Weak)
      throw Error(ErrorCode::NotSaddleNode, "strong/weak curves exist only at saddle-nodes");
    if (!cls.eigenvalues)
      throw Error(ErrorCode::UnsupportedExtension, "eigenvalues of the linear part are outside the supported tower");
    const auto& ev = *cls.eigenvalues;
    int k = which == CurveChoice::Eigen1 ? 0 : 1;
    v = kernel_vector(a - ev[k], b, c, d - ev[k]);
    w = kernel_vector(a - ev[1 - k], b, c, d - ev[1 - k]);
  }
  LocalInvariantCurve out;
  out.axes = {{{v[0], w[0]}, {v[1], w[1]}}};
  FoliationGerm N2 = G.linear_change(out.axes);
  out.graph = invariant_graph(N2.P, N2.Q, N, G.jet_order);
  out.param = apply_axes(out.axes, TruncSeries::variable(), out.graph);
  return out;
}

std::vector<Separatrix> enumerate_separatrices(const ReductionTree& tree, int N) {
  std::vector<Separatrix> out;
  const TreePoint& root = tree.root();
  if (root.is_final()) {
    if (!root.cls.is_singular()) return out;
    bool sn = root.cls.tag == SingularityTag::SaddleNode;
    for (CurveChoice ch : {CurveChoice::Eigen1, CurveChoice::Eigen2}) {
      Separatrix s;
      s.id = static_cast<int>(out.size());
      s.param = local_invariant_curve(root.germ, ch, N).param;
      s.source_point = 0;
      s.role = sn ? (ch == CurveChoice::Eigen1 ? "strong" : "weak") : "eigen";
      s.convergence = sn && ch == CurveChoice::Eigen2 ? Convergence::FormalOnly : Convergence::ConvergentCertified;
      require_order(s, N);
      out.push_back(s);
    }
    if (tree.symmetric) classify_reality(out);
    return out;
  }
  for (int id : tree.final_singularities()) {
    const TreePoint& q = tree.points[id];
    if (!q.is_trace()) continue;
    TruncSeries phi = invariant_graph(q.germ.P, q.germ.Q, N, q.germ.jet_order);
    Separatrix s;
    s.id = static_cast<int>(out.size());
    s.param = tree.push_down(id, graph_param(phi));
    s.source_point = id;
    if (q.cls.tag == SingularityTag::SaddleNode) {
      bool tangent = tree.weak_component(id).has_value();
      s.role = tangent ? "strong" : "weak";
      s.convergence = tangent ? Convergence::ConvergentCertified : Convergence::FormalOnly;
    } else {
      s.role = "transverse";
    }
    require_order(s, N);
    out.push_back(s);
  }
  if (tree.symmetric) {
    for (auto& s : out) {
      int c = tree.points[s.source_point].conjugate;
      s.reality = c == s.source_point ? Reality::Real : Reality::PurelyComplex;
      for (const auto& o : out)
        if (o.source_point == c) s.partner = o.id;
    }
  }
  return out;
}

Separatrix dicritical_curvette(const ReductionTree& tree, int component, ChartKind chart, const FieldElement& coord,
                               int N) {
  const DivisorComponent& D = tree.components.at(component);
  if (!D.dicritical) throw Error(ErrorCode::InvalidArgument, "curvettes are attached to dicritical components");
  FoliationGerm G = tree.germ_on_component(D.blowup, chart, coord);
  if (G.P.coeff(0, 0).is_zero())
    throw Error(ErrorCode::InvalidArgument, "attachment point is not a transverse regular point");
  TruncSeries phi = invariant_graph(G.P, G.Q, N, G.jet_order);
  Separatrix s;
  s.kind = SeparatrixKind::Dicritical;
  s.param = tree.push_down(D.blowup, chart, coord, graph_param(phi));
  s.source_point = tree.find_point(D.blowup, chart, coord);
  s.component = component;
  s.attachment_chart = chart;
  s.attachment = coord;
  s.role = "curvette";
  require_order(s, N);
  return s;
}

Separatrix dicritical_curvette(const ReductionTree& tree, int component, const FieldElement& coord, int N) {
  return dicritical_curvette(tree, component, ChartKind::U, coord, N);
}

namespace {

FieldElement attachment_candidate(long k) {
  // 0, 1, -1, 2, -2, ...
  return FieldElement(k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -k / 2));
}

}  // namespace

SeparatrixDivisor balanced_divisor(const ReductionTree& tree, const std::vector<Separatrix>& isolated, bool j_symmetric,
                                   int N, const std::vector<CurvetteSite>& required) {
  SeparatrixDivisor B;
  for (const auto& s : isolated) {
    B.members.push_back(s);
    B.coefficients.push_back(1);
  }
  auto add = [&](Separatrix s, int a) {
    s.id = static_cast<int>(B.members.size());
    B.members.push_back(std::move(s));
    B.coefficients.push_back(a);
  };
  for (const auto& D : tree.components) {
    if (!D.dicritical) continue;
    int k = 2 - static_cast<int>(D.neighbors.size());
    std::vector<FieldElement> taken;
    for (const auto& site : required) {
      if (site.component != D.id) continue;
      add(dicritical_curvette(tree, D.id, site.chart, site.coord, N), 1);
      if (site.chart == ChartKind::U) taken.push_back(site.coord);
      --k;
    }
    int placed = 0;
    for (long n = 0; placed < std::abs(k); ++n) {
      if (n > 1000) throw Error(ErrorCode::InsufficientTracePoints, "no room for curvettes on D" + std::to_string(D.id + 1));
      FieldElement c = attachment_candidate(n);
      if (tree.find_point(D.blowup, ChartKind::U, c) >= 0) continue;
      if (std::find(taken.begin(), taken.end(), c) != taken.end()) continue;
      add(dicritical_curvette(tree, D.id, c, N), k > 0 ? 1 : -1);
      ++placed;
    }
  }
  if (tree.symmetric) {
    for (auto& s : B.members) {
      if (s.kind != SeparatrixKind::Dicritical) continue;
      int cc = tree.components[s.component].conjugate;
      for (const auto& o : B.members)
        if (o.kind == SeparatrixKind::Dicritical && o.component == cc && o.attachment_chart == s.attachment_chart &&
            o.attachment == s.attachment.conj() && B.coefficients[o.id] == B.coefficients[s.id])
          s.partner = o.id;
      bool fixed = cc == s.component && s.attachment == s.attachment.conj();
      s.reality = fixed ? Reality::Real : Reality::PurelyComplex;
    }
  }
  B.balanced = is_balanced(tree, B);
  B.j_symmetric = j_symmetric && tree.symmetric && is_j_symmetric(tree, B);
  return B;
}

SeparatrixDivisor balanced_divisor(const ReductionTree& tree, bool j_symmetric, int N) {
  return balanced_divisor(tree, enumerate_separatrices(tree, N), j_symmetric, N);
}

bool is_balanced(const ReductionTree& tree, const SeparatrixDivisor& B) {
  size_t isolated = 0;
  std::vector<int> sums(tree.components.size(), 0);
  for (size_t k = 0; k < B.members.size(); ++k) {
    int a = B.coefficients[k];
    if (a < -1 || a > 1) return false;
    if (B.members[k].kind == SeparatrixKind::Isolated) {
      if (a != 1) return false;
      ++isolated;
    } else {
      sums[B.members[k].component] += a;
    }
  }
  size_t expected = 0;
  if (tree.root().is_final()) {
    expected = tree.root().cls.is_singular() ? 2 : 0;
  } else {
    for (int id : tree.final_singularities())
      if (tree.points[id].is_trace()) ++expected;
  }
  if (isolated != expected) return false;
  for (const auto& D : tree.components)
    if (D.dicritical && sums[D.id] != 2 - static_cast<int>(D.neighbors.size())) return false;
  return true;
}

bool is_j_symmetric(const ReductionTree& tree, const SeparatrixDivisor& B) {
  for (size_t k = 0; k < B.members.size(); ++k) {
    const Separatrix& s = B.members[k];
    if (s.partner < 0) return false;
    if (B.coefficients[s.partner] != B.coefficients[k]) return false;
    if (s.kind == SeparatrixKind::Dicritical && tree.components[s.component].conjugate == s.component &&
        s.reality != Reality::Real)
      return false;
  }
  return true;
}

int divisor_multiplicity(const SeparatrixDivisor& B) {
  int total = 0;
  for (size_t k = 0; k < B.members.size(); ++k) total += B.coefficients[k] * B.members[k].multiplicity();
  return total;
}

int default_separatrix_order(const FoliationGerm& F) { return 2 * milnor_number(F) + 4; }

MultiplicityReport check_multiplicity_formula(const ReductionTree& tree, const SeparatrixDivisor& B) {
  MultiplicityReport r;
  r.nu0 = algebraic_multiplicity(tree.root_germ);
  r.nu0_B = divisor_multiplicity(B);
  r.tau0 = tangency_excess(tree);
  r.holds = r.nu0 == r.nu0_B - 1 + r.tau0;
  r.second_type = r.tau0 == 0;
  r.inequality = r.nu0_B <= r.nu0 + 1 && ((r.nu0_B == r.nu0 + 1) == r.second_type);
  return r;
}

MultiplicityReport check_multiplicity_formula(const FoliationGerm& F) {
  ReductionTree tree = reduce_singularities(F);
  int N = default_separatrix_order(F);
  return check_multiplicity_formula(tree, balanced_divisor(tree, false, N));
}

namespace {

// f(g(t)) for ord g >= 1.
TruncSeries compose_series(const TruncSeries& f, const TruncSeries& g) {
  TruncSeries acc({}, f.precision());
  TruncSeries pw = TruncSeries::constant(FieldElement(1));
  const auto& c = f.stored();
  for (size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) acc = acc + pw.scaled(c[k]);
    pw = pw * g;
  }
  return acc;
}

}  // namespace

TruncSeries graph_normal_form(const PuiseuxParam& gamma) {
  if (gamma.x.valuation_bound() != 1) throw Error(ErrorCode::InvalidArgument, "graph normal form needs ord x = 1");
  int n = std::min(gamma.x.precision(), gamma.y.precision());
  FieldElement a1inv = gamma.x.coeff(1).inverse();
  std::vector<FieldElement> b(n + 1);
  b[1] = a1inv;
  // x(tau(x)) = x, solved order by order.
  for (int k = 2; k <= n; ++k) {
    TruncSeries tau(std::vector<FieldElement>(b.begin(), b.begin() + k), k);
    FieldElement r = compose_series(gamma.x.with_precision(k), tau).coeff(k);
    b[k] = -r * a1inv;
  }
  TruncSeries tau(b, n);
  return compose_series(gamma.y, tau).with_precision(n);
}

namespace {

bool same_branch_params(const PuiseuxParam& a, const PuiseuxParam& b) { return agree(a.x, b.x) && agree(a.y, b.y); }

std::optional<TruncSeries> try_graph(const PuiseuxParam& g) {
  if (g.x.valuation_bound() == 1) return graph_normal_form(g);
  if (g.y.valuation_bound() == 1) {
    return graph_normal_form({g.y, g.x});
  }
  return std::nullopt;
}

}  // namespace

void classify_reality(std::vector<Separatrix>& seps) {
  for (auto& s : seps) {
    PuiseuxParam c = s.param.conj();
    int match = -1;
    for (const auto& o : seps)
      if (same_branch_params(c, o.param)) {
        match = o.id;
        if (o.id == s.id) break;
      }
    if (match < 0) {
      auto gs = try_graph(c);
      bool swapped = c.x.valuation_bound() != 1;
      if (gs) {
        for (const auto& o : seps) {
          bool oswapped = o.param.x.valuation_bound() != 1;
          if (oswapped != swapped) continue;
          auto go = try_graph(o.param);
          if (go && agree(*gs, *go)) {
            match = o.id;
            if (o.id == s.id) break;
          }
        }
      }
    }
    if (match < 0) throw Error(ErrorCode::UndecidedReality, "conjugate of separatrix " + std::to_string(s.id) + " not matched");
    s.partner = match;
    s.reality = match == s.id ? Reality::Real : Reality::PurelyComplex;
  }
}

}  // namespace foliasep
