#include "foliasep/blowup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "foliasep/errors.hpp"

namespace foliasep {

std::string chart_name(ChartKind c) {
  switch (c) {
    case ChartKind::Root: return "root";
    case ChartKind::U: return "U";
    case ChartKind::V: return "V";
  }
  return "?";
}

std::vector<int> TreePoint::components() const {
  std::vector<int> out;
  if (comp_s0) out.push_back(*comp_s0);
  if (comp_t0) out.push_back(*comp_t0);
  return out;
}

namespace {

// p(s, s u) / s^k, dropping terms of total degree > keep.
BiPoly chart_map(const BiPoly& p, int k, int keep) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    int i = e.first + e.second - k, j = e.second;
    if (i < 0) throw Error(ErrorCode::InvalidArgument, "chart map: polynomial not divisible by s^" + std::to_string(k));
    if (i + j <= keep) out += BiPoly::monomial(c, i, j);
  }
  return out;
}

int child_jet(int parent_jet, int loss) {
  return parent_jet >= FoliationGerm::kExactJet ? FoliationGerm::kExactJet : parent_jet - loss;
}

// Exactness after the chart map, capped: returns the jet to keep and the recorded jet_order.
int capped_jet(const BiPoly& a, const BiPoly& b, int jet, int cap, bool& truncated) {
  truncated = jet < FoliationGerm::kExactJet || std::max(a.total_degree(), b.total_degree()) > cap;
  if (!truncated) return FoliationGerm::kExactJet;
  return std::min(jet, cap);
}

FoliationGerm chart_germ(const BiPoly& P, const BiPoly& Q, int m, int parent_jet, int cap) {
  const int keep_all = FoliationGerm::kExactJet;
  BiPoly S = chart_map(BiPoly::x() * P, m, keep_all);
  BiPoly U = (chart_map(Q, 0, keep_all) - BiPoly::y() * chart_map(P, 0, keep_all)).divided_by_x_power(m);
  int jet = child_jet(parent_jet, m);
  bool truncated = false;
  int keep = capped_jet(S, U, jet, cap, truncated);
  FoliationGerm G(truncated ? S.truncated(keep) : S, truncated ? U.truncated(keep) : U);
  G.jet_order = keep;
  return G;
}

}  // namespace

BlowupCharts blowup(const FoliationGerm& germ, int jet_cap) {
  FoliationGerm G = germ.at_origin();
  BlowupCharts out;
  out.nu = algebraic_multiplicity(G);
  G.require_jet(out.nu + 1, "blow-up");
  BiPoly Pn = G.P.homogeneous_part(out.nu), Qn = G.Q.homogeneous_part(out.nu);
  out.dicritical = (BiPoly::x() * Qn - BiPoly::y() * Pn).is_zero();
  out.m = out.nu + (out.dicritical ? 1 : 0);
  BiPoly P = G.is_exact() ? G.P : G.P.truncated(G.jet_order);
  BiPoly Q = G.is_exact() ? G.Q : G.Q.truncated(G.jet_order);
  out.chart_u = chart_germ(P, Q, out.m, G.jet_order, jet_cap);
  out.chart_v = chart_germ(Q.swapped(), P.swapped(), out.m, G.jet_order, jet_cap);
  return out;
}

std::vector<int> ReductionTree::final_singularities() const {
  std::vector<int> out;
  for (const auto& p : points)
    if (p.is_final() && p.cls.is_singular()) out.push_back(p.id);
  return out;
}

std::optional<int> ReductionTree::weak_component(int id) const {
  const TreePoint& p = points[id];
  if (!p.is_final() || p.cls.tag != SingularityTag::SaddleNode) return std::nullopt;
  const auto& w = p.cls.weak_direction;
  if (p.comp_s0 && w[0].is_zero()) return p.comp_s0;
  if (p.comp_t0 && w[1].is_zero()) return p.comp_t0;
  return std::nullopt;
}

std::vector<int> ReductionTree::tangent_saddle_nodes() const {
  std::vector<int> out;
  for (const auto& p : points)
    if (weak_component(p.id)) out.push_back(p.id);
  return out;
}

int ReductionTree::max_depth() const {
  int d = 0;
  for (const auto& p : points) d = std::max(d, p.depth);
  return d;
}

bool ReductionTree::in_subtree(int p, int q) const {
  for (int r = q; r >= 0; r = points[r].parent)
    if (r == p) return true;
  return false;
}

std::vector<int> ReductionTree::subtree(int p) const {
  std::vector<int> out;
  for (const auto& q : points)
    if (in_subtree(p, q.id)) out.push_back(q.id);
  return out;
}

FoliationGerm ReductionTree::germ_on_component(int b, ChartKind chart, const FieldElement& coord) const {
  const BlowupRecord& rec = blowups.at(b);
  if (chart == ChartKind::V) {
    if (!coord.is_zero()) throw Error(ErrorCode::InvalidArgument, "chart V points are only used at v = 0");
    return rec.chart_v;
  }
  FoliationGerm G = rec.chart_u;
  if (coord.is_zero()) return G;
  int jet = G.jet_order;
  G = FoliationGerm(G.P.translated(FieldElement(), coord), G.Q.translated(FieldElement(), coord));
  G.jet_order = jet;
  return G;
}

int ReductionTree::find_point(int b, ChartKind chart, const FieldElement& coord) const {
  for (int id : blowups.at(b).points)
    if (points[id].chart == chart && points[id].coord == coord) return id;
  return -1;
}

PuiseuxParam ReductionTree::push_down(int b, ChartKind chart, const FieldElement& coord, const PuiseuxParam& local) const {
  PuiseuxParam up;
  if (chart == ChartKind::U) {
    up.x = local.x;
    up.y = local.x * (local.y + TruncSeries::constant(coord));
  } else {
    up.x = local.y * local.x;
    up.y = local.x;
  }
  return push_down(blowups.at(b).center, up);
}

PuiseuxParam ReductionTree::push_down(int point, const PuiseuxParam& local) const {
  const TreePoint& p = points.at(point);
  if (p.chart == ChartKind::Root) return local;
  return push_down(p.blowup, p.chart, p.coord, local);
}

namespace {

bool on_dicritical(const ReductionTree& tree, const TreePoint& p) {
  for (int c : p.components())
    if (tree.components[c].dicritical) return true;
  return false;
}

bool tangent_to_dicritical(const ReductionTree& tree, const TreePoint& p) {
  if (p.comp_s0 && tree.components[*p.comp_s0].dicritical && p.germ.P.coeff(0, 0).is_zero()) return true;
  if (p.comp_t0 && tree.components[*p.comp_t0].dicritical && p.germ.Q.coeff(0, 0).is_zero()) return true;
  return false;
}

bool needs_blowup(ReductionTree& tree, const TreePoint& p) {
  if (p.cls.tag == SingularityTag::NonSimple) return true;
  bool dic = on_dicritical(tree, p);
  if (dic && p.cls.is_singular()) return true;
  if (dic && p.tangency) return true;
  if (p.is_corner() && tree.components[*p.comp_s0].dicritical && tree.components[*p.comp_t0].dicritical) {
    tree.dicritical_corner_seen = true;
    return true;
  }
  return false;
}

void classify_point(const ReductionTree& tree, TreePoint& p) {
  if (p.germ.is_singular()) {
    p.cls = classify_singularity(p.germ);
  } else {
    p.cls = SingularityClass{};
    p.tangency = tangent_to_dicritical(tree, p);
  }
}

void add_point(ReductionTree& tree, TreePoint p) {
  p.id = static_cast<int>(tree.points.size());
  classify_point(tree, p);
  tree.blowups[p.blowup].points.push_back(p.id);
  tree.points.push_back(std::move(p));
}

void perform_blowup(ReductionTree& tree, int center, const ReductionOptions& opt) {
  if (tree.points[center].depth >= opt.max_depth)
    throw Error(ErrorCode::DepthExceeded, "reduction exceeded depth " + std::to_string(opt.max_depth));
  const TreePoint c = tree.points[center];
  BlowupCharts charts = blowup(c.germ, opt.jet_cap);

  int b = static_cast<int>(tree.blowups.size());
  int e = static_cast<int>(tree.components.size());
  DivisorComponent comp;
  comp.id = e;
  comp.dicritical = charts.dicritical;
  comp.center = center;
  comp.blowup = b;
  comp.weight = 0;
  for (int old : c.components()) comp.weight += tree.components[old].weight;
  if (c.components().empty()) comp.weight = 1;
  for (int old : c.components()) {
    comp.neighbors.insert(old);
    tree.components[old].neighbors.insert(e);
  }
  if (c.is_corner()) {
    tree.components[*c.comp_s0].neighbors.erase(*c.comp_t0);
    tree.components[*c.comp_t0].neighbors.erase(*c.comp_s0);
  }
  tree.components.push_back(comp);

  BlowupRecord rec;
  rec.center = center;
  rec.component = e;
  rec.nu = charts.nu;
  rec.m = charts.m;
  rec.dicritical = charts.dicritical;
  rec.chart_u = charts.chart_u;
  rec.chart_v = charts.chart_v;
  tree.blowups.push_back(rec);
  tree.points[center].child_blowup = b;

  // Special points in chart U.
  UPoly along = charts.dicritical ? charts.chart_u.P.restrict_x0() : charts.chart_u.Q.restrict_x0();
  std::vector<FieldElement> coords;
  if (!along.is_zero()) coords = roots(along);
  if (c.comp_t0 && std::find(coords.begin(), coords.end(), FieldElement()) == coords.end())
    coords.insert(coords.begin(), FieldElement());
  std::sort(coords.begin(), coords.end(), canonical_less);
  for (const auto& u : coords) {
    TreePoint p;
    p.parent = center;
    p.blowup = b;
    p.chart = ChartKind::U;
    p.coord = u;
    p.comp_s0 = e;
    if (u.is_zero()) p.comp_t0 = c.comp_t0;
    p.germ = tree.germ_on_component(b, ChartKind::U, u);
    p.depth = c.depth + 1;
    add_point(tree, std::move(p));
  }
  // The point v = 0.
  const FoliationGerm& gv = charts.chart_v;
  bool special_v = gv.P.coeff(0, 0).is_zero() && (charts.dicritical || gv.Q.coeff(0, 0).is_zero());
  if (special_v || c.comp_s0) {
    TreePoint p;
    p.parent = center;
    p.blowup = b;
    p.chart = ChartKind::V;
    p.comp_s0 = e;
    p.comp_t0 = c.comp_s0;
    p.germ = gv;
    p.depth = c.depth + 1;
    add_point(tree, std::move(p));
  }
}

void build_involution(ReductionTree& tree) {
  tree.symmetric = tree.root_germ.is_real();
  if (!tree.symmetric) return;
  tree.points[0].conjugate = 0;
  for (auto& p : tree.points) {
    if (p.child_blowup < 0) continue;
    const TreePoint& q = tree.points[p.conjugate];
    if (q.child_blowup < 0) throw Error(ErrorCode::InvalidArgument, "reduction tree is not conjugation-symmetric");
    const BlowupRecord& bp = tree.blowups[p.child_blowup];
    const BlowupRecord& bq = tree.blowups[q.child_blowup];
    tree.components[bp.component].conjugate = bq.component;
    for (int a : bp.points) {
      int match = tree.find_point(q.child_blowup, tree.points[a].chart, tree.points[a].coord.conj());
      if (match < 0) throw Error(ErrorCode::InvalidArgument, "reduction tree is not conjugation-symmetric");
      tree.points[a].conjugate = match;
    }
  }
}

}  // namespace

ReductionTree reduce_singularities(const FoliationGerm& F, const ReductionOptions& options) {
  ReductionTree tree;
  tree.root_germ = F.at_origin();
  require_isolated(tree.root_germ);
  TreePoint root;
  root.germ = tree.root_germ;
  root.cls = classify_singularity(root.germ);
  tree.points.push_back(root);
  for (size_t i = 0; i < tree.points.size(); ++i) {
    if (needs_blowup(tree, tree.points[i])) perform_blowup(tree, static_cast<int>(i), options);
  }
  build_involution(tree);
  return tree;
}

int component_weight(const ReductionTree& tree, int component) { return tree.components.at(component).weight; }

int component_valence(const ReductionTree& tree, int component) {
  return static_cast<int>(tree.components.at(component).neighbors.size());
}

int relative_weight(const ReductionTree& tree, int q, int component) {
  const DivisorComponent& c = tree.components.at(component);
  if (!tree.in_subtree(q, c.center)) return 0;
  if (c.center == q) return 1;
  int w = 0;
  for (int old : tree.points[c.center].components()) w += relative_weight(tree, q, old);
  return w;
}

int tangency_excess(const ReductionTree& tree, int q, bool real_only) {
  if (tree.points.at(q).is_final()) return 0;
  int tau = 0;
  for (int r : tree.tangent_saddle_nodes()) {
    if (r == q || !tree.in_subtree(q, r)) continue;
    if (real_only && !tree.points[r].is_real()) continue;
    tau += relative_weight(tree, q, *tree.weak_component(r)) * (tree.points[r].cls.weak_index - 1);
  }
  return tau;
}

namespace {

struct LocalCurve {
  BiPoly f;
  int jet;
};

void follow_equation(const ReductionTree& tree, int point, int b, ChartKind chart, const FieldElement& coord,
                     const LocalCurve& curve, int cap, std::vector<CurvePassage>& out) {
  auto nu = curve.f.order();
  if (!nu || *nu > curve.jet)
    throw Error(ErrorCode::TruncationExhausted, "strict transform of the curve vanishes up to its exact jet");
  CurvePassage pass;
  pass.point = point;
  pass.blowup = b;
  pass.chart = chart;
  pass.coord = coord;
  pass.nu = *nu;
  pass.center = point >= 0 && !tree.points[point].is_final();
  out.push_back(pass);
  if (!pass.center || *nu == 0) return;
  int nb = tree.points[point].child_blowup;
  int jet = child_jet(curve.jet, *nu);
  auto chart_eq = [&](const BiPoly& g) {
    BiPoly h = chart_map(g, *nu, FoliationGerm::kExactJet);
    bool truncated = false;
    int keep = capped_jet(h, h, jet, cap, truncated);
    return LocalCurve{truncated ? h.truncated(keep) : h, keep};
  };
  LocalCurve cu = chart_eq(curve.f), cv = chart_eq(curve.f.swapped());
  for (const auto& c : roots(cu.f.restrict_x0())) {
    LocalCurve g{cu.f.translated(FieldElement(), c), cu.jet};
    follow_equation(tree, tree.find_point(nb, ChartKind::U, c), nb, ChartKind::U, c, g, cap, out);
  }
  if (cv.f.coeff(0, 0).is_zero())
    follow_equation(tree, tree.find_point(nb, ChartKind::V, FieldElement()), nb, ChartKind::V, FieldElement(), cv, cap,
                    out);
}

void follow_param(const ReductionTree& tree, int point, int b, ChartKind chart, const FieldElement& coord,
                  const PuiseuxParam& g, std::vector<CurvePassage>& out) {
  CurvePassage pass;
  pass.point = point;
  pass.blowup = b;
  pass.chart = chart;
  pass.coord = coord;
  pass.nu = g.multiplicity();
  pass.center = point >= 0 && !tree.points[point].is_final();
  pass.local = g;
  out.push_back(pass);
  if (!pass.center) return;
  int nb = tree.points[point].child_blowup;
  int ox = g.x.valuation_bound(), oy = g.y.valuation_bound();
  if (ox <= g.x.precision() && ox <= oy) {
    TruncSeries u = divide(g.y, g.x);
    FieldElement c = u.coeff(0);
    PuiseuxParam lifted{g.x, u - TruncSeries::constant(c)};
    follow_param(tree, tree.find_point(nb, ChartKind::U, c), nb, ChartKind::U, c, lifted, out);
  } else {
    if (oy > g.y.precision()) throw Error(ErrorCode::TruncationExhausted, "branch vanishes up to its guaranteed order");
    PuiseuxParam lifted{g.y, divide(g.x, g.y)};
    follow_param(tree, tree.find_point(nb, ChartKind::V, FieldElement()), nb, ChartKind::V, FieldElement(), lifted, out);
  }
}

}  // namespace

std::vector<CurvePassage> strict_transform_curve(const ReductionTree& tree, const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero curve");
  std::vector<CurvePassage> out;
  if (!f.coeff(0, 0).is_zero()) return out;
  follow_equation(tree, 0, -1, ChartKind::Root, FieldElement(), {f, FoliationGerm::kExactJet}, 64, out);
  return out;
}

std::vector<CurvePassage> strict_transform_curve(const ReductionTree& tree, const PuiseuxParam& gamma) {
  std::vector<CurvePassage> out;
  follow_param(tree, 0, -1, ChartKind::Root, FieldElement(), gamma, out);
  return out;
}

std::string export_dot(const ReductionTree& tree, const PointAnnotator& annotate) {
  std::ostringstream os;
  os << "graph reduction {\n";
  for (const auto& c : tree.components) {
    os << "  D" << c.id + 1 << " [label=\"D" << c.id + 1 << " \xCF\x81=" << c.weight << " val=" << c.neighbors.size()
       << (c.dicritical ? " dicritical" : "") << "\"];\n";
  }
  for (const auto& c : tree.components)
    for (int n : c.neighbors)
      if (n > c.id) os << "  D" << c.id + 1 << " -- D" << n + 1 << ";\n";
  for (int id : tree.final_singularities()) {
    const TreePoint& p = tree.points[id];
    os << "  q" << id << " [shape=box, label=\"q" << id << " " << tag_name(p.cls.tag);
    if (p.cls.tag == SingularityTag::SaddleNode) os << " \xCE\xB9=" << p.cls.weak_index;
    if (tree.symmetric) os << (p.is_real() ? " real" : " conj q" + std::to_string(p.conjugate));
    if (annotate) {
      std::string extra = annotate(id);
      if (!extra.empty()) os << " " << extra;
    }
    os << "\"];\n";
    for (int c : p.components()) os << "  q" << id << " -- D" << c + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace foliasep
