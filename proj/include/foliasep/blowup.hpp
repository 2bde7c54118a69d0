#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foliasep/foliation.hpp"
#include "foliasep/series.hpp"

namespace foliasep {

// Root: the base point. U: (s,t) -> (s, s(t + c)). V: (s,t) -> (ts, s).
enum class ChartKind { Root, U, V };
std::string chart_name(ChartKind c);

struct BlowupCharts {
  FoliationGerm chart_u;  // in (s, u), u not translated
  FoliationGerm chart_v;  // in (s, v) with (x, y) = (vs, s)
  bool dicritical = false;
  int nu = 0;
  int m = 0;
};

// Blow-up of the germ at its base point. Chart germs are divided by s^m and
// truncated to jet_cap (exactness is tracked in jet_order).
BlowupCharts blowup(const FoliationGerm& germ, int jet_cap = FoliationGerm::kExactJet);

struct TreePoint {
  int id = 0;
  int parent = -1;  // point whose blow-up created this one
  int blowup = -1;  // that blow-up
  ChartKind chart = ChartKind::Root;
  FieldElement coord;            // u = coord in chart U; v = 0 in chart V
  std::optional<int> comp_s0;    // component on {s = 0}
  std::optional<int> comp_t0;    // component on {t = 0}
  FoliationGerm germ;            // local strict transform, at the origin
  SingularityClass cls;
  bool tangency = false;         // regular, tangent to a dicritical component
  int child_blowup = -1;
  int conjugate = -1;            // -1 when the germ is not conjugation-symmetric
  int depth = 0;

  int component_count() const { return (comp_s0 ? 1 : 0) + (comp_t0 ? 1 : 0); }
  bool is_corner() const { return component_count() == 2; }
  bool is_trace() const { return component_count() == 1; }
  bool is_final() const { return child_blowup < 0; }
  bool is_real() const { return conjugate == id; }
  std::vector<int> components() const;
};

struct DivisorComponent {
  int id = 0;
  int weight = 1;
  bool dicritical = false;
  std::set<int> neighbors;
  int center = 0;  // tree point blown up to create it
  int blowup = 0;
  int conjugate = -1;
};

struct BlowupRecord {
  int center = 0;
  int component = 0;
  int nu = 0;
  int m = 0;
  bool dicritical = false;
  FoliationGerm chart_u;
  FoliationGerm chart_v;
  std::vector<int> points;  // recorded points on the new component
};

struct ReductionOptions {
  int max_depth = 64;
  int jet_cap = 64;
};

struct ReductionTree {
  FoliationGerm root_germ;
  std::vector<TreePoint> points;  // points[0] is the base point
  std::vector<DivisorComponent> components;
  std::vector<BlowupRecord> blowups;
  bool symmetric = false;         // conjugation involution available
  bool dicritical_corner_seen = false;

  const TreePoint& root() const { return points.front(); }
  std::vector<int> final_singularities() const;
  // Final saddle-nodes whose weak separatrix lies in a divisor component.
  std::vector<int> tangent_saddle_nodes() const;
  // Component containing the weak separatrix of a tangent saddle-node, else nullopt.
  std::optional<int> weak_component(int point) const;
  int max_depth() const;
  // Points in the subtree rooted at p (p included).
  std::vector<int> subtree(int p) const;
  bool in_subtree(int p, int q) const;
  // Local germ at an arbitrary point of the component created by blow-up b.
  FoliationGerm germ_on_component(int b, ChartKind chart, const FieldElement& coord) const;
  // Recorded point of blow-up b at (chart, coord), or -1.
  int find_point(int b, ChartKind chart, const FieldElement& coord) const;
  // Image under the blow-down maps from the chart coordinates of blow-up b to the root.
  PuiseuxParam push_down(int b, ChartKind chart, const FieldElement& coord, const PuiseuxParam& local) const;
  PuiseuxParam push_down(int point, const PuiseuxParam& local) const;
};

ReductionTree reduce_singularities(const FoliationGerm& F, const ReductionOptions& options = {});

int component_weight(const ReductionTree& tree, int component);
int component_valence(const ReductionTree& tree, int component);

// Tangency excess of the germ at tree point q, weights restarting at q.
// real_only restricts the sum to conjugation-fixed saddle-nodes.
int tangency_excess(const ReductionTree& tree, int q = 0, bool real_only = false);
// Weight of component c relative to the subtree rooted at q (0 for older components).
int relative_weight(const ReductionTree& tree, int q, int component);

struct CurvePassage {
  int point = -1;      // tree point, or -1 for an unrecorded point of a component
  int blowup = -1;     // blow-up whose component carries the point (-1 at the root)
  ChartKind chart = ChartKind::Root;
  FieldElement coord;
  int nu = 0;          // order of the strict transform there
  bool center = false; // the point is blown up in the tree
  PuiseuxParam local;  // strict transform in chart coordinates (parametrized input only)
};

// Infinitely near points of the curve that lie in the tree, root first.
std::vector<CurvePassage> strict_transform_curve(const ReductionTree& tree, const BiPoly& f);
std::vector<CurvePassage> strict_transform_curve(const ReductionTree& tree, const PuiseuxParam& gamma);

// Extra text for the label of a final singularity, e.g. its topological type.
using PointAnnotator = std::function<std::string(int point)>;
std::string export_dot(const ReductionTree& tree, const PointAnnotator& annotate = {});

}  // namespace foliasep
