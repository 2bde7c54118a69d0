#pragma once

#include <string>
#include <vector>

#include "foliasep/blowup.hpp"
#include "foliasep/foliation.hpp"
#include "foliasep/series.hpp"

namespace foliasep {

enum class SeparatrixKind { Isolated, Dicritical };
enum class Reality { Real, PurelyComplex, Unknown };
enum class Convergence { ConvergentCertified, FormalOnly };

std::string kind_name(SeparatrixKind k);
std::string reality_name(Reality r);
std::string convergence_name(Convergence c);

struct Separatrix {
  int id = -1;
  PuiseuxParam param;  // at the base point
  SeparatrixKind kind = SeparatrixKind::Isolated;
  int source_point = -1;      // tree point (isolated) or attachment point (-1 if unrecorded)
  int component = -1;         // dicritical component of a curvette
  ChartKind attachment_chart = ChartKind::U;
  FieldElement attachment;    // chart coordinate of a curvette on its component
  std::string role;           // "transverse", "weak", "strong", "eigen", "curvette"
  Convergence convergence = Convergence::ConvergentCertified;
  Reality reality = Reality::Unknown;
  int partner = -1;

  int multiplicity() const { return param.multiplicity(); }
  int precision() const { return param.precision(); }
  Separatrix conj() const;
};

struct SeparatrixDivisor {
  std::vector<Separatrix> members;
  std::vector<int> coefficients;
  bool balanced = false;
  bool j_symmetric = false;

  // Members tagged real, same coefficients.
  SeparatrixDivisor real_part() const;
};

enum class CurveChoice { Strong, Weak, Eigen1, Eigen2 };

struct LocalInvariantCurve {
  TruncSeries graph;    // t = phi(s) in normalized axes
  Matrix2 axes;         // (x, y) = axes * (s, t)
  PuiseuxParam param;   // in the germ's coordinates
};

// Invariant curve of a simple germ tangent to the chosen direction.
LocalInvariantCurve local_invariant_curve(const FoliationGerm& germ, CurveChoice which, int N);

// One isolated separatrix per final trace singularity (two for a simple base point),
// pushed down with guaranteed order >= N.
std::vector<Separatrix> enumerate_separatrices(const ReductionTree& tree, int N);

// Leaf through the regular transverse point u = coord of dicritical component c.
Separatrix dicritical_curvette(const ReductionTree& tree, int component, const FieldElement& coord, int N);
Separatrix dicritical_curvette(const ReductionTree& tree, int component, ChartKind chart, const FieldElement& coord,
                               int N);

struct CurvetteSite {
  int component = -1;
  ChartKind chart = ChartKind::U;
  FieldElement coord;
};

// Balanced divisor: isolated separatrices with coefficient 1 and |2 - val(D)| curvettes
// of sign sgn(2 - val(D)) on each dicritical D.
SeparatrixDivisor balanced_divisor(const ReductionTree& tree, bool j_symmetric, int N);
// Sites in `required` get a +1 curvette; the rest of each dicritical sum is filled elsewhere.
SeparatrixDivisor balanced_divisor(const ReductionTree& tree, const std::vector<Separatrix>& isolated, bool j_symmetric,
                                   int N, const std::vector<CurvetteSite>& required = {});

// Machine check of the balanced-divisor conditions.
bool is_balanced(const ReductionTree& tree, const SeparatrixDivisor& B);
bool is_j_symmetric(const ReductionTree& tree, const SeparatrixDivisor& B);

int divisor_multiplicity(const SeparatrixDivisor& B);

struct MultiplicityReport {
  int nu0 = 0;
  int nu0_B = 0;
  int tau0 = 0;
  bool holds = false;
  bool second_type = false;   // tau0 == 0
  bool inequality = false;    // nu0(B) <= nu0 + 1, equality iff second type
};

MultiplicityReport check_multiplicity_formula(const FoliationGerm& F);
MultiplicityReport check_multiplicity_formula(const ReductionTree& tree, const SeparatrixDivisor& B);

// Default guaranteed order 2 mu + 4.
int default_separatrix_order(const FoliationGerm& F);

// Graph form y = g(x) of a smooth branch with ord x = 1 (reparametrized); throws otherwise.
TruncSeries graph_normal_form(const PuiseuxParam& gamma);

// Fills reality and partner by comparing conjugate parametrizations.
void classify_reality(std::vector<Separatrix>& seps);

}  // namespace foliasep
