#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliasep/polar.hpp"
#include "foliasep/separatrix.hpp"

namespace foliasep {

// Coefficient-wise complex conjugation.
inline BiPoly conjugate(const BiPoly& f) { return f.conj(); }
inline FoliationGerm conjugate(const FoliationGerm& F) { return F.conj(); }
inline PuiseuxParam conjugate(const PuiseuxParam& g) { return g.conj(); }
inline Separatrix conjugate(const Separatrix& s) { return s.conj(); }
// Image of a component under the tree involution.
int conjugate_component(const ReductionTree& tree, int component);

enum class TopologicalType { TopologicalSaddleNode, Saddle, Node, SaddleOrNode, Focus, Unknown };
std::string topological_type_name(TopologicalType t);

// Even weak index: topological saddle-node. Odd: sign rule on (center leading coefficient) x (strong eigenvalue)
// when refine is set, else SaddleOrNode.
TopologicalType topological_type_saddle_node(const FoliationGerm& germ, bool refine = true);
// Any simple singularity with real data.
TopologicalType topological_type(const FoliationGerm& germ, bool refine = true);

enum class TriState { Yes, No, Unknown };
std::string tristate_name(TriState t);

struct ClassFlags {
  bool generalized_curve = false;       // complex: no saddle-node in the reduction
  bool second_type = false;             // complex: no tangent saddle-node
  bool real_generalized_curve = false;  // no saddle-node at a real point
  bool topological_rgc = false;         // no real topological saddle-node
  bool real_second_type = false;        // no real tangent saddle-node
  bool topological_st = false;          // no real tangent topological saddle-node
  TriState center_focus = TriState::Unknown;
  std::vector<std::string> notes;
};

ClassFlags foliation_class(const ReductionTree& tree, bool refine = true);

enum class Verdict { SeparatrixExists, NoConclusion };
enum class CitedResult { TheoremA, TheoremB, ParityProposition, None };
std::string verdict_name(Verdict v);
std::string cited_name(CitedResult c);

struct Certificate {
  ClassFlags flags;
  int nu0 = 0, mu0 = 0, tau_real = 0, tau_complex = 0;
  Verdict verdict = Verdict::NoConclusion;
  CitedResult cited = CitedResult::None;
  std::optional<Separatrix> witness;
  int witness_residual_order = 0;  // order to which the invariance residual is known to vanish
  bool witness_valid = false;
  bool real_separatrix_exists = false;  // some real member in the enumeration
  std::vector<std::string> log;
};

Certificate certify_separatrix(const FoliationGerm& F, bool refine = true);
Certificate certify_separatrix(const ReductionTree& tree, const SeparatrixDivisor& B, int mu0, int N,
                               bool refine = true);

struct ParityReport {
  int nu_B_real = 0, nu_B_complex = 0;
  int tau_real = 0, tau_complex = 0;
  std::optional<int> p0_complex;
  std::optional<int> p0_real_mod2;          // along real members, with the full polar
  std::optional<int> tau_along_real_polar_mod2;
  bool nu_congruence = false, tau_congruence = false, polar_congruence = false, real_polar_formula = false;
  bool trgc_tau_even = true;  // tau_real even whenever the field is topologically RGC
  bool holds = false;
};

ParityReport check_parities(const FoliationGerm& F, int seed = 0);
ParityReport check_parities(const ReductionTree& tree, const SeparatrixDivisor& B, int mu0, int seed = 0);

}  // namespace foliasep
