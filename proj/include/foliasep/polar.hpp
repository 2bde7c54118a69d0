#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliasep/blowup.hpp"
#include "foliasep/separatrix.hpp"

namespace foliasep {

struct PolarCertificate {
  bool squarefree = false;
  bool no_invariant_component = false;
  bool order_matches = false;
  bool samples_consistent = false;

  bool complete() const { return squarefree && no_invariant_component && order_matches && samples_consistent; }
};

struct PolarSample {
  BigRational a, b;
  std::string rejection;  // empty when the sample passed the local checks
  std::optional<int> p0;
};

struct PolarCurve {
  BigRational a, b;
  BiPoly equation;  // aP - bQ
  PolarCertificate certificate;
  std::vector<PolarSample> samples;  // every sample drawn, in order
  std::vector<std::string> warnings;
  int p0 = 0;
};

using ProjectivePair = std::pair<BigRational, BigRational>;

// k-th entry of the deterministic sample sequence for a seed; heights grow with k.
ProjectivePair polar_sample(int seed, int k);

inline BiPoly polar_equation(const FoliationGerm& F, const BigRational& a, const BigRational& b) {
  return F.P * BiPoly(FieldElement(a)) - F.Q * BiPoly(FieldElement(b));
}

// Squarefree, non-invariant and order checks for one (a:b); returns the failure reason or "".
std::string check_polar_sample(const FoliationGerm& F, const BigRational& a, const BigRational& b,
                               PolarCertificate& cert);

constexpr int kPolarSampleLimit = 16;
constexpr int kPolarConsistentSamples = 3;

// Certified generic polar; p0 is taken along B.
PolarCurve polar_curve(const FoliationGerm& F, const SeparatrixDivisor& B, std::optional<ProjectivePair> hint = {},
                       int seed = 0);

// ord_t of (P o g) y' - (Q o g) x'.
int tangency_order(const FoliationGerm& F, const PuiseuxParam& gamma);

// Sum of a_B ord_t f(gamma_B).
int intersection_number(const SeparatrixDivisor& B, const BiPoly& f);
int polar_intersection(const SeparatrixDivisor& B, const PolarCurve& polar);

// Sum of tau_q nu_q over infinitely near points of the curve inside the tree.
int tangency_excess_along(const ReductionTree& tree, const PuiseuxParam& gamma, bool real_only = false);
int tangency_excess_along(const ReductionTree& tree, const BiPoly& f, bool real_only = false);

// Leaf through a regular point, as a graph over the transverse axis.
PuiseuxParam regular_leaf(const FoliationGerm& F, int N);

struct TestBranch {
  PuiseuxParam gamma;  // exact
  BiPoly equation;
};

// Random non-invariant branch through 0 (smooth or cuspidal), steered towards tree points.
TestBranch random_branch(const ReductionTree& tree, unsigned seed);

struct BranchCheck {
  TestBranch branch;
  int nu_gamma = 0;
  // one blow-up formula
  int tg0 = 0, m = 0, tg_q = 0;
  bool blowup_formula = false;
  // intersection with a balanced divisor adapted to the branch
  int B_gamma = 0, tau_along = 0;
  bool intersection_formula = false;
  std::vector<int> kappa_steps;  // tau_q nu_q per infinitely near point
  int kappa0 = 0;
  // the same with the default divisor: defect at the exit point on a dicritical component
  int B_gamma_default = 0;
  int exit_defect = 0;
};

BranchCheck check_branch(const ReductionTree& tree, const std::vector<Separatrix>& isolated,
                         const SeparatrixDivisor& B, const TestBranch& branch, int N);

struct IdentityCheck {
  std::string name;
  long lhs = 0, rhs = 0;
  bool holds = false;
  std::string route;
};

struct PolarReport {
  int mu0 = 0, nu0 = 0, tau0 = 0;
  bool polar_applicable = true;  // false for the radial foliation
  PolarCurve polar;
  int tau_along_polar = 0;
  IdentityCheck polar_identity;
  std::vector<BranchCheck> branches;
  bool all_hold = false;
};

PolarReport check_polar_identities(const FoliationGerm& F, int branch_count = 5, int seed = 0,
                                   std::optional<ProjectivePair> hint = {});
PolarReport check_polar_identities(const ReductionTree& tree, const std::vector<Separatrix>& isolated,
                                   const SeparatrixDivisor& B, int mu0, int N, int branch_count, int seed,
                                   std::optional<ProjectivePair> hint = {});

}  // namespace foliasep
