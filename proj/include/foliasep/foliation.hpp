#pragma once

#include <array>
#include <optional>
#include <string>

#include "foliasep/algebra.hpp"
#include "foliasep/bipoly.hpp"
#include "foliasep/series.hpp"

namespace foliasep {

enum class Orientation { VectorField, DualForm };

// X = P d/dx + Q d/dy, dual form w = P dy - Q dx, based at (base_x, base_y).
// Terms of total degree <= jet_order are exact; strict transforms deep in a
// reduction tree are stored truncated.
struct FoliationGerm {
  static constexpr int kExactJet = 1 << 24;

  BiPoly P;
  BiPoly Q;
  FieldElement base_x;
  FieldElement base_y;
  Orientation orientation = Orientation::VectorField;
  int jet_order = kExactJet;

  FoliationGerm() = default;
  FoliationGerm(BiPoly p, BiPoly q) : P(std::move(p)), Q(std::move(q)) {}
  // From w = A dx + B dy: P = B, Q = -A.
  static FoliationGerm from_form(const BiPoly& A, const BiPoly& B);

  // Same germ with the base point moved to the origin.
  FoliationGerm at_origin() const;
  FoliationGerm conj() const;
  FoliationGerm radical_conj() const;
  bool is_singular() const;  // at the origin
  bool is_radial() const;    // xQ - yP == 0
  bool is_real() const;      // fixed by conjugation
  FoliationGerm linear_change(const Matrix2& m) const;  // conjugate by (x,y) = M (s,t)
  long radicand() const;
  bool is_exact() const { return jet_order >= kExactJet; }
  // Throws TruncationExhausted unless terms up to degree k are exact.
  void require_jet(int k, const std::string& what) const;
  std::string to_string() const;
};

enum class SingularityTag { Regular, NonDegenerateSimple, SaddleNode, NonSimple };
std::string tag_name(SingularityTag t);

struct SingularityClass {
  SingularityTag tag = SingularityTag::Regular;
  // Linear part data (all singular cases).
  FieldElement trace;
  FieldElement determinant;
  // Eigenvalues when they could be certified in the tower.
  std::optional<std::array<FieldElement, 2>> eigenvalues;
  // lambda1/lambda2 when it is rational.
  std::optional<BigRational> rational_ratio;
  // Saddle-node data.
  FieldElement strong_eigenvalue;
  std::array<FieldElement, 2> strong_direction;
  std::array<FieldElement, 2> weak_direction;
  int weak_index = 0;
  // Leading coefficient of the field restricted to the center manifold.
  FieldElement center_leading;

  bool is_simple() const { return tag == SingularityTag::NonDegenerateSimple || tag == SingularityTag::SaddleNode; }
  bool is_singular() const { return tag != SingularityTag::Regular; }
};

int algebraic_multiplicity(const FoliationGerm& F);

// Local intersection number (P, Q)_0 via shear + resultant.
int milnor_number(const FoliationGerm& F);
// Independent dimension count in jet spaces.
int milnor_oracle(const FoliationGerm& F, int bound);

// Throws NotIsolated when gcd(P, Q) is not constant.
void require_isolated(const FoliationGerm& F);

SingularityClass classify_singularity(const FoliationGerm& F);

struct WeakIndexResult {
  int index;
  FieldElement leading;  // coefficient of s^index in the restricted field
  TruncSeries center_manifold;
};
WeakIndexResult weak_index_data(const FoliationGerm& F);
int weak_index(const FoliationGerm& F);

bool is_invariant(const FoliationGerm& F, const BiPoly& f);
bool is_invariant(const FoliationGerm& F, const PuiseuxParam& gamma);
// (P o g) y' - (Q o g) x'
TruncSeries invariance_residual(const FoliationGerm& F, const PuiseuxParam& gamma);

// Formal graph t = phi(s), phi(0) = 0, invariant for s' = S, t' = T, solved to order n.
// Regular case: S(0,0) != 0. Singular case: S, T vanish at 0 and S has no linear t term;
// phi'(0) is forced by the linear part. Throws NotSimple on a resonance.
// Only terms of degree <= jet of S, T are trusted; the result has precision min(n, jet).
TruncSeries invariant_graph(const BiPoly& S, const BiPoly& T, int n, int jet = FoliationGerm::kExactJet);

}  // namespace foliasep
