#pragma once

#include <array>
#include <utility>
#include <vector>

#include "foliasep/bipoly.hpp"
#include "foliasep/upoly.hpp"

namespace foliasep {

using Matrix2 = std::array<std::array<FieldElement, 2>, 2>;

// Exact quotient a / b; returns false when b does not divide a.
bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient);
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& b, const BiPoly& a);

// Scaled so that the coefficient of the largest y-power (then x-power) is 1.
BiPoly normalized(const BiPoly& p);

// gcd over K[x,y] by primitive remainder sequences in K[x][y]; normalized.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

struct Factor {
  BiPoly factor;
  int multiplicity;
};

// Squarefree decomposition refined by monomial extraction and splitting of
// quasi-homogeneous factors over the coefficients' own tower.
std::vector<Factor> squarefree_factor(const BiPoly& p);
BiPoly multiply_out(const std::vector<Factor>& factors);
bool is_squarefree(const BiPoly& p);

// Res_y(p, q) as a polynomial in x; p must be y-regular.
UPoly resultant_y(const BiPoly& p, const BiPoly& q);

// p(m00 x + m01 y, m10 x + m11 y)
BiPoly linear_change(const BiPoly& p, const Matrix2& m);
FieldElement det(const Matrix2& m);
Matrix2 inverse(const Matrix2& m);

}  // namespace foliasep
