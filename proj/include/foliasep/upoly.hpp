#pragma once

#include <string>
#include <vector>

#include "foliasep/field.hpp"

namespace foliasep {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElement> coeffs);
  UPoly(const FieldElement& constant);  // NOLINT(google-explicit-constructor)
  static UPoly monomial(const FieldElement& c, int degree);
  static UPoly variable() { return monomial(FieldElement(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int k) const;
  FieldElement leading() const;
  // Order of vanishing at 0; -1 for the zero polynomial.
  int order() const;

  FieldElement eval(const FieldElement& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly conj() const;
  UPoly radical_conj() const;
  // p(x + a)
  UPoly shifted(const FieldElement& a) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<FieldElement> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0
UPoly squarefree_part(const UPoly& p);

// All distinct roots of p in Q(i)(sqrt d) for some d (possibly different per root).
// Roots are located numerically and then certified exactly; a root that cannot be
// certified in a supported field raises UnsupportedExtension naming p.
std::vector<FieldElement> roots(const UPoly& p);

// Roots of p lying in the field of p's own coefficients (no tower growth).
std::vector<FieldElement> roots_in_tower(const UPoly& p);

// Determinant by Gaussian elimination over the field.
FieldElement determinant(std::vector<std::vector<FieldElement>> m);

// Sylvester resultant with formal degrees da >= deg a, db >= deg b.
FieldElement resultant(const UPoly& a, const UPoly& b, int da, int db);

// Interpolating polynomial through (xs[k], ys[k]).
UPoly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys);

}  // namespace foliasep
