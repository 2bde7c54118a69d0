#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "foliasep/field.hpp"
#include "foliasep/upoly.hpp"

namespace foliasep {

using Exponent = std::pair<int, int>;  // (power of x, power of y)

// Sparse polynomial in x, y. No zero coefficient is ever stored.
class BiPoly {
public:
  BiPoly() = default;
  BiPoly(const FieldElement& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(long constant) : BiPoly(FieldElement(constant)) {}  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const FieldElement& c, int i, int j);
  static BiPoly x() { return monomial(FieldElement(1), 1, 0); }
  static BiPoly y() { return monomial(FieldElement(1), 0, 1); }
  // p(x) embedded as a polynomial in x (or y).
  static BiPoly from_x(const UPoly& p);
  static BiPoly from_y(const UPoly& p);

  const std::map<Exponent, FieldElement>& terms() const { return terms_; }
  FieldElement coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // min{i+j : coefficient nonzero}; nullopt for the zero polynomial.
  std::optional<int> order() const;
  int total_degree() const;  // -1 for zero
  int degree_x() const;
  int degree_y() const;

  BiPoly homogeneous_part(int k) const;
  BiPoly dx() const;
  BiPoly dy() const;
  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  // p(X(x,y), Y(x,y))
  BiPoly compose(const BiPoly& X, const BiPoly& Y) const;
  BiPoly translated(const FieldElement& a, const FieldElement& b) const;  // p(x+a, y+b)
  BiPoly swapped() const;                                                  // p(y, x)
  BiPoly divided_by_x_power(int k) const;  // exact; throws if not divisible
  BiPoly divided_by_y_power(int k) const;
  BiPoly conj() const;
  BiPoly radical_conj() const;
  BiPoly scaled(const FieldElement& c) const;
  BiPoly truncated(int max_total_degree) const;

  UPoly restrict_x0() const;  // p(0, y) as polynomial in y
  UPoly restrict_y0() const;  // p(x, 0) as polynomial in x
  // Coefficients of p viewed as a polynomial in y with coefficients in K[x].
  std::vector<UPoly> coefficients_in_y() const;
  static BiPoly from_coefficients_in_y(const std::vector<UPoly>& c);

  // Largest radicand among the coefficients (0 if all in Q(i)).
  long radicand() const;
  bool is_gaussian() const;
  bool is_rational() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  BiPoly pow(int e) const;

  // Parseable text, highest total degree first.
  std::string to_string() const;

private:
  void add_term(const Exponent& e, const FieldElement& c);
  std::map<Exponent, FieldElement> terms_;
};

std::optional<int> poly_order(const BiPoly& p);

}  // namespace foliasep
