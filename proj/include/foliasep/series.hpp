#pragma once

#include <string>
#include <vector>

#include "foliasep/bipoly.hpp"
#include "foliasep/field.hpp"

namespace foliasep {

// Truncated power series in t. Coefficients of index <= precision() are exact;
// nothing is claimed beyond. Exact series (polynomials) use kExactPrecision.
class TruncSeries {
public:
  static constexpr int kExactPrecision = 1 << 24;

  TruncSeries() : prec_(kExactPrecision) {}
  TruncSeries(std::vector<FieldElement> coeffs, int precision);
  static TruncSeries exact(std::vector<FieldElement> coeffs) { return TruncSeries(std::move(coeffs), kExactPrecision); }
  static TruncSeries constant(const FieldElement& c) { return exact({c}); }
  static TruncSeries variable() { return exact({FieldElement(), FieldElement(1)}); }

  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExactPrecision; }
  // Coefficient of t^k; throws TruncationExhausted when k > precision().
  FieldElement coeff(int k) const;
  const std::vector<FieldElement>& stored() const { return c_; }

  // Certified order; throws TruncationExhausted when all known coefficients vanish.
  int ord() const;
  // Lower bound for the order (precision()+1 when all known coefficients vanish).
  int valuation_bound() const;
  bool vanishes_to_precision() const;

  TruncSeries derivative() const;
  TruncSeries conj() const;
  TruncSeries radical_conj() const;
  TruncSeries with_precision(int p) const;
  TruncSeries scaled(const FieldElement& c) const;
  // Divide by t^k; the first k coefficients must vanish.
  TruncSeries shifted_down(int k) const;
  // 1/s for a series with nonzero constant term.
  TruncSeries inverse() const;
  // s(t^k) substitution is not needed; composition t -> c t is.
  TruncSeries rescaled_variable(const FieldElement& c) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // a / b where ord(b) = k and a vanishes to order >= k.
  friend TruncSeries divide(const TruncSeries& a, const TruncSeries& b);
  // Coefficient-wise equality up to the smaller precision.
  friend bool agree(const TruncSeries& a, const TruncSeries& b);

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<FieldElement> c_;
  int prec_;
};

// Parametrized branch (x(t), y(t)) with x(0) = y(0) = 0.
struct PuiseuxParam {
  TruncSeries x;
  TruncSeries y;

  int precision() const { return std::min(x.precision(), y.precision()); }
  // min(ord x, ord y): the multiplicity of the branch.
  int multiplicity() const;
  // gcd of the exponents with nonzero coefficient is 1.
  bool is_reduced() const;
  PuiseuxParam conj() const { return {x.conj(), y.conj()}; }
  PuiseuxParam radical_conj() const { return {x.radical_conj(), y.radical_conj()}; }
  long radicand() const;
};

// Graph-form branch (t, g(t)).
PuiseuxParam graph_param(const TruncSeries& g);

// p(x(t), y(t)) with propagated precision.
TruncSeries substitute_series(const BiPoly& p, const PuiseuxParam& gamma);
TruncSeries substitute_series(const BiPoly& p, const TruncSeries& x, const TruncSeries& y);

}  // namespace foliasep
