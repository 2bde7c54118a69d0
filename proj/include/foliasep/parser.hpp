#pragma once

#include <optional>
#include <string>

#include "foliasep/bipoly.hpp"
#include "foliasep/foliation.hpp"

namespace foliasep {

enum class FieldTag { Rational, Gaussian };

struct InputSpec {
  std::string p_text;
  std::string q_text;
  BiPoly P;
  BiPoly Q;
  FieldTag field = FieldTag::Rational;
  std::optional<int> truncation;
  std::optional<std::pair<BigRational, BigRational>> polar_hint;
  int seed = 0;

  FoliationGerm germ() const { return FoliationGerm(P, Q); }
};

// Arithmetic expression in x, y, i with + - * / ^ and parentheses.
BiPoly parse_polynomial(const std::string& text);

// "P = <expr>; Q = <expr>;" (either order). Rejects non-isolated singularities.
InputSpec parse_input(const std::string& text);

// Inverse of parse_input up to whitespace.
std::string print_input(const InputSpec& spec);

}  // namespace foliasep
