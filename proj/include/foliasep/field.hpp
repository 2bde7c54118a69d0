#pragma once

// Exact scalars: Q, Q(i) and one quadratic level Q(i)(sqrt d).

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace foliasep {

using BigInteger = mpz_class;
using BigRational = mpq_class;

std::string rational_to_string(const BigRational& q);

// Squarefree part of a nonzero integer, keeping the sign.
BigInteger squarefree_part(const BigInteger& n);

enum class TowerTag { Rational, Gaussian, Extension };

// re + im*i + (rad_re + rad_im*i)*sqrt(d), with d a squarefree integer > 1,
// embedded with sqrt(d) > 0. d == 0 marks an element of Q(i).
//
// Elements of Q(i)(sqrt d1) and Q(i)(sqrt d2) with d1 != d2 only mix when one
// of them has no radical part; anything else throws UnsupportedExtension.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const BigRational& value) : re_(value) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)

  static FieldElement gaussian(const BigRational& re, const BigRational& im);
  static FieldElement extension(const BigRational& re, const BigRational& im,
                                const BigRational& rad_re, const BigRational& rad_im, long d);
  static FieldElement imaginary_unit() { return gaussian(0, 1); }
  // sqrt(n) for a nonzero rational n; perfect squares stay in Q(i).
  static FieldElement sqrt_rational(const BigRational& n);

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }
  const BigRational& rad_re() const { return rad_re_; }
  const BigRational& rad_im() const { return rad_im_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0 && d_ == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0 && d_ == 0; }
  bool is_rational() const { return sgn(im_) == 0 && d_ == 0; }
  bool is_gaussian() const { return d_ == 0; }
  // Fixed by complex conjugation.
  bool is_real() const { return sgn(im_) == 0 && sgn(rad_im_) == 0; }
  TowerTag tag() const;

  // Complex conjugation: i -> -i, sqrt(d) -> sqrt(d).
  FieldElement conj() const;
  // The other Galois automorphism over Q(i): sqrt(d) -> -sqrt(d).
  FieldElement radical_conj() const;

  FieldElement inverse() const;
  // Sign of a real element (is_real() must hold).
  int sign() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Total order used only for canonical sorting of data (not a field order).
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

  std::complex<long double> to_complex() const;
  std::string to_string() const;

private:
  void normalize();
  static long common_radicand(const FieldElement& a, const FieldElement& b);

  BigRational re_, im_, rad_re_, rad_im_;
  long d_ = 0;
};

bool canonical_less(const FieldElement& a, const FieldElement& b);
std::ostream& operator<<(std::ostream& os, const FieldElement& v);

}  // namespace foliasep
