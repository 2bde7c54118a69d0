#include "foliasep/field.hpp"

#include <ostream>
#include <sstream>

#include "foliasep/errors.hpp"

namespace foliasep {

std::string rational_to_string(const BigRational& q) { return q.get_str(); }

BigInteger squarefree_part(const BigInteger& n) {
  BigInteger m = abs(n);
  BigInteger result = 1;
  for (BigInteger p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  result *= m;
  return sgn(n) < 0 ? BigInteger(-result) : result;
}

namespace {

// Gaussian rational helper: a + b i.
struct Gauss {
  BigRational a, b;
  Gauss operator+(const Gauss& o) const { return {a + o.a, b + o.b}; }
  Gauss operator-(const Gauss& o) const { return {a - o.a, b - o.b}; }
  Gauss operator*(const Gauss& o) const { return {a * o.a - b * o.b, a * o.b + b * o.a}; }
  Gauss scaled(const BigRational& k) const { return {a * k, b * k}; }
  bool zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  Gauss inverse() const {
    BigRational n = a * a + b * b;
    return {a / n, -b / n};
  }
};

}  // namespace

FieldElement FieldElement::gaussian(const BigRational& re, const BigRational& im) {
  FieldElement r;
  r.re_ = re;
  r.im_ = im;
  r.normalize();
  return r;
}

FieldElement FieldElement::extension(const BigRational& re, const BigRational& im,
                                     const BigRational& rad_re, const BigRational& rad_im, long d) {
  if (d != 0 && (d < 2 || squarefree_part(d) != d)) {
    throw Error(ErrorCode::InvalidArgument, "radicand must be a squarefree integer > 1, got " + std::to_string(d));
  }
  FieldElement r;
  r.re_ = re;
  r.im_ = im;
  r.rad_re_ = rad_re;
  r.rad_im_ = rad_im;
  r.d_ = d;
  r.normalize();
  return r;
}

FieldElement FieldElement::sqrt_rational(const BigRational& n) {
  if (sgn(n) == 0) return FieldElement();
  BigRational a = abs(n);
  // sqrt(p/q) = sqrt(p q) / q
  BigInteger pq = a.get_num() * a.get_den();
  BigInteger sf = squarefree_part(pq);
  BigInteger sq = pq / sf;
  BigInteger root = sqrt(sq);
  BigRational scale(root, a.get_den());
  scale.canonicalize();
  bool negative = sgn(n) < 0;
  if (sf == 1) {
    return negative ? gaussian(0, scale) : FieldElement(scale);
  }
  if (!sf.fits_slong_p()) throw Error(ErrorCode::UnsupportedExtension, "radicand too large");
  long d = sf.get_si();
  return negative ? extension(0, 0, 0, scale, d) : extension(0, 0, scale, 0, d);
}

TowerTag FieldElement::tag() const {
  if (d_ != 0) return TowerTag::Extension;
  if (sgn(im_) != 0) return TowerTag::Gaussian;
  return TowerTag::Rational;
}

void FieldElement::normalize() {
  re_.canonicalize();
  im_.canonicalize();
  rad_re_.canonicalize();
  rad_im_.canonicalize();
  if (sgn(rad_re_) == 0 && sgn(rad_im_) == 0) d_ = 0;
  if (d_ == 0) {
    rad_re_ = 0;
    rad_im_ = 0;
  }
}

long FieldElement::common_radicand(const FieldElement& a, const FieldElement& b) {
  if (a.d_ == b.d_) return a.d_;
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0) return a.d_;
  throw Error(ErrorCode::UnsupportedExtension,
              "nested extension required: x^2-" + std::to_string(a.d_) + " and x^2-" + std::to_string(b.d_));
}

FieldElement FieldElement::conj() const {
  FieldElement r = *this;
  r.im_ = -im_;
  r.rad_im_ = -rad_im_;
  return r;
}

FieldElement FieldElement::radical_conj() const {
  FieldElement r = *this;
  r.rad_re_ = -rad_re_;
  r.rad_im_ = -rad_im_;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.re_ = -re_;
  r.im_ = -im_;
  r.rad_re_ = -rad_re_;
  r.rad_im_ = -rad_im_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  long d = common_radicand(*this, o);
  re_ += o.re_;
  im_ += o.im_;
  rad_re_ += o.rad_re_;
  rad_im_ += o.rad_im_;
  d_ = d;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  long d = common_radicand(*this, o);
  Gauss a1{re_, im_}, b1{rad_re_, rad_im_};
  Gauss a2{o.re_, o.im_}, b2{o.rad_re_, o.rad_im_};
  Gauss a = a1 * a2 + (b1 * b2).scaled(BigRational(d));
  Gauss b = a1 * b2 + b1 * a2;
  re_ = a.a;
  im_ = a.b;
  rad_re_ = b.a;
  rad_im_ = b.b;
  d_ = d;
  normalize();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in field");
  Gauss a{re_, im_}, b{rad_re_, rad_im_};
  // (a + b s)^{-1} = (a - b s) / (a^2 - b^2 d)
  Gauss n = a * a - (b * b).scaled(BigRational(d_));
  Gauss ni = n.inverse();
  Gauss ra = a * ni;
  Gauss rb = (b * ni).scaled(BigRational(-1));
  FieldElement r;
  r.re_ = ra.a;
  r.im_ = ra.b;
  r.rad_re_ = rb.a;
  r.rad_im_ = rb.b;
  r.d_ = d_;
  r.normalize();
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.d_ == b.d_ && a.re_ == b.re_ && a.im_ == b.im_ && a.rad_re_ == b.rad_re_ && a.rad_im_ == b.rad_im_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  if (a.d_ != b.d_) return a.d_ < b.d_;
  if (a.re_ != b.re_) return a.re_ < b.re_;
  if (a.im_ != b.im_) return a.im_ < b.im_;
  if (a.rad_re_ != b.rad_re_) return a.rad_re_ < b.rad_re_;
  return a.rad_im_ < b.rad_im_;
}

int FieldElement::sign() const {
  if (!is_real()) throw Error(ErrorCode::NotReal, "sign of non-real element " + to_string());
  int sa = sgn(re_);
  int sc = sgn(rad_re_);
  if (sc == 0) return sa;
  if (sa == 0 || sa == sc) return sc;
  // opposite signs: compare re^2 with rad_re^2 * d
  BigRational lhs = re_ * re_;
  BigRational rhs = rad_re_ * rad_re_ * BigRational(d_);
  return lhs > rhs ? sa : sc;
}

std::complex<long double> FieldElement::to_complex() const {
  long double s = d_ == 0 ? 0.0L : std::sqrt(static_cast<long double>(d_));
  long double a = re_.get_d() + rad_re_.get_d() * s;
  long double b = im_.get_d() + rad_im_.get_d() * s;
  return {a, b};
}

namespace {

void append_term(std::string& out, const BigRational& coef, const std::string& unit) {
  if (sgn(coef) == 0) return;
  std::string body;
  BigRational mag = abs(coef);
  if (unit.empty()) {
    body = rational_to_string(mag);
  } else if (mag == 1) {
    body = unit;
  } else {
    body = rational_to_string(mag) + "*" + unit;
  }
  if (out.empty()) {
    out = (sgn(coef) < 0 ? "-" : "") + body;
  } else {
    out += (sgn(coef) < 0 ? " - " : " + ") + body;
  }
}

}  // namespace

std::string FieldElement::to_string() const {
  std::string out;
  append_term(out, re_, "");
  append_term(out, im_, "i");
  if (d_ != 0) {
    std::string s = "sqrt(" + std::to_string(d_) + ")";
    append_term(out, rad_re_, s);
    append_term(out, rad_im_, "i*" + s);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& v) { return os << v.to_string(); }

}  // namespace foliasep
