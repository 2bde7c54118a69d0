#include "foliasep/upoly.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>
#include <sstream>

#include "foliasep/errors.hpp"

namespace foliasep {

UPoly::UPoly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const FieldElement& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UPoly UPoly::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElement();
  return c_[k];
}

FieldElement UPoly::leading() const { return c_.empty() ? FieldElement() : c_.back(); }

int UPoly::order() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

FieldElement UPoly::eval(const FieldElement& x) const {
  FieldElement acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<FieldElement> v;
  for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * FieldElement(static_cast<long>(k)));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  FieldElement inv = c_.back().inverse();
  std::vector<FieldElement> v;
  for (const auto& c : c_) v.push_back(c * inv);
  return UPoly(std::move(v));
}

UPoly UPoly::conj() const {
  std::vector<FieldElement> v;
  for (const auto& c : c_) v.push_back(c.conj());
  return UPoly(std::move(v));
}

UPoly UPoly::radical_conj() const {
  std::vector<FieldElement> v;
  for (const auto& c : c_) v.push_back(c.radical_conj());
  return UPoly(std::move(v));
}

UPoly UPoly::shifted(const FieldElement& a) const {
  // Horner in terms of (x + a).
  UPoly lin(std::vector<FieldElement>{a, FieldElement(1)});
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
  return acc;
}

UPoly UPoly::operator-() const {
  std::vector<FieldElement> v;
  for (const auto& c : c_) v.push_back(-c);
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<FieldElement> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<FieldElement> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].to_string() << ")";
    if (k > 0) os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<FieldElement> rem = a.coeffs();
  int db = b.degree();
  FieldElement inv = b.leading().inverse();
  std::vector<FieldElement> quo(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    FieldElement f = rem[k] * inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  q = UPoly(std::move(quo));
  rem.resize(std::max(0, db));
  r = UPoly(std::move(rem));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  UPoly q, r;
  divmod(p, g, q, r);
  return q.monic();
}

FieldElement determinant(std::vector<std::vector<FieldElement>> m) {
  const size_t n = m.size();
  FieldElement det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return FieldElement();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    FieldElement inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      FieldElement f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

FieldElement resultant(const UPoly& a, const UPoly& b, int da, int db) {
  const int n = da + db;
  if (n == 0) return FieldElement(1);
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m[r][r + k] = a.coeff(da - k);
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[db + r][r + k] = b.coeff(db - k);
  return determinant(std::move(m));
}

UPoly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys) {
  // Newton divided differences.
  const size_t n = xs.size();
  std::vector<FieldElement> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UPoly result(dd[n - 1]);
  for (size_t k = n - 1; k-- > 0;) {
    result = result * UPoly(std::vector<FieldElement>{-xs[k], FieldElement(1)}) + UPoly(dd[k]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Root location.

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

struct Complex {
  Real re, im;
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Complex operator/(const Complex& o) const {
    Real n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  Real abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

Real to_real(const BigRational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Complex embed(const FieldElement& v, int radical_sign) {
  Real s = v.radicand() == 0 ? Real(0) : boost::multiprecision::sqrt(Real(v.radicand()));
  s *= radical_sign;
  return {to_real(v.re()) + to_real(v.rad_re()) * s, to_real(v.im()) + to_real(v.rad_im()) * s};
}

std::vector<Complex> numeric_roots(const UPoly& p, int radical_sign) {
  const int n = p.degree();
  std::vector<Complex> a;
  for (const auto& c : p.coeffs()) a.push_back(embed(c, radical_sign));
  Complex lead = a.back();
  for (auto& c : a) c = c / lead;
  Real bound = 1;
  for (int k = 0; k < n; ++k) bound = std::max(bound, Real(1) + a[k].abs());
  std::vector<Complex> z(n);
  const Real pi = boost::math::constants::pi<Real>();
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * pi * k / n + Real(0.4);
    z[k] = {bound * 0.7 * boost::multiprecision::cos(ang), bound * 0.7 * boost::multiprecision::sin(ang)};
  }
  auto eval = [&](const Complex& x, Complex& val, Complex& der) {
    val = a[n];
    der = {0, 0};
    for (int k = n - 1; k >= 0; --k) {
      der = der * x + val;
      val = val * x + a[k];
    }
  };
  const Real tol("1e-45");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex val, der;
      eval(z[k], val, der);
      if (val.abs() == 0) continue;
      Complex ratio = val / der;
      Complex sum{0, 0};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        sum = sum + Complex{1, 0} / (z[k] - z[j]);
      }
      Complex w = ratio / (Complex{1, 0} - ratio * sum);
      z[k] = z[k] - w;
      worst = std::max(worst, w.abs());
    }
    if (worst < tol) break;
  }
  return z;
}

std::optional<BigRational> recognize(const Real& x) {
  const Real tol("1e-30");
  Real r = x;
  BigInteger p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int k = 0; k < 60; ++k) {
    Real fl = boost::multiprecision::floor(r);
    if (boost::multiprecision::abs(fl) > Real("1e15")) return std::nullopt;
    BigInteger a(static_cast<long>(fl.convert_to<long long>()));
    BigInteger p2 = a * p1 + p0;
    BigInteger q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 > BigInteger("1000000000000000")) return std::nullopt;
    BigRational cand(p1, q1);
    cand.canonicalize();
    if (boost::multiprecision::abs(x - to_real(cand)) < tol) return cand;
    Real frac = r - fl;
    if (frac == 0) return std::nullopt;
    r = Real(1) / frac;
  }
  return std::nullopt;
}

std::optional<FieldElement> recognize_gaussian(const Complex& z) {
  auto a = recognize(z.re);
  auto b = recognize(z.im);
  if (!a || !b) return std::nullopt;
  return FieldElement::gaussian(*a, *b);
}

long common_radicand(const UPoly& p) {
  long d = 0;
  for (const auto& c : p.coeffs()) {
    if (c.radicand() == 0) continue;
    if (d != 0 && d != c.radicand()) throw Error(ErrorCode::UnsupportedExtension, "mixed radicands in " + p.to_string());
    d = c.radicand();
  }
  return d;
}

}  // namespace

namespace {

// Certified roots of p; `complete` is false when some numeric root could not be certified.
std::vector<FieldElement> locate_roots(const UPoly& p, bool& complete) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  complete = true;
  UPoly f = squarefree_part(p);
  std::vector<FieldElement> out;
  if (f.degree() <= 0) return out;
  const long d = common_radicand(f);
  std::vector<Complex> zs = numeric_roots(f, 1);
  std::vector<Complex> ws;
  if (d != 0) ws = numeric_roots(f.radical_conj(), 1);
  const Real sqrt_d = d == 0 ? Real(0) : boost::multiprecision::sqrt(Real(d));

  auto accept = [&](const FieldElement& r) {
    if (!f.eval(r).is_zero()) return false;
    for (const auto& o : out)
      if (o == r) return true;
    out.push_back(r);
    return true;
  };

  for (size_t j = 0; j < zs.size(); ++j) {
    const Complex& z = zs[j];
    if (auto g = recognize_gaussian(z); g && accept(*g)) continue;
    bool found = false;
    if (d != 0) {
      // r = alpha + beta*sqrt(d) pairs with the root alpha - beta*sqrt(d) of the conjugate polynomial.
      for (const auto& w : ws) {
        Complex alpha{(z.re + w.re) / 2, (z.im + w.im) / 2};
        Complex beta{(z.re - w.re) / (2 * sqrt_d), (z.im - w.im) / (2 * sqrt_d)};
        auto a = recognize_gaussian(alpha);
        auto b = recognize_gaussian(beta);
        if (!a || !b) continue;
        FieldElement r = *a + FieldElement::extension(b->re(), b->im(), 0, 0, 0) * FieldElement::sqrt_rational(d);
        if (accept(r)) {
          found = true;
          break;
        }
      }
    } else {
      // Quadratic factor over Q(i) whose discriminant is rational.
      for (size_t k = 0; k < zs.size() && !found; ++k) {
        if (k == j) continue;
        auto s = recognize_gaussian(zs[j] + zs[k]);
        auto pr = recognize_gaussian(zs[j] * zs[k]);
        if (!s || !pr) continue;
        UPoly quad(std::vector<FieldElement>{*pr, -*s, FieldElement(1)});
        UPoly q, r;
        divmod(f, quad, q, r);
        if (!r.is_zero()) continue;
        FieldElement disc = *s * *s - FieldElement(4) * *pr;
        if (!disc.is_rational()) continue;
        FieldElement root_disc = FieldElement::sqrt_rational(disc.re());
        for (int sign : {1, -1}) {
          FieldElement cand = (*s + FieldElement(sign) * root_disc) / FieldElement(2);
          Complex c = embed(cand, 1);
          if ((c - z).abs() < Real("1e-20") && accept(cand)) {
            found = true;
            break;
          }
        }
      }
    }
    if (!found) complete = false;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<FieldElement> roots(const UPoly& p) {
  bool complete = false;
  auto out = locate_roots(p, complete);
  if (!complete) {
    throw Error(ErrorCode::UnsupportedExtension,
                "minimal polynomial factor of " + squarefree_part(p).to_string("u") +
                    " has roots outside Q(i)(sqrt d)");
  }
  return out;
}

std::vector<FieldElement> roots_in_tower(const UPoly& p) {
  long d = common_radicand(p);
  std::vector<FieldElement> out;
  bool complete = false;
  auto all = locate_roots(p, complete);
  for (const auto& r : all)
    if (r.radicand() == 0 || r.radicand() == d) out.push_back(r);
  return out;
}

}  // namespace foliasep
