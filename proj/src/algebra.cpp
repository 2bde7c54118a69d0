#include "foliasep/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "foliasep/errors.hpp"

namespace foliasep {

namespace {

using YPoly = std::vector<UPoly>;  // K[x][y], index = power of y

void trim(YPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

bool udivide(const UPoly& a, const UPoly& b, UPoly& q) {
  UPoly r;
  divmod(a, b, q, r);
  return r.is_zero();
}

UPoly content(const YPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly primitive(const YPoly& a) {
  UPoly c = content(a);
  if (c.is_zero()) return a;
  YPoly out;
  for (const auto& u : a) {
    UPoly q;
    udivide(u, c, q);
    out.push_back(q);
  }
  trim(out);
  return out;
}

YPoly prem(YPoly r, const YPoly& b) {
  const UPoly& lb = b.back();
  while (!r.empty() && ydeg(r) >= ydeg(b)) {
    int shift = ydeg(r) - ydeg(b);
    UPoly lr = r.back();
    for (auto& c : r) c = c * lb;
    for (int k = 0; k <= ydeg(b); ++k) r[k + shift] = r[k + shift] - lr * b[k];
    trim(r);
  }
  return r;
}

bool ydivide(YPoly r, const YPoly& b, YPoly& q) {
  trim(r);
  q.assign(std::max(ydeg(r) - ydeg(b) + 1, 0), UPoly());
  while (!r.empty()) {
    if (ydeg(r) < ydeg(b)) return false;
    int shift = ydeg(r) - ydeg(b);
    UPoly c;
    if (!udivide(r.back(), b.back(), c)) return false;
    q[shift] = c;
    for (int k = 0; k <= ydeg(b); ++k) r[k + shift] = r[k + shift] - c * b[k];
    trim(r);
  }
  trim(q);
  return true;
}

// Primitive squarefree Yun decomposition in y; index k holds the factor of multiplicity k+1.
std::vector<BiPoly> yun_y(const BiPoly& f) {
  std::vector<BiPoly> out;
  BiPoly fy = f.dy();
  BiPoly a = gcd(f, fy);
  BiPoly b = exact_divide(f, a);
  BiPoly c = exact_divide(fy, a);
  BiPoly d = c - b.dy();
  while (!b.is_constant()) {
    BiPoly g = gcd(b, d);
    out.push_back(g);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.dy();
  }
  return out;
}

std::vector<UPoly> yun_univariate(const UPoly& f) {
  std::vector<UPoly> out;
  if (f.degree() <= 0) return out;
  UPoly fd = f.derivative();
  UPoly a = gcd(f, fd), b, c, r;
  divmod(f, a, b, r);
  divmod(fd, a, c, r);
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    UPoly nb;
    divmod(b, g, nb, r);
    divmod(d, g, c, r);
    b = nb;
    d = c - b.derivative();
  }
  return out;
}

// f with no monomial factor; if its support lies on a segment it splits as
// a product of binomials y^p - s x^q for the roots s found in the tower.
std::vector<BiPoly> split_quasi_homogeneous(const BiPoly& f) {
  const auto& t = f.terms();
  int jmax = f.degree_y(), imax = f.degree_x();
  if (jmax == 0 || imax == 0 || t.size() < 2) return {f};
  int g = std::gcd(jmax, imax);
  int p = jmax / g, q = imax / g;
  // Support must be (k q, (g - k) p) for k = 0..g.
  std::vector<FieldElement> h(g + 1);
  for (const auto& [e, c] : t) {
    if (e.first % q != 0) return {f};
    int k = e.first / q;
    if (e.second != (g - k) * p) return {f};
    h[k] = c;
  }
  // f = sum_k h_k x^{kq} y^{(g-k)p}; with w = y^p / x^q, f/x^{gq} = sum h_k w^{g-k}.
  std::vector<FieldElement> hw(g + 1);
  for (int k = 0; k <= g; ++k) hw[g - k] = h[k];
  std::vector<FieldElement> rts = roots_in_tower(UPoly(hw));
  std::vector<BiPoly> out;
  BiPoly rest = f;
  for (const auto& s : rts) {
    BiPoly bin = BiPoly::monomial(FieldElement(1), 0, p) - BiPoly::monomial(s, q, 0);
    BiPoly quo;
    while (try_divide(rest, bin, quo)) {
      out.push_back(bin);
      rest = quo;
    }
  }
  if (!rest.is_constant()) out.push_back(normalized(rest));
  return out;
}

}  // namespace

bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  YPoly q;
  if (!ydivide(a.coefficients_in_y(), b.coefficients_in_y(), q)) return false;
  quotient = BiPoly::from_coefficients_in_y(q);
  return true;
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  if (!try_divide(a, b, q)) throw Error(ErrorCode::InvalidArgument, "inexact division by " + b.to_string());
  return q;
}

bool divides(const BiPoly& b, const BiPoly& a) {
  BiPoly q;
  return try_divide(a, b, q);
}

BiPoly normalized(const BiPoly& p) {
  if (p.is_zero()) return p;
  int j = p.degree_y();
  FieldElement lead;
  for (const auto& [e, c] : p.terms())
    if (e.second == j) lead = c;  // map order: last hit has the largest x-power
  return p.scaled(lead.inverse());
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  YPoly ya = a.coefficients_in_y(), yb = b.coefficients_in_y();
  UPoly c = gcd(content(ya), content(yb));
  YPoly pa = primitive(ya), pb = primitive(yb);
  if (ydeg(pa) < ydeg(pb)) std::swap(pa, pb);
  YPoly g;
  while (true) {
    if (ydeg(pb) == 0) {
      g = {UPoly(FieldElement(1))};
      break;
    }
    YPoly r = prem(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    pa = pb;
    pb = primitive(r);
  }
  for (auto& u : g) u = u * c;
  return normalized(BiPoly::from_coefficients_in_y(g));
}

std::vector<Factor> squarefree_factor(const BiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree_factor of zero");
  int a = p.degree_x(), b = p.degree_y();
  for (const auto& [e, c] : p.terms()) {
    a = std::min(a, e.first);
    b = std::min(b, e.second);
  }
  std::vector<Factor> out;
  if (a > 0) out.push_back({BiPoly::x(), a});
  if (b > 0) out.push_back({BiPoly::y(), b});
  BiPoly rest = p.divided_by_x_power(a).divided_by_y_power(b);
  if (rest.is_constant()) return out;

  UPoly c = content(rest.coefficients_in_y());
  auto ufactors = yun_univariate(c);
  for (size_t k = 0; k < ufactors.size(); ++k)
    if (ufactors[k].degree() > 0) {
      for (const auto& piece : split_quasi_homogeneous(BiPoly::from_x(ufactors[k].monic())))
        out.push_back({piece, static_cast<int>(k + 1)});
    }
  BiPoly prim = BiPoly::from_coefficients_in_y(primitive(rest.coefficients_in_y()));
  if (prim.degree_y() > 0) {
    auto yf = yun_y(prim);
    for (size_t k = 0; k < yf.size(); ++k) {
      if (yf[k].is_constant()) continue;
      for (const auto& piece : split_quasi_homogeneous(normalized(yf[k])))
        out.push_back({piece, static_cast<int>(k + 1)});
    }
  }
  return out;
}

BiPoly multiply_out(const std::vector<Factor>& factors) {
  BiPoly r(1);
  for (const auto& f : factors) r = r * f.factor.pow(f.multiplicity);
  return r;
}

bool is_squarefree(const BiPoly& p) {
  for (const auto& f : squarefree_factor(p))
    if (f.multiplicity > 1) return false;
  return true;
}

UPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::InvalidArgument, "resultant of a zero polynomial");
  int dp = p.degree_y(), dq = q.degree_y();
  auto pc = p.coefficients_in_y(), qc = q.coefficients_in_y();
  if (pc.back().eval(FieldElement()).is_zero())
    throw Error(ErrorCode::NotYRegular, "leading y-coefficient of " + p.to_string() + " vanishes at x = 0");
  // deg_x Res <= dq * max deg_x(p_j) + dp * max deg_x(q_j)
  int bound = dq * std::max(p.degree_x(), 0) + dp * std::max(q.degree_x(), 0);
  std::vector<FieldElement> xs, ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    FieldElement xv(k);
    std::vector<FieldElement> pa, qa;
    for (const auto& c : pc) pa.push_back(c.eval(xv));
    for (const auto& c : qc) qa.push_back(c.eval(xv));
    xs.push_back(xv);
    ys.push_back(resultant(UPoly(pa), UPoly(qa), dp, dq));
  }
  return interpolate(xs, ys);
}

FieldElement det(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 inverse(const Matrix2& m) {
  FieldElement d = det(m);
  if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "linear change is not invertible");
  FieldElement di = d.inverse();
  return {{{m[1][1] * di, -m[0][1] * di}, {-m[1][0] * di, m[0][0] * di}}};
}

BiPoly linear_change(const BiPoly& p, const Matrix2& m) {
  if (det(m).is_zero()) throw Error(ErrorCode::SingularMatrix, "linear change is not invertible");
  BiPoly X = BiPoly::x().scaled(m[0][0]) + BiPoly::y().scaled(m[0][1]);
  BiPoly Y = BiPoly::x().scaled(m[1][0]) + BiPoly::y().scaled(m[1][1]);
  return p.compose(X, Y);
}

}  // namespace foliasep
