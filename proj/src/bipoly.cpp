#include "foliasep/bipoly.hpp"

#include <algorithm>
#include <vector>

#include "foliasep/errors.hpp"

namespace foliasep {

BiPoly::BiPoly(const FieldElement& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::monomial(const FieldElement& c, int i, int j) {
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

BiPoly BiPoly::from_x(const UPoly& p) {
  BiPoly r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term({k, 0}, p.coeff(k));
  return r;
}

BiPoly BiPoly::from_y(const UPoly& p) {
  BiPoly r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term({0, k}, p.coeff(k));
  return r;
}

void BiPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? FieldElement() : it->second;
}

bool BiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }

std::optional<int> BiPoly::order() const {
  if (terms_.empty()) return std::nullopt;
  int best = 1 << 30;
  for (const auto& [e, c] : terms_) best = std::min(best, e.first + e.second);
  return best;
}

std::optional<int> poly_order(const BiPoly& p) { return p.order(); }

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

BiPoly BiPoly::homogeneous_part(int k) const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == k) r.terms_.emplace(e, c);
  return r;
}

BiPoly BiPoly::truncated(int max_total_degree) const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second <= max_total_degree) r.terms_.emplace(e, c);
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) r.add_term({e.first - 1, e.second}, c * FieldElement(static_cast<long>(e.first)));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) r.add_term({e.first, e.second - 1}, c * FieldElement(static_cast<long>(e.second)));
  return r;
}

namespace {

FieldElement power(const FieldElement& b, int e) {
  FieldElement r(1);
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
  FieldElement acc;
  for (const auto& [e, c] : terms_) acc += c * power(x, e.first) * power(y, e.second);
  return acc;
}

BiPoly BiPoly::pow(int e) const {
  BiPoly r(1);
  BiPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

BiPoly BiPoly::compose(const BiPoly& X, const BiPoly& Y) const {
  int dx_max = degree_x(), dy_max = degree_y();
  std::vector<BiPoly> xp(std::max(dx_max, 0) + 1), yp(std::max(dy_max, 0) + 1);
  xp[0] = BiPoly(1);
  yp[0] = BiPoly(1);
  for (int k = 1; k <= dx_max; ++k) xp[k] = xp[k - 1] * X;
  for (int k = 1; k <= dy_max; ++k) yp[k] = yp[k - 1] * Y;
  BiPoly r;
  for (const auto& [e, c] : terms_) r += (xp[e.first] * yp[e.second]).scaled(c);
  return r;
}

BiPoly BiPoly::translated(const FieldElement& a, const FieldElement& b) const {
  if (a.is_zero() && b.is_zero()) return *this;
  return compose(x() + BiPoly(a), y() + BiPoly(b));
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
  return r;
}

BiPoly BiPoly::divided_by_x_power(int k) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first < k) throw Error(ErrorCode::InvalidArgument, "not divisible by x^" + std::to_string(k));
    r.terms_.emplace(Exponent{e.first - k, e.second}, c);
  }
  return r;
}

BiPoly BiPoly::divided_by_y_power(int k) const { return swapped().divided_by_x_power(k).swapped(); }

BiPoly BiPoly::conj() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

BiPoly BiPoly::radical_conj() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.radical_conj());
  return r;
}

BiPoly BiPoly::scaled(const FieldElement& c) const {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

UPoly BiPoly::restrict_x0() const {
  std::vector<FieldElement> v(std::max(degree_y(), 0) + 1);
  for (const auto& [e, c] : terms_)
    if (e.first == 0) v[e.second] = c;
  return UPoly(std::move(v));
}

UPoly BiPoly::restrict_y0() const { return swapped().restrict_x0(); }

std::vector<UPoly> BiPoly::coefficients_in_y() const {
  int dy = degree_y();
  std::vector<std::vector<FieldElement>> raw(std::max(dy, 0) + 1, std::vector<FieldElement>(std::max(degree_x(), 0) + 1));
  for (const auto& [e, c] : terms_) raw[e.second][e.first] = c;
  std::vector<UPoly> out;
  if (dy < 0) return out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

BiPoly BiPoly::from_coefficients_in_y(const std::vector<UPoly>& c) {
  BiPoly r;
  for (size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i <= c[j].degree(); ++i) r.add_term({i, static_cast<int>(j)}, c[j].coeff(i));
  return r;
}

long BiPoly::radicand() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, c.radicand());
  return d;
}

bool BiPoly::is_gaussian() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_gaussian(); });
}

bool BiPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

BiPoly BiPoly::operator-() const { return scaled(FieldElement(-1)); }

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

namespace {

bool needs_parens(const FieldElement& c) {
  int parts = (sgn(c.re()) != 0) + (sgn(c.im()) != 0) + (sgn(c.rad_re()) != 0) + (sgn(c.rad_im()) != 0);
  return parts > 1;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, FieldElement>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : v) {
    std::string vars;
    auto add_var = [&](const char* name, int k) {
      if (k == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (k > 1) vars += "^" + std::to_string(k);
    };
    add_var("x", e.first);
    add_var("y", e.second);
    bool negative = !needs_parens(c) && c.to_string().front() == '-';
    FieldElement mag = negative ? -c : c;
    std::string cs = needs_parens(mag) ? "(" + mag.to_string() + ")" : mag.to_string();
    std::string term;
    if (vars.empty()) {
      term = cs;
    } else if (mag.is_one()) {
      term = vars;
    } else {
      term = cs + "*" + vars;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace foliasep
