#include "foliasep/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "foliasep/errors.hpp"

namespace foliasep {

namespace {

int clamp_precision(long long p) {
  if (p >= TruncSeries::kExactPrecision) return TruncSeries::kExactPrecision;
  return static_cast<int>(p);
}

}  // namespace

TruncSeries::TruncSeries(std::vector<FieldElement> coeffs, int precision)
    : c_(std::move(coeffs)), prec_(clamp_precision(precision)) {
  if (prec_ < -1) prec_ = -1;
  trim();
}

void TruncSeries::trim() {
  if (!is_exact() && static_cast<int>(c_.size()) > prec_ + 1) c_.resize(std::max(prec_ + 1, 0));
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement TruncSeries::coeff(int k) const {
  if (k > prec_) {
    throw Error(ErrorCode::TruncationExhausted,
                "coefficient t^" + std::to_string(k) + " requested beyond guaranteed order " + std::to_string(prec_));
  }
  if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElement();
  return c_[k];
}

int TruncSeries::valuation_bound() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return prec_ + 1;
}

bool TruncSeries::vanishes_to_precision() const { return valuation_bound() > prec_; }

int TruncSeries::ord() const {
  int v = valuation_bound();
  if (v > prec_) {
    throw Error(ErrorCode::TruncationExhausted,
                "series vanishes up to its guaranteed order " + std::to_string(prec_));
  }
  return v;
}

TruncSeries TruncSeries::derivative() const {
  std::vector<FieldElement> v;
  for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * FieldElement(static_cast<long>(k)));
  return TruncSeries(std::move(v), is_exact() ? kExactPrecision : prec_ - 1);
}

TruncSeries TruncSeries::conj() const {
  std::vector<FieldElement> v;
  for (const auto& c : c_) v.push_back(c.conj());
  return TruncSeries(std::move(v), prec_);
}

TruncSeries TruncSeries::radical_conj() const {
  std::vector<FieldElement> v;
  for (const auto& c : c_) v.push_back(c.radical_conj());
  return TruncSeries(std::move(v), prec_);
}

TruncSeries TruncSeries::with_precision(int p) const { return TruncSeries(c_, std::min(p, prec_)); }

TruncSeries TruncSeries::scaled(const FieldElement& c) const {
  if (c.is_zero()) return TruncSeries({}, prec_);
  std::vector<FieldElement> v;
  for (const auto& a : c_) v.push_back(a * c);
  return TruncSeries(std::move(v), prec_);
}

TruncSeries TruncSeries::shifted_down(int k) const {
  for (int j = 0; j < k && j < static_cast<int>(c_.size()); ++j)
    if (!c_[j].is_zero()) throw Error(ErrorCode::InvalidArgument, "series not divisible by t^" + std::to_string(k));
  std::vector<FieldElement> v;
  for (size_t j = k; j < c_.size(); ++j) v.push_back(c_[j]);
  return TruncSeries(std::move(v), is_exact() ? kExactPrecision : prec_ - k);
}

TruncSeries TruncSeries::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-unit series");
  // An exact non-constant polynomial has an infinite inverse; cap it.
  int p = is_exact() ? (c_.size() == 1 ? kExactPrecision : 64) : prec_;
  if (p == kExactPrecision) return TruncSeries({c_[0].inverse()}, kExactPrecision);
  std::vector<FieldElement> inv(p + 1);
  FieldElement a0inv = c_[0].inverse();
  inv[0] = a0inv;
  for (int n = 1; n <= p; ++n) {
    FieldElement acc;
    for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k) acc += c_[k] * inv[n - k];
    inv[n] = -acc * a0inv;
  }
  return TruncSeries(std::move(inv), p);
}

TruncSeries TruncSeries::rescaled_variable(const FieldElement& c) const {
  std::vector<FieldElement> v;
  FieldElement pw(1);
  for (const auto& a : c_) {
    v.push_back(a * pw);
    pw *= c;
  }
  return TruncSeries(std::move(v), prec_);
}

TruncSeries TruncSeries::operator-() const { return scaled(FieldElement(-1)); }

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  int p = std::min(a.prec_, b.prec_);
  size_t n = std::max(a.c_.size(), b.c_.size());
  if (p < TruncSeries::kExactPrecision) n = std::min(n, static_cast<size_t>(std::max(p + 1, 0)));
  std::vector<FieldElement> v(n);
  for (size_t k = 0; k < n; ++k) {
    if (k < a.c_.size()) v[k] += a.c_[k];
    if (k < b.c_.size()) v[k] += b.c_[k];
  }
  return TruncSeries(std::move(v), p);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  long long va = a.valuation_bound(), vb = b.valuation_bound();
  long long p = std::min(va + static_cast<long long>(b.prec_), vb + static_cast<long long>(a.prec_));
  int prec = clamp_precision(p);
  if (a.c_.empty() || b.c_.empty()) return TruncSeries({}, prec);
  size_t n = a.c_.size() + b.c_.size() - 1;
  if (prec < TruncSeries::kExactPrecision) n = std::min(n, static_cast<size_t>(std::max(prec + 1, 0)));
  std::vector<FieldElement> v(n);
  for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return TruncSeries(std::move(v), prec);
}

TruncSeries divide(const TruncSeries& a, const TruncSeries& b) {
  int k = b.ord();
  TruncSeries bs = b.shifted_down(k);
  if (bs.is_exact() && bs.c_.size() == 1) return a.shifted_down(k).scaled(bs.c_[0].inverse());
  TruncSeries as = a.shifted_down(k);
  TruncSeries binv = bs.is_exact() ? bs.with_precision(std::max(as.is_exact() ? 64 : as.prec_, 0)).inverse() : bs.inverse();
  return as * binv;
}

bool agree(const TruncSeries& a, const TruncSeries& b) {
  int p = std::min(a.prec_, b.prec_);
  size_t n = std::max(a.c_.size(), b.c_.size());
  for (size_t k = 0; k < n && static_cast<int>(k) <= p; ++k) {
    FieldElement x = k < a.c_.size() ? a.c_[k] : FieldElement();
    FieldElement y = k < b.c_.size() ? b.c_[k] : FieldElement();
    if (x != y) return false;
  }
  return true;
}

std::string TruncSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k] << ")";
    if (k > 0) os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(" << var << "^" << prec_ + 1 << ")";
  return os.str();
}

int PuiseuxParam::multiplicity() const {
  int vx = x.valuation_bound(), vy = y.valuation_bound();
  if (vx > x.precision() && vy > y.precision())
    throw Error(ErrorCode::TruncationExhausted, "branch vanishes identically up to its guaranteed order");
  return std::min(vx <= x.precision() ? vx : TruncSeries::kExactPrecision,
                  vy <= y.precision() ? vy : TruncSeries::kExactPrecision);
}

bool PuiseuxParam::is_reduced() const {
  int g = 0;
  for (const auto* s : {&x, &y})
    for (size_t k = 0; k < s->stored().size(); ++k)
      if (!s->stored()[k].is_zero()) g = std::gcd(g, static_cast<int>(k));
  return g == 1;
}

long PuiseuxParam::radicand() const {
  long d = 0;
  for (const auto* s : {&x, &y})
    for (const auto& c : s->stored()) d = std::max(d, c.radicand());
  return d;
}

PuiseuxParam graph_param(const TruncSeries& g) { return {TruncSeries::variable(), g}; }

TruncSeries substitute_series(const BiPoly& p, const TruncSeries& x, const TruncSeries& y) {
  int dx = p.degree_x(), dy = p.degree_y();
  TruncSeries acc({}, TruncSeries::kExactPrecision);
  if (p.is_zero()) return acc;
  std::vector<TruncSeries> xp(dx + 1), yp(dy + 1);
  xp[0] = TruncSeries::constant(FieldElement(1));
  yp[0] = TruncSeries::constant(FieldElement(1));
  for (int k = 1; k <= dx; ++k) xp[k] = xp[k - 1] * x;
  for (int k = 1; k <= dy; ++k) yp[k] = yp[k - 1] * y;
  for (const auto& [e, c] : p.terms()) acc = acc + (xp[e.first] * yp[e.second]).scaled(c);
  return acc;
}

TruncSeries substitute_series(const BiPoly& p, const PuiseuxParam& gamma) {
  return substitute_series(p, gamma.x, gamma.y);
}

}  // namespace foliasep
