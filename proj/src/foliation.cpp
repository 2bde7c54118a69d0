#include "foliasep/foliation.hpp"

#include <map>

#include "foliasep/errors.hpp"

namespace foliasep {

FoliationGerm FoliationGerm::from_form(const BiPoly& A, const BiPoly& B) {
  FoliationGerm F(B, -A);
  F.orientation = Orientation::DualForm;
  return F;
}

FoliationGerm FoliationGerm::at_origin() const {
  if (base_x.is_zero() && base_y.is_zero()) return *this;
  FoliationGerm F(P.translated(base_x, base_y), Q.translated(base_x, base_y));
  F.orientation = orientation;
  F.jet_order = jet_order;
  return F;
}

FoliationGerm FoliationGerm::conj() const {
  FoliationGerm F(P.conj(), Q.conj());
  F.base_x = base_x.conj();
  F.base_y = base_y.conj();
  F.orientation = orientation;
  F.jet_order = jet_order;
  return F;
}

FoliationGerm FoliationGerm::radical_conj() const {
  FoliationGerm F(P.radical_conj(), Q.radical_conj());
  F.base_x = base_x.radical_conj();
  F.base_y = base_y.radical_conj();
  F.orientation = orientation;
  F.jet_order = jet_order;
  return F;
}

bool FoliationGerm::is_singular() const {
  FoliationGerm F = at_origin();
  return F.P.coeff(0, 0).is_zero() && F.Q.coeff(0, 0).is_zero();
}

bool FoliationGerm::is_radial() const {
  FoliationGerm F = at_origin();
  return (BiPoly::x() * F.Q - BiPoly::y() * F.P).is_zero();
}

bool FoliationGerm::is_real() const { return P.conj() == P && Q.conj() == Q && base_x.is_real() && base_y.is_real(); }

FoliationGerm FoliationGerm::linear_change(const Matrix2& m) const {
  Matrix2 inv = inverse(m);
  BiPoly p = foliasep::linear_change(P, m), q = foliasep::linear_change(Q, m);
  FoliationGerm F(p.scaled(inv[0][0]) + q.scaled(inv[0][1]), p.scaled(inv[1][0]) + q.scaled(inv[1][1]));
  F.orientation = orientation;
  F.jet_order = jet_order;
  return F;
}

void FoliationGerm::require_jet(int k, const std::string& what) const {
  if (k > jet_order)
    throw Error(ErrorCode::TruncationExhausted,
                what + " needs the " + std::to_string(k) + "-jet, only the " + std::to_string(jet_order) + "-jet is exact");
}

long FoliationGerm::radicand() const { return std::max(P.radicand(), Q.radicand()); }

std::string FoliationGerm::to_string() const { return "P = " + P.to_string() + "; Q = " + Q.to_string() + ";"; }

std::string tag_name(SingularityTag t) {
  switch (t) {
    case SingularityTag::Regular: return "Regular";
    case SingularityTag::NonDegenerateSimple: return "NonDegenerateSimple";
    case SingularityTag::SaddleNode: return "SaddleNode";
    case SingularityTag::NonSimple: return "NonSimple";
  }
  return "?";
}

int algebraic_multiplicity(const FoliationGerm& F) {
  FoliationGerm G = F.at_origin();
  auto a = G.P.order(), b = G.Q.order();
  if (!a && !b) throw Error(ErrorCode::InvalidArgument, "zero vector field");
  if (!a) return *b;
  if (!b) return *a;
  return std::min(*a, *b);
}

void require_isolated(const FoliationGerm& F) {
  FoliationGerm G = F.at_origin();
  BiPoly g = gcd(G.P, G.Q);
  if (!g.is_constant() && g.coeff(0, 0).is_zero())
    throw Error(ErrorCode::NotIsolated, "P and Q share the factor " + g.to_string() + " through the base point");
}

namespace {

// Common factors not through the origin do not change the germ.
FoliationGerm strip_unit_factor(const FoliationGerm& F) {
  BiPoly g = gcd(F.P, F.Q);
  if (g.is_constant()) return F;
  if (g.coeff(0, 0).is_zero())
    throw Error(ErrorCode::NotIsolated, "P and Q share the factor " + g.to_string() + " through the base point");
  return FoliationGerm(exact_divide(F.P, g), exact_divide(F.Q, g));
}

const std::vector<BigRational>& shear_sequence() {
  static const std::vector<BigRational> seq = {0, 1, -2, 3, BigRational(1, 2), -3, BigRational(5, 3), BigRational(-7, 2)};
  return seq;
}

std::optional<int> milnor_by_shear(const BiPoly& P, const BiPoly& Q, const BigRational& c) {
  Matrix2 shear{{{1, FieldElement(c)}, {0, 1}}};
  BiPoly p = linear_change(P, shear), q = linear_change(Q, shear);
  int n = p.total_degree();
  if (p.coeff(0, n).is_zero()) return std::nullopt;
  UPoly g = gcd(p.restrict_x0(), q.restrict_x0());
  if (g.degree() > 0 && g.order() != g.degree()) return std::nullopt;
  UPoly r = resultant_y(p, q);
  if (r.is_zero()) return std::nullopt;
  return r.order();
}

}  // namespace

int milnor_number(const FoliationGerm& F) {
  FoliationGerm G = F.at_origin();
  if (!G.is_singular()) return 0;
  G = strip_unit_factor(G);
  for (const auto& c : shear_sequence()) {
    if (auto m = milnor_by_shear(G.P, G.Q, c)) return *m;
    if (auto m = milnor_by_shear(G.Q, G.P, c)) return *m;
  }
  throw Error(ErrorCode::ShearExhausted, "no admissible shear among 8 attempts for " + G.to_string());
}

namespace {

// Row space kept in reduced echelon form.
class Span {
public:
  explicit Span(size_t dim) : dim_(dim) {}
  size_t rank() const { return rows_.size(); }

  std::vector<FieldElement> reduce(std::vector<FieldElement> v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      FieldElement f = v[p];
      for (size_t k = 0; k < dim_; ++k)
        if (!row[k].is_zero()) v[k] -= f * row[k];
    }
    return v;
  }

  void insert(const std::vector<FieldElement>& v) {
    auto r = reduce(v);
    size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return;
    FieldElement inv = r[p].inverse();
    for (auto& e : r) e *= inv;
    for (auto& [q, row] : rows_) {
      if (row[p].is_zero()) continue;
      FieldElement f = row[p];
      for (size_t k = 0; k < dim_; ++k)
        if (!r[k].is_zero()) row[k] -= f * r[k];
    }
    rows_[p] = std::move(r);
  }

  bool contains(const std::vector<FieldElement>& v) const {
    for (const auto& e : reduce(v))
      if (!e.is_zero()) return false;
    return true;
  }

private:
  size_t dim_;
  std::map<size_t, std::vector<FieldElement>> rows_;
};

}  // namespace

int milnor_oracle(const FoliationGerm& F, int bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "oracle bound must be positive");
  FoliationGerm G = F.at_origin();
  for (int N = 0; N <= bound; ++N) {
    std::map<Exponent, size_t> index;
    for (int d = 0; d <= N; ++d)
      for (int j = 0; j <= d; ++j) index[{d - j, j}] = index.size();
    size_t dim = index.size();
    auto jet = [&](const BiPoly& p) {
      std::vector<FieldElement> v(dim);
      for (const auto& [e, c] : p.terms())
        if (e.first + e.second <= N) v[index.at(e)] = c;
      return v;
    };
    Span span(dim);
    for (const auto& [e, _] : index) {
      BiPoly m = BiPoly::monomial(FieldElement(1), e.first, e.second);
      span.insert(jet((m * G.P).truncated(N)));
      span.insert(jet((m * G.Q).truncated(N)));
    }
    bool saturated = true;
    for (int j = 0; j <= N && saturated; ++j) {
      std::vector<FieldElement> v(dim);
      v[index.at({N - j, j})] = FieldElement(1);
      saturated = span.contains(v);
    }
    if (saturated) return static_cast<int>(dim - span.rank());
  }
  throw Error(ErrorCode::BoundTooSmall, "jet quotient did not stabilize below degree " + std::to_string(bound));
}

namespace {

bool is_rational_square(const BigRational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

BigRational rational_sqrt(const BigRational& q) {
  BigInteger n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return BigRational(n, d);
}

struct LinearPart {
  FieldElement a, b, c, d;  // P = a x + b y, Q = c x + d y
};

LinearPart linear_part(const FoliationGerm& G) {
  return {G.P.coeff(1, 0), G.P.coeff(0, 1), G.Q.coeff(1, 0), G.Q.coeff(0, 1)};
}

std::array<FieldElement, 2> kernel_vector(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                          const FieldElement& d) {
  if (!a.is_zero() || !b.is_zero()) return {-b, a};
  return {-d, c};
}

}  // namespace

WeakIndexResult weak_index_data(const FoliationGerm& F) {
  FoliationGerm G = F.at_origin();
  if (!G.is_singular()) throw Error(ErrorCode::NotSaddleNode, "regular point");
  LinearPart L = linear_part(G);
  FieldElement lambda = L.a + L.d;
  if (!(L.a * L.d - L.b * L.c).is_zero() || lambda.is_zero())
    throw Error(ErrorCode::NotSaddleNode, "linear part does not have exactly one zero eigenvalue");
  auto v0 = kernel_vector(L.a, L.b, L.c, L.d);
  auto v1 = kernel_vector(L.a - lambda, L.b, L.c, L.d - lambda);
  Matrix2 M{{{v0[0], v1[0]}, {v0[1], v1[1]}}};
  FoliationGerm N = G.linear_change(M);
  const TruncSeries s = TruncSeries::variable();
  for (int order = 8; order <= 512; order *= 2) {
    TruncSeries phi = invariant_graph(N.P, N.Q, order, G.jet_order);
    TruncSeries restricted = substitute_series(N.P, s, phi);
    if (!G.is_exact()) restricted = restricted.with_precision(G.jet_order);
    if (restricted.vanishes_to_precision()) {
      if (order >= G.jet_order) break;
      continue;
    }
    int k = restricted.ord();
    return {k, restricted.coeff(k), phi};
  }
  throw Error(ErrorCode::TruncationExhausted,
              "center manifold restriction vanishes through the available order (jet " +
                  (G.is_exact() ? std::string("512") : std::to_string(G.jet_order)) + ")");
}

int weak_index(const FoliationGerm& F) { return weak_index_data(F).index; }

SingularityClass classify_singularity(const FoliationGerm& F) {
  FoliationGerm G = F.at_origin();
  SingularityClass out;
  if (!G.is_singular()) return out;
  LinearPart L = linear_part(G);
  out.trace = L.a + L.d;
  out.determinant = L.a * L.d - L.b * L.c;
  if (out.determinant.is_zero()) {
    if (out.trace.is_zero()) {
      out.tag = SingularityTag::NonSimple;
      return out;
    }
    out.tag = SingularityTag::SaddleNode;
    out.strong_eigenvalue = out.trace;
    out.eigenvalues = std::array<FieldElement, 2>{FieldElement(), out.trace};
    out.weak_direction = kernel_vector(L.a, L.b, L.c, L.d);
    out.strong_direction = kernel_vector(L.a - out.trace, L.b, L.c, L.d - out.trace);
    auto w = weak_index_data(G);
    out.weak_index = w.index;
    out.center_leading = w.leading;
    return out;
  }
  try {
    UPoly charpoly(std::vector<FieldElement>{out.determinant, -out.trace, FieldElement(1)});
    auto r = roots(charpoly);
    if (r.size() == 2) out.eigenvalues = std::array<FieldElement, 2>{r[0], r[1]};
    else if (r.size() == 1) out.eigenvalues = std::array<FieldElement, 2>{r[0], r[0]};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedExtension) throw;
  }
  out.tag = SingularityTag::NonDegenerateSimple;
  if (out.trace.is_zero()) {
    out.rational_ratio = BigRational(-1);
    return out;
  }
  // r + 1/r + 2 = kappa for r = lambda1/lambda2.
  FieldElement kappa = out.trace * out.trace / out.determinant;
  if (!kappa.is_rational()) return out;
  BigRational k = kappa.re();
  BigRational disc = k * (k - 4);
  if (!is_rational_square(disc)) return out;
  BigRational r = (k - 2 + rational_sqrt(disc)) / 2;
  if (sgn(k - 4) >= 0) {
    out.tag = SingularityTag::NonSimple;
    out.rational_ratio = r;
  } else {
    out.rational_ratio = (k - 2 - rational_sqrt(disc)) / 2;
    if (sgn(*out.rational_ratio) == 0) out.rational_ratio = r;
  }
  return out;
}

TruncSeries invariance_residual(const FoliationGerm& F, const PuiseuxParam& gamma) {
  FoliationGerm G = F.at_origin();
  return substitute_series(G.P, gamma) * gamma.y.derivative() - substitute_series(G.Q, gamma) * gamma.x.derivative();
}

bool is_invariant(const FoliationGerm& F, const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "invariance of the zero polynomial");
  FoliationGerm G = F.at_origin();
  return divides(f, G.P * f.dx() + G.Q * f.dy());
}

bool is_invariant(const FoliationGerm& F, const PuiseuxParam& gamma) {
  return invariance_residual(F, gamma).vanishes_to_precision();
}

TruncSeries invariant_graph(const BiPoly& S, const BiPoly& T, int n, int jet) {
  n = std::min(n, jet);
  FieldElement s0 = S.coeff(0, 0), t0 = T.coeff(0, 0);
  bool singular = s0.is_zero();
  if (singular && !t0.is_zero()) throw Error(ErrorCode::InvalidArgument, "leaf through the origin is tangent to s = 0");
  if (singular && !S.coeff(0, 1).is_zero())
    throw Error(ErrorCode::InvalidArgument, "graph solver needs s' without a linear t term");
  FieldElement a = S.coeff(1, 0), d = T.coeff(0, 1);
  const TruncSeries s = TruncSeries::variable();
  std::vector<FieldElement> phi(n + 1);
  for (int k = 1; k <= n; ++k) {
    TruncSeries cur(std::vector<FieldElement>(phi.begin(), phi.begin() + k), k);
    TruncSeries res = substitute_series(T, s, cur) - cur.derivative() * substitute_series(S, s, cur);
    FieldElement r0 = res.coeff(singular ? k : k - 1);
    FieldElement slope = singular ? d - FieldElement(static_cast<long>(k)) * a : -FieldElement(static_cast<long>(k)) * s0;
    if (slope.is_zero()) {
      if (!r0.is_zero()) throw Error(ErrorCode::NotSimple, "resonant invariant graph at order " + std::to_string(k));
      continue;
    }
    phi[k] = -r0 / slope;
  }
  return TruncSeries(std::move(phi), n);
}

}  // namespace foliasep
