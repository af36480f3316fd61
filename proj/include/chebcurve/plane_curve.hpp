#pragma once

// Plane curves y^d = g(x) with deg g = d, superelliptic curves y^m = f(x),
// and the geometry needed for them: points, tangent lines, intersection
// multiplicities, total inflection points, point counts and maximality.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chebcurve/chebyshev.hpp"
#include "chebcurve/ff.hpp"
#include "chebcurve/poly.hpp"

namespace chebcurve {

/// Point (X : Y : Z) of P^2 with the first nonzero coordinate equal to 1.
class ProjPoint2 {
 public:
  static ProjPoint2 make(const FieldElement& X, const FieldElement& Y, const FieldElement& Z) {
    require_same_field(X.field(), Y.field());
    require_same_field(X.field(), Z.field());
    const FieldElement* lead = !X.is_zero() ? &X : !Y.is_zero() ? &Y : !Z.is_zero() ? &Z : nullptr;
    if (!lead) throw DomainError("(0 : 0 : 0) is not a projective point");
    const FieldElement s = inv(*lead);
    return ProjPoint2(X * s, Y * s, Z * s);
  }
  static ProjPoint2 affine(const FieldElement& x, const FieldElement& y) {
    return make(x, y, FieldElement::one(x.field()));
  }

  const FieldElement& X() const { return X_; }
  const FieldElement& Y() const { return Y_; }
  const FieldElement& Z() const { return Z_; }
  const Field& field() const { return X_.field(); }
  bool at_infinity() const { return Z_.is_zero(); }

  std::string to_string() const { return "(" + X_.to_string() + " : " + Y_.to_string() + " : " + Z_.to_string() + ")"; }

  friend bool operator==(const ProjPoint2&, const ProjPoint2&) = default;
  friend std::strong_ordering operator<=>(const ProjPoint2& a, const ProjPoint2& b) {
    if (auto r = a.Z_ <=> b.Z_; r != 0) return r;
    if (auto r = a.X_ <=> b.X_; r != 0) return r;
    return a.Y_ <=> b.Y_;
  }

 private:
  ProjPoint2(FieldElement X, FieldElement Y, FieldElement Z) : X_(std::move(X)), Y_(std::move(Y)), Z_(std::move(Z)) {}
  FieldElement X_, Y_, Z_;
};

/// Line uX + vY + wZ = 0, normalized like a point.
class ProjLine {
 public:
  static ProjLine make(const FieldElement& u, const FieldElement& v, const FieldElement& w) {
    const ProjPoint2 c = ProjPoint2::make(u, v, w);
    return ProjLine(c.X(), c.Y(), c.Z());
  }
  const FieldElement& u() const { return u_; }
  const FieldElement& v() const { return v_; }
  const FieldElement& w() const { return w_; }
  const Field& field() const { return u_.field(); }

  bool contains(const ProjPoint2& P) const { return (u_ * P.X() + v_ * P.Y() + w_ * P.Z()).is_zero(); }

  /// Two distinct points spanning the line.
  std::pair<ProjPoint2, ProjPoint2> basis() const {
    const Field& F = field();
    const FieldElement o = FieldElement::zero(F), l = FieldElement::one(F);
    if (!u_.is_zero()) return {ProjPoint2::make(-v_, u_, o), ProjPoint2::make(-w_, o, u_)};
    if (!v_.is_zero()) return {ProjPoint2::make(l, o, o), ProjPoint2::make(o, -w_, v_)};
    return {ProjPoint2::make(l, o, o), ProjPoint2::make(o, l, o)};
  }

  std::string to_string() const { return "[" + u_.to_string() + " : " + v_.to_string() + " : " + w_.to_string() + "]"; }
  friend bool operator==(const ProjLine&, const ProjLine&) = default;

 private:
  ProjLine(FieldElement u, FieldElement v, FieldElement w) : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}
  FieldElement u_, v_, w_;
};

inline std::uint64_t genus_plane(std::uint64_t d) {
  if (d < 1) throw DomainError("degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

/// Genus of the smooth model of y^m = f(x), f separable of degree n.
inline std::uint64_t genus_superelliptic(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw DomainError("superelliptic exponents must be positive");
  return ((m - 1) * (n - 1) + 1 - std::gcd(m, n)) / 2;
}

/// Closure in P^2 of y^d = g(x), deg g = d: F = Y^d - Z^d g(X/Z).
class PlaneCurve {
 public:
  static PlaneCurve chebyshev(unsigned d, const Field& f) {
    if (d < 1) throw DomainError("degree must be positive");
    ChebSpec spec(d, f);
    return PlaneCurve(cheb(spec), true);
  }
  static PlaneCurve custom(const Poly& g) { return PlaneCurve(g, false); }

  unsigned d() const { return d_; }
  const Poly& g() const { return g_; }
  const Field& field() const { return g_.field(); }
  bool is_chebyshev() const { return chebyshev_; }
  std::uint64_t genus() const { return genus_plane(d_); }

  /// The same equation read over an extension of its field.
  PlaneCurve over(const Field& K, const Limits& limits = {}) const {
    PlaneCurve c = *this;
    c.g_ = embed(g_, K, limits);
    return c;
  }

  FieldElement form(const ProjPoint2& P) const {
    require_same_field(field(), P.field());
    FieldElement acc = FieldElement::zero(field());
    for (std::size_t i = d_ + 1; i-- > 0;) acc = acc * P.X() + g_.coeff(i) * pow(P.Z(), d_ - i);
    return pow(P.Y(), d_) - acc;
  }
  bool contains(const ProjPoint2& P) const { return form(P).is_zero(); }

 private:
  PlaneCurve(Poly g, bool cheb) : g_(std::move(g)), chebyshev_(cheb) {
    if (g_.is_zero() || *g_.degree() < 1) throw DomainError("g must be nonconstant");
    d_ = static_cast<unsigned>(*g_.degree());
    if (d_ % field()->p() == 0) throw HypothesisViolation("characteristic divides d");
    if (!is_separable(g_)) throw HypothesisViolation("g is not separable, the curve is singular");
  }
  unsigned d_ = 0;
  Poly g_;
  bool chebyshev_;
};

enum class SuperellipticKind { Chebyshev, Fermat, Custom };

/// Smooth model of y^m = f(x), f separable.
class SuperellipticCurve {
 public:
  static SuperellipticCurve chebyshev(unsigned m, unsigned n, const Field& F) {
    ChebSpec spec(n, F);
    return SuperellipticCurve(m, cheb(spec), SuperellipticKind::Chebyshev);
  }
  /// y^m = x^n + 1.
  static SuperellipticCurve fermat(unsigned m, unsigned n, const Field& F) {
    const FieldElement one = FieldElement::one(F);
    return SuperellipticCurve(m, Poly::monomial(one, n) + Poly::constant(one), SuperellipticKind::Fermat);
  }
  static SuperellipticCurve custom(unsigned m, const Poly& f) { return SuperellipticCurve(m, f, SuperellipticKind::Custom); }

  unsigned m() const { return m_; }
  unsigned n() const { return static_cast<unsigned>(*f_.degree()); }
  const Poly& f() const { return f_; }
  const Field& field() const { return f_.field(); }
  SuperellipticKind kind() const { return kind_; }
  std::uint64_t genus() const { return genus_superelliptic(m_, n()); }

  SuperellipticCurve over(const Field& K, const Limits& limits = {}) const {
    SuperellipticCurve c = *this;
    c.f_ = embed(f_, K, limits);
    return c;
  }

 private:
  SuperellipticCurve(unsigned m, Poly f, SuperellipticKind kind) : m_(m), f_(std::move(f)), kind_(kind) {
    if (m_ < 1) throw DomainError("exponent must be positive");
    if (f_.is_zero() || *f_.degree() < 1) throw DomainError("f must be nonconstant");
    if (m_ % field()->p() == 0) throw HypothesisViolation("characteristic divides m");
    if (!is_separable(f_)) throw HypothesisViolation("f is not separable");
  }
  unsigned m_;
  Poly f_;
  SuperellipticKind kind_;
};

/// A point of the smooth superelliptic model: affine (x, y), or the place
/// at infinity labelled by w with w^gcd(m, n) = lead(f).
struct SuperellipticPoint {
  bool at_infinity;
  FieldElement x, y;  // for places at infinity x = 0 and y = w
  friend bool operator==(const SuperellipticPoint&, const SuperellipticPoint&) = default;
};

namespace detail {

// Elements w of K with w^k = v, in canonical order; K enumerable.
class PowerTable {
 public:
  PowerTable(const Field& K, std::uint64_t k, const Limits& limits) : K_(K) {
    const std::uint64_t q = enumerable_size(K, limits);
    table_.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) table_.emplace_back(pow(FieldElement::from_index(K, i), k).index(), i);
    std::sort(table_.begin(), table_.end());
  }
  std::vector<FieldElement> roots(const FieldElement& v) const {
    std::vector<FieldElement> r;
    auto [lo, hi] = std::equal_range(table_.begin(), table_.end(), std::pair{v.index(), std::uint64_t{0}},
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto it = lo; it != hi; ++it) r.push_back(FieldElement::from_index(K_, it->second));
    return r;
  }

 private:
  Field K_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> table_;
};

// #{w in F_q : w^k = v}.
inline std::uint64_t count_kth_roots(const FieldElement& v, std::uint64_t k, std::uint64_t q) {
  if (v.is_zero()) return 1;
  const std::uint64_t g = std::gcd(k, q - 1);
  return pow(v, (q - 1) / g).is_one() ? g : 0;
}

// Number of k-th roots of each element of K, by index; K enumerable.
class RootCounts {
 public:
  RootCounts(const Field& K, std::uint64_t k, const Limits& limits) {
    const std::uint64_t q = enumerable_size(K, limits);
    g_ = std::gcd(k, q - 1);
    is_power_.assign(q, false);
    for (std::uint64_t i = 1; i < q; ++i) is_power_[pow(FieldElement::from_index(K, i), k).index()] = true;
  }
  std::uint64_t operator()(const FieldElement& v) const {
    if (v.is_zero()) return 1;
    return is_power_[v.index()] ? g_ : 0;
  }

 private:
  std::uint64_t g_ = 1;
  std::vector<bool> is_power_;
};

}  // namespace detail

/// All points of the plane curve over K (affine points, then points at infinity).
inline std::vector<ProjPoint2> points_over(const PlaneCurve& curve, const Field& K, const Limits& limits = {}) {
  const PlaneCurve c = curve.over(K, limits);
  const std::uint64_t q = enumerable_size(K, limits);
  const detail::PowerTable roots(K, c.d(), limits);
  std::vector<ProjPoint2> pts;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement x = FieldElement::from_index(K, i);
    for (const auto& y : roots.roots(eval(c.g(), x))) pts.push_back(ProjPoint2::affine(x, y));
  }
  const FieldElement one = FieldElement::one(K), zero = FieldElement::zero(K);
  for (const auto& z : roots.roots(c.g().leading())) pts.push_back(ProjPoint2::make(one, z, zero));
  return pts;
}

inline std::vector<SuperellipticPoint> points_over(const SuperellipticCurve& curve, const Field& K,
                                                   const Limits& limits = {}) {
  const SuperellipticCurve c = curve.over(K, limits);
  const std::uint64_t q = enumerable_size(K, limits);
  const detail::PowerTable roots(K, c.m(), limits);
  std::vector<SuperellipticPoint> pts;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement x = FieldElement::from_index(K, i);
    for (const auto& y : roots.roots(eval(c.f(), x))) pts.push_back({false, x, y});
  }
  const detail::PowerTable inf(K, std::gcd(c.m(), c.n()), limits);
  for (const auto& w : inf.roots(c.f().leading())) pts.push_back({true, FieldElement::zero(K), w});
  return pts;
}

/// Number of points over K, without materializing them.
inline std::uint64_t count_points(const PlaneCurve& curve, const Field& K, const Limits& limits = {}) {
  const PlaneCurve c = curve.over(K, limits);
  const std::uint64_t q = enumerable_size(K, limits);
  const detail::RootCounts roots(K, c.d(), limits);
  std::uint64_t n = roots(c.g().leading());
  for (std::uint64_t i = 0; i < q; ++i) n += roots(eval(c.g(), FieldElement::from_index(K, i)));
  return n;
}

inline std::uint64_t count_points(const SuperellipticCurve& curve, const Field& K, const Limits& limits = {}) {
  const SuperellipticCurve c = curve.over(K, limits);
  const std::uint64_t q = enumerable_size(K, limits);
  std::uint64_t n = detail::count_kth_roots(c.f().leading(), std::gcd(c.m(), c.n()), q);
  const detail::RootCounts roots(K, c.m(), limits);
  for (std::uint64_t i = 0; i < q; ++i) n += roots(eval(c.f(), FieldElement::from_index(K, i)));
  return n;
}

struct MaximalityVerdict {
  std::uint64_t q = 0;
  std::uint64_t genus = 0;
  std::uint64_t hasse_weil_bound = 0;  // q^2 + 1 + 2gq
  /// Closed-form criterion, when one is known for this family.
  std::optional<bool> criterion;
  /// Whether the criterion is necessary as well as sufficient.
  bool criterion_is_iff = false;
  std::optional<std::uint64_t> count;
  /// The count path was skipped because F_{q^2} exceeds the enumeration cap.
  bool criterion_only = false;

  bool maximal() const {
    if (count) return *count == hasse_weil_bound;
    if (criterion && (*criterion || criterion_is_iff)) return *criterion;
    throw CapExceeded("maximality undecided: no criterion applies and F_q^2 exceeds the enumeration cap");
  }
};

namespace detail {

// q = p^r; returns r, or throws when q is not a power of p.
inline unsigned log_p(std::uint64_t q, std::uint32_t p) {
  unsigned r = 0;
  std::uint64_t x = 1;
  while (x < q) {
    x *= p;
    ++r;
  }
  if (x != q || r == 0) throw DomainError(std::to_string(q) + " is not a power of " + std::to_string(p));
  return r;
}

template <class Curve>
MaximalityVerdict settle_maximality(const Curve& curve, std::uint64_t q, std::uint64_t genus, MaximalityVerdict v,
                                    const Limits& limits) {
  const std::uint32_t p = curve.field()->p();
  const unsigned r = log_p(q, p);
  v.q = q;
  v.genus = genus;
  v.hasse_weil_bound = q * q + 1 + 2 * genus * q;
  const Field K = make_field(p, 2 * r);
  if (K->m() % curve.field()->m() != 0) throw FieldMismatch("curve field does not embed in F_q^2");
  if (*K->size() > limits.enumeration_cap) {
    v.criterion_only = true;
    return v;
  }
  v.count = count_points(curve, K, limits);
  const bool counted = *v.count == v.hasse_weil_bound;
  if (v.criterion && (v.criterion_is_iff ? *v.criterion != counted : (*v.criterion && !counted)))
    throw InvariantBreach("maximality criterion disagrees with the point count: count " + std::to_string(*v.count) +
                          ", bound " + std::to_string(v.hasse_weil_bound));
  return v;
}

}  // namespace detail

/// Maximality over F_{q^2}. For C_d the criterion d | (q + 1)/2 is an
/// equivalence and is cross-checked against the count.
inline MaximalityVerdict is_maximal(const PlaneCurve& curve, std::uint64_t q, const Limits& limits = {}) {
  MaximalityVerdict v;
  if (curve.is_chebyshev()) {
    v.criterion = ((q + 1) / 2) % curve.d() == 0;
    v.criterion_is_iff = true;
  }
  return detail::settle_maximality(curve, q, curve.genus(), v, limits);
}

/// For y^m = phi_n(x) with m | n and n | (q + 1)/2, or y^m = x^n + 1 with
/// m, n | q + 1, the curve is a quotient of a maximal curve, hence maximal;
/// these criteria are sufficient only.
inline MaximalityVerdict is_maximal(const SuperellipticCurve& curve, std::uint64_t q, const Limits& limits = {}) {
  MaximalityVerdict v;
  const std::uint64_t m = curve.m(), n = curve.n();
  if (curve.kind() == SuperellipticKind::Chebyshev) v.criterion = n % m == 0 && ((q + 1) / 2) % n == 0;
  if (curve.kind() == SuperellipticKind::Fermat) v.criterion = (q + 1) % n == 0 && (q + 1) % m == 0;
  return detail::settle_maximality(curve, q, curve.genus(), v, limits);
}

/// Tangent line at a point of the curve, from the partial derivatives of F.
inline ProjLine tangent_line(const PlaneCurve& curve, const ProjPoint2& P, const Limits& limits = {}) {
  const PlaneCurve c = curve.over(P.field(), limits);
  if (!c.contains(P)) throw DomainError(P.to_string() + " is not on the curve");
  const Field& K = P.field();
  const unsigned d = c.d();
  auto k = [&](std::uint64_t v) { return FieldElement::from_int(K, static_cast<std::int64_t>(v % K->p())); };
  FieldElement fx = FieldElement::zero(K), fz = FieldElement::zero(K);
  for (unsigned i = 0; i <= d; ++i) {
    const FieldElement gi = c.g().coeff(i);
    if (gi.is_zero()) continue;
    if (i >= 1) fx -= k(i) * gi * pow(P.X(), i - 1) * pow(P.Z(), d - i);
    if (i < d) fz -= k(d - i) * gi * pow(P.X(), i) * pow(P.Z(), d - i - 1);
  }
  const FieldElement fy = k(d) * pow(P.Y(), d - 1);
  if (fx.is_zero() && fy.is_zero() && fz.is_zero()) throw InvariantBreach("singular point " + P.to_string());
  return ProjLine::make(fx, fy, fz);
}

namespace detail {

// F(sA + B) as a polynomial in s.
inline Poly restrict_to_line(const PlaneCurve& c, const ProjPoint2& A, const ProjPoint2& B) {
  const Poly X = Poly::linear(A.X(), B.X()), Y = Poly::linear(A.Y(), B.Y()), Z = Poly::linear(A.Z(), B.Z());
  Poly r = pow(Y, c.d()) - homogeneous_substitute(c.g(), X, Z, c.d());
  if (r.is_zero()) throw InvariantBreach("line contained in the curve");
  return r;
}

}  // namespace detail

struct IntersectionPoint {
  ProjPoint2 point;
  unsigned multiplicity;
};

struct IntersectionProfile {
  Field field;  // where the intersection points are defined
  std::vector<IntersectionPoint> points;
};

/// Intersection of the curve with a line, with multiplicities, over the
/// splitting field of the restricted binary form.
inline IntersectionProfile line_intersection_profile(const PlaneCurve& curve, const ProjLine& line,
                                                     const Limits& limits = {}) {
  const Field& K = line.field();
  const PlaneCurve c = curve.over(K, limits);
  const auto [A, B] = line.basis();
  const Poly r = detail::restrict_to_line(c, A, B);
  const unsigned at_A = c.d() - static_cast<unsigned>(*r.degree());

  const unsigned k = *r.degree() > 0 ? splitting_degree_over(radical(r), limits.extension_cap) : 1;
  const Field L = k == 1 ? K : make_field(K->p(), K->m() * k);
  IntersectionProfile prof{L, {}};
  const FieldEmbedding emb = make_embedding(K, L, limits);
  const ProjPoint2 AL = ProjPoint2::make(embed(A.X(), emb), embed(A.Y(), emb), embed(A.Z(), emb));
  const ProjPoint2 BL = ProjPoint2::make(embed(B.X(), emb), embed(B.Y(), emb), embed(B.Z(), emb));
  if (at_A) prof.points.push_back({AL, at_A});
  unsigned total = at_A;
  if (*r.degree() > 0) {
    const Poly rL = embed(r, emb);
    for (const auto& s : roots_of(rL, limits)) {
      const unsigned mult = root_multiplicity(rL, s);
      total += mult;
      prof.points.push_back({ProjPoint2::make(s * AL.X() + BL.X(), s * AL.Y() + BL.Y(), s * AL.Z() + BL.Z()), mult});
    }
  }
  if (total != c.d()) throw InvariantBreach("intersection multiplicities sum to " + std::to_string(total));
  std::sort(prof.points.begin(), prof.points.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  return prof;
}

/// Whether the tangent line at P meets the curve only at P. Parameterizing
/// the tangent as sP + B, the multiplicity at P is d - deg F(sP + B), so the
/// test needs no extension field.
inline bool is_total_inflection(const PlaneCurve& curve, const ProjPoint2& P, const Limits& limits = {}) {
  const PlaneCurve c = curve.over(P.field(), limits);
  const ProjLine t = tangent_line(c, P, limits);
  const auto [A, B] = t.basis();
  const Poly r = detail::restrict_to_line(c, P, B == P ? A : B);
  return *r.degree() == 0;
}

struct InflectionReport {
  unsigned d = 0;
  std::uint32_t p = 0;
  Field search_field;
  std::vector<ProjPoint2> points;
  /// "Generic" (d points on y = 0) or "Exceptional" (3d points on
  /// y (x - 2)(x + 2) = 0); empty for a curve outside the Chebyshev family.
  std::string predicted_case;
  std::uint64_t predicted_count = 0;
  /// Whether every predicted point is rational over the search field.
  bool field_covers_prediction = false;
  bool all_on_predicted_lines = true;
  std::string observed_case;
  std::optional<std::string> deviation;
};

/// 2d - 1 = p^m for some m >= 1.
inline std::optional<unsigned> exceptional_exponent(std::uint64_t d, std::uint64_t p) {
  if (d < 1) return std::nullopt;
  std::uint64_t x = p;
  for (unsigned m = 1; x <= 2 * d - 1; ++m, x *= p)
    if (x == 2 * d - 1) return m;
  return std::nullopt;
}

/// All total inflection points over K, compared with the Chebyshev-curve prediction.
inline InflectionReport total_inflections(const PlaneCurve& curve, const Field& K, const Limits& limits = {}) {
  const PlaneCurve c = curve.over(K, limits);
  InflectionReport rep;
  rep.d = c.d();
  rep.p = K->p();
  rep.search_field = K;
  for (const auto& P : points_over(c, K, limits))
    if (is_total_inflection(c, P, limits)) rep.points.push_back(P);
  std::sort(rep.points.begin(), rep.points.end());

  const auto q = *K->size();
  const FieldElement two = FieldElement::from_int(K, 2);
  auto on_y0 = [](const ProjPoint2& P) { return P.Y().is_zero() && !P.Z().is_zero(); };
  auto on_three = [&](const ProjPoint2& P) {
    return on_y0(P) || (!P.Z().is_zero() && ((P.X() - two * P.Z()).is_zero() || (P.X() + two * P.Z()).is_zero()));
  };
  const bool generic_shape = rep.points.size() == rep.d && std::all_of(rep.points.begin(), rep.points.end(), on_y0);
  const bool exceptional_shape =
      rep.points.size() == 3 * rep.d && std::all_of(rep.points.begin(), rep.points.end(), on_three);
  rep.observed_case = generic_shape ? "Generic" : exceptional_shape ? "Exceptional" : "Other";
  if (!c.is_chebyshev()) return rep;

  const bool exceptional = exceptional_exponent(rep.d, rep.p).has_value();
  rep.predicted_case = exceptional ? "Exceptional" : "Generic";
  rep.predicted_count = exceptional ? 3 * rep.d : rep.d;
  rep.all_on_predicted_lines =
      std::all_of(rep.points.begin(), rep.points.end(), [&](const auto& P) { return exceptional ? on_three(P) : on_y0(P); });
  const Poly phi = cheb_poly(rep.d, make_field(rep.p, 1));
  rep.field_covers_prediction = K->m() % splitting_degree(phi, limits) == 0;
  if (exceptional)  // the points (+-2 : y : 1) have y^d = phi_d(+-2) = 2
    rep.field_covers_prediction = rep.field_covers_prediction && detail::count_kth_roots(two, rep.d, q) == rep.d;
  if (rep.observed_case != rep.predicted_case || !rep.all_on_predicted_lines) {
    rep.deviation = "observed " + std::to_string(rep.points.size()) + " total inflection points over " + K->name() +
                    ", predicted " + std::to_string(rep.predicted_count) + " (" + rep.predicted_case + ")";
    if (!rep.field_covers_prediction) *rep.deviation += "; " + K->name() + " does not contain all predicted points";
  }
  return rep;
}

/// j-invariant of y^2 = a x^4 + b x^3 + c x^2 + d x + e via the binary
/// quartic invariants I and J; nullopt when 4I^3 = J^2.
inline std::optional<FieldElement> j_invariant_quartic(const FieldElement& a, const FieldElement& b,
                                                       const FieldElement& c, const FieldElement& d,
                                                       const FieldElement& e) {
  const Field& F = a.field();
  if (F->p() == 2 || F->p() == 3) throw DomainError("j_invariant_quartic needs characteristic other than 2 and 3");
  for (const auto* x : {&b, &c, &d, &e}) require_same_field(F, x->field());
  auto k = [&](std::int64_t v) { return FieldElement::from_int(F, v); };
  const FieldElement I = k(12) * a * e - k(3) * b * d + c * c;
  const FieldElement J = k(72) * a * c * e + k(9) * b * c * d - k(27) * a * d * d - k(27) * b * b * e - k(2) * c * c * c;
  const FieldElement I3 = I * I * I;
  const FieldElement disc = k(4) * I3 - J * J;
  if (disc.is_zero()) return std::nullopt;
  return k(6912) * I3 / disc;
}

}  // namespace chebcurve
