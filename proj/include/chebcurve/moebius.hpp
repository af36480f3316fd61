#pragma once

// PGL(2) over finite fields: points of P^1, Moebius maps, the unique map
// through three point pairs, setwise stabilizers of finite subsets of P^1 and
// finite-group fingerprints.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chebcurve/ff.hpp"

namespace chebcurve {

/// Raw 2x2 matrix (a b; c d), acting as x -> (a x + b) / (c x + d).
struct Mat2 {
  FieldElement a, b, c, d;

  const Field& field() const { return a.field(); }

  static Mat2 identity(const Field& f) {
    return {FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f)};
  }
  static Mat2 from_ints(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {FieldElement::from_int(f, a), FieldElement::from_int(f, b), FieldElement::from_int(f, c),
            FieldElement::from_int(f, d)};
  }

  FieldElement det() const { return a * d - b * c; }

  Mat2 scaled(const FieldElement& s) const { return {a * s, b * s, c * s, d * s}; }
  /// Inverse up to the scalar det.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2& x, const Mat2& y) {
    if (auto r = x.a <=> y.a; r != 0) return r;
    if (auto r = x.b <=> y.b; r != 0) return r;
    if (auto r = x.c <=> y.c; r != 0) return r;
    return x.d <=> y.d;
  }
};

/// Point (s : t) of P^1, normalized to (x : 1) or (1 : 0) = infinity.
class ProjPoint1 {
 public:
  static ProjPoint1 finite(FieldElement x) {
    FieldElement one = FieldElement::one(x.field());
    return ProjPoint1(std::move(x), std::move(one));
  }
  static ProjPoint1 infinity(const Field& f) { return ProjPoint1(FieldElement::one(f), FieldElement::zero(f)); }
  static ProjPoint1 from_homogeneous(const FieldElement& s, const FieldElement& t) {
    require_same_field(s.field(), t.field());
    if (t.is_zero()) {
      if (s.is_zero()) throw DomainError("(0 : 0) is not a point of P^1");
      return infinity(s.field());
    }
    return finite(s / t);
  }

  bool is_infinity() const { return t_.is_zero(); }
  const FieldElement& s() const { return s_; }
  const FieldElement& t() const { return t_; }
  const Field& field() const { return s_.field(); }
  std::optional<FieldElement> affine() const {
    if (is_infinity()) return std::nullopt;
    return s_;
  }

  std::string to_string() const { return is_infinity() ? "inf" : s_.to_string(); }

  friend bool operator==(const ProjPoint1&, const ProjPoint1&) = default;
  // Finite points in element order, infinity last.
  friend std::strong_ordering operator<=>(const ProjPoint1& x, const ProjPoint1& y) {
    if (x.is_infinity() != y.is_infinity())
      return x.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (x.is_infinity()) return std::strong_ordering::equal;
    return x.s_ <=> y.s_;
  }

 private:
  ProjPoint1(FieldElement s, FieldElement t) : s_(std::move(s)), t_(std::move(t)) {}
  FieldElement s_, t_;
};

/// Element of PGL(2): invertible matrix scaled so that its first nonzero entry
/// in row-major order is 1.
class Moebius {
 public:
  static Moebius from_matrix(const Mat2& m) {
    if (m.det().is_zero()) throw DomainError("singular matrix is not a Moebius transformation");
    const FieldElement& lead = !m.a.is_zero() ? m.a : m.b;  // a = b = 0 is singular
    return Moebius(m.scaled(inv(lead)));
  }
  static Moebius identity(const Field& f) { return Moebius(Mat2::identity(f)); }
  static Moebius from_ints(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return from_matrix(Mat2::from_ints(f, a, b, c, d));
  }

  const Mat2& matrix() const { return m_; }
  const Field& field() const { return m_.field(); }
  bool is_identity() const { return m_ == Mat2::identity(field()); }

  std::string to_string() const {
    return "(" + m_.a.to_string() + " " + m_.b.to_string() + "; " + m_.c.to_string() + " " + m_.d.to_string() + ")";
  }

  friend bool operator==(const Moebius&, const Moebius&) = default;
  friend auto operator<=>(const Moebius& x, const Moebius& y) { return x.m_ <=> y.m_; }

 private:
  explicit Moebius(Mat2 m) : m_(std::move(m)) {}
  Mat2 m_;
};

inline ProjPoint1 apply(const Mat2& m, const ProjPoint1& P) {
  require_same_field(m.field(), P.field());
  return ProjPoint1::from_homogeneous(m.a * P.s() + m.b * P.t(), m.c * P.s() + m.d * P.t());
}
inline ProjPoint1 apply(const Moebius& mu, const ProjPoint1& P) { return apply(mu.matrix(), P); }

/// mu o nu, i.e. apply nu first.
inline Moebius compose(const Moebius& mu, const Moebius& nu) {
  require_same_field(mu.field(), nu.field());
  return Moebius::from_matrix(mu.matrix() * nu.matrix());
}

inline Moebius inverse(const Moebius& mu) { return Moebius::from_matrix(mu.matrix().adjugate()); }

/// Order of mu, by iterated composition. Capped by min(|PGL(2,q)|, enumeration cap).
inline std::uint64_t order(const Moebius& mu, const Limits& limits = {}) {
  std::uint64_t cap = limits.enumeration_cap;
  if (auto q = mu.field()->size(); q && *q < (std::uint64_t{1} << 21)) cap = std::min(cap, *q * *q * *q - *q);
  Moebius x = mu;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (x.is_identity()) return n;
    x = compose(x, mu);
  }
  throw CapExceeded("element order above " + std::to_string(cap));
}

namespace detail {

// Matrix sending (1:0), (0:1), (1:1) to v1, v2, v3.
inline Mat2 frame_matrix(const ProjPoint1& v1, const ProjPoint1& v2, const ProjPoint1& v3) {
  const FieldElement D = v1.s() * v2.t() - v2.s() * v1.t();
  if (D.is_zero()) throw DomainError("frame points must be distinct");
  const FieldElement alpha = (v3.s() * v2.t() - v2.s() * v3.t()) / D;
  const FieldElement beta = (v1.s() * v3.t() - v3.s() * v1.t()) / D;
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("frame points must be distinct");
  return {alpha * v1.s(), beta * v2.s(), alpha * v1.t(), beta * v2.t()};
}

}  // namespace detail

/// The unique Moebius map with src[i] -> dst[i].
inline Moebius from_three_points(const std::array<ProjPoint1, 3>& src, const std::array<ProjPoint1, 3>& dst) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (src[i] == src[j] || dst[i] == dst[j]) throw DomainError("repeated point in a triple");
  const Mat2 ms = detail::frame_matrix(src[0], src[1], src[2]);
  const Mat2 md = detail::frame_matrix(dst[0], dst[1], dst[2]);
  return Moebius::from_matrix(md * ms.adjugate());
}

namespace detail {

// Inverses of nonzero xs with one field inversion (prefix products).
inline std::vector<FieldElement> batch_inverse(const std::vector<FieldElement>& xs) {
  std::vector<FieldElement> prefix;
  prefix.reserve(xs.size());
  for (const auto& x : xs) prefix.push_back(prefix.empty() ? x : prefix.back() * x);
  std::vector<FieldElement> out(xs);
  if (xs.empty()) return out;
  FieldElement acc = inv(prefix.back());
  for (std::size_t i = xs.size(); i-- > 1;) {
    out[i] = acc * prefix[i - 1];
    acc *= xs[i];
  }
  out[0] = acc;
  return out;
}

}  // namespace detail

/// Moebius maps permuting the finite set S (|S| >= 3), in canonical order.
///
/// A map is fixed by the images of three points, and a stabilizing map sends
/// the base triple (the three smallest points of S) into S, so it suffices to
/// try the |S|(|S|-1)(|S|-2) ordered image triples. The work is independent of
/// the size of the field.
inline std::vector<Moebius> setwise_stabilizer(std::vector<ProjPoint1> S) {
  if (S.size() < 3) throw DomainError("setwise_stabilizer needs at least three points");
  for (const auto& P : S) require_same_field(P.field(), S[0].field());
  std::sort(S.begin(), S.end());
  if (std::adjacent_find(S.begin(), S.end()) != S.end()) throw DomainError("points must be pairwise distinct");
  const std::size_t n = S.size();
  const Mat2 base_inv = detail::frame_matrix(S[0], S[1], S[2]).adjugate();

  auto stabilizes = [&](const Mat2& m) {
    for (std::size_t r = 3; r < n; ++r)
      if (!std::binary_search(S.begin(), S.end(), apply(m, S[r]))) return false;
    return true;
  };
  std::vector<Moebius> group;
  if (n == 3 || S.back().is_infinity()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (i == j || k == i || k == j) continue;
          const Mat2 m = detail::frame_matrix(S[i], S[j], S[k]) * base_inv;
          if (stabilizes(m)) group.push_back(Moebius::from_matrix(m));
        }
  } else {
    // All points finite. Up to scale, the frame matrix of (x_i, x_j, x_k) is
    // ((x_k - x_j) x_i, (x_i - x_k) x_j; x_k - x_j, x_i - x_k), so the image of
    // S_3 costs a few products, and one batched inversion per (i, j) pair
    // tests membership of all images at once.
    const ProjPoint1 w = apply(base_inv, S[3]);
    const FieldElement& w1 = w.s();
    const FieldElement& w2 = w.t();
    std::vector<FieldElement> xs;
    for (const auto& P : S) xs.push_back(P.s());
    std::vector<std::size_t> ks;
    std::vector<FieldElement> num, den;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const FieldElement a1 = xs[i] * w1, b1 = xs[j] * w2;
        ks.clear();
        num.clear();
        den.clear();
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          const FieldElement al = xs[k] - xs[j], be = xs[i] - xs[k];
          FieldElement t = al * w1 + be * w2;
          if (t.is_zero()) continue;  // S_3 goes to infinity, which is not in S
          ks.push_back(k);
          num.push_back(al * a1 + be * b1);
          den.push_back(std::move(t));
        }
        const auto den_inv = detail::batch_inverse(den);
        for (std::size_t c = 0; c < ks.size(); ++c) {
          if (!std::binary_search(S.begin(), S.end(), ProjPoint1::finite(num[c] * den_inv[c]))) continue;
          const Mat2 m = detail::frame_matrix(S[i], S[j], S[ks[c]]) * base_inv;
          if (stabilizes(m)) group.push_back(Moebius::from_matrix(m));
        }
      }
  }
  std::sort(group.begin(), group.end());
  for (const auto& g : group) {
    if (!std::binary_search(group.begin(), group.end(), inverse(g)))
      throw InvariantBreach("stabilizer not closed under inverse");
    for (const auto& h : group)
      if (!std::binary_search(group.begin(), group.end(), compose(g, h)))
        throw InvariantBreach("stabilizer not closed under composition");
  }
  return group;
}

struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::vector<std::size_t> element_orders;  // sorted multiset
  std::string label;

  std::size_t count_of_order(std::size_t k) const {
    return static_cast<std::size_t>(std::count(element_orders.begin(), element_orders.end(), k));
  }
};

namespace detail {

inline std::string classify(std::size_t n, bool abelian, const std::vector<std::size_t>& orders) {
  auto count = [&](std::size_t k) { return std::count(orders.begin(), orders.end(), k); };
  const std::size_t max_order = orders.empty() ? 0 : orders.back();
  if (n == 1) return "trivial";
  if (abelian) {
    if (max_order == n) return "C" + std::to_string(n);
    if (n == 4 && count(2) == 3) return "V4";
    return "other(" + std::to_string(n) + ")";
  }
  if (n == 12 && count(1) == 1 && count(2) == 3 && count(3) == 8) return "A4";
  if (n == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6) return "S4";
  if (n == 60 && count(2) == 15 && count(3) == 20 && count(5) == 24) return "A5";
  // Dihedral of order 2k: an element of order k, and every element outside
  // the cyclic subgroup it generates is an involution.
  if (n % 2 == 0 && n >= 6 && max_order == n / 2) {
    const std::size_t k = n / 2;
    const std::size_t expected = k + (k % 2 == 0 ? 1 : 0);
    if (static_cast<std::size_t>(count(2)) == expected) return k == 3 ? "S3" : "D" + std::to_string(k);
  }
  return "other(" + std::to_string(n) + ")";
}

}  // namespace detail

/// Order, commutativity, element-order multiset and shape label of a finite
/// group of Moebius maps. Throws if the input is not closed.
inline GroupFingerprint fingerprint(std::vector<Moebius> group) {
  if (group.empty()) throw DomainError("empty group");
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  auto contains = [&](const Moebius& x) { return std::binary_search(group.begin(), group.end(), x); };
  GroupFingerprint fp;
  fp.order = group.size();
  for (const auto& g : group) {
    if (!contains(inverse(g))) throw DomainError("input is not a group (inverse missing)");
    for (const auto& h : group) {
      const Moebius gh = compose(g, h);
      if (!contains(gh)) throw DomainError("input is not a group (product missing)");
      if (fp.abelian && gh != compose(h, g)) fp.abelian = false;
    }
  }
  if (!contains(Moebius::identity(group[0].field()))) throw DomainError("input is not a group (identity missing)");
  for (const auto& g : group) {
    std::size_t k = 1;
    Moebius x = g;
    while (!x.is_identity()) {
      x = compose(x, g);
      ++k;
    }
    fp.element_orders.push_back(k);
  }
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  fp.label = detail::classify(fp.order, fp.abelian, fp.element_orders);
  return fp;
}

/// Whether eta commutes with sigma: x -> -x in PGL(2).
inline bool commutant_shape_check(const Moebius& eta) {
  const Field& f = eta.field();
  const Moebius sigma = Moebius::from_ints(f, -1, 0, 0, 1);
  return compose(sigma, eta) == compose(eta, sigma);
}

/// (a 0; 0 1) or (0 1; b 0) up to scaling.
inline bool is_diagonal_or_antidiagonal(const Moebius& eta) {
  const Mat2& m = eta.matrix();
  return (m.b.is_zero() && m.c.is_zero()) || (m.a.is_zero() && m.d.is_zero());
}

/// alpha is a zero of x^4 + 1, x^4 + 6x^2 + 1, x^4 - 6x^2 + 1 or x^8 + 14x^4 + 1.
inline bool lemma39_exceptional(const FieldElement& alpha) {
  const Field& f = alpha.field();
  auto k = [&](std::int64_t v) { return FieldElement::from_int(f, v); };
  const FieldElement a2 = alpha * alpha, a4 = a2 * a2;
  return (a4 + k(1)).is_zero() || (a4 + k(6) * a2 + k(1)).is_zero() || (a4 - k(6) * a2 + k(1)).is_zero() ||
         (a4 * a4 + k(14) * a4 + k(1)).is_zero();
}

/// Fingerprint of the stabilizer of {alpha, -alpha, 1/alpha, -1/alpha}.
inline GroupFingerprint lemma39_stabilizer(const FieldElement& alpha) {
  const FieldElement a4 = pow(alpha, 4);
  if (alpha.is_zero() || a4.is_one()) throw DomainError("lemma39_stabilizer needs alpha^4 != 1");
  const FieldElement ia = inv(alpha);
  return fingerprint(setwise_stabilizer(
      {ProjPoint1::finite(alpha), ProjPoint1::finite(-alpha), ProjPoint1::finite(ia), ProjPoint1::finite(-ia)}));
}

}  // namespace chebcurve
