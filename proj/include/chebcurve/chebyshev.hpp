#pragma once

// The Chebyshev polynomials phi_d, characterized by
// phi_d(t + 1/t) = t^d + t^-d, and the polynomial identities they satisfy.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chebcurve/ff.hpp"
#include "chebcurve/poly.hpp"

namespace chebcurve {

using BigInt = boost::multiprecision::cpp_int;

/// Degree d together with the base field; requires char does not divide 2d.
struct ChebSpec {
  unsigned d;
  Field field;

  /// `enforce = false` skips the characteristic check; meant for negative tests.
  ChebSpec(unsigned d_, Field field_, bool enforce = true) : d(d_), field(std::move(field_)) {
    if (enforce && (field->p() == 2 || d % field->p() == 0))
      throw HypothesisViolation("characteristic " + std::to_string(field->p()) + " divides 2d = " +
                                std::to_string(2 * d));
  }
};

inline Poly pow(const Poly& f, std::uint64_t n) {
  Poly r = Poly::constant(FieldElement::one(f.field()));
  Poly b = f;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

/// phi_d by the three-term recurrence, with no hypothesis on the characteristic.
inline Poly cheb_poly(unsigned d, const Field& f) {
  Poly prev = Poly::constant(FieldElement::from_int(f, 2));
  if (d == 0) return prev;
  Poly cur = Poly::x(f);
  const Poly x = cur;
  for (unsigned k = 1; k < d; ++k) {
    Poly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Poly cheb(const ChebSpec& spec) { return cheb_poly(spec.d, spec.field); }

/// Integer coefficient of x^(d - 2j) in phi_d: (-1)^j d/(d-j) C(d-j, j).
inline BigInt cheb_coefficient_exact(unsigned d, unsigned j) {
  if (j > d / 2) throw DomainError("coefficient index " + std::to_string(j) + " out of range for d = " + std::to_string(d));
  if (d == 0) return 2;
  BigInt binom = 1;
  for (unsigned i = 0; i < j; ++i) binom = binom * (d - j - i) / (i + 1);
  BigInt c = BigInt(d) * binom;
  if (c % (d - j) != 0) throw InvariantBreach("closed-form coefficient is not integral");
  c /= (d - j);
  return j % 2 ? BigInt(-c) : c;
}

inline FieldElement cheb_coefficient(unsigned d, unsigned j, const Field& f) {
  BigInt r = cheb_coefficient_exact(d, j) % BigInt(f->p());
  return FieldElement::from_int(f, r.convert_to<std::int64_t>());
}

/// Whether t^n f((t^2 + 1)/t) = t^(2n) + 1.
inline bool laurent_identity_holds(const Poly& f, unsigned n) {
  const Field& F = f.field();
  if (f.is_zero() || *f.degree() > n) return false;
  const FieldElement one = FieldElement::one(F);
  const Poly lhs = homogeneous_substitute(f, Poly(F, {one, FieldElement::zero(F), one}), Poly::x(F), n);
  return lhs == Poly::monomial(one, 2 * n) + Poly::constant(one);
}

inline bool verify_laurent_identity(const ChebSpec& spec) { return laurent_identity_holds(cheb(spec), spec.d); }

/// (t^2 - 2t + 1)^d + (t^2 + 2t + 1)^d = 2 t^(2d) + 2 in F_p[t].
inline bool verify_exceptional_identity(unsigned d, std::uint32_t p) {
  if (p == 2) throw HypothesisViolation("exceptional identity needs odd characteristic");
  const Field F = make_field(p, 1);
  const Poly lhs = pow(Poly::from_ints(F, {1, -2, 1}), d) + pow(Poly::from_ints(F, {1, 2, 1}), d);
  const FieldElement two = FieldElement::from_int(F, 2);
  return lhs == Poly::monomial(two, 2 * d) + Poly::constant(two);
}

/// (u - 1)^d phi_d((2u + 2)/(u - 1)) = 2 u^d + 2 in F_p[u].
inline bool verify_prop31_identity(unsigned d, std::uint32_t p) {
  const Field F = make_field(p, 1);
  const FieldElement two = FieldElement::from_int(F, 2);
  const auto h = compose_moebius(cheb_poly(d, F), Mat2::from_ints(F, 2, 2, 1, -1));
  return h.poly == Poly::monomial(two, d) + Poly::constant(two);
}

struct Prop315Check {
  bool polynomial_identity;  // (2 - x)^d phi_d((2x + 12)/(2 - x)) = 2 phi_d(x)
  bool scalar_identity;      // (-4)^d = 2
  bool holds() const { return polynomial_identity && scalar_identity; }
};

inline Prop315Check verify_prop315_identity(unsigned d, std::uint32_t p) {
  if (p < 3 || d % p == 0) throw HypothesisViolation("needs p >= 3 not dividing d");
  const Field F = make_field(p, 1);
  const Poly phi = cheb_poly(d, F);
  const auto h = compose_moebius(phi, Mat2::from_ints(F, 2, 12, -1, 2));
  const FieldElement two = FieldElement::from_int(F, 2);
  return {h.poly == scale(phi, two), pow(FieldElement::from_int(F, -4), d) == two};
}

namespace detail {

inline std::vector<unsigned> odd_prime_divisors(unsigned n) {
  std::vector<unsigned> r;
  while (n % 2 == 0 && n) n /= 2;
  for (unsigned l = 3; l * l <= n; l += 2)
    if (n % l == 0) {
      r.push_back(l);
      while (n % l == 0) n /= l;
    }
  if (n > 1) r.push_back(n);
  return r;
}

}  // namespace detail

/// phi_n(u) by the Lucas ladder phi_2k = phi_k^2 - 2, phi_2k+1 = phi_k phi_k+1 - u.
inline FieldElement cheb_eval(const BigInt& n, const FieldElement& u) {
  if (n < 0) throw DomainError("negative Chebyshev index");
  const FieldElement two = FieldElement::from_int(u.field(), 2);
  FieldElement lo = two, hi = u;  // phi_k, phi_{k+1}
  for (std::size_t i = n == 0 ? 0 : boost::multiprecision::msb(n) + 1; i-- > 0;) {
    FieldElement mid = lo * hi - u;
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) {
      hi = hi * hi - two;
      lo = std::move(mid);
    } else {
      lo = lo * lo - two;
      hi = std::move(mid);
    }
  }
  return lo;
}

/// Smallest k >= 1 with p^k = +-1 (mod 4d): the degree of the splitting field of phi_d over F_p.
inline unsigned cheb_splitting_degree(unsigned d, std::uint32_t p) {
  const std::uint64_t n = 4 * std::uint64_t{d};
  if (std::gcd<std::uint64_t>(n, p) != 1) throw HypothesisViolation("characteristic divides 2d");
  std::uint64_t x = p % n;
  for (unsigned k = 1;; ++k, x = x * p % n)
    if (x == 1 || x == n - 1) return k;
}

/// Zeros of phi_d lying in F, in canonical order.
///
/// The zeros are w^j + 1/w^j for w of order 4d and odd j. With Q = |F| = +-1
/// mod 4d, write u = z + 1/z for a random u; then z lies in F or in the norm-one
/// torus of F_Q^2, and phi_E(u) = z^E + z^-E with E = (Q -+ 1)/(4d) is a zero
/// with j = 1 often enough. The remaining zeros are phi_j of it. Other fields
/// fall back to generic root finding.
inline std::vector<FieldElement> chebyshev_roots(unsigned d, const Field& F, const Limits& limits = {}) {
  if (F->p() == 2 || d == 0 || d % F->p() == 0) throw HypothesisViolation("chebyshev_roots needs char not dividing 2d");
  const Poly phi = cheb_poly(d, F);
  const unsigned k = cheb_splitting_degree(d, F->p());
  if (F->m() % k != 0) return roots_of(phi, limits);

  Poly primitive = phi;
  for (unsigned l : detail::odd_prime_divisors(d)) primitive = primitive / gcd(primitive, cheb_poly(d / l, F));
  const BigInt Q = boost::multiprecision::pow(BigInt(F->p()), F->m());
  const BigInt n = 4 * d;
  const BigInt E = Q % n == 1 ? BigInt((Q - 1) / n) : BigInt((Q + 1) / n);
  std::mt19937_64 rng(0x6a09e667f3bcc908ULL ^ d);
  std::optional<FieldElement> r;
  for (int attempt = 0; attempt < 4096 && !r; ++attempt) {
    FieldElement c = cheb_eval(E, FieldElement::random(F, rng));
    if (eval(primitive, c).is_zero()) r = std::move(c);
  }
  if (!r) throw InvariantBreach("no primitive zero of phi_" + std::to_string(d) + " found in " + F->name());

  std::vector<FieldElement> roots;
  FieldElement prev = FieldElement::from_int(F, 2), cur = *r;
  for (unsigned j = 1; j < 2 * d; ++j) {
    if (j % 2) roots.push_back(cur);
    FieldElement next = *r * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    throw InvariantBreach("repeated zero of phi_" + std::to_string(d));
  for (const auto& x : roots)
    if (!eval(phi, x).is_zero()) throw InvariantBreach("recurrence produced a non-zero of phi_" + std::to_string(d));
  return roots;
}

}  // namespace chebcurve
