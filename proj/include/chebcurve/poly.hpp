#pragma once

// Dense univariate polynomials over a finite field, with gcd, Frobenius
// powering, splitting degrees, root finding and field embeddings.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chebcurve/ff.hpp"
#include "chebcurve/moebius.hpp"

namespace chebcurve {

class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& x : c_) require_same_field(field_, x.field());
    trim();
  }

  static Poly from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(FieldElement::from_int(f, v));
    return Poly(f, std::move(c));
  }
  static Poly constant(const FieldElement& c) { return Poly(c.field(), {c}); }
  static Poly monomial(const FieldElement& c, std::size_t k) {
    std::vector<FieldElement> v(k + 1, FieldElement::zero(c.field()));
    v[k] = c;
    return Poly(c.field(), std::move(v));
  }
  static Poly x(const Field& f) { return monomial(FieldElement::one(f), 1); }
  /// a x + b
  static Poly linear(const FieldElement& a, const FieldElement& b) { return Poly(a.field(), {b, a}); }

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElement::zero(field_); }
  const FieldElement& leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += c_[i].to_string();
      if (i) s += i == 1 ? "*x" : "*x^" + std::to_string(i);
    }
    return s;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return same_field(a.field_, b.field_) && a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    std::vector<FieldElement> c = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& o = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t i = 0; i < o.size(); ++i) c[i] += o[i];
    return Poly(a.field_, std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(-x);
    return Poly(a.field_, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(c));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Field field_;
  std::vector<FieldElement> c_;
};

inline Poly scale(const Poly& f, const FieldElement& s) {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(x * s);
  return Poly(f.field(), std::move(c));
}

inline Poly make_monic(const Poly& f) { return scale(f, inv(f.leading())); }

struct DivMod {
  Poly quotient, remainder;
};

inline DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const Field& f = a.field();
  std::vector<FieldElement> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() <= db) return {Poly(f), a};
  std::vector<FieldElement> q(r.size() - db, FieldElement::zero(f));
  const FieldElement li = inv(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const FieldElement t = r[k] * li;
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j)
      if (!bc[j].is_zero()) r[k - db + j] -= t * bc[j];
  }
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  require_same_field(a.field(), b.field());
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

inline Poly derivative(const Poly& f) {
  if (f.coeffs().size() <= 1) return Poly(f.field());
  std::vector<FieldElement> c;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    c.push_back(f.coeffs()[i] * FieldElement::from_int(f.field(), static_cast<std::int64_t>(i % f.field()->p())));
  return Poly(f.field(), std::move(c));
}

inline FieldElement eval(const Poly& f, const FieldElement& x) {
  require_same_field(f.field(), x.field());
  FieldElement r = FieldElement::zero(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * x + f.coeffs()[i];
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(FieldElement::one(m.field())) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

/// sum_i f_i num^i den^(n - i), for n >= deg f (Horner in num).
inline Poly homogeneous_substitute(const Poly& f, const Poly& num, const Poly& den, std::size_t n) {
  const Field& F = f.field();
  if (f.is_zero()) return Poly(F);
  const std::size_t d = *f.degree();
  if (n < d) throw DomainError("homogenizing degree below polynomial degree");
  std::vector<Poly> den_pow{Poly::constant(FieldElement::one(F))};
  for (std::size_t i = 1; i <= n; ++i) den_pow.push_back(den_pow.back() * den);
  Poly acc(F);
  for (std::size_t i = n + 1; i-- > 0;) {
    acc = acc * num;
    const FieldElement fi = f.coeff(i);
    if (!fi.is_zero()) acc += scale(den_pow[n - i], fi);
  }
  return acc;
}

struct ClearedComposite {
  /// (c x + d)^deg f * f((a x + b) / (c x + d)), nominal degree deg f.
  Poly poly;
  /// Coefficient of x^(deg f); zero when the degree dropped.
  FieldElement nominal_leading;
};

inline ClearedComposite compose_moebius(const Poly& f, const Mat2& m) {
  require_same_field(f.field(), m.field());
  if (f.is_zero()) throw DomainError("compose_moebius of the zero polynomial");
  const std::size_t d = *f.degree();
  Poly h = homogeneous_substitute(f, Poly::linear(m.a, m.b), Poly::linear(m.c, m.d), d);
  FieldElement lead = h.coeff(d);
  return {std::move(h), std::move(lead)};
}

inline ClearedComposite compose_moebius(const Poly& f, const Moebius& mu) { return compose_moebius(f, mu.matrix()); }

/// If f = e * g for a nonzero scalar e, returns e.
inline std::optional<FieldElement> proportionality(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  if (f.is_zero() || g.is_zero() || f.degree() != g.degree()) return std::nullopt;
  const FieldElement e = f.leading() / g.leading();
  if (f == scale(g, e)) return e;
  return std::nullopt;
}

inline bool is_separable(const Poly& f) {
  if (f.is_zero()) throw DomainError("separability of the zero polynomial");
  return *gcd(f, derivative(f)).degree() == 0;
}

/// g with g^p = f, for f whose derivative vanishes.
inline Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F->p();
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    FieldElement a = f.coeffs()[i];
    for (unsigned k = 1; k < F->m(); ++k) a = frobenius(a);  // a^(p^(m-1)) = a^(1/p)
    c.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (i % p && !f.coeffs()[i].is_zero()) throw DomainError("polynomial is not a p-th power");
  return Poly(F, std::move(c));
}

/// Product of the distinct monic irreducible factors of a nonzero f.
inline Poly radical(const Poly& f) {
  if (f.is_zero()) throw DomainError("radical of the zero polynomial");
  const Poly fm = make_monic(f);
  if (*fm.degree() == 0) return fm;
  const Poly df = derivative(fm);
  if (df.is_zero()) return radical(pth_root(fm));
  const Poly g = gcd(fm, df);
  const Poly w = fm / g;  // factors of multiplicity prime to p
  Poly rest = g;
  for (Poly c = gcd(rest, w); *c.degree() > 0; c = gcd(rest, w)) rest = rest / c;
  if (*rest.degree() == 0) return w;
  return w * radical(pth_root(make_monic(rest)));
}

/// x^(p^k) mod f, by k successive p-th powers.
inline Poly modpow_frobenius(const Poly& f, unsigned k) {
  if (f.is_zero() || *f.degree() == 0) throw DomainError("modpow_frobenius needs a nonconstant modulus");
  Poly h = Poly::x(f.field()) % f;
  for (unsigned i = 0; i < k; ++i) h = powmod(h, f.field()->p(), f);
  return h;
}

/// Smallest k >= 1 such that the roots of the separable f lie in F_{Q^k},
/// Q = |field of f|, i.e. f divides x^(Q^k) - x.
inline unsigned splitting_degree_over(const Poly& f, unsigned cap) {
  if (f.is_zero()) throw DomainError("splitting degree of the zero polynomial");
  if (*f.degree() == 0) return 1;
  if (!is_separable(f)) throw DomainError("splitting degree needs a separable polynomial");
  const unsigned m = f.field()->m();
  const Poly x = Poly::x(f.field()) % f;
  Poly h = x;
  for (unsigned k = 1; k <= cap; ++k) {
    for (unsigned i = 0; i < m; ++i) h = powmod(h, f.field()->p(), f);
    if (gcd(f, h - x).degree() == f.degree()) return k;
  }
  throw CapExceeded("splitting degree above " + std::to_string(cap));
}

/// Degree over F_p of the splitting field of f, whose coefficients lie in F_p.
inline unsigned splitting_degree(const Poly& f, const Limits& limits = {}) {
  for (const auto& c : f.coeffs())
    if (!c.in_prime_field()) throw DomainError("splitting_degree needs prime-field coefficients");
  if (f.field()->m() != 1) {
    std::vector<std::int64_t> c;
    for (const auto& x : f.coeffs()) c.push_back(x.constant_term());
    return splitting_degree_over(Poly::from_ints(make_field(f.field()->p(), 1), c), limits.extension_cap);
  }
  return splitting_degree_over(f, limits.extension_cap);
}

/// Largest k with (x - r)^k dividing the nonzero f.
inline unsigned root_multiplicity(Poly f, const FieldElement& r) {
  if (f.is_zero()) throw DomainError("root multiplicity in the zero polynomial");
  const Poly lin = Poly::linear(FieldElement::one(r.field()), -r);
  unsigned k = 0;
  for (;;) {
    DivMod qr = divmod(f, lin);
    if (!qr.remainder.is_zero()) return k;
    f = std::move(qr.quotient);
    ++k;
  }
}

namespace detail {

// (x + a)^((Q - 1) / 2) mod g for Q = p^m, via
// (Q - 1) / 2 = ((p - 1) / 2) (1 + p + ... + p^(m-1)).
inline Poly half_power(const FieldElement& a, const Poly& g) {
  const Field& F = g.field();
  const std::uint32_t p = F->p();
  Poly cur = Poly::linear(FieldElement::one(F), a) % g;
  Poly norm = cur;
  for (unsigned i = 1; i < F->m(); ++i) {
    cur = powmod(cur, p, g);
    norm = mulmod(norm, cur, g);
  }
  return powmod(norm, (p - 1) / 2, g);
}

// Equal-degree splitting of a monic squarefree product of linear factors.
inline void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<FieldElement>& out, bool first_only) {
  const std::size_t d = *g.degree();
  if (d == 0) return;
  if (d == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  const Poly one = Poly::constant(FieldElement::one(g.field()));
  for (;;) {
    const FieldElement a = FieldElement::random(g.field(), rng);
    Poly u = gcd(g, half_power(a, g) - one);
    const std::size_t du = *u.degree();
    if (du == 0 || du == d) continue;
    Poly v = make_monic(g / u);
    if (first_only) {
      split_linear(du <= d - du ? u : v, rng, out, true);
      return;
    }
    split_linear(u, rng, out, false);
    split_linear(v, rng, out, false);
    return;
  }
}

inline Poly linear_part(const Poly& f) {
  const Poly xq = modpow_frobenius(f, f.field()->m());
  return gcd(f, xq - Poly::x(f.field()));
}

}  // namespace detail

/// Distinct roots of a nonzero f lying in its own field, in canonical order.
/// Exhaustive evaluation for small fields (and for any enumerable field of
/// characteristic 2), otherwise Cantor-Zassenhaus splitting of gcd(f, x^Q - x).
inline std::vector<FieldElement> roots_of(const Poly& f, const Limits& limits = {}) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<FieldElement> roots;
  if (*f.degree() == 0) return roots;
  const Field& F = f.field();
  auto q = F->size();
  const std::uint64_t exhaustive_up_to = F->p() == 2 ? limits.enumeration_cap : std::min<std::uint64_t>(limits.enumeration_cap, 1u << 12);
  if (q && *q <= exhaustive_up_to) {
    for (std::uint64_t i = 0; i < *q; ++i) {
      FieldElement x = FieldElement::from_index(F, i);
      if (eval(f, x).is_zero()) roots.push_back(std::move(x));
    }
    return roots;
  }
  if (F->p() == 2) throw CapExceeded("root finding beyond the enumeration cap needs odd characteristic");
  const Poly g = detail::linear_part(make_monic(f));
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  detail::split_linear(g, rng, roots, false);
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// One root of f in its field, if any (not necessarily the smallest).
inline std::optional<FieldElement> find_one_root(const Poly& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (*f.degree() == 0) return std::nullopt;
  const Poly g = detail::linear_part(make_monic(f));
  if (*g.degree() == 0) return std::nullopt;
  std::vector<FieldElement> out;
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  detail::split_linear(g, rng, out, true);
  return out.front();
}

/// Smallest r with r^n = e, for fields of any size.
inline std::optional<FieldElement> nth_root_any(const FieldElement& e, std::uint64_t n, const Limits& limits = {}) {
  if (n == 0) throw DomainError("nth_root requires n >= 1");
  if (e.is_zero()) return e;
  const Field& F = e.field();
  if (auto q = F->size(); q && *q <= std::min<std::uint64_t>(limits.enumeration_cap, 1u << 12))
    return nth_root(e, n, limits);
  Poly f = Poly::monomial(FieldElement::one(F), n) - Poly::constant(e);
  Limits no_enum = limits;
  no_enum.enumeration_cap = 0;
  auto r = roots_of(f, no_enum);
  if (r.empty()) return std::nullopt;
  return r.front();
}

/// Fixed embedding of a subfield: the source generator goes to the smallest
/// root of the source defining polynomial in the target.
struct FieldEmbedding {
  Field source, target;
  std::vector<FieldElement> generator_powers;  // images of x^i, i < m_source
};

inline FieldEmbedding make_embedding(const Field& source, const Field& target, const Limits& limits = {}) {
  if (source->p() != target->p()) throw FieldMismatch("embedding between different characteristics");
  if (target->m() % source->m() != 0)
    throw FieldMismatch(source->name() + " does not embed in " + target->name());
  FieldEmbedding emb{source, target, {}};
  if (source->m() == 1) {
    emb.generator_powers.push_back(FieldElement::one(target));
    return emb;
  }
  std::vector<std::int64_t> c(source->defining_poly().begin(), source->defining_poly().end());
  auto roots = roots_of(Poly::from_ints(target, c), limits);
  if (roots.empty()) throw InvariantBreach("defining polynomial has no root in the target field");
  FieldElement pw = FieldElement::one(target);
  for (unsigned i = 0; i < source->m(); ++i) {
    emb.generator_powers.push_back(pw);
    pw *= roots.front();
  }
  return emb;
}

inline FieldElement embed(const FieldElement& e, const FieldEmbedding& emb) {
  require_same_field(e.field(), emb.source);
  FieldElement r = FieldElement::zero(emb.target);
  auto c = e.coords();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) r += emb.generator_powers[i] * FieldElement::from_int(emb.target, c[i]);
  return r;
}

inline FieldElement embed(const FieldElement& e, const Field& target, const Limits& limits = {}) {
  if (same_field(e.field(), target)) return e;
  if (e.in_prime_field()) return FieldElement::from_int(target, e.constant_term());
  return embed(e, make_embedding(e.field(), target, limits));
}

inline Poly embed(const Poly& f, const FieldEmbedding& emb) {
  std::vector<FieldElement> c;
  for (const auto& x : f.coeffs()) c.push_back(embed(x, emb));
  return Poly(emb.target, std::move(c));
}

inline Poly embed(const Poly& f, const Field& target, const Limits& limits = {}) {
  if (same_field(f.field(), target)) return f;
  bool prime = true;
  for (const auto& x : f.coeffs()) prime = prime && x.in_prime_field();
  if (prime) {
    std::vector<FieldElement> c;
    for (const auto& x : f.coeffs()) c.push_back(FieldElement::from_int(target, x.constant_term()));
    return Poly(target, std::move(c));
  }
  return embed(f, make_embedding(f.field(), target, limits));
}

inline Mat2 embed(const Mat2& m, const FieldEmbedding& emb) {
  return {embed(m.a, emb), embed(m.b, emb), embed(m.c, emb), embed(m.d, emb)};
}

/// Roots of f in `field` (into which the coefficients of f embed), in canonical order.
inline std::vector<FieldElement> roots_in_field(const Poly& f, const Field& field, const Limits& limits = {}) {
  return roots_of(embed(f, field, limits), limits);
}

}  // namespace chebcurve
