#pragma once

// Finite fields F_p and F_{p^m} in a power basis over a canonical defining
// polynomial. Elements carry a shared handle to their field; arithmetic between
// elements of different fields throws FieldMismatch.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chebcurve/error.hpp"

namespace chebcurve {

/// Limits shared by every search in the library.
struct Limits {
  /// Largest field size that may be enumerated element by element.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
  /// Largest extension degree over F_p that splitting searches may reach.
  unsigned extension_cap = 24;
};

inline constexpr std::uint32_t kMaxCharacteristic = 1u << 16;
inline constexpr unsigned kMaxExtensionDegree = 64;

namespace detail {

using RawPoly = std::vector<std::uint32_t>;  // low degree first, trimmed

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inversion of zero");
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

inline void trim(RawPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  RawPoly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t t = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - t) * m[j]) % p);
    trim(a);
  }
  return a;
}

inline RawPoly raw_sub(RawPoly a, const RawPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
  }
  return a;
}

inline RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& m, std::uint32_t p) {
  RawPoly r = raw_mod({1}, m, p);
  base = raw_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = raw_mod(raw_mul(r, base, p), m, p);
    base = raw_mod(raw_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// gcd(f, x^{p^i} - x) = 1 for i <= m/2 and x^{p^m} = x mod f.
inline bool raw_is_irreducible(const RawPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const RawPoly x{0, 1};
  RawPoly h = raw_mod(x, f, p);
  for (std::size_t i = 1; i <= m; ++i) {
    h = raw_powmod(h, p, f, p);
    if (2 * i <= m) {
      RawPoly g = raw_gcd(f, raw_sub(h, x, p), p);
      if (g.size() != 1) return false;
    }
  }
  return h == raw_mod(x, f, p);
}

}  // namespace detail

class FieldDesc {
 public:
  FieldDesc(std::uint32_t p, std::vector<std::uint32_t> defining_poly)
      : p_(p), poly_(std::move(defining_poly)) {
    m_ = static_cast<unsigned>(poly_.size() - 1);
    neg_poly_.resize(m_);
    for (unsigned j = 0; j < m_; ++j) neg_poly_[j] = (p_ - poly_[j]) % p_;
  }

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  /// Monic, low degree first; `x` for prime fields.
  const std::vector<std::uint32_t>& defining_poly() const { return poly_; }
  const std::vector<std::uint32_t>& negated_tail() const { return neg_poly_; }

  /// Number of elements when it fits in 64 bits.
  std::optional<std::uint64_t> size() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m_; ++i) {
      if (q > UINT64_MAX / p_) return std::nullopt;
      q *= p_;
    }
    return q;
  }

  std::string name() const {
    return m_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(p_) + "^" + std::to_string(m_);
  }

  bool operator==(const FieldDesc& o) const { return p_ == o.p_ && poly_ == o.poly_; }

 private:
  std::uint32_t p_;
  unsigned m_;
  std::vector<std::uint32_t> poly_;
  std::vector<std::uint32_t> neg_poly_;
};

using Field = std::shared_ptr<const FieldDesc>;

/// F_{p^m} with the lexicographically first monic irreducible of degree m
/// (coefficient tuples (c_0, c_1, ..., c_{m-1}) compared as integers, c_0 first).
inline Field make_field_uncached(std::uint32_t p, unsigned m) {
  if (!detail::is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw CapExceeded("characteristic above " + std::to_string(kMaxCharacteristic));
  if (m < 1) throw DomainError("extension degree must be positive");
  if (m > kMaxExtensionDegree) throw CapExceeded("extension degree above " + std::to_string(kMaxExtensionDegree));
  if (m == 1) return std::make_shared<const FieldDesc>(p, std::vector<std::uint32_t>{0, 1});
  std::vector<std::uint32_t> tail(m, 0);  // odometer over (c_0, ..., c_{m-1}), c_{m-1} fastest
  tail[0] = 1;                            // c_0 = 0 means x divides f
  for (;;) {
    detail::RawPoly f(tail.begin(), tail.end());
    f.push_back(1);
    if (detail::raw_is_irreducible(f, p)) return std::make_shared<const FieldDesc>(p, std::move(f));
    unsigned k = m;
    while (k > 0) {
      --k;
      if (++tail[k] < p) break;
      tail[k] = 0;
      if (k == 0) throw InvariantBreach("no irreducible polynomial found");
    }
  }
}

/// As make_field_uncached, memoized per process.
inline Field make_field(std::uint32_t p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, Field> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
  }
  Field f = make_field_uncached(p, m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::pair{p, m}, std::move(f)).first->second;
}

inline bool same_field(const Field& a, const Field& b) { return a == b || *a == *b; }

inline void require_same_field(const Field& a, const Field& b) {
  if (!same_field(a, b)) throw FieldMismatch("operands in " + a->name() + " and " + b->name());
}

class FieldElement {
 public:
  FieldElement(Field field, std::vector<std::uint32_t> coords) : field_(std::move(field)), c_(std::move(coords)) {}

  static FieldElement zero(const Field& f) { return FieldElement(f, std::vector<std::uint32_t>(f->m(), 0)); }
  static FieldElement one(const Field& f) { return from_int(f, 1); }

  static FieldElement from_int(const Field& f, std::int64_t v) {
    const std::int64_t p = f->p();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    std::vector<std::uint32_t> c(f->m(), 0);
    c[0] = static_cast<std::uint32_t>(r);
    return FieldElement(f, std::move(c));
  }

  static FieldElement from_coords(const Field& f, std::vector<std::uint32_t> c) {
    if (c.size() > f->m()) throw DomainError("too many coordinates for " + f->name());
    c.resize(f->m(), 0);
    for (auto& x : c) x %= f->p();
    return FieldElement(f, std::move(c));
  }

  /// Generator x of the power basis.
  static FieldElement generator(const Field& f) {
    if (f->m() == 1) return zero(f);
    std::vector<std::uint32_t> c(f->m(), 0);
    c[1] = 1;
    return FieldElement(f, std::move(c));
  }

  /// Inverse of index(): base-p digits, lowest coordinate first.
  static FieldElement from_index(const Field& f, std::uint64_t idx) {
    std::vector<std::uint32_t> c(f->m(), 0);
    for (unsigned i = 0; i < f->m(); ++i) {
      c[i] = static_cast<std::uint32_t>(idx % f->p());
      idx /= f->p();
    }
    return FieldElement(f, std::move(c));
  }

  static FieldElement random(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->p() - 1);
    std::vector<std::uint32_t> c(f->m());
    for (auto& x : c) x = dist(rng);
    return FieldElement(f, std::move(c));
  }

  const Field& field() const { return field_; }
  std::span<const std::uint32_t> coords() const { return c_; }

  bool is_zero() const {
    for (auto x : c_)
      if (x) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i]) return false;
    return true;
  }
  bool in_prime_field() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i]) return false;
    return true;
  }
  /// Constant coordinate; the value itself for prime-field elements.
  std::uint32_t constant_term() const { return c_[0]; }

  /// Position in the canonical order: sum of c_i p^i.
  std::uint64_t index() const {
    std::uint64_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * field_->p() + c_[i];
    return r;
  }

  std::string to_string() const {
    if (c_.size() == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + "]";
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_ == b.c_ && same_field(a.field_, b.field_);
  }

  // Canonical order: highest coordinate compared first, so the prime field
  // comes first and 1 is the smallest nonzero element.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return a.c_.size() <=> b.c_.size();
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    const std::uint32_t p = a.field_->p();
    std::vector<std::uint32_t> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::uint32_t s = a.c_[i] + b.c_[i];
      c[i] = s >= p ? s - p : s;
    }
    return FieldElement(a.field_, std::move(c));
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    const std::uint32_t p = a.field_->p();
    std::vector<std::uint32_t> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p - b.c_[i];
    return FieldElement(a.field_, std::move(c));
  }

  friend FieldElement operator-(const FieldElement& a) {
    const std::uint32_t p = a.field_->p();
    std::vector<std::uint32_t> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] ? p - a.c_[i] : 0;
    return FieldElement(a.field_, std::move(c));
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    const FieldDesc& F = *a.field_;
    const std::uint64_t p = F.p();
    const unsigned m = F.m();
    if (m == 1) return FieldElement(a.field_, {static_cast<std::uint32_t>(std::uint64_t{a.c_[0]} * b.c_[0] % p)});
    // p < 2^16 and m <= 64 keep every accumulator below 2^40.
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc;
    std::fill_n(acc.begin(), 2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i) {
      const std::uint64_t ai = a.c_[i];
      if (!ai) continue;
      for (unsigned j = 0; j < m; ++j) acc[i + j] += ai * b.c_[j];
    }
    const auto& neg = F.negated_tail();
    for (unsigned k = 2 * m - 2; k >= m; --k) {
      const std::uint64_t t = acc[k] % p;
      if (!t) continue;
      for (unsigned j = 0; j < m; ++j) acc[k - m + j] += t * neg[j];
    }
    std::vector<std::uint32_t> c(m);
    for (unsigned i = 0; i < m; ++i) c[i] = static_cast<std::uint32_t>(acc[i] % p);
    return FieldElement(a.field_, std::move(c));
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inv(b); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw DomainError("inversion of zero");
    const FieldDesc& F = *a.field_;
    const std::uint32_t p = F.p();
    if (F.m() == 1) return FieldElement(a.field_, {detail::inv_mod(a.c_[0], p)});
    // Extended Euclid in F_p[x]: track u with u * a = r (mod f).
    detail::RawPoly r0 = F.defining_poly(), r1(a.c_.begin(), a.c_.end());
    detail::trim(r1);
    detail::RawPoly u0, u1{1};
    while (r1.size() > 1) {
      // one division step r0 = q r1 + rem
      detail::RawPoly q(r0.size() - r1.size() + 1, 0), rem = r0;
      const std::uint32_t li = detail::inv_mod(r1.back(), p);
      while (rem.size() >= r1.size()) {
        const std::size_t shift = rem.size() - r1.size();
        const std::uint64_t t = std::uint64_t{rem.back()} * li % p;
        q[shift] = static_cast<std::uint32_t>(t);
        for (std::size_t j = 0; j < r1.size(); ++j)
          rem[shift + j] = static_cast<std::uint32_t>((rem[shift + j] + (p - t) * r1[j]) % p);
        detail::trim(rem);
      }
      detail::trim(q);
      detail::RawPoly u2 = detail::raw_sub(u0, detail::raw_mul(q, u1, p), p);
      r0 = std::move(r1);
      r1 = std::move(rem);
      u0 = std::move(u1);
      u1 = std::move(u2);
    }
    // r1 is a nonzero constant since f is irreducible.
    const std::uint32_t ci = detail::inv_mod(r1[0], p);
    std::vector<std::uint32_t> c(F.m(), 0);
    for (std::size_t i = 0; i < u1.size(); ++i) c[i] = static_cast<std::uint32_t>(std::uint64_t{u1[i]} * ci % p);
    return FieldElement(a.field_, std::move(c));
  }

 private:
  Field field_;
  std::vector<std::uint32_t> c_;
};

/// Square-and-multiply; pow(e, 0) = 1 for every e.
inline FieldElement pow(const FieldElement& e, std::uint64_t n) {
  FieldElement r = FieldElement::one(e.field());
  FieldElement b = e;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

inline FieldElement frobenius(const FieldElement& e) { return pow(e, e.field()->p()); }

inline std::uint64_t enumerable_size(const Field& f, const Limits& limits) {
  auto q = f->size();
  if (!q || *q > limits.enumeration_cap)
    throw CapExceeded(f->name() + " exceeds the enumeration cap of " + std::to_string(limits.enumeration_cap));
  return *q;
}

/// Smallest r (canonical order) with r^n = e, found by exhaustive search.
inline std::optional<FieldElement> nth_root(const FieldElement& e, std::uint64_t n, const Limits& limits = {}) {
  if (n == 0) throw DomainError("nth_root requires n >= 1");
  if (e.is_zero()) return e;
  const std::uint64_t q = enumerable_size(e.field(), limits);
  const std::uint64_t g = std::gcd(n, q - 1);
  if (!pow(e, (q - 1) / g).is_one()) return std::nullopt;
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    FieldElement r = FieldElement::from_index(e.field(), idx);
    if (pow(r, n) == e) return r;
  }
  throw InvariantBreach("power-residue test passed but no root found");
}

}  // namespace chebcurve
