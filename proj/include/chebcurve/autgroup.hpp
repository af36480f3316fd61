#pragma once

// Automorphisms of y^m = g(x): lifting Moebius maps that permute the zeros
// of g, assembling Aut(C_d) from the kernel {y -> zeta y} and the image in
// PGL(2), the explicit automorphisms and isomorphisms of the Chebyshev
// family, and the stabilizer scan over a (d, p) grid.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "chebcurve/chebyshev.hpp"
#include "chebcurve/ff.hpp"
#include "chebcurve/moebius.hpp"
#include "chebcurve/plane_curve.hpp"
#include "chebcurve/poly.hpp"

namespace chebcurve {

/// (x, y) -> ((a x + b)/(c x + delta), zeta e_root y / (c x + delta)^t) for
/// the matrix `mu` as stored; rescaling mu by s rescales the map's y-part by
/// s^-t, so the matrix is kept unnormalized.
struct CurveAutomorphism {
  Mat2 mu;
  FieldElement zeta;
  FieldElement e_root;
  unsigned y_weight = 1;  // t = deg g / m

  const Field& field() const { return mu.field(); }
  FieldElement lambda() const { return zeta * e_root; }
  Moebius shadow() const { return Moebius::from_matrix(mu); }

  /// Matrix normalized as a Moebius map, with lambda rescaled to match.
  std::pair<Moebius, FieldElement> canonical() const {
    const FieldElement& lead = !mu.a.is_zero() ? mu.a : mu.b;
    return {Moebius::from_matrix(mu), lambda() * inv(pow(lead, y_weight))};
  }

  std::string to_string() const {
    const Moebius m = shadow();
    return "x -> " + m.to_string() + ", y -> " + canonical().second.to_string() + " y / (c x + d)^" +
           std::to_string(y_weight);
  }
};

/// a o b (apply b first).
inline CurveAutomorphism compose(const CurveAutomorphism& a, const CurveAutomorphism& b) {
  require_same_field(a.field(), b.field());
  if (a.y_weight != b.y_weight) throw DomainError("automorphisms of different curves");
  return {a.mu * b.mu, a.zeta * b.zeta, a.e_root * b.e_root, a.y_weight};
}

inline bool same_map(const CurveAutomorphism& a, const CurveAutomorphism& b) {
  return a.y_weight == b.y_weight && a.canonical() == b.canonical();
}

inline bool is_identity(const CurveAutomorphism& a) {
  const Mat2& m = a.mu;
  return m.b.is_zero() && m.c.is_zero() && m.a == m.d && a.lambda() == pow(m.a, a.y_weight);
}

inline std::uint64_t order(const CurveAutomorphism& a, std::uint64_t cap = 1u << 20) {
  CurveAutomorphism x = a;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (is_identity(x)) return n;
    x = compose(x, a);
  }
  throw CapExceeded("automorphism order above " + std::to_string(cap));
}

/// Whether `aut` maps y^m = g(x) to itself: (c x + delta)^deg g g(mu(x)) = lambda^m g(x).
inline bool verify_automorphism(unsigned m, const Poly& g, const CurveAutomorphism& aut, const Limits& limits = {}) {
  if (g.is_zero() || aut.y_weight * m != *g.degree()) return false;
  const Poly gK = embed(g, aut.field(), limits);
  const auto h = compose_moebius(gK, aut.mu);
  return h.poly == scale(gK, pow(aut.lambda(), m));
}

/// e with (c x + delta)^deg g g(mu(x)) = e g(x), if mu permutes the zeros of g.
inline std::optional<FieldElement> lift_scalar(const Poly& g, const Mat2& mu) {
  return proportionality(compose_moebius(g, mu).poly, g);
}

/// Lift of mu to y^m = g(x), with zeta = 1 and the smallest m-th root of e,
/// over the smallest extension of the field of mu (degree at most 12) that contains one.
inline CurveAutomorphism lift_moebius(unsigned m, const Poly& g, const Moebius& mu, const Limits& limits = {}) {
  const Field& K = mu.field();
  if (g.is_zero() || *g.degree() % m != 0) throw DomainError("exponent must divide deg g");
  const unsigned t = static_cast<unsigned>(*g.degree() / m);
  const Poly gK = embed(g, K, limits);
  const auto e = lift_scalar(gK, mu.matrix());
  if (!e) throw HypothesisViolation(mu.to_string() + " does not permute the zeros of g");
  for (unsigned j = 1; j <= 12; ++j) {
    const Field L = j == 1 ? K : make_field(K->p(), K->m() * j);
    const FieldEmbedding emb = make_embedding(K, L, limits);
    if (auto r = nth_root_any(embed(*e, emb), m, limits))
      return {embed(mu.matrix(), emb), FieldElement::one(L), *r, t};
  }
  throw InvariantBreach("no " + std::to_string(m) + "-th root of " + e->to_string() + " within 12 extensions");
}

struct InflectionCase {
  bool fermat = false;
  unsigned exponent = 0;  // 2d - 1 = p^exponent when fermat
  std::string name() const { return fermat ? "FermatCase(" + std::to_string(exponent) + ")" : "Generic"; }
};

inline InflectionCase inflection_case(unsigned d, std::uint32_t p) {
  if (d < 4 || p == 2 || d % p == 0) throw HypothesisViolation("inflection_case needs d >= 4 and p not dividing 2d");
  if (auto m = exceptional_exponent(d, p)) return {true, *m};
  return {};
}

struct FermatIso {
  unsigned d = 0;
  std::uint32_t p = 0;
  std::uint64_t q = 0;  // 2d = q + 1
  Field field;          // F_{q^2}
  FieldElement a;       // a^d = 2
  bool identity = false;
  /// Points (u, v) of v^d = u^d + 1 and their images (x, y) on y^d = phi_d(x).
  std::vector<std::pair<std::pair<FieldElement, FieldElement>, std::pair<FieldElement, FieldElement>>> samples;
  bool samples_ok = false;
  bool verified() const { return identity && samples_ok && !samples.empty(); }
};

/// (u, v) -> ((2u + 2)/(u - 1), a v/(u - 1)) from the Fermat curve v^d = u^d + 1 onto C_d, 2d = q + 1.
inline FermatIso fermat_iso(unsigned d, std::uint32_t p, const Limits& limits = {}, std::size_t sample_count = 8) {
  const auto r = exceptional_exponent(d, p);
  if (p == 2 || !r) throw HypothesisViolation("fermat_iso needs 2d = q + 1 for a power q of p");
  const Field K = make_field(p, 2 * *r);
  auto a = nth_root_any(FieldElement::from_int(K, 2), d, limits);
  if (!a) throw InvariantBreach("2 has no d-th root in " + K->name());
  FermatIso iso{d, p, 2 * std::uint64_t{d} - 1, K, *a, false, {}, false};
  iso.identity = verify_prop31_identity(d, p);

  const Poly phi = cheb_poly(d, K);
  const FieldElement one = FieldElement::one(K), two = FieldElement::from_int(K, 2);
  iso.samples_ok = true;
  const std::uint64_t q2 = std::min<std::uint64_t>(*K->size(), 1u << 16);
  for (std::uint64_t i = 0; i < q2 && iso.samples.size() < sample_count; ++i) {
    const FieldElement u = FieldElement::from_index(K, i);
    if (u == one) continue;
    const auto v = nth_root_any(pow(u, d) + one, d, limits);
    if (!v) continue;
    const FieldElement x = (two * u + two) / (u - one), y = iso.a * *v / (u - one);
    iso.samples_ok = iso.samples_ok && pow(y, d) == eval(phi, x);
    iso.samples.push_back({{u, *v}, {x, y}});
  }
  return iso;
}

struct AutReport {
  unsigned d = 0;
  std::uint32_t p = 0;
  InflectionCase inflection;
  std::uint64_t kernel_order = 0;
  /// Image in PGL(2); only computed in the generic case.
  std::optional<GroupFingerprint> image;
  std::vector<Moebius> image_elements;
  std::uint64_t total_order = 0;
  std::string structure_label;
  Field splitting_field;  // of g
  Field lift_field;       // contains every lift and a primitive d-th root of unity
  std::vector<CurveAutomorphism> witnesses;
  std::optional<bool> kernel_central;
  std::optional<bool> abelian;
  /// Whether some lift of the image is a subgroup (complement to the kernel).
  std::optional<bool> extension_splits;
  std::optional<FermatIso> fermat;
  bool custom_g = false;
  std::vector<std::string> notes;
};

namespace detail {

inline bool is_prime_power_of(std::uint64_t v, std::uint64_t p) {
  if (v < p) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

// Primitive n-th root of unity in K (n | |K| - 1).
inline FieldElement primitive_root_of_unity(unsigned n, const Field& K, const Limits& limits) {
  const FieldElement one = FieldElement::one(K);
  if (n == 1) return one;
  Limits no_enum = limits;
  no_enum.enumeration_cap = 0;
  const auto primes = [&] {
    std::vector<unsigned> r;
    unsigned x = n;
    for (unsigned l = 2; l * l <= x; ++l)
      if (x % l == 0) {
        r.push_back(l);
        while (x % l == 0) x /= l;
      }
    if (x > 1) r.push_back(x);
    return r;
  }();
  const Poly f = Poly::monomial(one, n) - Poly::constant(one);
  for (const auto& z : K->p() == 2 ? roots_of(f, limits) : roots_of(f, no_enum)) {
    bool primitive = true;
    for (unsigned l : primes) primitive = primitive && !pow(z, n / l).is_one();
    if (primitive) return z;
  }
  throw InvariantBreach("no primitive " + std::to_string(n) + "-th root of unity in " + K->name());
}

// Size of the subgroup generated by `gens`, or nullopt once it exceeds `limit`.
inline std::optional<std::size_t> generated_order(const std::vector<CurveAutomorphism>& gens, std::size_t limit) {
  using Key = std::pair<Moebius, FieldElement>;
  std::set<Key> seen;
  std::vector<CurveAutomorphism> frontier;
  CurveAutomorphism id = gens.front();
  id.mu = Mat2::identity(id.field());
  id.zeta = id.e_root = FieldElement::one(id.field());
  seen.insert(id.canonical());
  frontier.push_back(id);
  while (!frontier.empty()) {
    CurveAutomorphism x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      CurveAutomorphism y = compose(g, x);
      if (seen.insert(y.canonical()).second) {
        if (seen.size() > limit) return std::nullopt;
        frontier.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

// Small generating set of a group of Moebius maps, greedily.
inline std::vector<std::size_t> greedy_generators(const std::vector<Moebius>& group) {
  std::vector<std::size_t> gens;
  std::set<Moebius> span{Moebius::identity(group.front().field())};
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (span.count(group[i])) continue;
    gens.push_back(i);
    std::vector<Moebius> todo(span.begin(), span.end());
    while (!todo.empty()) {
      Moebius x = todo.back();
      todo.pop_back();
      for (std::size_t gi : gens) {
        Moebius y = compose(group[gi], x);
        if (span.insert(y).second) todo.push_back(y);
      }
    }
  }
  return gens;
}

}  // namespace detail

/// Aut of y^d = g(x) (g = phi_d by default) via the exact sequence
/// 1 -> {y -> zeta y} -> Aut -> stabilizer of the zeros of g in PGL(2) -> 1.
/// In the Fermat case the sequence does not apply and the order 6 d^2 of
/// the Fermat curve's group is reported instead, with the isomorphism.
inline AutReport compute_aut(unsigned d, std::uint32_t p, const std::optional<Poly>& g_in = std::nullopt,
                             const Limits& limits = {}) {
  if (p == 2 || d % p == 0) throw HypothesisViolation("compute_aut needs p not dividing 2d");
  AutReport rep;
  rep.d = d;
  rep.p = p;
  rep.kernel_order = d;
  rep.custom_g = g_in.has_value();
  const Field Fp = make_field(p, 1);
  const Poly g = g_in ? *g_in : cheb_poly(d, Fp);
  if (g.is_zero() || *g.degree() != d) throw HypothesisViolation("g must have degree d");
  if (!is_separable(g)) throw HypothesisViolation("g must be separable");
  if (g.field()->p() != p) throw FieldMismatch("g is not defined in characteristic " + std::to_string(p));

  if (!rep.custom_g && d >= 4) {
    rep.inflection = inflection_case(d, p);
    if (rep.inflection.fermat) {
      rep.total_order = 6 * std::uint64_t{d} * d;
      rep.structure_label = "(Z/" + std::to_string(d) + " x Z/" + std::to_string(d) + ") x| S3";
      rep.fermat = fermat_iso(d, p, limits);
      rep.splitting_field = make_field(p, cheb_splitting_degree(d, p));
      rep.notes.push_back("isomorphic to the Fermat curve of degree " + std::to_string(d) +
                          "; order taken from the Fermat group, not searched");
      if (!rep.fermat->verified()) throw InvariantBreach("Fermat isomorphism failed verification");
      return rep;
    }
  }
  if (rep.custom_g) rep.notes.push_back("total-inflection hypothesis for custom g is not checked");

  // Zeros of g and their stabilizer.
  const unsigned k0 = g.field()->m();
  const unsigned k = k0 * splitting_degree_over(g, limits.extension_cap > k0 ? limits.extension_cap / k0 : 1);
  const Field K = make_field(p, k);
  rep.splitting_field = K;
  const std::vector<FieldElement> zeros =
      rep.custom_g ? roots_in_field(g, K, limits) : chebyshev_roots(d, K, limits);
  if (zeros.size() != d) throw InvariantBreach("g does not split in " + K->name());
  if (d < 3) throw DomainError("stabilizer of fewer than three points is infinite");
  std::vector<ProjPoint1> S;
  for (const auto& z : zeros) S.push_back(ProjPoint1::finite(z));
  rep.image_elements = setwise_stabilizer(S);
  rep.image = fingerprint(rep.image_elements);
  rep.total_order = std::uint64_t{d} * rep.image->order;

  // A field holding a primitive d-th root of unity and a d-th root of every e.
  const Poly gK = embed(g, K, limits);
  std::vector<FieldElement> scalars;
  for (const auto& mu : rep.image_elements) {
    auto e = lift_scalar(gK, mu.matrix());
    if (!e) throw InvariantBreach("stabilizer element " + mu.to_string() + " has no lift scalar");
    scalars.push_back(*e);
  }
  Field L;
  for (unsigned j = 1; j <= 12 && !L; ++j) {
    const Field cand = j == 1 ? K : make_field(p, k * j);
    const auto q = cand->size();
    if (!q || *q > (std::uint64_t{1} << 62)) throw CapExceeded("lift field beyond 64-bit size");
    if ((*q - 1) % d != 0) continue;
    const FieldEmbedding emb = make_embedding(K, cand, limits);
    bool ok = true;
    for (const auto& e : scalars) ok = ok && pow(embed(e, emb), (*q - 1) / d).is_one();
    if (ok) L = cand;
  }
  if (!L) throw InvariantBreach("no lift field within 12 extensions of " + K->name());
  rep.lift_field = L;
  const FieldEmbedding emb = make_embedding(K, L, limits);
  const FieldElement zeta = detail::primitive_root_of_unity(d, L, limits);
  const CurveAutomorphism kernel_gen{Mat2::identity(L), zeta, FieldElement::one(L), 1};

  rep.kernel_central = true;
  for (std::size_t i = 0; i < rep.image_elements.size(); ++i) {
    const auto r = nth_root_any(embed(scalars[i], emb), d, limits);
    if (!r) throw InvariantBreach("missing d-th root in the lift field");
    CurveAutomorphism w{embed(rep.image_elements[i].matrix(), emb), FieldElement::one(L), *r, 1};
    if (!verify_automorphism(d, g, w, limits))
      throw InvariantBreach("lift of " + rep.image_elements[i].to_string() + " fails verification");
    if (!same_map(compose(w, kernel_gen), compose(kernel_gen, w))) rep.kernel_central = false;
    rep.witnesses.push_back(std::move(w));
  }

  rep.abelian = *rep.kernel_central;
  for (std::size_t i = 0; i < rep.witnesses.size() && *rep.abelian; ++i)
    for (std::size_t j = i + 1; j < rep.witnesses.size() && *rep.abelian; ++j)
      rep.abelian = same_map(compose(rep.witnesses[i], rep.witnesses[j]), compose(rep.witnesses[j], rep.witnesses[i]));

  // Look for a complement: lifts of a generating set that generate a group of order |image|.
  const auto gens = detail::greedy_generators(rep.image_elements);
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens.size() && combos <= 4096; ++i) combos *= d;
  if (gens.empty()) {
    rep.extension_splits = true;
  } else if (combos <= 4096) {
    rep.extension_splits = false;
    std::vector<FieldElement> zeta_pows{FieldElement::one(L)};
    for (unsigned i = 1; i < d; ++i) zeta_pows.push_back(zeta_pows.back() * zeta);
    for (std::uint64_t c = 0; c < combos && !*rep.extension_splits; ++c) {
      std::vector<CurveAutomorphism> lifts;
      std::uint64_t x = c;
      for (std::size_t gi : gens) {
        CurveAutomorphism w = rep.witnesses[gi];
        w.zeta = zeta_pows[x % d];
        x /= d;
        lifts.push_back(std::move(w));
      }
      const auto n = detail::generated_order(lifts, rep.image->order);
      rep.extension_splits = n && *n == rep.image->order;
    }
  }
  const std::string N = "Z/" + std::to_string(d);
  const std::string& H = rep.image->label;
  if (rep.image->order == 1)
    rep.structure_label = N;
  else if (rep.kernel_central.value_or(false) && rep.extension_splits.value_or(false))
    rep.structure_label = N + " x " + (H == "V4" ? "(Z/2 x Z/2)" : H == "C2" ? "Z/2" : H);
  else if (rep.kernel_central.value_or(false) && rep.extension_splits.has_value())
    rep.structure_label = N + " . " + H + " (central, non-split)";
  else
    rep.structure_label = N + " . " + H;
  return rep;
}

/// (x, y) -> ((2x + 12)/(-x + 2), (-4)^t y/(-x + 2)^t) on y^m = phi_n(x),
/// n = t m, 4n = q + 1. Verified, and checked to have order 3.
inline CurveAutomorphism order3_aut(unsigned n, unsigned m, std::uint32_t p) {
  if (p == 2 || m == 0 || n % m != 0) throw HypothesisViolation("order3_aut needs m | n and odd p");
  if (!detail::is_prime_power_of(4 * std::uint64_t{n} - 1, p))
    throw HypothesisViolation("order3_aut needs 4n = q + 1 for a power q of p");
  const Field F = make_field(p, 1);
  const unsigned t = n / m;
  CurveAutomorphism a{Mat2::from_ints(F, 2, 12, -1, 2), FieldElement::one(F), pow(FieldElement::from_int(F, -4), t), t};
  if (!verify_automorphism(m, cheb_poly(n, F), a)) throw InvariantBreach("order-3 map is not an automorphism");
  if (order(a) != 3) throw InvariantBreach("order-3 map has order " + std::to_string(order(a)));
  return a;
}

struct Remark311Witness {
  FieldElement beta;
  CurveAutomorphism aut;
  bool verified = false;
  std::uint64_t order = 0;
  /// The same Moebius part with eta rescaled by a 4th root of unity so that
  /// the lift has order 3.
  std::optional<CurveAutomorphism> order3_lift;
};

/// For each zero beta of phi_4 in F_{5^4}: x -> (-2b x + 1 - 2b^2)/((2b^2 + 2) x + b)
/// with y -> (b^3 + 2b) y / ((2b^2 + 2) x + b), on y^4 = phi_4(x) in characteristic 5.
inline std::vector<Remark311Witness> remark311_witnesses() {
  const Field K = make_field(5, 4);
  const Poly phi = cheb_poly(4, K);
  auto k = [&](std::int64_t v) { return FieldElement::from_int(K, v); };
  std::vector<Remark311Witness> out;
  for (const auto& b : chebyshev_roots(4, K)) {
    const FieldElement b2 = b * b;
    CurveAutomorphism a{{k(-2) * b, k(1) - k(2) * b2, k(2) * b2 + k(2), b}, FieldElement::one(K), b2 * b + k(2) * b, 1};
    Remark311Witness w{b, a, verify_automorphism(4, phi, a), 0, std::nullopt};
    w.order = order(a);
    for (std::int64_t z : {1, 2, 3, 4}) {
      CurveAutomorphism c = a;
      c.e_root = c.e_root * k(z);
      if (order(c) == 3) w.order3_lift = c;
    }
    out.push_back(std::move(w));
  }
  return out;
}

/// Pairs (a, b) with (a x + b)^d phi_d(x/(a x + b)) = phi_d(x). Such a map
/// permutes the zeros of phi_d, so the pairs are read off the stabilizer:
/// its elements with normalized matrix (1 0; a b) and lift scalar 1.
inline std::vector<std::pair<FieldElement, FieldElement>> prop36_search(unsigned d, std::uint32_t p,
                                                                        const Limits& limits = {}) {
  if (p == 2 || d < 3 || d % p == 0) throw HypothesisViolation("prop36_search needs d >= 3 and p not dividing 2d");
  const Field K = make_field(p, cheb_splitting_degree(d, p));
  std::vector<ProjPoint1> S;
  for (const auto& z : chebyshev_roots(d, K, limits)) S.push_back(ProjPoint1::finite(z));
  const Poly phi = cheb_poly(d, K);
  std::vector<std::pair<FieldElement, FieldElement>> out;
  for (const auto& mu : setwise_stabilizer(S)) {
    const Mat2& m = mu.matrix();
    if (!m.b.is_zero()) continue;
    if (compose_moebius(phi, m).poly == phi) out.emplace_back(m.c, m.d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Lemma312Finding {
  FieldElement b;
  bool congruence_holds;  // d = 4 or 2d = 1 mod p
  bool eight_b2_is_d;     // 8 b^2 = d
};

/// b != 0 with x -> 1/(b x) permuting the zeros of phi_d, i.e. the
/// stabilizer elements with normalized matrix (0 1; b 0).
inline std::vector<Lemma312Finding> lemma312_search(unsigned d, std::uint32_t p, const Limits& limits = {}) {
  if (p <= 3 || d < 3 || d % p == 0) throw HypothesisViolation("lemma312_search needs p > 3, d >= 3, p not dividing d");
  const Field K = make_field(p, cheb_splitting_degree(d, p));
  std::vector<ProjPoint1> S;
  for (const auto& z : chebyshev_roots(d, K, limits)) S.push_back(ProjPoint1::finite(z));
  std::vector<Lemma312Finding> out;
  const FieldElement dk = FieldElement::from_int(K, d);
  for (const auto& mu : setwise_stabilizer(S)) {
    const Mat2& m = mu.matrix();
    if (!m.a.is_zero() || !m.d.is_zero()) continue;
    const bool cong = d % p == 4 % p || (2 * d) % p == 1;
    out.push_back({m.c, cong, FieldElement::from_int(K, 8) * m.c * m.c == dk});
  }
  return out;
}

struct ScanCell {
  unsigned d = 0;
  std::uint32_t p = 0;
  bool eligible = false;
  std::string reason;  // why ineligible, or why skipped
  bool skipped = false;
  unsigned splitting_degree = 0;
  std::size_t stabilizer_order = 0;
  std::string fingerprint;
  bool deviation = false;
};

inline bool scan_eligible(unsigned d, std::uint32_t p, std::string* reason = nullptr) {
  auto no = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  if (d <= 4) return no("d <= 4");
  if (p == 2 || d % p == 0) return no("p divides 2d");
  if (detail::is_prime_power_of(2 * std::uint64_t{d} - 1, p)) return no("2d - 1 is a power of p");
  if (detail::is_prime_power_of(4 * std::uint64_t{d} - 1, p)) return no("4d - 1 is a power of p");
  return true;
}

/// One grid cell: is the stabilizer of the zeros of phi_d exactly {x -> x, x -> -x}?
inline ScanCell scan_cell(unsigned d, std::uint32_t p, const Limits& limits = {}) {
  ScanCell c;
  c.d = d;
  c.p = p;
  c.eligible = scan_eligible(d, p, &c.reason);
  if (!c.eligible) return c;
  try {
    const Field Fp = make_field(p, 1);
    c.splitting_degree = splitting_degree(cheb_poly(d, Fp), limits);
    if (c.splitting_degree != cheb_splitting_degree(d, p))
      throw InvariantBreach("splitting degree disagrees with the order of p mod 4d");
    const Field K = make_field(p, c.splitting_degree);
    std::vector<ProjPoint1> S;
    for (const auto& z : chebyshev_roots(d, K, limits)) S.push_back(ProjPoint1::finite(z));
    const auto stab = setwise_stabilizer(S);
    const auto fp = fingerprint(stab);
    c.stabilizer_order = fp.order;
    c.fingerprint = fp.label;
    const Moebius neg = Moebius::from_ints(K, -1, 0, 0, 1);
    c.deviation = !(stab.size() == 2 && std::binary_search(stab.begin(), stab.end(), neg));
  } catch (const CapExceeded& e) {
    c.skipped = true;
    c.reason = e.what();
  }
  return c;
}

/// All cells d_min <= d <= d_max, primes p <= p_max, in (d, p) order. Cells
/// are independent and computed by `jobs` worker threads.
inline std::vector<ScanCell> scan_expectation(unsigned d_min, unsigned d_max, std::uint32_t p_max, unsigned jobs = 1,
                                              const Limits& limits = {}) {
  std::vector<std::pair<unsigned, std::uint32_t>> grid;
  for (unsigned d = d_min; d <= d_max; ++d)
    for (std::uint32_t p = 2; p <= p_max; ++p)
      if (detail::is_prime(p)) grid.emplace_back(d, p);
  std::vector<ScanCell> out(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < grid.size();) out[i] = scan_cell(grid[i].first, grid[i].second, limits);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

/// The order of Aut(C_d) the theory predicts, where it predicts one: 16, 48
/// or 96 for d = 4; 6d^2 when 2d - 1 is a power of p; 6d when 4d - 1 is;
/// and 2d (conjecturally) for the remaining d > 4.
inline std::optional<std::uint64_t> predicted_total_order(unsigned d, std::uint32_t p) {
  if (p == 2 || d % p == 0 || d < 4) return std::nullopt;
  const std::uint64_t dd = d;
  if (d == 4) return p == 7 ? 96 : p == 5 ? 48 : 16;
  if (detail::is_prime_power_of(2 * dd - 1, p)) return 6 * dd * dd;
  if (detail::is_prime_power_of(4 * dd - 1, p)) return 6 * dd;
  return 2 * dd;
}

struct PairEvidence {
  unsigned n = 0, m = 0;
  std::uint64_t q = 0;
  std::string mode;  // "order3" (4n = q + 1) or "genus1" (n = 4, m = 2)
  std::uint64_t genus_phi = 0, genus_fermat = 0;
  MaximalityVerdict maximal_phi, maximal_fermat;
  std::optional<CurveAutomorphism> order3_witness;
  /// Cited, not computed: y^m = x^n + 1 has no automorphism of order 3.
  std::string cited_fact;
  std::optional<FieldElement> j_phi, j_fermat;
  std::optional<bool> j_equal;
};

/// Evidence that y^m = phi_n(x) and y^m = x^n + 1 are (or, for genus 1, are
/// not) distinguished over F_{q^2}.
inline PairEvidence distinguish_pair(unsigned n, unsigned m, std::uint64_t q, const Limits& limits = {}) {
  std::uint32_t p = 0;
  for (std::uint32_t l = 2; l <= q; ++l)
    if (q % l == 0) {
      p = l;
      break;
    }
  if (p == 0 || !detail::is_prime_power_of(q, p)) throw DomainError(std::to_string(q) + " is not a prime power");
  if (m == 0 || n % m != 0) throw HypothesisViolation("m must divide n");
  const Field Fp = make_field(p, 1);
  PairEvidence ev;
  ev.n = n;
  ev.m = m;
  ev.q = q;
  const auto phi_curve = SuperellipticCurve::chebyshev(m, n, Fp);
  const auto fermat_curve = SuperellipticCurve::fermat(m, n, Fp);
  ev.genus_phi = phi_curve.genus();
  ev.genus_fermat = fermat_curve.genus();
  ev.maximal_phi = is_maximal(phi_curve, q, limits);
  ev.maximal_fermat = is_maximal(fermat_curve, q, limits);
  if (4 * std::uint64_t{n} == q + 1) {
    ev.mode = "order3";
    ev.order3_witness = order3_aut(n, m, p);
    ev.cited_fact = "y^m = x^n + 1 has no automorphism of order 3 (cited, not recomputed)";
  } else if (n == 4 && m == 2) {
    ev.mode = "genus1";
    if (p == 2 || p == 3) throw HypothesisViolation("genus-1 comparison needs characteristic above 3");
    auto k = [&](std::int64_t v) { return FieldElement::from_int(Fp, v); };
    ev.j_phi = j_invariant_quartic(k(1), k(0), k(-4), k(0), k(2));
    ev.j_fermat = j_invariant_quartic(k(1), k(0), k(0), k(0), k(1));
    if (ev.j_phi && ev.j_fermat) ev.j_equal = *ev.j_phi == *ev.j_fermat;
  } else {
    throw HypothesisViolation("distinguish_pair needs 4n = q + 1, or n = 4 and m = 2");
  }
  return ev;
}

}  // namespace chebcurve
