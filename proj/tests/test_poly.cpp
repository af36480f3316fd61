#include <gtest/gtest.h>

#include <random>

#include "chebcurve/chebyshev.hpp"
#include "chebcurve/poly.hpp"

using namespace chebcurve;

namespace {

Poly random_poly(const Field& F, std::size_t deg, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i <= deg; ++i) c.push_back(FieldElement::random(F, rng));
  while (c.back().is_zero()) c.back() = FieldElement::random(F, rng);
  return Poly(F, std::move(c));
}

// Schoolbook long division written against raw coefficient vectors.
std::pair<std::vector<FieldElement>, std::vector<FieldElement>> schoolbook(std::vector<FieldElement> a,
                                                                           const std::vector<FieldElement>& b) {
  const Field& F = b.front().field();
  std::vector<FieldElement> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, FieldElement::zero(F));
  const FieldElement lead_inv = inv(b.back());
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    const FieldElement t = a[k + b.size() - 1] * lead_inv;
    q[k] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = a[k + j] - t * b[j];
  }
  a.resize(b.size() - 1, FieldElement::zero(F));
  return {q, a};
}

std::vector<FieldElement> roots_by_enumeration(const Poly& f) {
  std::vector<FieldElement> r;
  const Field& F = f.field();
  for (std::uint64_t i = 0; i < *F->size(); ++i) {
    const auto x = FieldElement::from_index(F, i);
    if (eval(f, x).is_zero()) r.push_back(x);
  }
  return r;
}

}  // namespace

TEST(Poly, DivmodMatchesSchoolbook) {
  std::mt19937_64 rng(3);
  for (auto [p, m] : {std::pair{3u, 2u}, {7u, 1u}, {5u, 3u}, {101u, 1u}}) {
    const Field F = make_field(p, m);
    for (int t = 0; t < 100; ++t) {
      const Poly a = random_poly(F, rng() % 12, rng), b = random_poly(F, rng() % 6, rng);
      const auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      if (!r.is_zero()) {
        EXPECT_LT(*r.degree(), *b.degree());
      }
      const auto [q2, r2] = schoolbook(a.coeffs(), b.coeffs());
      EXPECT_EQ(q, Poly(F, q2.empty() ? std::vector<FieldElement>{FieldElement::zero(F)} : q2));
      EXPECT_EQ(r, Poly(F, r2.empty() ? std::vector<FieldElement>{FieldElement::zero(F)} : r2));
    }
  }
}

TEST(Poly, DivisionByZeroThrows) {
  const Field F = make_field(5, 1);
  EXPECT_THROW(divmod(Poly::x(F), Poly::from_ints(F, {0})), DomainError);
}

TEST(Poly, GcdDividesBothAndIsMonic) {
  std::mt19937_64 rng(5);
  const Field F = make_field(7, 2);
  for (int t = 0; t < 100; ++t) {
    const Poly c = random_poly(F, 1 + rng() % 3, rng);
    const Poly a = c * random_poly(F, rng() % 5, rng), b = c * random_poly(F, rng() % 5, rng);
    const Poly g = gcd(a, b);
    EXPECT_TRUE(g.leading().is_one());
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    EXPECT_TRUE((g % make_monic(c)).is_zero());
  }
}

TEST(Poly, PowmodAgreesWithRepeatedMultiplication) {
  std::mt19937_64 rng(9);
  const Field F = make_field(11, 1);
  for (int t = 0; t < 100; ++t) {
    const Poly b = random_poly(F, rng() % 5, rng), m = random_poly(F, 1 + rng() % 5, rng);
    const unsigned e = rng() % 40;
    Poly naive = Poly::constant(FieldElement::one(F)) % m;
    for (unsigned i = 0; i < e; ++i) naive = (naive * b) % m;
    EXPECT_EQ(powmod(b, e, m), naive);
  }
}

TEST(Poly, PthRootAndRadical) {
  const Field F = make_field(3, 2);
  const Poly f = Poly::from_ints(F, {1, 2, 0, 1});  // x^3 + 2x + 1, irreducible
  const Poly l = Poly::from_ints(F, {2, 1});
  const Poly g = pow(f, 3) * l;
  EXPECT_EQ(pth_root(pow(f, 3)), f);
  EXPECT_TRUE(is_separable(radical(g)));
  EXPECT_EQ(radical(g), f * l);
  EXPECT_EQ(radical(pow(f, 2) * pow(l, 4)), f * l);
  EXPECT_EQ(radical(pow(Poly::from_ints(F, {1, 1}), 9)), Poly::from_ints(F, {1, 1}));
}

TEST(Poly, RootsCantorZassenhausMatchesEnumeration) {
  std::mt19937_64 rng(11);
  Limits no_enum;
  no_enum.enumeration_cap = 0;
  for (auto [p, m] : {std::pair{3u, 3u}, {5u, 2u}, {7u, 2u}, {13u, 1u}, {3u, 5u}}) {
    const Field F = make_field(p, m);
    for (int t = 0; t < 30; ++t) {
      const Poly f = random_poly(F, 1 + rng() % 8, rng);
      const auto oracle = roots_by_enumeration(f);
      EXPECT_EQ(roots_of(f), oracle);
      EXPECT_EQ(roots_of(f, no_enum), oracle);
    }
  }
}

TEST(Poly, SplittingDegreeMatchesExhaustiveSearch) {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field F = make_field(p, 1);
    for (int t = 0; t < 25; ++t) {
      Poly f = radical(random_poly(F, 1 + rng() % 5, rng));
      const std::size_t n = *f.degree();
      unsigned k = 1;
      while (roots_by_enumeration(embed(f, make_field(p, k))).size() != n) ++k;
      EXPECT_EQ(splitting_degree(f), k);
    }
  }
}

TEST(Poly, ComposeMoebiusClearsDenominators) {
  const Field F = make_field(13, 1);
  const Poly f = Poly::from_ints(F, {1, 0, 2, 5});
  const auto h = compose_moebius(f, Mat2::from_ints(F, 2, 1, 1, 3));
  for (std::int64_t v = 0; v < 13; ++v) {
    const auto x = FieldElement::from_int(F, v), den = FieldElement::from_int(F, 1) * x + FieldElement::from_int(F, 3);
    if (den.is_zero()) continue;
    const auto y = (FieldElement::from_int(F, 2) * x + FieldElement::one(F)) / den;
    EXPECT_EQ(eval(h.poly, x), pow(den, 3) * eval(f, y));
  }
}

TEST(Poly, EmbeddingIsARingMap) {
  std::mt19937_64 rng(19);
  const Field K = make_field(5, 2), L = make_field(5, 4);
  const auto emb = make_embedding(K, L);
  for (int t = 0; t < 100; ++t) {
    const auto a = FieldElement::random(K, rng), b = FieldElement::random(K, rng);
    EXPECT_EQ(embed(a + b, emb), embed(a, emb) + embed(b, emb));
    EXPECT_EQ(embed(a * b, emb), embed(a, emb) * embed(b, emb));
  }
}

TEST(Poly, NthRootAny) {
  const Field K = make_field(11, 4);
  const auto two = FieldElement::from_int(K, 2);
  const auto r = nth_root_any(two, 4);
  ASSERT_TRUE(r);
  EXPECT_EQ(pow(*r, 4), two);
}
