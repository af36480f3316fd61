#include <gtest/gtest.h>

#include <random>

#include "chebcurve/chebyshev.hpp"

using namespace chebcurve;

namespace {

// phi_d(u) for u = t + 1/t, evaluated as t^d + t^-d in a field containing t.
FieldElement phi_by_laurent(unsigned d, const FieldElement& t) { return pow(t, d) + inv(pow(t, d)); }

std::int64_t binom_mod(unsigned n, unsigned k, std::int64_t p) {
  // Pascal's triangle mod p; independent of the BigInt closed form.
  std::vector<std::int64_t> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::int64_t> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
    row = std::move(next);
  }
  return k <= n ? row[k] : 0;
}

}  // namespace

TEST(Chebyshev, SmallDegrees) {
  const Field F = make_field(101, 1);
  EXPECT_EQ(cheb_poly(0, F), Poly::from_ints(F, {2}));
  EXPECT_EQ(cheb_poly(1, F), Poly::from_ints(F, {0, 1}));
  EXPECT_EQ(cheb_poly(2, F), Poly::from_ints(F, {-2, 0, 1}));
  EXPECT_EQ(cheb_poly(3, F), Poly::from_ints(F, {0, -3, 0, 1}));
  EXPECT_EQ(cheb_poly(4, F), Poly::from_ints(F, {2, 0, -4, 0, 1}));
  EXPECT_EQ(cheb_poly(5, F), Poly::from_ints(F, {0, 5, 0, -5, 0, 1}));
}

TEST(Chebyshev, ClosedFormIntegers) {
  EXPECT_EQ(cheb_coefficient_exact(10, 1), -10);
  EXPECT_EQ(cheb_coefficient_exact(10, 2), 35);
  EXPECT_EQ(cheb_coefficient_exact(10, 5), -2);
  EXPECT_EQ(cheb_coefficient_exact(60, 30), 2);
  EXPECT_THROW(cheb_coefficient_exact(4, 3), DomainError);
}

TEST(Chebyshev, RejectsCharacteristicDividing2d) {
  EXPECT_THROW(ChebSpec(6, make_field(3, 1)), HypothesisViolation);
  EXPECT_THROW(ChebSpec(5, make_field(2, 1)), HypothesisViolation);
  EXPECT_NO_THROW(ChebSpec(6, make_field(3, 1), false));
}

TEST(Chebyshev, LaurentCharacterizationPointwise) {
  std::mt19937_64 rng(23);
  for (auto [d, p] : {std::pair{4u, 7u}, {5u, 3u}, {9u, 11u}, {13u, 5u}, {30u, 7u}}) {
    const Field K = make_field(p, 3);
    const Poly phi = cheb_poly(d, K);
    for (int i = 0; i < 100; ++i) {
      const auto t = FieldElement::random(K, rng);
      if (t.is_zero()) continue;
      EXPECT_EQ(eval(phi, t + inv(t)), phi_by_laurent(d, t));
    }
  }
}

TEST(Chebyshev, CoefficientsMatchDicksonExpansionModP) {
  // c_j = (-1)^j (C(d-j, j) + C(d-j-1, j-1)), reduced mod p.
  for (std::uint32_t p : {3u, 7u, 13u}) {
    const Field F = make_field(p, 1);
    for (unsigned d = 1; d <= 60; ++d) {
      const Poly phi = cheb_poly(d, F);
      for (unsigned j = 0; j <= d / 2; ++j) {
        std::int64_t c = binom_mod(d - j, j, p) + (j ? binom_mod(d - j - 1, j - 1, p) : 0);
        if (j % 2) c = -c;
        EXPECT_EQ(phi.coeff(d - 2 * j), FieldElement::from_int(F, c)) << d << " " << j;
      }
    }
  }
}

TEST(Chebyshev, ExceptionalIdentityByDirectExpansion) {
  // (t-1)^2d + (t+1)^2d = 2 sum_k C(2d, 2k) t^2k; equals 2t^2d + 2 iff every
  // middle binomial C(2d, 2k) vanishes mod p.
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (unsigned d = 1; d <= 40; ++d) {
      bool expected = true;
      for (unsigned k = 1; k < d; ++k) expected = expected && binom_mod(2 * d, 2 * k, p) == 0;
      EXPECT_EQ(verify_exceptional_identity(d, p), expected) << d << " " << p;
    }
  }
}

TEST(Chebyshev, Prop31AndProp315Instances) {
  EXPECT_TRUE(verify_prop31_identity(4, 7));
  EXPECT_TRUE(verify_prop31_identity(13, 5));
  EXPECT_FALSE(verify_prop31_identity(4, 11));
  EXPECT_TRUE(verify_prop315_identity(5, 19).holds());
  EXPECT_TRUE(verify_prop315_identity(7, 3).holds());
  EXPECT_TRUE(verify_prop315_identity(3, 11).holds());
  EXPECT_FALSE(verify_prop315_identity(4, 11).holds());
}

TEST(Chebyshev, LucasLadderMatchesRecurrence) {
  std::mt19937_64 rng(29);
  const Field K = make_field(13, 2);
  for (unsigned n = 0; n < 70; ++n) {
    const Poly phi = cheb_poly(n, K);
    const auto u = FieldElement::random(K, rng);
    EXPECT_EQ(cheb_eval(n, u), eval(phi, u));
  }
}

TEST(Chebyshev, SplittingDegreeMatchesExhaustive) {
  for (auto [d, p] : {std::pair{4u, 11u}, {4u, 5u}, {5u, 7u}, {7u, 3u}, {6u, 5u}, {9u, 7u}}) {
    const Poly phi = cheb_poly(d, make_field(p, 1));
    unsigned k = 1;
    for (;; ++k) {
      const Field K = make_field(p, k);
      std::size_t roots = 0;
      for (std::uint64_t i = 0; i < *K->size(); ++i) roots += eval(embed(phi, K), FieldElement::from_index(K, i)).is_zero();
      if (roots == d) break;
    }
    EXPECT_EQ(cheb_splitting_degree(d, p), k) << d << " " << p;
  }
}

TEST(Chebyshev, RootFinderMatchesEnumeration) {
  for (auto [d, p, m] : {std::tuple{4u, 11u, 4u}, {4u, 5u, 4u}, {5u, 3u, 4u}, {6u, 7u, 2u}, {9u, 5u, 3u}, {7u, 13u, 2u},
                         {4u, 7u, 2u}, {10u, 3u, 8u}}) {
    const Field K = make_field(p, m);
    const Poly phi = cheb_poly(d, K);
    std::vector<FieldElement> oracle;
    for (std::uint64_t i = 0; i < *K->size(); ++i)
      if (eval(phi, FieldElement::from_index(K, i)).is_zero()) oracle.push_back(FieldElement::from_index(K, i));
    EXPECT_EQ(chebyshev_roots(d, K), oracle) << d << " " << p << "^" << m;
  }
}
