#include <gtest/gtest.h>

#include <random>

#include "chebcurve/plane_curve.hpp"

using namespace chebcurve;

namespace {

// Every point of P^2(K), tested against the form.
std::uint64_t naive_count(const PlaneCurve& c, const Field& K) {
  const PlaneCurve cK = c.over(K);
  const std::uint64_t q = *K->size();
  const FieldElement one = FieldElement::one(K), zero = FieldElement::zero(K);
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j)
      n += cK.contains(ProjPoint2::make(FieldElement::from_index(K, i), FieldElement::from_index(K, j), one));
  for (std::uint64_t j = 0; j < q; ++j) n += cK.contains(ProjPoint2::make(one, FieldElement::from_index(K, j), zero));
  n += cK.contains(ProjPoint2::make(zero, one, zero));
  return n;
}

std::uint64_t naive_affine_count(const SuperellipticCurve& c, const Field& K) {
  const auto f = embed(c.f(), K);
  const std::uint64_t q = *K->size();
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto v = eval(f, FieldElement::from_index(K, i));
    for (std::uint64_t j = 0; j < q; ++j) n += pow(FieldElement::from_index(K, j), c.m()) == v;
  }
  return n;
}

}  // namespace

TEST(PlaneCurve, Genus) {
  EXPECT_EQ(genus_plane(4), 3u);
  EXPECT_EQ(genus_plane(5), 6u);
  EXPECT_EQ(genus_superelliptic(2, 4), 1u);
  EXPECT_EQ(genus_superelliptic(3, 3), 1u);
  EXPECT_EQ(genus_superelliptic(5, 5), 6u);
  EXPECT_EQ(genus_superelliptic(2, 5), 2u);
  EXPECT_EQ(genus_superelliptic(1, 7), 0u);
}

TEST(PlaneCurve, RejectsSingularAndBadCharacteristic) {
  const Field F = make_field(5, 1);
  EXPECT_THROW(PlaneCurve::custom(Poly::from_ints(F, {0, 0, 1, 1})), HypothesisViolation);
  EXPECT_THROW(PlaneCurve::chebyshev(10, F), HypothesisViolation);
}

TEST(PlaneCurve, CountMatchesNaiveEnumeration) {
  for (auto [d, p, m] : {std::tuple{4u, 7u, 1u}, {4u, 7u, 2u}, {5u, 3u, 2u}, {4u, 5u, 2u}, {3u, 11u, 1u}, {6u, 5u, 2u}}) {
    const PlaneCurve c = PlaneCurve::chebyshev(d, make_field(p, 1));
    const Field K = make_field(p, m);
    EXPECT_EQ(count_points(c, K), naive_count(c, K)) << d << " " << p << "^" << m;
    EXPECT_EQ(points_over(c, K).size(), naive_count(c, K));
  }
}

TEST(PlaneCurve, SuperellipticAffineCountMatchesNaive) {
  for (auto [m, n, p, e] : {std::tuple{2u, 4u, 7u, 2u}, {3u, 3u, 11u, 1u}, {5u, 5u, 19u, 1u}, {2u, 5u, 3u, 2u}}) {
    const Field Fp = make_field(p, 1), K = make_field(p, e);
    for (const auto& c : {SuperellipticCurve::chebyshev(m, n, Fp), SuperellipticCurve::fermat(m, n, Fp)}) {
      const auto pts = points_over(c, K);
      const auto affine = static_cast<std::uint64_t>(std::count_if(pts.begin(), pts.end(), [](auto& P) { return !P.at_infinity; }));
      EXPECT_EQ(affine, naive_affine_count(c, K));
      EXPECT_EQ(count_points(c, K), pts.size());
    }
  }
}

TEST(PlaneCurve, MaximalCounts) {
  EXPECT_EQ(count_points(PlaneCurve::chebyshev(4, make_field(7, 1)), make_field(7, 2)), 92u);
  EXPECT_EQ(count_points(PlaneCurve::chebyshev(5, make_field(3, 1)), make_field(3, 4)), 190u);
  const Field F7 = make_field(7, 1), F49 = make_field(7, 2);
  EXPECT_EQ(count_points(SuperellipticCurve::chebyshev(2, 4, F7), F49), 64u);
  EXPECT_EQ(count_points(SuperellipticCurve::fermat(2, 4, F7), F49), 64u);
}

TEST(PlaneCurve, MaximalityCriterionAgreesWithCount) {
  // is_maximal throws InvariantBreach when its two paths disagree.
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t q = p; q * q <= (1u << 16); q *= p) {
      for (unsigned d = 3; d <= 6; ++d) {
        if (d % p == 0) continue;
        const auto v = is_maximal(PlaneCurve::chebyshev(d, make_field(p, 1)), q);
        ASSERT_TRUE(v.count);
        EXPECT_EQ(v.maximal(), ((q + 1) / 2) % d == 0) << d << " " << q;
      }
      for (auto [m, n] : {std::pair{2u, 4u}, {3u, 3u}, {2u, 6u}}) {
        if (m % p == 0 || n % p == 0) continue;
        EXPECT_NO_THROW(is_maximal(SuperellipticCurve::chebyshev(m, n, make_field(p, 1)), q));
        EXPECT_NO_THROW(is_maximal(SuperellipticCurve::fermat(m, n, make_field(p, 1)), q));
      }
    }
  }
}

TEST(PlaneCurve, CriterionOnlyBeyondCap) {
  Limits small;
  small.enumeration_cap = 300;
  const auto v = is_maximal(PlaneCurve::chebyshev(5, make_field(19, 1)), 19, small);
  EXPECT_TRUE(v.criterion_only);
  EXPECT_FALSE(v.count);
  EXPECT_TRUE(v.maximal());
}

TEST(PlaneCurve, TangentLineContainsPoint) {
  const PlaneCurve c = PlaneCurve::chebyshev(4, make_field(7, 1));
  const Field K = make_field(7, 2);
  for (const auto& P : points_over(c, K)) EXPECT_TRUE(tangent_line(c, P).contains(P));
}

TEST(PlaneCurve, IntersectionMultiplicitiesSumToDegree) {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (auto [d, p, m] : {std::tuple{4u, 7u, 1u}, {5u, 3u, 2u}, {4u, 11u, 1u}, {6u, 5u, 1u}, {7u, 3u, 1u}}) {
    const PlaneCurve c = PlaneCurve::chebyshev(d, make_field(p, 1));
    const Field K = make_field(p, m);
    for (int t = 0; t < 25; ++t) {
      const auto u = FieldElement::random(K, rng), v = FieldElement::random(K, rng), w = FieldElement::random(K, rng);
      if (u.is_zero() && v.is_zero() && w.is_zero()) continue;
      const ProjLine line = ProjLine::make(u, v, w);
      const auto prof = line_intersection_profile(c, line);
      unsigned total = 0;
      const PlaneCurve cL = c.over(prof.field);
      for (const auto& ip : prof.points) {
        total += ip.multiplicity;
        EXPECT_TRUE(cL.contains(ip.point));
      }
      EXPECT_EQ(total, d);
      ++checked;
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(PlaneCurve, TotalInflectionAgreesWithProfile) {
  for (auto [d, p, m] : {std::tuple{4u, 7u, 2u}, {5u, 3u, 2u}, {4u, 5u, 2u}}) {
    const PlaneCurve c = PlaneCurve::chebyshev(d, make_field(p, 1));
    for (const auto& P : points_over(c, make_field(p, m))) {
      const auto prof = line_intersection_profile(c, tangent_line(c, P));
      const bool by_profile = prof.points.size() == 1 && prof.points[0].multiplicity == d;
      EXPECT_EQ(is_total_inflection(c, P), by_profile) << P.to_string();
    }
  }
}

TEST(PlaneCurve, TotalInflectionCounts) {
  auto count = [](unsigned d, std::uint32_t p, unsigned m) {
    return total_inflections(PlaneCurve::chebyshev(d, make_field(p, 1)), make_field(p, m));
  };
  const auto r74 = count(4, 7, 4);
  EXPECT_EQ(r74.points.size(), 12u);
  EXPECT_EQ(r74.observed_case, "Exceptional");
  EXPECT_FALSE(r74.deviation);
  EXPECT_EQ(count(5, 3, 4).points.size(), 15u);
  const auto r114 = count(4, 11, 4);
  EXPECT_EQ(r114.points.size(), 4u);
  EXPECT_EQ(r114.observed_case, "Generic");
  EXPECT_EQ(count(4, 5, 4).points.size(), 4u);
  // phi_4 does not split over F_121, and no point of y = 0 is rational there.
  const auto r112 = count(4, 11, 2);
  EXPECT_EQ(r112.points.size(), 0u);
  EXPECT_FALSE(r112.field_covers_prediction);
  EXPECT_TRUE(r112.deviation);
}

TEST(PlaneCurve, JInvariants) {
  auto j = [](std::uint32_t p, std::vector<std::int64_t> c) {
    const Field F = make_field(p, 1);
    auto k = [&](std::int64_t v) { return FieldElement::from_int(F, v); };
    return *j_invariant_quartic(k(c[0]), k(c[1]), k(c[2]), k(c[3]), k(c[4]));
  };
  for (std::uint32_t p : {11u, 13u, 7u}) {
    const Field F = make_field(p, 1);
    EXPECT_EQ(j(p, {1, 0, -4, 0, 2}), FieldElement::from_int(F, 8000));
    EXPECT_EQ(j(p, {1, 0, 0, 0, 1}), FieldElement::from_int(F, 1728));
  }
  EXPECT_NE(j(11, {1, 0, -4, 0, 2}), j(11, {1, 0, 0, 0, 1}));
  EXPECT_EQ(j(7, {1, 0, -4, 0, 2}), j(7, {1, 0, 0, 0, 1}));
  const Field F3 = make_field(3, 1);
  EXPECT_THROW(j_invariant_quartic(FieldElement::one(F3), FieldElement::one(F3), FieldElement::one(F3),
                                   FieldElement::one(F3), FieldElement::one(F3)),
               DomainError);
}
