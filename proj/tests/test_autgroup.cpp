#include <gtest/gtest.h>

#include "chebcurve/autgroup.hpp"

using namespace chebcurve;

namespace {

// All (a, b), b != 0, over F with (a x + b)^d g(x/(a x + b)) = g(x).
std::vector<std::pair<FieldElement, FieldElement>> prop36_oracle(const Poly& g, const Field& F) {
  std::vector<std::pair<FieldElement, FieldElement>> out;
  const Poly gF = embed(g, F);
  const std::uint64_t q = *F->size();
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 1; j < q; ++j) {
      const auto a = FieldElement::from_index(F, i), b = FieldElement::from_index(F, j);
      const Mat2 m{FieldElement::one(F), FieldElement::zero(F), a, b};
      if (compose_moebius(gF, m).poly == gF) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(AutGroup, ComposeAndOrder) {
  const Field F = make_field(13, 1);
  auto k = [&](std::int64_t v) { return FieldElement::from_int(F, v); };
  const CurveAutomorphism sigma{Mat2::from_ints(F, -1, 0, 0, 1), k(1), k(1), 1};
  const CurveAutomorphism zeta{Mat2::identity(F), k(5), k(1), 1};  // 5 has order 4 mod 13
  EXPECT_EQ(order(sigma), 2u);
  EXPECT_EQ(order(zeta), 4u);
  EXPECT_TRUE(same_map(compose(sigma, zeta), compose(zeta, sigma)));
  EXPECT_TRUE(is_identity(compose(zeta, compose(zeta, compose(zeta, zeta)))));
  // The scalar matrix 2I with lambda 2 is the identity map.
  EXPECT_TRUE(is_identity(CurveAutomorphism{Mat2::from_ints(F, 2, 0, 0, 2), k(1), k(2), 1}));
}

TEST(AutGroup, VerifyRejectsWrongScalar) {
  const Field F = make_field(13, 1);
  auto k = [&](std::int64_t v) { return FieldElement::from_int(F, v); };
  const Poly phi = cheb_poly(4, F);
  EXPECT_TRUE(verify_automorphism(4, phi, {Mat2::from_ints(F, -1, 0, 0, 1), k(1), k(1), 1}));
  EXPECT_FALSE(verify_automorphism(4, phi, {Mat2::from_ints(F, -1, 0, 0, 1), k(1), k(2), 1}));
  EXPECT_FALSE(verify_automorphism(4, phi, {Mat2::from_ints(F, 1, 1, 0, 1), k(1), k(1), 1}));
}

TEST(AutGroup, KnownOrders) {
  for (std::uint32_t p : {3u, 11u, 13u, 17u}) {
    const auto r = compute_aut(4, p);
    EXPECT_EQ(r.total_order, 16u) << p;
    EXPECT_EQ(r.image->label, "V4");
    EXPECT_TRUE(*r.kernel_central);
  }
  const auto r5 = compute_aut(4, 5);
  EXPECT_EQ(r5.total_order, 48u);
  EXPECT_EQ(r5.image->label, "A4");
  const auto r7 = compute_aut(4, 7);
  EXPECT_TRUE(r7.inflection.fermat);
  EXPECT_EQ(r7.total_order, 96u);
  EXPECT_TRUE(r7.fermat->verified());
  const auto r519 = compute_aut(5, 19);
  EXPECT_EQ(r519.total_order, 30u);
  EXPECT_EQ(r519.image->label, "S3");
  const auto r73 = compute_aut(7, 3);
  EXPECT_EQ(r73.total_order, 42u);
  EXPECT_EQ(r73.image->label, "S3");
  const auto r57 = compute_aut(5, 7);
  EXPECT_EQ(r57.total_order, 10u);
  EXPECT_EQ(r57.image->label, "C2");
}

TEST(AutGroup, PredictedOrders) {
  EXPECT_EQ(predicted_total_order(4, 11), 16u);
  EXPECT_EQ(predicted_total_order(4, 5), 48u);
  EXPECT_EQ(predicted_total_order(4, 7), 96u);
  EXPECT_EQ(predicted_total_order(5, 19), 30u);
  EXPECT_EQ(predicted_total_order(9, 7), 18u);
}

TEST(AutGroup, WitnessesAreVerifiedLifts) {
  const auto r = compute_aut(4, 13);
  ASSERT_EQ(r.witnesses.size(), r.image_elements.size());
  const Poly phi = cheb_poly(4, make_field(13, 1));
  for (const auto& w : r.witnesses) EXPECT_TRUE(verify_automorphism(4, phi, w));
}

TEST(AutGroup, CustomPolynomial) {
  const Field F = make_field(13, 1);
  const auto r = compute_aut(3, 13, Poly::from_ints(F, {1, 1, 0, 1}));
  EXPECT_TRUE(r.custom_g);
  EXPECT_EQ(r.total_order, r.kernel_order * r.image->order);
}

TEST(AutGroup, Prop36SearchMatchesBruteForce) {
  for (auto [d, p] : {std::pair{4u, 7u}, {5u, 11u}, {4u, 13u}, {6u, 7u}, {5u, 3u}}) {
    const unsigned k = cheb_splitting_degree(d, p);
    const Field K = make_field(p, k);
    if (*K->size() > 200) {
      // Only F_p pairs are enumerated here.
      const Field Fp = make_field(p, 1);
      auto found = prop36_search(d, p);
      std::vector<std::pair<FieldElement, FieldElement>> rational;
      const auto emb = make_embedding(Fp, K);
      const auto oracle = prop36_oracle(cheb_poly(d, Fp), Fp);
      for (const auto& [a, b] : oracle) rational.emplace_back(embed(a, emb), embed(b, emb));
      for (const auto& pr : rational) EXPECT_NE(std::find(found.begin(), found.end(), pr), found.end());
    } else {
      EXPECT_EQ(prop36_search(d, p), prop36_oracle(cheb_poly(d, make_field(p, 1)), K)) << d << " " << p;
    }
  }
}

TEST(AutGroup, Prop36OnlySignChanges) {
  for (auto [d, p] : {std::pair{5u, 11u}, {6u, 7u}, {9u, 7u}, {12u, 5u}}) {
    const auto found = prop36_search(d, p);
    ASSERT_EQ(found.size(), 2u) << d << " " << p;
    for (const auto& [a, b] : found) {
      EXPECT_TRUE(a.is_zero());
      EXPECT_TRUE((b * b).is_one());
    }
  }
}

TEST(AutGroup, Prop36OracleMutationControl) {
  // For g = x^d every (a, b) with b != 0 satisfies the identity, so the
  // oracle must report p(p - 1) pairs.
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const Field F = make_field(p, 1);
    EXPECT_EQ(prop36_oracle(Poly::monomial(FieldElement::one(F), 4), F).size(), std::size_t{p} * (p - 1));
  }
}

TEST(AutGroup, Order3Maps) {
  for (auto [n, m, p] : {std::tuple{5u, 5u, 19u}, {7u, 7u, 3u}, {3u, 3u, 11u}, {5u, 1u, 19u}, {7u, 1u, 3u}}) {
    const auto a = order3_aut(n, m, p);
    EXPECT_EQ(order(a), 3u);
    EXPECT_TRUE(verify_automorphism(m, cheb_poly(n, make_field(p, 1)), a));
  }
  EXPECT_THROW(order3_aut(4, 4, 11), HypothesisViolation);
}

TEST(AutGroup, CharFiveWitnesses) {
  const auto ws = remark311_witnesses();
  ASSERT_EQ(ws.size(), 4u);
  const Poly phi = cheb_poly(4, make_field(5, 4));
  for (const auto& w : ws) {
    EXPECT_TRUE(w.verified);
    // The printed eta gives a lift whose cube is y -> 3y.
    EXPECT_EQ(w.order, 12u);
    ASSERT_TRUE(w.order3_lift);
    EXPECT_EQ(order(*w.order3_lift), 3u);
    EXPECT_TRUE(verify_automorphism(4, phi, *w.order3_lift));
  }
}

TEST(AutGroup, InvolutionSearchCongruences) {
  // x -> 1/(b x) permuting the zeros forces d even and d = 4 or 1/2 mod p.
  for (unsigned d = 5; d <= 16; ++d)
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      if (d % p == 0) continue;
      for (const auto& f : lemma312_search(d, p)) {
        EXPECT_EQ(d % 2, 0u) << d << " " << p;
        EXPECT_TRUE(f.congruence_holds) << d << " " << p;
      }
    }
  EXPECT_FALSE(lemma312_search(4, 11).empty());
}

TEST(AutGroup, ScanSmallGrid) {
  const auto cells = scan_expectation(5, 9, 23, 2);
  std::size_t eligible = 0;
  for (const auto& c : cells) {
    if (!c.eligible) continue;
    ++eligible;
    EXPECT_FALSE(c.skipped);
    EXPECT_FALSE(c.deviation) << c.d << " " << c.p;
    EXPECT_EQ(c.stabilizer_order, 2u);
  }
  EXPECT_GT(eligible, 20u);
  EXPECT_FALSE(scan_eligible(5, 3));   // 2d - 1 = 9
  EXPECT_FALSE(scan_eligible(5, 19));  // 4d - 1 = 19
  EXPECT_FALSE(scan_eligible(6, 3));
  EXPECT_TRUE(scan_eligible(5, 7));
}

TEST(AutGroup, ScanIsDeterministicAcrossJobCounts) {
  const auto a = scan_expectation(5, 8, 20, 1), b = scan_expectation(5, 8, 20, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].d, b[i].d);
    EXPECT_EQ(a[i].p, b[i].p);
    EXPECT_EQ(a[i].fingerprint, b[i].fingerprint);
  }
}

TEST(AutGroup, DistinguishPairs) {
  const auto e = distinguish_pair(4, 2, 7);
  EXPECT_EQ(e.mode, "genus1");
  EXPECT_TRUE(*e.j_equal);
  EXPECT_TRUE(e.maximal_phi.maximal());
  const auto o = distinguish_pair(5, 5, 19);
  EXPECT_EQ(o.mode, "order3");
  EXPECT_EQ(order(*o.order3_witness), 3u);
  EXPECT_EQ(o.genus_phi, o.genus_fermat);
  EXPECT_THROW(distinguish_pair(10, 5, 39), DomainError);
}
