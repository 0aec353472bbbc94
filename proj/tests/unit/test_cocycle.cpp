#include <gtest/gtest.h>

#include "milnor/cocycle.hpp"
#include "milnor/errors.hpp"

using namespace milnor;

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Integer>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), (std::vector<Integer>{1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Integer>{1, 0, -1, 0, 1}));
  // degree is Euler's phi
  EXPECT_EQ(cyclotomic_polynomial(30).size(), 9u);
  EXPECT_EQ(cyclotomic_polynomial(64).size(), 33u);
}

TEST(Cyclotomic, ZetaHasOrderN) {
  for (int n = 3; n <= 12; ++n) {
    CyclotomicRing r(n);
    EXPECT_EQ(r.zeta_power(n), r.one()) << n;
    for (int k = 1; k < n; ++k) EXPECT_NE(r.zeta_power(k), r.one()) << n << " " << k;
    EXPECT_EQ(r.zeta_power(-1), r.zeta_power(n - 1));
  }
}

TEST(Generators, Shape) {
  auto g = build_generators(CyclicAlgebraSpec(4));
  const auto& R = g.rho_u.ring();
  EXPECT_EQ(g.rho_u.at(3, 3), R.reduce(R.zeta_power(2) * R.c()));
  EXPECT_TRUE(g.rho_u.at(1, 2).is_zero());
  EXPECT_EQ(g.rho_v.at(2, 1), R.one());
  EXPECT_EQ(g.rho_v.at(1, 4), R.b());
  EXPECT_TRUE(g.rho_v.at(1, 1).is_zero());
}

TEST(Generators, DefiningRelations) {
  // v^n = b, u^n = c^n, u v = zeta v u
  for (int n = 3; n <= 8; ++n) {
    CyclicAlgebraSpec spec(n);
    auto g = build_generators(spec);
    auto ring = std::make_shared<const CyclotomicRing>(n);
    auto I = CycMatrix::identity(ring, n);
    EXPECT_EQ(g.rho_v.power(n), ring->b() * I);
    EXPECT_EQ(g.rho_u.power(n), pow(ring->c(), n) * I);
    EXPECT_EQ(g.rho_u * g.rho_v, ring->zeta_power(1) * (g.rho_v * g.rho_u));
  }
}

TEST(Cocycle, IdentitiesHoldForNUpTo8) {
  for (int n = 3; n <= 8; ++n) {
    auto r = verify_cocycle(CyclicAlgebraSpec(n));
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.identities.size(), static_cast<std::size_t>(2 * n));
  }
}

TEST(Cocycle, LargeNStillFormal) { EXPECT_TRUE(verify_cocycle(CyclicAlgebraSpec(17)).ok()); }

TEST(Cocycle, RejectsSmallN) { EXPECT_THROW(CyclicAlgebraSpec(2), InvalidArgument); }

TEST(FixedPointPermutation, HomomorphismOfOrderN) {
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::vector<std::size_t>> p;
    for (int k = 0; k < n; ++k) p.push_back(fixed_point_permutation(n, k));
    for (std::size_t v = 0; v < p[0].size(); ++v) EXPECT_EQ(p[0][v], v);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (std::size_t v = 0; v < p[0].size(); ++v) ASSERT_EQ(p[a][p[b][v]], p[(a + b) % n][v]);
    for (int k = 1; k < n; ++k) EXPECT_NE(p[k], p[0]);
  }
  EXPECT_THROW(fixed_point_permutation(4, 4), InvalidArgument);
}

TEST(Cocycle, JsonHasIdentities) {
  auto j = verify_cocycle(CyclicAlgebraSpec(3)).to_json();
  EXPECT_NE(j.find("identities"), std::string::npos);
}
