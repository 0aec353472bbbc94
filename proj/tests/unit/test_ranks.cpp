#include <gtest/gtest.h>

#include "milnor/ranks.hpp"
#include "milnor/report.hpp"
#include "oracles.hpp"

using namespace milnor;

TEST(Ranks, CellCountOracleMatchesClosedForms) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(oracle::cell_counts(n, Variety::X), expected_x_ranks(n)) << n;
    EXPECT_EQ(oracle::cell_counts(n, Variety::Y), expected_y_ranks(n)) << n;
  }
  EXPECT_EQ(expected_x_ranks(5), (std::vector<long>{1, 2, 3, 4, 4, 3, 2, 1}));
  EXPECT_EQ(expected_y_ranks(5), (std::vector<long>{1, 2, 3, 8, 3, 2, 1}));
  EXPECT_EQ(expected_y_ranks(3), (std::vector<long>{1, 4, 1}));
}

class FullModel : public ::testing::TestWithParam<std::tuple<int, Variety>> {};

TEST_P(FullModel, ChowRanksMatchCellCounts) {
  auto [n, v] = GetParam();
  auto g = shared_graph(n, v);
  auto t = chow_ranks(*g, g->dimension(), {RankModel::Full, RankField::Rational, 4});
  EXPECT_EQ(t.chow_ranks, oracle::cell_counts(n, v));
  EXPECT_EQ(t.total(), n * (n - 1));
}

INSTANTIATE_TEST_SUITE_P(N, FullModel,
                         ::testing::Combine(::testing::Values(3, 4, 5), ::testing::Values(Variety::X, Variety::Y)));

class PlaneModel : public ::testing::TestWithParam<std::tuple<int, Variety>> {};

TEST_P(PlaneModel, ChowRanksMatchCellCounts) {
  auto [n, v] = GetParam();
  auto g = shared_graph(n, v);
  auto t = chow_ranks(*g, g->dimension(), {RankModel::GenericPlane, RankField::Rational, 4});
  EXPECT_EQ(t.chow_ranks, oracle::cell_counts(n, v));
}

INSTANTIATE_TEST_SUITE_P(N, PlaneModel,
                         ::testing::Combine(::testing::Values(3, 4, 5, 6, 7), ::testing::Values(Variety::X, Variety::Y)));

TEST(Ranks, ConstraintMatricesAgreeWithNaiveRank) {
  for (int n : {3, 4})
    for (Variety v : {Variety::X, Variety::Y}) {
      auto g = shared_graph(n, v);
      for (int d = 0; d <= 2; ++d)
        for (RankModel m : {RankModel::Full, RankModel::GenericPlane}) {
          auto s = gkm_constraints(*g, d, m);
          std::size_t r = oracle::naive_rank(s.to_dense());
          EXPECT_EQ(graded_gkm_rank(*g, d, m), gkm_unknowns(*g, d, m) - r);
        }
    }
}

TEST(Ranks, ModPrimeAgreesOnFullModel) {
  for (int n : {3, 4, 5}) {
    auto g = shared_graph(n, Variety::Y);
    for (int d = 0; d <= g->dimension(); ++d)
      EXPECT_EQ(graded_gkm_rank(*g, d, RankModel::Full, RankField::ModPrime), graded_gkm_rank(*g, d, RankModel::Full));
  }
}

TEST(Ranks, GkmModuleInLowDegreeIsFree) {
  // degree 0: constants only; the deconvolution starts at g_0 = 1
  auto g = shared_graph(4, Variety::X);
  EXPECT_EQ(graded_gkm_rank(*g, 0), 1u);
}

TEST(Ranks, SmithTorsionFree) {
  for (int n : {3, 4})
    for (Variety v : {Variety::X, Variety::Y}) {
      auto g = shared_graph(n, v);
      for (int d = 0; d <= g->dimension(); ++d) EXPECT_TRUE(smith_check(*g, d).torsion_free()) << n << " " << d;
    }
  auto y5 = shared_graph(5, Variety::Y);
  for (int d = 0; d <= 4; ++d) EXPECT_TRUE(smith_check(*y5, d).torsion_free()) << d;
}

TEST(Ranks, MaxDegreeCutoff) {
  auto g = shared_graph(5, Variety::Y);
  auto t = chow_ranks(*g, 3, {});
  EXPECT_EQ(t.chow_ranks, (std::vector<long>{1, 2, 3, 8}));
}

TEST(Ranks, MiddleBasis) {
  for (int n = 3; n <= 6; ++n) {
    auto m = middle_basis_check(n, {default_rank_model(n), RankField::Rational, 4});
    EXPECT_TRUE(m.ok()) << n;
    EXPECT_EQ(m.middle_rank, 2 * n - 2);
    EXPECT_TRUE(m.det == 1 || m.det == -1);
    EXPECT_EQ(m.det, oracle::cofactor_det(m.gram));
  }
}

TEST(Ranks, TableJson) {
  auto g = shared_graph(3, Variety::Y);
  auto j = chow_ranks(*g, 2, {}).to_json();
  EXPECT_NE(j.find("\"chow_ranks\":[1,4,1]"), std::string::npos);
}
