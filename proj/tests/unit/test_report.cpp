#include <gtest/gtest.h>

#include <json.hpp>

#include "milnor/report.hpp"

using namespace milnor;

TEST(Report, N3AllPass) {
  auto r = decomposition_report(3, default_report_options(3));
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.y_ranks, (std::vector<long>{1, 4, 1}));
  ASSERT_EQ(r.idempotents.size(), 2u);
  EXPECT_EQ(r.idempotents[1].motive, "M(Spec L)(1)");
}

TEST(Report, N4FailsOnlyTheLiteralAntiDiagonalClaim) {
  auto r = decomposition_report(4, default_report_options(4, 2));
  auto f = r.failures();
  ASSERT_EQ(f.size(), 1u) << r.to_text();
  EXPECT_NE(f[0].find("anti-diagonal"), std::string::npos);
}

TEST(Report, SectionsCoverEveryModule) {
  auto r = decomposition_report(3, default_report_options(3));
  std::vector<std::string> names;
  for (const auto& s : r.sections) names.push_back(s.name);
  for (std::string want : {"cocycle", "gkm graph", "cycles and monodromy", "ranks", "ring oracle",
                           "projective bundle system on X", "restricted system on Y", "Artin idempotent",
                           "orthogonality", "completeness"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}

TEST(Report, Json) {
  auto j = nlohmann::json::parse(decomposition_report(3, default_report_options(3)).to_json());
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["y_ranks"], nlohmann::json::parse("[1,4,1]"));
}

TEST(Report, Diagram) {
  std::string d = ascii_diagram(5);
  EXPECT_NE(d.find("M(Spec L)(3)"), std::string::npos);
  EXPECT_NE(d.find("*---*---*---*---*   M(SB(A))(2)"), std::string::npos);
  EXPECT_NE(d.find("degree    0   1   2   3   4   5   6"), std::string::npos);
  // one chain per Severi-Brauer summand, one Artin row, one axis
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 5);
}

TEST(Report, ExpectedProfiles) {
  EXPECT_EQ(expected_x_ranks(3), (std::vector<long>{1, 2, 2, 1}));
  EXPECT_EQ(expected_y_ranks(4), (std::vector<long>{1, 2, 6, 2, 1}));
}
