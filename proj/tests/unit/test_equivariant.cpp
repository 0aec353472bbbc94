#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "milnor/cycles.hpp"
#include "milnor/equivariant.hpp"
#include "milnor/errors.hpp"
#include "oracles.hpp"

using namespace milnor;

TEST(EquivariantClass, Validation) {
  auto g = shared_graph(3, Variety::Y);
  EXPECT_THROW(EquivariantClass(g, 1, std::vector<Polynomial>(5, Polynomial(3))), InvalidArgument);
  std::vector<Polynomial> v(6, Polynomial::parse("t1", 3));
  v[2] = Polynomial::parse("t1^2", 3);
  EXPECT_THROW(EquivariantClass(g, 1, v), InvalidArgument);
}

TEST(EquivariantClass, ConstantsAreGkmAndPairToZeroBelowTop) {
  auto g = shared_graph(4, Variety::X);
  auto one = EquivariantClass::constant(g, 1);
  EXPECT_TRUE(is_gkm(one).ok);
  EXPECT_TRUE(pairing(one, one).is_zero());
}

TEST(EquivariantClass, NonGkmDetected) {
  auto g = shared_graph(3, Variety::Y);
  std::vector<Polynomial> v(6, Polynomial(3));
  v[0] = Polynomial::constant(3, 1);
  EquivariantClass c(g, 0, v);
  auto r = is_gkm(c);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violated_edges.size(), g->incident_edges(0).size());
}

TEST(Pairing, PointClassDegreeOne) {
  // deg h^{n-1} H^{n-2} = 1 on X
  for (int n = 3; n <= 5; ++n) {
    auto c = multiply(power(lift_h(n), n - 1), power(lift_H(n), n - 2));
    EXPECT_EQ(pairing(c, EquivariantClass::constant(c.graph_ptr(), 1)), Polynomial::constant(n, 1));
  }
}

TEST(Pairing, NamesThePole) {
  auto g = shared_graph(3, Variety::Y);
  std::vector<Polynomial> v(6, Polynomial(3));
  v[0] = Polynomial::parse("t1^2", 3);
  try {
    pairing(EquivariantClass(g, 2, v), EquivariantClass::constant(g, 1));
    FAIL();
  } catch (const IntegralityViolation& e) {
    EXPECT_NE(std::string(e.what()).find("t"), std::string::npos);
  }
}

TEST(Pairing, JobsDoNotChangeTheResult) {
  std::mt19937_64 rng(3);
  auto a = oracle::random_gkm_class(rng, 5, Variety::Y, 3);
  auto b = oracle::random_gkm_class(rng, 5, Variety::Y, 4);
  EXPECT_EQ(pairing(a, b, 1), pairing(a, b, 4));
}

class PairingProperties : public ::testing::TestWithParam<int> {};

TEST_P(PairingProperties, HundredRandomClassesPerVariety) {
  int n = GetParam();
  auto r = oracle::pairing_properties(n, 100, 1000 + n);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.cases, 200);
}

INSTANTIATE_TEST_SUITE_P(N, PairingProperties, ::testing::Values(3, 4, 5));

TEST(EquivariantClass, JsonAndText) {
  auto c = gamma(3, 1);
  auto j = nlohmann::json::parse(c.to_json());
  EXPECT_EQ(j["degree"], 1);
  EXPECT_EQ(j["values"]["12"], "t1 - t3");
  EXPECT_EQ(j["values"]["21"], "0");
  EXPECT_NE(c.to_text().find("[13] t1 - t2"), std::string::npos);
}
