#include <gtest/gtest.h>

#include <json.hpp>

#include "milnor_cli/cli.hpp"

using milnor::cli::run_cli;

namespace {
milnor::cli::RunResult run(std::vector<std::string> args) { return run_cli(args); }
}  // namespace

TEST(Cli, VerifyN3Passes) {
  auto r = run({"verify", "--n", "3"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  for (std::string name : {"gamma_l is a GKM class for all l", "eta^k gamma_l = gamma_{eta^k(l)}",
                           "<gamma_k, gamma_l> = (-1)^{n-2} delta_kl", "cross block <gamma_l, h^{i+1} H^j> vanishes",
                           "p o p = p", "p o pbar_j = pbar_j o p = 0"})
    EXPECT_NE(r.out.find("[PASS] " + name), std::string::npos) << name;
}

TEST(Cli, VerifyN4NamesTheFailingIdentity) {
  auto r = run({"verify", "--n", "4"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("h-family Gram equals the anti-diagonal"), std::string::npos);
}

TEST(Cli, RanksTable) {
  auto r = run({"ranks", "--n", "5", "--variety", "Y", "--format", "json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["result"]["chow_ranks"], nlohmann::json::parse("[1,2,3,8,3,2,1]"));
  auto t = run({"ranks", "--n", "5", "--variety", "Y", "--max-degree", "2"});
  EXPECT_NE(t.out.find("total chow rank 6"), std::string::npos);
}

TEST(Cli, GraphDot) {
  auto r = run({"graph", "--n", "3", "--variety", "Y", "--format", "dot"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("graph Y3 {", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t p = 0; (p = r.out.find(" -- ", p)) != std::string::npos; ++p) ++edges;
  EXPECT_EQ(edges, 6u);
}

TEST(Cli, CycleAndMonodromy) {
  auto c = nlohmann::json::parse(run({"cycle", "--n", "5", "--gamma", "2", "--format", "json"}).out);
  EXPECT_EQ(c["result"]["class"]["degree"], 3);
  auto m = run({"monodromy", "--n", "5", "--k", "1", "--apply", "gamma:1", "--format", "json"});
  ASSERT_EQ(m.exit_code, 0) << m.err;
  auto g2 = nlohmann::json::parse(m.out)["result"]["class"];
  EXPECT_EQ(g2, c["result"]["class"]);
  EXPECT_EQ(run({"monodromy", "--n", "5", "--apply", "gamma:9"}).exit_code, 2);
  EXPECT_EQ(run({"monodromy", "--n", "5", "--apply", "x"}).exit_code, 2);
  EXPECT_EQ(run({"monodromy", "--n", "4", "--apply", "H"}).exit_code, 0);
}

TEST(Cli, GramFamilies) {
  auto r = run({"gram", "--n", "5", "--family", "h", "--format", "json"});
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["matrices"][0]["matrix"][0][0], "15");
  EXPECT_EQ(run({"gram", "--n", "4", "--family", "middle"}).exit_code, 0);
  EXPECT_EQ(run({"gram", "--n", "4", "--family", "X"}).exit_code, 0);
  EXPECT_EQ(run({"gram", "--n", "4", "--family", "nope"}).exit_code, 2);
}

TEST(Cli, EveryJsonOutputHasSchemaVersion) {
  std::vector<std::vector<std::string>> cmds = {
      {"verify", "--n", "3"},  {"ranks", "--n", "3"},         {"gram", "--n", "3"},   {"graph", "--n", "3"},
      {"diagram", "--n", "3"}, {"cycle", "--n", "3"},         {"monodromy", "--n", "3"}, {"cocycle", "--n", "3"}};
  for (auto c : cmds) {
    c.push_back("--format");
    c.push_back("json");
    auto r = run(c);
    ASSERT_EQ(r.exit_code, 0) << c[0] << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], milnor::cli::kSchemaVersion) << c[0];
    EXPECT_EQ(j["command"], c[0]);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--n", "2"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--n", "9"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--n", "3", "--format", "dot"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--bogus"}).exit_code, 2);
  EXPECT_EQ(run({"graph", "--variety", "Z"}).exit_code, 2);
  EXPECT_EQ(run({"cycle", "--n", "3", "--gamma", "4"}).exit_code, 2);
  EXPECT_EQ(run({"ranks", "--jobs", "0"}).exit_code, 2);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, OutputIndependentOfJobs) {
  for (std::string cmd : {"verify", "ranks", "gram"}) {
    auto a = run({cmd, "--n", "4", "--format", "json", "--jobs", "1"});
    auto b = run({cmd, "--n", "4", "--format", "json", "--jobs", "4"});
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
}

TEST(Cli, ConfigValidation) {
  milnor::cli::RunConfig c;
  c.command = milnor::cli::Command::Diagram;
  c.n = 6;
  EXPECT_EQ(milnor::cli::run(c).exit_code, 0);
  c.max_n = 5;
  EXPECT_EQ(milnor::cli::run(c).exit_code, 2);
}
