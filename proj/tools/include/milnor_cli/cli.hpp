#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/gkm_graph.hpp"
#include "milnor/ranks.hpp"

namespace milnor::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { Verify, Ranks, Gram, Graph, Diagram, Cycle, Monodromy, Cocycle };
enum class Format { Text, Json, Dot };

enum ExitCode { kPass = 0, kVerificationFailure = 1, kUsage = 2 };

struct RunConfig {
  Command command = Command::Verify;
  int n = 3;
  int max_n = 8;
  std::optional<Variety> variety;
  Format format = Format::Text;
  int jobs = 1;
  std::optional<int> max_degree;
  std::optional<RankModel> model;
  int gamma = 1;
  int k = 1;
  std::string apply = "gamma:1";
  std::string family = "middle";
};

struct RunResult {
  int exit_code = kPass;
  std::string out;
  std::string err;
};

std::string to_string(Command c);

// Throws InvalidArgument when the configuration breaks an invariant.
void validate(const RunConfig& config);

RunResult run(const RunConfig& config);

// Parses argv and runs; usage errors come back as exit code 2.
RunResult run_cli(const std::vector<std::string>& args);

}  // namespace milnor::cli
