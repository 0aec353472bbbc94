#pragma once

#include <string>
#include <vector>

#include "milnor/motives.hpp"
#include "milnor/ranks.hpp"

namespace milnor {

struct ReportSection {
  std::string name;
  std::vector<Verdict> verdicts;
};

struct IdempotentSummary {
  std::string label;
  std::string motive;
  std::vector<std::size_t> ranks;  // per degree of Y
  std::size_t total = 0;
};

struct DecompositionReport {
  int n = 0;
  RankModel rank_model = RankModel::Full;
  std::vector<long> x_ranks;
  std::vector<long> y_ranks;
  std::vector<IdempotentSummary> idempotents;
  std::vector<ReportSection> sections;
  std::string diagram;

  bool ok() const;
  std::size_t check_count() const;
  std::vector<std::string> failures() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct ReportOptions {
  RankOptions ranks;
  int jobs = 1;
};

// Default options for n: full rank model up to n = 5, generic plane above.
ReportOptions default_report_options(int n, int jobs = 1);

// Expected Chow rank profiles of X and Y over L.
std::vector<long> expected_x_ranks(int n);
std::vector<long> expected_y_ranks(int n);

// Every verification of the engine for one n; failures are recorded as
// verdicts, not thrown.
DecompositionReport decomposition_report(int n, const ReportOptions& options);

// Chains of Tate motives, one per Severi-Brauer summand, with the Artin
// summand drawn above them.
std::string ascii_diagram(int n);

// sum_{j != l} prod_{s != l,j} alpha_ls / prod_{s != l,j} alpha_sj.
RationalFunction lagrange_sum(int n, int ell);

}  // namespace milnor
