#pragma once

#include <string>
#include <vector>

#include "milnor/gkm_graph.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

// Full: tuples over Z[t_1..t_{n-1}] after t_n := 0.
// GenericPlane: tuples over Q[x, y] after restricting to the rank-2 subtorus
// t_k -> k x + k^3 y, on which all roots stay pairwise non-proportional.
enum class RankModel { Full, GenericPlane };

std::string to_string(RankModel m);
// Full for n <= 5, GenericPlane above.
RankModel default_rank_model(int n);

struct RankOptions {
  RankModel model = RankModel::Full;
  RankField field = RankField::Rational;
  int jobs = 1;
};

// Divisibility constraints on degree-d tuples; the kernel is the degree-d
// part of the GKM module.
SparseMatrix gkm_constraints(const GkmGraph& g, int d, RankModel model);
// Number of coefficient unknowns of the degree-d system.
std::size_t gkm_unknowns(const GkmGraph& g, int d, RankModel model);
std::size_t graded_gkm_rank(const GkmGraph& g, int d, RankModel model = RankModel::Full,
                            RankField field = RankField::Rational);

struct GradedRankTable {
  Variety variety;
  int n;
  RankModel model;
  std::vector<std::size_t> gkm_ranks;  // g_0, g_1, ...
  std::vector<long> chow_ranks;        // b_0, b_1, ...

  long total() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Hilbert-series deconvolution b_m = g_m - sum_{k>=1} h_k b_{m-k}. Throws
// FreenessViolation on a negative b_m.
GradedRankTable chow_ranks(const GkmGraph& g, int up_to, const RankOptions& options = {});

// Integer check of one degree of the full model: the constraint matrix's
// invariant factors. All ones means the kernel rank is the same over every
// prime field as over Q.
struct SmithCheck {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> nonunit_factors;
  bool torsion_free() const { return nonunit_factors.empty(); }
};
SmithCheck smith_check(const GkmGraph& g, int d);

// Gram matrix of {gamma_l} u {h'^{i+1} H'^j : i + j = n-3} on Y.
struct MiddleBasisVerdict {
  int n = 0;
  IntMatrix gram;
  Integer det;
  long middle_rank = 0;
  bool unimodular = false;
  bool rank_matches = false;
  bool ok() const { return unimodular && rank_matches; }
};
MiddleBasisVerdict middle_basis_check(int n, const RankOptions& options);

}  // namespace milnor
