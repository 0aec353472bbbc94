#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Bareiss fraction-free elimination. Requires a square matrix; the empty
// matrix has determinant 1.
Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
// Integer inverse when det = +-1, nullopt otherwise.
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m);
// Non-zero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix m);

// Row-sparse integer matrix used for the divisibility systems.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, Integer>;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> rows;

  IntMatrix to_dense() const;
};

enum class RankField { Rational, ModPrime };

// Rank by sparse elimination. Rational is exact: for a +-1 matrix unit pivots
// are taken over the integers first and the remaining block is eliminated over Q. ModPrime
// works modulo 2^31 - 1 and gives a lower bound for the rational rank.
std::size_t sparse_rank(const SparseMatrix& m, RankField field = RankField::Rational);

// Integer elimination with unit pivots, then a dense Smith form on whatever
// block has no unit left. Returns the rank and the invariant factors other
// than 1.
struct SparseSmith {
  std::size_t rank = 0;
  std::vector<Integer> nonunit_factors;
};
SparseSmith sparse_smith(const SparseMatrix& m);

}  // namespace milnor
