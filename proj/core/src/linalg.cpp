#include "milnor/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum shape mismatch");
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + Integer(-1) * b; }

IntMatrix operator*(const Integer& c, const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& x : r.data_) x *= c;
  return r;
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).get_str());
  return out;
}

std::string IntMatrix::to_string() const {
  auto cells = to_strings();
  std::size_t w = 1;
  for (const auto& row : cells)
    for (const auto& s : row) w = std::max(w, s.size());
  std::ostringstream os;
  for (const auto& row : cells) {
    os << '[';
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << std::string(w - row[j].size(), ' ') << row[j];
    }
    os << "]\n";
  }
  return os.str();
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("inverse of a non-square matrix");
  std::size_t n = input.rows();
  Integer d = determinant(input);
  if (d != 1 && d != -1) return std::nullopt;
  // Gauss-Jordan over the rationals; the result is integral since det = +-1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (x.get_den() != 1) throw std::logic_error("unimodular inverse is not integral");
      inv(i, j) = x.get_num();
    }
  return inv;
}

namespace {

// Rows and columns of a maximal non-singular square submatrix.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> independent_minor(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::vector<std::size_t> order(m.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> rows, cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    std::swap(order[p], order[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    rows.push_back(order[r]);
    cols.push_back(c);
    ++r;
  }
  return {rows, cols};
}

Integer mod(const Integer& x, const Integer& d) {
  Integer r = x % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

// Works modulo D = a non-zero maximal minor: the product of the invariant
// factors divides D, so every factor is recovered as gcd(pivot, D) while
// entries stay below D.
std::vector<Integer> smith_invariants(IntMatrix m) {
  auto [rsel, csel] = independent_minor(m);
  const std::size_t rho = rsel.size();
  if (rho == 0) return {};
  IntMatrix minor(rho, rho);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) minor(i, j) = m(rsel[i], csel[j]);
  Integer D = abs(determinant(minor));
  if (D == 1) return std::vector<Integer>(rho, Integer(1));

  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = mod(m(i, j), D);

  std::vector<Integer> out;
  for (std::size_t t = 0; t < rho; ++t) {
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r && pi == r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == r) {
      // remaining factors are multiples of D, hence equal to D
      while (out.size() < rho) out.push_back(D);
      break;
    }
    for (std::size_t j = 0; j < c; ++j) std::swap(m(t, j), m(pi, j));
    for (std::size_t i = 0; i < r; ++i) std::swap(m(i, t), m(i, pj));
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        if (m(i, t) % m(t, t) == 0) {
          Integer q = m(i, t) / m(t, t);
          for (std::size_t j = t; j < c; ++j) m(i, j) = mod(m(i, j) - q * m(t, j), D);
          continue;
        }
        Integer a = m(t, t), b = m(i, t), g, s, u;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Integer ag = a / g, bg = b / g;
        for (std::size_t j = t; j < c; ++j) {
          Integer x = m(t, j), y = m(i, j);
          m(t, j) = mod(s * x + u * y, D);
          m(i, j) = mod(ag * y - bg * x, D);
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        if (m(t, j) % m(t, t) == 0) {
          Integer q = m(t, j) / m(t, t);
          for (std::size_t i = t; i < r; ++i) m(i, j) = mod(m(i, j) - q * m(i, t), D);
          continue;
        }
        Integer a = m(t, t), b = m(t, j), g, s, u;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Integer ag = a / g, bg = b / g;
        for (std::size_t i = t; i < r; ++i) {
          Integer x = m(i, t), y = m(i, j);
          m(i, t) = mod(s * x + u * y, D);
          m(i, j) = mod(ag * y - bg * x, D);
        }
      }
      for (std::size_t i = t + 1; i < r && clean; ++i)
        if (m(i, t) != 0) clean = false;
      if (!clean) continue;
      if (m(t, t) == 0) break;
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < c; ++k) m(t, k) = mod(m(t, k) + m(i, k), D);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    Integer d;
    mpz_gcd(d.get_mpz_t(), m(t, t).get_mpz_t(), D.get_mpz_t());
    out.push_back(d);
  }
  return out;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix d(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) d(i, j) += v;
  return d;
}

namespace {

struct RationalField {
  using value = Rational;
  value from(const Integer& x) const { return Rational(x); }
  bool is_zero(const value& x) const { return x == 0; }
  value inv(const value& x) const { return 1 / x; }
  value mul(const value& a, const value& b) const { return a * b; }
  value sub(const value& a, const value& b) const { return a - b; }
};

struct PrimeField {
  using value = std::uint64_t;
  static constexpr std::uint64_t p = 2147483647u;
  value from(const Integer& x) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    return r.get_ui();
  }
  bool is_zero(value x) const { return x == 0; }
  value mul(value a, value b) const { return a * b % p; }
  value sub(value a, value b) const { return (a + p - b) % p; }
  value inv(value x) const {
    value r = 1, base = x;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }
};

template <class Field>
std::size_t eliminate(const SparseMatrix& m, const Field& f) {
  using V = typename Field::value;
  using Row = std::vector<std::pair<std::uint32_t, V>>;
  std::vector<Row> pivot(m.cols);
  std::vector<char> has_pivot(m.cols, 0);
  std::size_t r = 0;

  // Shorter rows first keeps fill-in down.
  std::vector<std::size_t> order(m.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.rows[a].size() < m.rows[b].size(); });

  Row row, next;
  for (std::size_t idx : order) {
    row.clear();
    for (const auto& [j, v] : m.rows[idx]) {
      V x = f.from(v);
      if (!f.is_zero(x)) row.emplace_back(j, x);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge duplicate columns.
    std::size_t w = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (w > 0 && row[w - 1].first == row[k].first) {
        row[w - 1].second = f.sub(row[w - 1].second, f.sub(V(0), row[k].second));
      } else {
        row[w++] = row[k];
      }
    }
    row.resize(w);
    std::erase_if(row, [&](const auto& e) { return f.is_zero(e.second); });

    while (!row.empty() && has_pivot[row.front().first]) {
      const Row& prow = pivot[row.front().first];
      V factor = row.front().second;
      next.clear();
      std::size_t a = 1, b = 1;
      while (a < row.size() || b < prow.size()) {
        if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
          next.push_back(row[a++]);
        } else if (a == row.size() || prow[b].first < row[a].first) {
          next.emplace_back(prow[b].first, f.sub(V(0), f.mul(factor, prow[b].second)));
          ++b;
        } else {
          V x = f.sub(row[a].second, f.mul(factor, prow[b].second));
          if (!f.is_zero(x)) next.emplace_back(row[a].first, std::move(x));
          ++a;
          ++b;
        }
      }
      std::swap(row, next);
    }
    if (row.empty()) continue;
    V inv = f.inv(row.front().second);
    for (auto& e : row) e.second = f.mul(e.second, inv);
    std::uint32_t c = row.front().first;
    pivot[c] = row;
    has_pivot[c] = 1;
    ++r;
  }
  return r;
}

}  // namespace

}  // namespace milnor

namespace milnor {

namespace {

using IntRow = std::vector<std::pair<std::uint32_t, Integer>>;

// row -= factor * pivot, both sorted by column.
void axpy(IntRow& row, const Integer& factor, const IntRow& pivot, IntRow& scratch) {
  scratch.clear();
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      scratch.push_back(std::move(row[a++]));
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      scratch.emplace_back(pivot[b].first, -factor * pivot[b].second);
      ++b;
    } else {
      Integer x = row[a].second - factor * pivot[b].second;
      if (x != 0) scratch.emplace_back(row[a].first, std::move(x));
      ++a;
      ++b;
    }
  }
  std::swap(row, scratch);
}

struct UnitPhase {
  std::size_t pivots = 0;
  std::vector<IntRow> hard;
};

UnitPhase unit_phase(const SparseMatrix& m) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order_of_col(m.cols, kNone);
  std::vector<IntRow> pivots;
  std::vector<std::uint32_t> pivot_col;
  IntRow scratch;

  auto reduce = [&](IntRow& row) {
    for (;;) {
      std::size_t best = kNone;
      for (const auto& e : row) {
        std::size_t k = order_of_col[e.first];
        if (k != kNone && (best == kNone || k < best)) best = k;
      }
      if (best == kNone) return;
      auto it = std::lower_bound(row.begin(), row.end(), pivot_col[best],
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      // Pivot entries are +-1, so this is an exact integer step.
      const IntRow& prow = pivots[best];
      auto pit = std::lower_bound(prow.begin(), prow.end(), pivot_col[best],
                                  [](const auto& e, std::uint32_t c) { return e.first < c; });
      Integer factor = it->second * pit->second;
      axpy(row, factor, prow, scratch);
    }
  };
  auto try_pivot = [&](IntRow& row) {
    for (const auto& e : row) {
      if (e.second == 1 || e.second == -1) {
        order_of_col[e.first] = pivots.size();
        pivot_col.push_back(e.first);
        pivots.push_back(std::move(row));
        return true;
      }
    }
    return false;
  };

  std::vector<IntRow> hard;
  for (const auto& src : m.rows) {
    IntRow row;
    for (const auto& e : src)
      if (e.second != 0) row.push_back(e);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (w > 0 && row[w - 1].first == row[k].first) {
        row[w - 1].second += row[k].second;
      } else {
        row[w++] = row[k];
      }
    }
    row.resize(w);
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    reduce(row);
    if (row.empty()) continue;
    if (!try_pivot(row)) hard.push_back(std::move(row));
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<IntRow> still;
    for (auto& row : hard) {
      reduce(row);
      if (row.empty()) continue;
      if (try_pivot(row)) {
        changed = true;
      } else {
        still.push_back(std::move(row));
      }
    }
    hard = std::move(still);
  }

  return {pivots.size(), std::move(hard)};
}

}  // namespace

SparseSmith sparse_smith(const SparseMatrix& m) {
  UnitPhase phase = unit_phase(m);
  std::vector<IntRow>& hard = phase.hard;
  SparseSmith out;
  out.rank = phase.pivots;
  if (hard.empty()) return out;
  std::vector<std::uint32_t> cols;
  for (const auto& row : hard)
    for (const auto& e : row) cols.push_back(e.first);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  IntMatrix block(hard.size(), cols.size());
  for (std::size_t i = 0; i < hard.size(); ++i)
    for (const auto& e : hard[i]) {
      std::size_t j = std::lower_bound(cols.begin(), cols.end(), e.first) - cols.begin();
      block(i, j) = e.second;
    }
  for (Integer& d : smith_invariants(block)) {
    ++out.rank;
    if (d != 1) out.nonunit_factors.push_back(d);
  }
  return out;
}

std::size_t sparse_rank(const SparseMatrix& m, RankField field) {
  if (field == RankField::ModPrime) return eliminate(m, PrimeField{});
  // For +-1 matrices, unit pivots over Z first; the leftover block goes to
  // field elimination.
  bool units = std::all_of(m.rows.begin(), m.rows.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const auto& e) { return e.second == 1 || e.second == -1; });
  });
  if (!units) return eliminate(m, RationalField{});
  UnitPhase phase = unit_phase(m);
  if (phase.hard.empty()) return phase.pivots;
  SparseMatrix rest;
  rest.cols = m.cols;
  rest.rows = std::move(phase.hard);
  return phase.pivots + eliminate(rest, RationalField{});
}

}  // namespace milnor
