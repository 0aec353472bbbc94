#include "milnor/chow_model.hpp"

#include <mutex>
#include <sstream>

#include "milnor/cycles.hpp"
#include "milnor/errors.hpp"
#include "milnor/parallel.hpp"

namespace milnor {

std::string to_string(ChowVariety v) {
  switch (v) {
    case ChowVariety::X:
      return "X";
    case ChowVariety::Y:
      return "Y";
    case ChowVariety::P:
      return "P";
    case ChowVariety::L:
      return "L";
  }
  return "?";
}

std::vector<std::size_t> ChowModel::rank_profile() const {
  std::vector<std::size_t> r;
  for (int m = 0; m <= dim; ++m) r.push_back(rank(m));
  return r;
}

std::size_t ChowModel::total_rank() const {
  std::size_t s = 0;
  for (int m = 0; m <= dim; ++m) s += rank(m);
  return s;
}

std::vector<Integer> ChowModel::coordinates_from_pairings(int m, const std::vector<Integer>& pairings) const {
  const IntMatrix& inv = gram_t_inverse.at(m);
  if (pairings.size() != inv.cols()) throw InvalidArgument("pairing vector has the wrong length");
  std::vector<Integer> x(inv.rows());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t k = 0; k < inv.cols(); ++k) x[i] += inv(i, k) * pairings[k];
  return x;
}

std::vector<Integer> ChowModel::coordinates(const EquivariantClass& c, int jobs) const {
  if (reps.empty()) throw InvalidArgument("model " + to_string(variety) + " has no equivariant representatives");
  int m = c.degree();
  if (m < 0 || m > dim) return {};
  const auto& dual = reps[dim - m];
  std::vector<Integer> p;
  for (const auto& d : dual) {
    Polynomial v = pairing(c, d, jobs);
    if (!v.is_constant()) throw InvalidArgument("class pairs to a non-constant against a dual basis element");
    p.push_back(v.constant_term());
  }
  return coordinates_from_pairings(m, p);
}

std::string ChowModel::describe() const {
  std::ostringstream os;
  os << to_string(variety) << " (n = " << n << ", dim " << dim << ")\n";
  for (int m = 0; m <= dim; ++m) {
    os << "  CH^" << m << ":";
    for (const auto& l : labels[m]) os << ' ' << l;
    os << '\n';
  }
  return os.str();
}

namespace {

Integer binomial(long a, long b) {
  if (b < 0 || a < b || a < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

std::string monomial_label(int a, int b) {
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a > 0) s += a == 1 ? "h" : "h^" + std::to_string(a);
  if (b > 0) s += b == 1 ? "H" : "H^" + std::to_string(b);
  return s;
}

void finish(ChowModel& model) {
  model.gram_t_inverse.clear();
  for (int m = 0; m <= model.dim; ++m) {
    auto inv = inverse_unimodular(model.gram[m].transpose());
    if (!inv) {
      throw VerificationError("Poincare duality: Gram matrix of " + to_string(model.variety) + " in degree " +
                              std::to_string(m) + " has determinant " + determinant(model.gram[m]).get_str());
    }
    model.gram_t_inverse.push_back(std::move(*inv));
  }
}

// Basis exponents (a, b) of CH^m(X_0).
std::vector<std::pair<int, int>> x_basis(int n, int m) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= n - 1; ++a) {
    int b = m - a;
    if (b >= 0 && b <= n - 2) out.push_back({a, b});
  }
  return out;
}

template <class Key, class Build>
std::shared_ptr<const ChowModel> cached(std::map<Key, std::shared_ptr<const ChowModel>>& cache, std::mutex& mu,
                                        const Key& key, Build build) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto model = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(model)).first->second;
}

void require_n(int n) {
  if (n < 3) throw InvalidArgument("Chow models need n >= 3");
  if (n > Monomial::kMaxVars) throw InvalidArgument("Chow models support n <= 8");
}

}  // namespace

std::map<std::pair<int, int>, Integer> oracle_normal_form(int n, int a, int b) {
  std::map<std::pair<int, int>, Integer> out;
  if (a < 0 || b < 0) throw InvalidArgument("negative exponent");
  if (a >= n) return out;
  if (b <= n - 2) {
    out[{a, b}] = 1;
    return out;
  }
  // H^{n-1} = -sum_{k=1}^{n-1} C(n,k) H^{k-1} (-h)^{n-k}
  for (int k = 1; k <= n - 1; ++k) {
    Integer c = -binomial(n, k);
    if ((n - k) % 2) c = -c;
    for (auto& [key, v] : oracle_normal_form(n, a + n - k, b - (n - 1) + (k - 1))) out[key] += c * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer oracle_degree(int n, int a, int b) {
  if (a + b != 2 * n - 3) return 0;
  auto nf = oracle_normal_form(n, a, b);
  auto it = nf.find({n - 1, n - 2});
  return it == nf.end() ? Integer(0) : it->second;
}

OracleRings oracle_ring(int n) {
  require_n(n);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ChowModel>> xs, ps;
  OracleRings out;
  out.X = cached(xs, mu, n, [n] {
    auto model = std::make_shared<ChowModel>();
    model->variety = ChowVariety::X;
    model->n = n;
    model->dim = 2 * n - 3;
    auto h = lift_h(n);
    auto H = lift_H(n);
    for (int m = 0; m <= model->dim; ++m) {
      std::vector<std::string> labels;
      std::vector<EquivariantClass> reps;
      for (auto [a, b] : x_basis(n, m)) {
        labels.push_back(monomial_label(a, b));
        reps.push_back(multiply(power(h, a), power(H, b)));
      }
      model->labels.push_back(std::move(labels));
      model->reps.push_back(std::move(reps));
    }
    for (int m = 0; m <= model->dim; ++m) {
      auto row = x_basis(n, m), col = x_basis(n, model->dim - m);
      IntMatrix g(row.size(), col.size());
      for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = 0; j < col.size(); ++j)
          g(i, j) = oracle_degree(n, row[i].first + col[j].first, row[i].second + col[j].second);
      model->gram.push_back(std::move(g));
      for (int which = 0; which < 2; ++which) {
        auto target = x_basis(n, m + 1);
        IntMatrix mult(target.size(), row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
          auto nf = oracle_normal_form(n, row[j].first + (which == 0), row[j].second + (which == 1));
          for (std::size_t i = 0; i < target.size(); ++i) {
            auto it = nf.find(target[i]);
            if (it != nf.end()) mult(i, j) = it->second;
          }
        }
        (which == 0 ? model->mult_h : model->mult_H).push_back(std::move(mult));
      }
    }
    finish(*model);
    return std::shared_ptr<const ChowModel>(std::move(model));
  });
  out.P = cached(ps, mu, n, [n] {
    auto model = std::make_shared<ChowModel>();
    model->variety = ChowVariety::P;
    model->n = n;
    model->dim = n - 1;
    for (int m = 0; m <= model->dim; ++m) {
      model->labels.push_back({monomial_label(m, 0)});
      model->gram.push_back(IntMatrix::identity(1));
      model->mult_h.push_back(m < model->dim ? IntMatrix::identity(1) : IntMatrix(0, 1));
    }
    finish(*model);
    return std::shared_ptr<const ChowModel>(std::move(model));
  });
  return out;
}

std::shared_ptr<const ChowModel> y_model(int n, int jobs) {
  require_n(n);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ChowModel>> cache;
  return cached(cache, mu, n, [n, jobs] {
    auto model = std::make_shared<ChowModel>();
    model->variety = ChowVariety::Y;
    model->n = n;
    model->dim = 2 * n - 4;
    const int mid = n - 2;
    auto h = restrict_to_Y(lift_h(n));
    auto H = restrict_to_Y(lift_H(n));
    auto mono = [&](int a, int b) { return multiply(power(h, a), power(H, b)); };
    for (int m = 0; m <= model->dim; ++m) {
      std::vector<std::string> labels;
      std::vector<EquivariantClass> reps;
      if (m < mid) {
        for (int a = 0; a <= m; ++a) {
          labels.push_back(monomial_label(a, m - a));
          reps.push_back(mono(a, m - a));
        }
      } else if (m == mid) {
        for (int l = 1; l <= n; ++l) {
          labels.push_back("g" + std::to_string(l));
          reps.push_back(gamma(n, l));
        }
        for (int i = 0; i <= n - 3; ++i) {
          labels.push_back(monomial_label(i + 1, n - 3 - i));
          reps.push_back(mono(i + 1, n - 3 - i));
        }
      } else {
        for (int q = 0; q <= model->dim - m; ++q) {
          labels.push_back(monomial_label(n - 1 - q, m - n + 1 + q));
          reps.push_back(mono(n - 1 - q, m - n + 1 + q));
        }
      }
      model->labels.push_back(std::move(labels));
      model->reps.push_back(std::move(reps));
    }
    auto integer_pairing = [&](const EquivariantClass& a, const EquivariantClass& b) {
      Polynomial p = pairing(a, b, jobs);
      if (!p.is_constant()) throw std::logic_error("complementary-degree pairing is not a constant");
      return p.constant_term();
    };
    for (int m = 0; m <= model->dim; ++m) {
      const auto& row = model->reps[m];
      const auto& col = model->reps[model->dim - m];
      IntMatrix g(row.size(), col.size());
      if (model->dim - m < m) {
        g = model->gram[model->dim - m].transpose();
      } else {
        for (std::size_t i = 0; i < row.size(); ++i)
          for (std::size_t j = 0; j < col.size(); ++j) g(i, j) = integer_pairing(row[i], col[j]);
      }
      model->gram.push_back(std::move(g));
    }
    finish(*model);
    for (int m = 0; m <= model->dim; ++m) {
      for (int which = 0; which < 2; ++which) {
        const auto& factor = which == 0 ? h : H;
        IntMatrix mult(model->rank(m + 1), model->rank(m));
        if (m < model->dim) {
          const auto& dual = model->reps[model->dim - m - 1];
          for (std::size_t j = 0; j < model->reps[m].size(); ++j) {
            EquivariantClass prod = multiply(factor, model->reps[m][j]);
            std::vector<Integer> p;
            for (const auto& d : dual) p.push_back(integer_pairing(prod, d));
            auto x = model->coordinates_from_pairings(m + 1, p);
            for (std::size_t i = 0; i < x.size(); ++i) mult(i, j) = x[i];
          }
        }
        (which == 0 ? model->mult_h : model->mult_H).push_back(std::move(mult));
      }
    }
    return std::shared_ptr<const ChowModel>(std::move(model));
  });
}

std::shared_ptr<const ChowModel> spec_l_model(int n) {
  require_n(n);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ChowModel>> cache;
  return cached(cache, mu, n, [n] {
    auto model = std::make_shared<ChowModel>();
    model->variety = ChowVariety::L;
    model->n = n;
    model->dim = 0;
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("eta^" + std::to_string(k));
    model->labels.push_back(std::move(labels));
    model->gram.push_back(IntMatrix::identity(n));
    finish(*model);
    return std::shared_ptr<const ChowModel>(std::move(model));
  });
}

std::vector<IntMatrix> x_localization_gram(int n, int jobs) {
  auto X = oracle_ring(n).X;
  std::vector<IntMatrix> out;
  for (int m = 0; m <= X->dim; ++m) {
    const auto& row = X->reps[m];
    const auto& col = X->reps[X->dim - m];
    IntMatrix g(row.size(), col.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = 0; j < col.size(); ++j) {
        Polynomial p = pairing(row[i], col[j], jobs);
        if (!p.is_constant()) throw std::logic_error("complementary-degree pairing is not a constant");
        g(i, j) = p.constant_term();
      }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace milnor
