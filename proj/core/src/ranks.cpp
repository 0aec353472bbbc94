#include "milnor/ranks.hpp"

#include <sstream>
#include <unordered_map>

#include "json_support.hpp"
#include "milnor/cycles.hpp"
#include "milnor/errors.hpp"
#include "milnor/parallel.hpp"

namespace milnor {

std::string to_string(RankModel m) { return m == RankModel::Full ? "full" : "generic-plane"; }

RankModel default_rank_model(int n) { return n <= 5 ? RankModel::Full : RankModel::GenericPlane; }

namespace {

// All exponent vectors of total degree d in r variables, in a fixed order.
std::vector<Monomial> monomials_of_degree(int r, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(r, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == r - 1) {
      e[k] = left;
      out.push_back(Monomial::from_exponents(e.data(), r));
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[k] = x;
      self(self, k + 1, left - x);
    }
  };
  if (r == 0) {
    if (d == 0) out.push_back(Monomial());
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Restriction of t_k to the plane: (k, k^3).
std::pair<Integer, Integer> plane_root(const LinearForm& a) {
  Integer p = 0, q = 0;
  for (int k = 1; k <= a.nvars(); ++k) {
    p += Integer(a.coeff(k)) * k;
    q += Integer(a.coeff(k)) * k * k * k;
  }
  return {p, q};
}

void check_plane_is_generic(const GkmGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto w = g.tangent_weights(v);
    for (std::size_t a = 0; a < w.size(); ++a) {
      auto [p1, q1] = plane_root(w[a]);
      if (p1 == 0 && q1 == 0) throw std::logic_error("a root vanishes on the rank-2 subtorus");
      for (std::size_t b = a + 1; b < w.size(); ++b) {
        auto [p2, q2] = plane_root(w[b]);
        if (p1 * q2 == p2 * q1) throw std::logic_error("two roots become proportional on the rank-2 subtorus");
      }
    }
  }
}

SparseMatrix full_constraints(const GkmGraph& g, int d) {
  const int n = g.n();
  const int r = n - 1;
  std::vector<Monomial> mons = monomials_of_degree(r, d);
  const std::size_t per = mons.size();
  SparseMatrix m;
  m.cols = per * g.vertex_count();
  for (const Edge& e : g.edges()) {
    // Hyperplane alpha = 0 with t_n := 0.
    int a = 0, b = 0;
    for (int k = 1; k <= n; ++k) {
      if (e.weight.coeff(k) > 0) a = k;
      if (e.weight.coeff(k) < 0) b = k;
    }
    int kill = 0, from = 0, to = 0;  // t_kill := 0 or t_from := t_to (0-based vars)
    if (b == n) {
      kill = a;
    } else if (a == n) {
      kill = b;
    } else {
      from = a;
      to = b;
    }
    std::unordered_map<Monomial, std::size_t> row_of;
    for (std::size_t idx = 0; idx < per; ++idx) {
      Monomial mon = mons[idx];
      Monomial image;
      if (kill) {
        if (mon.exponent(kill - 1) > 0) continue;
        image = mon;
      } else {
        unsigned ef = mon.exponent(from - 1);
        image = mon.with_exponent(from - 1, 0).with_exponent(to - 1, mon.exponent(to - 1) + ef);
      }
      auto [it, fresh] = row_of.try_emplace(image, m.rows.size());
      if (fresh) m.rows.emplace_back();
      auto& row = m.rows[it->second];
      row.emplace_back(static_cast<std::uint32_t>(e.u * per + idx), Integer(1));
      row.emplace_back(static_cast<std::uint32_t>(e.v * per + idx), Integer(-1));
    }
  }
  return m;
}

SparseMatrix plane_constraints(const GkmGraph& g, int d) {
  check_plane_is_generic(g);
  const std::size_t per = static_cast<std::size_t>(d) + 1;
  SparseMatrix m;
  m.cols = per * g.vertex_count();
  for (const Edge& e : g.edges()) {
    // px + qy divides F(x, y) iff F(-q, p) = 0; unknown k is the x^k y^(d-k) coefficient.
    auto [p, q] = plane_root(e.weight);
    std::vector<SparseMatrix::Entry> row;
    for (int k = 0; k <= d; ++k) {
      Integer xk, yk;
      Integer mq = -q;
      mpz_pow_ui(xk.get_mpz_t(), mq.get_mpz_t(), k);
      mpz_pow_ui(yk.get_mpz_t(), p.get_mpz_t(), d - k);
      Integer c = xk * yk;
      if (c == 0) continue;
      row.emplace_back(static_cast<std::uint32_t>(e.u * per + k), c);
      row.emplace_back(static_cast<std::uint32_t>(e.v * per + k), -c);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

Integer binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

}  // namespace

SparseMatrix gkm_constraints(const GkmGraph& g, int d, RankModel model) {
  if (d < 0) throw InvalidArgument("negative degree");
  return model == RankModel::Full ? full_constraints(g, d) : plane_constraints(g, d);
}

std::size_t gkm_unknowns(const GkmGraph& g, int d, RankModel model) {
  std::size_t per = model == RankModel::Full ? binomial(d + g.n() - 2, g.n() - 2).get_ui() : d + 1;
  return per * g.vertex_count();
}

std::size_t graded_gkm_rank(const GkmGraph& g, int d, RankModel model, RankField field) {
  SparseMatrix m = gkm_constraints(g, d, model);
  return m.cols - sparse_rank(m, field);
}

long GradedRankTable::total() const {
  long s = 0;
  for (long b : chow_ranks) s += b;
  return s;
}

std::string GradedRankTable::to_text() const {
  std::ostringstream os;
  os << "variety " << to_string(variety) << ", n = " << n << ", model " << to_string(model) << '\n';
  os << "degree  gkm_rank  chow_rank\n";
  for (std::size_t m = 0; m < gkm_ranks.size(); ++m) {
    std::string d = std::to_string(m), g = std::to_string(gkm_ranks[m]), b = std::to_string(chow_ranks[m]);
    os << std::string(6 - std::min<std::size_t>(6, d.size()), ' ') << d << std::string(10 - std::min<std::size_t>(10, g.size()), ' ')
       << g << std::string(11 - std::min<std::size_t>(11, b.size()), ' ') << b << '\n';
  }
  os << "total chow rank " << total() << '\n';
  return os.str();
}

std::string GradedRankTable::to_json() const {
  detail::json j = {{"variety", to_string(variety)}, {"n", n},          {"model", to_string(model)},
                    {"gkm_ranks", gkm_ranks},        {"chow_ranks", chow_ranks}, {"total", total()}};
  return j.dump();
}

GradedRankTable chow_ranks(const GkmGraph& g, int up_to, const RankOptions& options) {
  if (up_to < 0) throw InvalidArgument("negative degree cutoff");
  GradedRankTable t{g.variety(), g.n(), options.model, {}, {}};
  t.gkm_ranks.assign(up_to + 1, 0);
  parallel_for(up_to + 1, options.jobs, [&](std::size_t d) {
    t.gkm_ranks[d] = graded_gkm_rank(g, static_cast<int>(d), options.model, options.field);
  });
  const long r = options.model == RankModel::Full ? g.n() - 1 : 2;
  for (int m = 0; m <= up_to; ++m) {
    Integer b = t.gkm_ranks[m];
    for (int k = 1; k <= m; ++k) b -= binomial(k + r - 1, r - 1) * t.chow_ranks[m - k];
    if (b < 0) {
      throw FreenessViolation("deconvolution gives b_" + std::to_string(m) + " = " + b.get_str() + " for " +
                              to_string(g.variety()) + ", n = " + std::to_string(g.n()));
    }
    t.chow_ranks.push_back(b.get_si());
  }
  return t;
}

SmithCheck smith_check(const GkmGraph& g, int d) {
  SparseSmith s = sparse_smith(gkm_constraints(g, d, RankModel::Full));
  return {d, s.rank, std::move(s.nonunit_factors)};
}

MiddleBasisVerdict middle_basis_check(int n, const RankOptions& options) {
  MiddleBasisVerdict v;
  v.n = n;
  std::vector<EquivariantClass> family;
  for (int l = 1; l <= n; ++l) family.push_back(gamma(n, l));
  EquivariantClass h = restrict_to_Y(lift_h(n));
  EquivariantClass H = restrict_to_Y(lift_H(n));
  for (int i = 0; i <= n - 3; ++i) family.push_back(multiply(power(h, i + 1), power(H, n - 3 - i)));
  v.gram = IntMatrix(family.size(), family.size());
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a; b < family.size(); ++b) {
      Polynomial p = pairing(family[a], family[b], options.jobs);
      v.gram(a, b) = v.gram(b, a) = p.constant_term();
    }
  v.det = determinant(v.gram);
  v.unimodular = v.det == 1 || v.det == -1;
  GradedRankTable t = chow_ranks(*shared_graph(n, Variety::Y), n - 2, options);
  v.middle_rank = t.chow_ranks[n - 2];
  v.rank_matches = v.middle_rank == static_cast<long>(family.size()) && v.middle_rank == 2 * n - 2;
  return v;
}

}  // namespace milnor
