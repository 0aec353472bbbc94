#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "milnor/cycles.hpp"
#include "milnor/errors.hpp"
#include "milnor/linear_form.hpp"

namespace oracle {

using namespace milnor;

Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree, int terms, int coeff_bits) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial p(nvars);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    int total = deg(rng);
    for (int k = 0; k < total; ++k) ++e[rng() % nvars];
    Integer c = gr.get_z_bits(coeff_bits) - gr.get_z_bits(coeff_bits);
    p += Polynomial::monomial(nvars, Monomial::from_exponents(e.data(), nvars), c);
  }
  return p;
}

Polynomial random_homogeneous(std::mt19937_64& rng, int nvars, int degree, int terms, int coeff_bound) {
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    for (int k = 0; k < degree; ++k) ++e[rng() % nvars];
    p += Polynomial::monomial(nvars, Monomial::from_exponents(e.data(), nvars), c(rng));
  }
  return p;
}

EquivariantClass random_gkm_class(std::mt19937_64& rng, int n, Variety v, int degree) {
  auto graph = shared_graph(n, v);
  auto on = [&](const EquivariantClass& c) { return v == Variety::Y ? restrict_to_Y(c) : c; };
  auto h = on(lift_h(n));
  auto H = on(lift_H(n));
  EquivariantClass sum = EquivariantClass::zero(graph, degree);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) {
      if (pick(rng) == 0) continue;
      Polynomial coeff = random_homogeneous(rng, n, degree - a - b, 2, 3);
      if (coeff.is_zero()) continue;
      sum = add(sum, scale(coeff, multiply(power(h, a), power(H, b))));
    }
  if (v == Variety::Y && degree >= n - 2)
    for (int l = 1; l <= n; ++l) {
      if (pick(rng) == 0) continue;
      Polynomial coeff = random_homogeneous(rng, n, degree - (n - 2), 2, 3);
      if (coeff.is_zero()) continue;
      sum = add(sum, scale(coeff, gamma(n, l)));
    }
  return sum;
}

Rational lagrange_at(int n, int ell, const std::vector<Rational>& t) {
  Rational total = 0;
  for (int j = 1; j <= n; ++j) {
    if (j == ell) continue;
    Rational term = 1;
    for (int s = 1; s <= n; ++s) {
      if (s == ell || s == j) continue;
      term *= (t[ell - 1] - t[s - 1]) / (t[s - 1] - t[j - 1]);
    }
    total += term;
  }
  return total;
}

std::vector<long> cell_counts(int n, Variety v) {
  // distinct, non-arithmetic values keep every t_a - t_b non-zero
  std::vector<long> xi(n);
  for (int k = 0; k < n; ++k) xi[k] = 3 * k * k + 7 * k + 1;
  int dim = v == Variety::X ? 2 * n - 3 : 2 * n - 4;
  std::vector<long> b(dim + 1, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::vector<long> w;
      for (int s = 1; s <= n; ++s) {
        if (s == i || s == j) continue;
        w.push_back(xi[i - 1] - xi[s - 1]);
        w.push_back(xi[s - 1] - xi[j - 1]);
      }
      if (v == Variety::X) w.push_back(xi[i - 1] - xi[j - 1]);
      b[std::count_if(w.begin(), w.end(), [](long x) { return x < 0; })]++;
    }
  return b;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer divisor_degree(int n, int a, int b, bool sum_rule) {
  // coefficient of h1^{n-1} h2^{n-1} in h1^a H^b (h1 + h2)
  Integer total = 0;
  if (sum_rule) {
    // h1^a (h1+h2)^{b+1}
    total = binomial(b + 1, n - 1 - a);
    if (a + b + 1 != 2 * n - 2) total = 0;
  } else {
    // h1^a h2^b (h1 + h2)
    if (a + 1 == n - 1 && b == n - 1) total += 1;
    if (a == n - 1 && b + 1 == n - 1) total += 1;
  }
  return total;
}

std::size_t naive_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Integer cofactor_det(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Integer t = m(0, c) * cofactor_det(minor);
    d += (c % 2 == 0) ? t : Integer(-t);
  }
  return d;
}

SuiteResult pairing_properties(int n, int trials, std::uint64_t seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  for (Variety v : {Variety::X, Variety::Y}) {
    auto graph = shared_graph(n, v);
    const int dim = graph->dimension();
    std::string tag = to_string(v) + " n=" + std::to_string(n);
    for (int t = 0; t < trials; ++t) {
      int da = static_cast<int>(rng() % (dim + 1));
      int db = dim - da + static_cast<int>(rng() % 2);
      auto a = random_gkm_class(rng, n, v, da);
      auto a2 = random_gkm_class(rng, n, v, da);
      auto b = random_gkm_class(rng, n, v, db);
      ++r.cases;
      if (!is_gkm(a).ok || !is_gkm(b).ok) r.fail(tag + ": random class not GKM");
      Polynomial ab;
      try {
        ab = pairing(a, b);
      } catch (const IntegralityViolation& e) {
        r.fail(tag + ": pairing of GKM classes not polynomial: " + e.what());
        continue;
      }
      if (!ab.is_homogeneous_of(da + db - dim)) r.fail(tag + ": pairing has the wrong degree");
      if (t % 10 == 0) {
        auto rf = pairing_rational(a, b);
        if (!rf.to_polynomial() || !(*rf.to_polynomial() == ab)) r.fail(tag + ": LCM and term-by-term pairing differ");
      }
      if (!(pairing(b, a) == ab)) r.fail(tag + ": pairing not symmetric");
      Integer k = static_cast<long>(rng() % 11) - 5;
      if (!(pairing(add(a, scale(k, a2)), b) == ab + k * pairing(a2, b))) r.fail(tag + ": pairing not bilinear");
      Polynomial f = random_homogeneous(rng, n, 1, 2, 4);
      if (!f.is_zero() && !(pairing(scale(f, a), b) == f * ab)) r.fail(tag + ": pairing not Z[t]-linear");
      int kk = static_cast<int>(rng() % n);
      auto m = MonodromyElement::eta_power(n, kk);
      if (!(pairing(act(m, a), act(m, b)) == permute(m.sigma(), ab))) r.fail(tag + ": pairing not equivariant");
      if (!is_gkm(act(m, a)).ok) r.fail(tag + ": monodromy image not GKM");
    }
    // a class off the GKM module: one vertex shifted by t_1^dim
    auto top = random_gkm_class(rng, n, v, dim);
    std::vector<Polynomial> vals(top.values().begin(), top.values().end());
    vals[rng() % vals.size()] += pow(Polynomial::variable(n, 1), dim);
    EquivariantClass bad(graph, dim, vals);
    ++r.cases;
    try {
      pairing(bad, EquivariantClass::constant(graph, 1));
      r.fail(tag + ": non-GKM class paired to a polynomial");
    } catch (const IntegralityViolation&) {
    }
  }
  return r;
}

SuiteResult ring_axioms(int trials, std::uint64_t seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int nv = 1 + static_cast<int>(rng() % 6);
    int bits = t % 3 == 0 ? 100 : 8;
    auto a = random_polynomial(rng, nv, 4, 6, bits);
    auto b = random_polynomial(rng, nv, 4, 6, bits);
    auto c = random_polynomial(rng, nv, 3, 4, bits);
    ++r.cases;
    Polynomial zero(nv), one = Polynomial::constant(nv, 1);
    if (!(a + b == b + a) || !(a * b == b * a)) r.fail("commutativity");
    if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c))) r.fail("associativity");
    if (!(a * (b + c) == a * b + a * c)) r.fail("distributivity");
    if (!(a + zero == a) || !(a * one == a) || !(a - a == zero) || !((a * zero).is_zero())) r.fail("identities");
    if (!b.is_zero()) {
      auto q = divide_exact(a * b, b);
      if (!q || !(*q == a)) r.fail("exact division");
    }
    std::vector<Rational> pt(nv);
    for (auto& x : pt) {
      x = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
      x.canonicalize();
    }
    if (a.evaluate(pt) * b.evaluate(pt) != (a * b).evaluate(pt) ||
        a.evaluate(pt) + c.evaluate(pt) != (a + c).evaluate(pt))
      r.fail("evaluation homomorphism");
    if (!(Polynomial::parse(a.to_string(), nv) == a)) r.fail("text round trip: " + a.to_string());
    if (!(Polynomial::from_json(a.to_json()) == a)) r.fail("json round trip");
    if (t % 4 == 0 && !c.is_zero()) {
      auto a1 = random_polynomial(rng, nv, 2, 3, 6), b1 = random_polynomial(rng, nv, 2, 3, 6);
      auto g = gcd(a1 * c, b1 * c);
      if (!divide_exact(g, c) || !divide_exact(a1 * c, g) || !divide_exact(b1 * c, g)) r.fail("gcd");
    }
  }
  return r;
}

}  // namespace oracle
