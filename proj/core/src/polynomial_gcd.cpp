// Multivariate gcd over the integers. A heuristic evaluation gcd is tried
// first; the fallback is recursive content / primitive part with a
// primitive pseudo-remainder sequence in the highest variable.
#include <algorithm>
#include <optional>

#include "milnor/errors.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

namespace {

// Polynomial viewed as sum_e coeffs[e] * t_var^e, coefficients free of t_var.
struct Univariate {
  int nvars;
  int var;
  std::vector<Polynomial> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

Univariate to_univariate(const Polynomial& p, int var) {
  Univariate u{p.nvars(), var, {}};
  int d = p.degree_in(var);
  if (d < 0) return u;
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const Term& t : p.terms()) {
    unsigned e = t.monomial.exponent(var - 1);
    buckets[e].push_back({t.monomial.with_exponent(var - 1, 0), t.coeff});
  }
  for (auto& b : buckets) u.coeffs.emplace_back(p.nvars(), std::move(b));
  u.trim();
  return u;
}

Polynomial from_univariate(const Univariate& u) {
  Polynomial r(u.nvars);
  for (int e = 0; e <= u.degree(); ++e)
    r += u.coeffs[e] * Polynomial::monomial(u.nvars, Monomial::variable(u.var - 1, e));
  return r;
}

Polynomial content_of(const Univariate& u) {
  Polynomial g(u.nvars);
  for (const Polynomial& c : u.coeffs) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

Univariate divide_by(const Univariate& u, const Polynomial& c) {
  Univariate r{u.nvars, u.var, {}};
  r.coeffs.reserve(u.coeffs.size());
  for (const Polynomial& x : u.coeffs) {
    auto q = divide_exact(x, c);
    if (!q) throw std::logic_error("gcd: content does not divide a coefficient");
    r.coeffs.push_back(std::move(*q));
  }
  return r;
}

// c * a mod b with c a divisor of lc(b)^k; enough for a primitive PRS.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const Polynomial& lc = b.coeffs.back();
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    Polynomial la = a.coeffs.back();
    int shift = a.degree() - db;
    // exact quotient when possible: keeps degrees from growing with lc^k
    if (auto q = divide_exact(la, lc)) {
      for (int e = 0; e <= db; ++e) a.coeffs[e + shift] -= *q * b.coeffs[e];
    } else {
      for (auto& c : a.coeffs) c *= lc;
      for (int e = 0; e <= db; ++e) a.coeffs[e + shift] -= la * b.coeffs[e];
    }
    a.trim();
  }
  return a;
}


int top_variable(const Polynomial& p, const Polynomial& q, int n) {
  for (int k = n; k >= 1; --k)
    if (p.degree_in(k) > 0 || q.degree_in(k) > 0) return k;
  return 0;
}

Integer max_norm(const Polynomial& p) {
  Integer m = 0;
  for (const Term& t : p.terms())
    if (abs(t.coeff) > m) m = abs(t.coeff);
  return m;
}

// p with t_var := xi.
Polynomial evaluate_at(const Polynomial& p, int var, const Integer& xi) {
  std::vector<Integer> powers(p.degree_in(var) + 1);
  if (!powers.empty()) powers[0] = 1;
  for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = powers[e - 1] * xi;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms())
    out.push_back({t.monomial.with_exponent(var - 1, 0), t.coeff * powers[t.monomial.exponent(var - 1)]});
  return Polynomial(p.nvars(), std::move(out));
}

// Inverse of evaluate_at for a polynomial with coefficients below xi / 2.
Polynomial xi_adic(Polynomial g, int var, const Integer& xi) {
  std::vector<Term> out;
  Integer half = xi / 2;
  for (unsigned e = 0; !g.is_zero(); ++e) {
    if (e > 255) return Polynomial(g.nvars());
    std::vector<Term> digit;
    for (const Term& t : g.terms()) {
      Integer r = t.coeff % xi;
      if (r > half) r -= xi;
      if (r < -half) r += xi;
      if (r != 0) digit.push_back({t.monomial, r});
    }
    Polynomial d(g.nvars(), digit);
    for (const Term& t : digit) out.push_back({t.monomial.with_exponent(var - 1, e), t.coeff});
    g = (g - d).divided_by(xi);
  }
  return Polynomial(g.nvars(), std::move(out));
}

// gcd of primitive-or-not p, q by evaluation at large integers; nullopt when
// the heuristic gives up.
std::optional<Polynomial> heuristic_gcd(const Polynomial& p, const Polynomial& q, int depth) {
  const int n = p.nvars();
  if (p.is_zero()) return normalize_sign(q);
  if (q.is_zero()) return normalize_sign(p);
  int var = top_variable(p, q, n);
  if (var == 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.constant_term().get_mpz_t(), q.constant_term().get_mpz_t());
    return Polynomial::constant(n, g);
  }
  if (depth > 8) return std::nullopt;
  Integer cp = p.content(), cq = q.content(), c;
  mpz_gcd(c.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
  Polynomial a = p.divided_by(cp), b = q.divided_by(cq);
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto G = heuristic_gcd(evaluate_at(a, var, xi), evaluate_at(b, var, xi), depth + 1);
    if (G) {
      Polynomial g = xi_adic(*G, var, xi);
      if (!g.is_zero()) {
        g = g.primitive_part();
        if (divide_exact(a, g) && divide_exact(b, g)) return normalize_sign(c * g);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return normalize_sign(q);
  if (q.is_zero()) return normalize_sign(p);
  const int n = std::max(p.nvars(), q.nvars());
  Polynomial pp = p, qq = q;
  if (pp.nvars() != n) pp = Polynomial::constant(n, p.constant_term());
  if (qq.nvars() != n) qq = Polynomial::constant(n, q.constant_term());

  int var = top_variable(pp, qq, n);
  if (var != 0)
    if (auto h = heuristic_gcd(pp, qq, 0)) return *h;
  if (var == 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), pp.constant_term().get_mpz_t(), qq.constant_term().get_mpz_t());
    return Polynomial::constant(n, g);
  }

  if (pp.size() < qq.size()) std::swap(pp, qq);
  Univariate a = to_univariate(pp, var);
  Univariate b = to_univariate(qq, var);
  // content of the gcd: start from the smaller side, stop at 1; the larger
  // side need not be made primitive, the PRS result is made primitive below
  Polynomial cb = content_of(b);
  Polynomial c = cb;
  for (const Polynomial& x : a.coeffs) {
    if (c.is_constant() && abs(c.constant_term()) == 1) break;
    c = gcd(c, x);
  }
  b = divide_by(b, cb);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    b = divide_by(b, content_of(b));
  }
  while (!b.is_zero()) {
    Univariate r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) {
      b = Univariate{n, var, {}};
    } else {
      b = divide_by(r, content_of(r));
    }
  }
  Polynomial g = a.degree() <= 0 ? Polynomial::constant(n, 1) : from_univariate(a).primitive_part();
  return normalize_sign(c * g);
}

}  // namespace milnor
