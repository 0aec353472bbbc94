#include "milnor/cocycle.hpp"

#include <sstream>

#include "json_support.hpp"
#include "milnor/errors.hpp"
#include "milnor/permutation.hpp"

namespace milnor {

CyclicAlgebraSpec::CyclicAlgebraSpec(int degree) : n(degree) {
  if (n < 3) throw InvalidArgument("cyclic algebra degree must be at least 3");
  if (n > 64) throw InvalidArgument("cyclic algebra degree must be at most 64");
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic index must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<Integer> den = cyclotomic_polynomial(d);
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<Integer> q(dn - dd + 1);
    for (int e = dn; e >= dd; --e) {
      Integer c = num[e];  // den is monic
      q[e - dd] = c;
      for (int i = 0; i <= dd; ++i) num[e - dd + i] -= c * den[i];
    }
    for (int e = 0; e < dd; ++e)
      if (num[e] != 0) throw std::logic_error("cyclotomic division left a remainder");
    num = std::move(q);
  }
  return num;
}

CyclotomicRing::CyclotomicRing(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

Polynomial CyclotomicRing::reduce(const Polynomial& p) const {
  const int D = zeta_degree();
  int top = p.degree_in(1);
  if (top < D) return p;
  // Coefficient of zeta^e, as a polynomial in c and b.
  std::vector<std::vector<Term>> by_power(top + 1);
  for (const Term& t : p.terms()) by_power[t.monomial.exponent(0)].push_back({t.monomial.with_exponent(0, 0), t.coeff});
  std::vector<Polynomial> coeff;
  for (auto& ts : by_power) coeff.emplace_back(3, std::move(ts));
  for (int e = top; e >= D; --e) {
    if (coeff[e].is_zero()) continue;
    Polynomial c = coeff[e];
    for (int i = 0; i < D; ++i)
      if (phi_[i] != 0) coeff[e - D + i] -= c * phi_[i];
    coeff[e] = Polynomial(3);
  }
  Polynomial r(3);
  for (int e = 0; e < D; ++e) r += coeff[e] * Polynomial::monomial(3, Monomial::variable(0, e));
  return r;
}

Polynomial CyclotomicRing::zeta_power(long k) const {
  long r = ((k % n_) + n_) % n_;
  return reduce(Polynomial::monomial(3, Monomial::variable(0, static_cast<unsigned>(r))));
}

std::string CyclotomicRing::to_string(const Polynomial& p) const {
  std::string s = p.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 't' && i + 1 < s.size() && s[i + 1] >= '1' && s[i + 1] <= '3') {
      out += s[i + 1] == '1' ? "z" : s[i + 1] == '2' ? "c" : "b";
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

CycMatrix::CycMatrix(std::shared_ptr<const CyclotomicRing> ring, int size)
    : ring_(std::move(ring)), size_(size), entries_(static_cast<std::size_t>(size) * size, Polynomial(3)) {}

void CycMatrix::set(int i, int j, const Polynomial& v) { entries_[(i - 1) * size_ + (j - 1)] = ring_->reduce(v); }

CycMatrix CycMatrix::identity(std::shared_ptr<const CyclotomicRing> ring, int size) {
  CycMatrix m(ring, size);
  for (int i = 1; i <= size; ++i) m.set(i, i, ring->one());
  return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.size_ != b.size_) throw InvalidArgument("matrix sizes differ");
  CycMatrix r(a.ring_, a.size_);
  for (int i = 1; i <= a.size_; ++i)
    for (int j = 1; j <= a.size_; ++j) {
      Polynomial s(3);
      for (int k = 1; k <= a.size_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) s += a.at(i, k) * b.at(k, j);
      r.set(i, j, s);
    }
  return r;
}

CycMatrix operator*(const Polynomial& s, const CycMatrix& a) {
  CycMatrix r(a.ring_, a.size_);
  for (int i = 1; i <= a.size_; ++i)
    for (int j = 1; j <= a.size_; ++j) r.set(i, j, s * a.at(i, j));
  return r;
}

CycMatrix CycMatrix::power(int k) const {
  if (k < 0) throw InvalidArgument("negative matrix power");
  CycMatrix r = identity(ring_, size_);
  for (int e = 0; e < k; ++e) r = r * *this;
  return r;
}

std::string CycMatrix::to_text() const {
  std::vector<std::string> cells;
  std::size_t w = 1;
  for (const auto& e : entries_) {
    cells.push_back(ring_->to_string(e));
    w = std::max(w, cells.back().size());
  }
  std::ostringstream os;
  for (int i = 0; i < size_; ++i) {
    os << '[';
    for (int j = 0; j < size_; ++j) {
      const std::string& c = cells[i * size_ + j];
      if (j) os << "  ";
      os << std::string(w - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

Generators build_generators(const CyclicAlgebraSpec& spec) {
  auto ring = std::make_shared<const CyclotomicRing>(spec.n);
  CycMatrix u(ring, spec.n), v(ring, spec.n);
  for (int i = 1; i <= spec.n; ++i) u.set(i, i, ring->zeta_power(i - 1) * ring->c());
  for (int i = 2; i <= spec.n; ++i) v.set(i, i - 1, ring->one());
  v.set(1, spec.n, ring->b());
  return {std::move(u), std::move(v)};
}

bool CocycleReport::ok() const {
  if (!distinct_eigenvalues) return false;
  for (const auto& id : identities)
    if (!id.pass) return false;
  return true;
}

std::string CocycleReport::to_text() const {
  std::ostringstream os;
  os << "cocycle identities, n = " << n << '\n';
  for (const auto& id : identities) os << "  [" << (id.pass ? "PASS" : "FAIL") << "] k=" << id.k << "  " << id.identity << '\n';
  os << "  [" << (distinct_eigenvalues ? "PASS" : "FAIL") << "] diagonal entries of rho_u pairwise distinct\n";
  return os.str();
}

std::string CocycleReport::to_json() const {
  detail::json ids = detail::json::array();
  for (const auto& id : identities) ids.push_back({{"identity", id.identity}, {"k", id.k}, {"pass", id.pass}});
  detail::json j = {{"n", n}, {"identities", ids}, {"distinct_eigenvalues", distinct_eigenvalues}, {"ok", ok()}};
  return j.dump();
}

CocycleReport verify_cocycle(const CyclicAlgebraSpec& spec) {
  auto [u, v] = build_generators(spec);
  const CyclotomicRing& ring = u.ring();
  CocycleReport report{spec.n, {}, true};
  CycMatrix vk = CycMatrix::identity(std::make_shared<const CyclotomicRing>(spec.n), spec.n);
  for (int k = 0; k < spec.n; ++k) {
    bool conj = ring.zeta_power(k) * (vk * u) == u * vk;
    bool comm = vk * v == v * vk;
    report.identities.push_back({"zeta^k rho_v^k rho_u = rho_u rho_v^k", k, conj});
    report.identities.push_back({"rho_v^k rho_v = rho_v rho_v^k", k, comm});
    vk = vk * v;
  }
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      if (u.at(i, i) == u.at(j, j)) report.distinct_eigenvalues = false;
  return report;
}

std::vector<std::size_t> fixed_point_permutation(int n, int k) {
  if (k < 0 || k >= n) throw InvalidArgument("exponent k must lie in 0.." + std::to_string(n - 1));
  GkmGraph g(n, Variety::Y);
  Permutation eta = Permutation::cycle(n).power(k);
  std::vector<std::size_t> image;
  for (const Vertex& v : g.vertices()) image.push_back(g.index({eta(v.i), eta(v.j)}));
  return image;
}

}  // namespace milnor
