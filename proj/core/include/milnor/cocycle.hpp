#pragma once

#include <memory>
#include <string>
#include <vector>

#include "milnor/gkm_graph.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

// Degree-n cyclic algebra data: zeta a primitive n-th root of unity, c an
// n-th root of a, b a unit. All three stay formal.
struct CyclicAlgebraSpec {
  // Throws InvalidArgument unless 3 <= n <= 64.
  explicit CyclicAlgebraSpec(int n);
  int n;
};

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(int n);

// Z[zeta, c, b] / (Phi_n(zeta)); elements are polynomials in t1 = zeta,
// t2 = c, t3 = b with zeta-degree below deg Phi_n.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int n);

  int n() const { return n_; }
  int zeta_degree() const { return static_cast<int>(phi_.size()) - 1; }
  Polynomial reduce(const Polynomial& p) const;
  Polynomial zeta_power(long k) const;
  Polynomial c() const { return Polynomial::variable(3, 2); }
  Polynomial b() const { return Polynomial::variable(3, 3); }
  Polynomial one() const { return Polynomial::constant(3, 1); }
  std::string to_string(const Polynomial& p) const;

 private:
  int n_;
  std::vector<Integer> phi_;
};

class CycMatrix {
 public:
  CycMatrix(std::shared_ptr<const CyclotomicRing> ring, int size);

  int size() const { return size_; }
  const CyclotomicRing& ring() const { return *ring_; }
  const Polynomial& at(int i, int j) const { return entries_[(i - 1) * size_ + (j - 1)]; }  // 1-based
  void set(int i, int j, const Polynomial& v);

  static CycMatrix identity(std::shared_ptr<const CyclotomicRing> ring, int size);

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const Polynomial& s, const CycMatrix& a);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) { return a.entries_ == b.entries_; }
  CycMatrix power(int k) const;

  std::string to_text() const;

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  int size_;
  std::vector<Polynomial> entries_;
};

struct Generators {
  CycMatrix rho_u;
  CycMatrix rho_v;
};

// rho_u = diag(c, zeta c, ..., zeta^{n-1} c); rho_v has ones on the
// subdiagonal and b in the top-right corner.
Generators build_generators(const CyclicAlgebraSpec& spec);

struct CocycleIdentity {
  std::string identity;
  int k;
  bool pass;
};

struct CocycleReport {
  int n;
  std::vector<CocycleIdentity> identities;
  bool distinct_eigenvalues;  // zeta^{i-1} c pairwise different

  bool ok() const;
  std::string to_text() const;
  std::string to_json() const;
};

// For k = 0..n-1: zeta^k rho_v^k rho_u = rho_u rho_v^k and
// rho_v^k rho_v = rho_v rho_v^k.
CocycleReport verify_cocycle(const CyclicAlgebraSpec& spec);

// [ij] -> [eta^k(i) eta^k(j)] on vertex indices (lexicographic order).
// Throws InvalidArgument unless 0 <= k < n.
std::vector<std::size_t> fixed_point_permutation(int n, int k);

}  // namespace milnor
