#pragma once

// Reference computations written independently of the engine, plus the
// randomized property suites shared by the unit tests and the acceptance
// binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "milnor/equivariant.hpp"
#include "milnor/linalg.hpp"

namespace oracle {

using milnor::Integer;
using milnor::Rational;

milnor::Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree, int terms, int coeff_bits);
milnor::Polynomial random_homogeneous(std::mt19937_64& rng, int nvars, int degree, int terms, int coeff_bound);

// Random Z[t]-combination of h'^a H'^b (and of gamma_l on Y) of the given
// degree; GKM by construction.
milnor::EquivariantClass random_gkm_class(std::mt19937_64& rng, int n, milnor::Variety v, int degree);

// sum_{j != l} prod_{s != l,j} (t_l - t_s) / (t_s - t_j) at a rational point.
Rational lagrange_at(int n, int ell, const std::vector<Rational>& t);

// Betti numbers from a generic cocharacter: the number of fixed points
// with exactly k negative tangent weights. Tangent weights are rebuilt from
// the vertex description, not read from the graph.
std::vector<long> cell_counts(int n, milnor::Variety v);

// deg of h1^a H^b on a (1,1) divisor of P^{n-1} x P^{n-1}, with H = h1 + h2
// when sum_rule is set and H = h2 otherwise.
Integer divisor_degree(int n, int a, int b, bool sum_rule);

// Plain Gaussian elimination over Q.
std::size_t naive_rank(const milnor::IntMatrix& m);
// Cofactor expansion.
Integer cofactor_det(const milnor::IntMatrix& m);

Integer binomial(long n, long k);

struct SuiteResult {
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Pairing integrality, bilinearity and equivariance under eta^k on `trials`
// random GKM classes of each of X and Y.
SuiteResult pairing_properties(int n, int trials, std::uint64_t seed);

// Commutative ring axioms, exact division, gcd, evaluation homomorphism and
// text round trip on random polynomials.
SuiteResult ring_axioms(int trials, std::uint64_t seed);

}  // namespace oracle
