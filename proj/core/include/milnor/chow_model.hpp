#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "milnor/equivariant.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

// X = Milnor hypersurface, Y = its hyperplane section, P = P^{n-1},
// L = Spec L split into n points.
enum class ChowVariety { X, Y, P, L };
std::string to_string(ChowVariety v);

// Split Chow groups as graded lattices.
//
// Matrix conventions: a map CH^m -> CH^k is a rank(k) x rank(m) matrix
// whose column j holds the coordinates of the image of basis element j.
// gram[m](i, j) = <e_i in CH^m, e_j in CH^{dim-m}>.
struct ChowModel {
  ChowVariety variety;
  int n = 0;
  int dim = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<IntMatrix> gram;
  std::vector<IntMatrix> mult_h;  // CH^m -> CH^{m+1}; empty for L
  std::vector<IntMatrix> mult_H;  // CH^m -> CH^{m+1}; X and Y only
  // Equivariant representatives of the basis (X: on the X graph, Y: on the
  // Y graph); empty for P and L.
  std::vector<std::vector<EquivariantClass>> reps;

  std::size_t rank(int m) const { return m < 0 || m > dim ? 0 : labels[m].size(); }
  std::vector<std::size_t> rank_profile() const;
  std::size_t total_rank() const;

  // Coordinates of a class of degree m given its pairings with the
  // degree dim - m basis: solves gram[m]^T x = p.
  std::vector<Integer> coordinates_from_pairings(int m, const std::vector<Integer>& pairings) const;
  // Coordinates of an equivariant class via localization pairings with reps.
  std::vector<Integer> coordinates(const EquivariantClass& c, int jobs = 1) const;

  std::string describe() const;

  // (gram[m]^T)^{-1}, filled at construction.
  std::vector<IntMatrix> gram_t_inverse;
};

// Normal form of h^a H^b in CH(X_0) from the relations h^n = 0 and the
// Grothendieck relation of the rank n-1 bundle; keys (a, b) with a <= n-1,
// b <= n-2.
std::map<std::pair<int, int>, Integer> oracle_normal_form(int n, int a, int b);
// deg(h^a H^b) on X_0 when a + b = 2n - 3, else 0.
Integer oracle_degree(int n, int a, int b);

struct OracleRings {
  std::shared_ptr<const ChowModel> X;
  std::shared_ptr<const ChowModel> P;
};
// Throws InvalidArgument for n < 3.
OracleRings oracle_ring(int n);

// CH(Y_L): restricted h^a H^b outside the middle degree; gamma_1..gamma_n
// and h^{i+1} H^{n-3-i} in degree n-2. Gram matrices and multiplication
// tables come from localization. Throws VerificationError if a Gram matrix
// is not unimodular.
std::shared_ptr<const ChowModel> y_model(int n, int jobs = 1);
std::shared_ptr<const ChowModel> spec_l_model(int n);

// Localization Gram of the X basis representatives, for the dual-route check.
std::vector<IntMatrix> x_localization_gram(int n, int jobs = 1);

}  // namespace milnor
