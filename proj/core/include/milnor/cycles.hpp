#pragma once

#include "milnor/equivariant.hpp"
#include "milnor/permutation.hpp"

namespace milnor {

// An element of the cyclic group generated by eta = (1 2 ... n).
class MonodromyElement {
 public:
  // eta^k, any integer k.
  static MonodromyElement eta_power(int n, long k);
  // Throws InvalidArgument unless sigma is a power of eta.
  explicit MonodromyElement(Permutation sigma);

  const Permutation& sigma() const { return sigma_; }
  int n() const { return sigma_.size(); }
  // The k in 0..n-1 with sigma = eta^k.
  int exponent() const { return exponent_; }

  friend MonodromyElement operator*(const MonodromyElement& a, const MonodromyElement& b);
  friend bool operator==(const MonodromyElement& a, const MonodromyElement& b) { return a.sigma_ == b.sigma_; }

 private:
  MonodromyElement(Permutation sigma, int exponent) : sigma_(std::move(sigma)), exponent_(exponent) {}
  Permutation sigma_;
  int exponent_;
};

// gamma_ell on the Y graph: prod_{s != i,j} alpha_is at [ell j], zero off
// the vertices [ell j]. Throws InvalidArgument unless 1 <= ell <= n.
EquivariantClass gamma(int n, int ell);
// (t_i - t_1) at [ij], on the X graph.
EquivariantClass lift_h(int n);
// alpha_ij at [ij], on the X graph.
EquivariantClass lift_H(int n);
// Restriction of an X class to the Y graph (same vertex tuple).
EquivariantClass restrict_to_Y(const EquivariantClass& c);

// Value at [ij] is sigma applied to the value at [sigma^-1(i) sigma^-1(j)].
EquivariantClass act(const MonodromyElement& m, const EquivariantClass& c);

}  // namespace milnor
