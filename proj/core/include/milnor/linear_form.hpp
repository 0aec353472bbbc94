#pragma once

#include <string>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor {

// A non-zero integer linear form sum_k c_k t_k.
class LinearForm {
 public:
  // Throws InvalidArgument on the zero vector.
  explicit LinearForm(std::vector<long> coeffs);

  // alpha_ij = t_i - t_j.
  static LinearForm root(int n, int i, int j);

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  // 1-based.
  long coeff(int k) const { return coeffs_[k - 1]; }
  const std::vector<long>& coeffs() const { return coeffs_; }

  bool is_primitive() const;
  // Sign-normalized so the first non-zero coefficient is positive.
  LinearForm canonical() const;
  bool is_canonical() const;
  // True when other = c * this for some rational c.
  bool proportional_to(const LinearForm& other) const;

  Polynomial to_polynomial() const;
  std::string to_string() const;

  LinearForm operator-() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<long> coeffs_;
};

// True iff p vanishes on the hyperplane alpha = 0, i.e. alpha | p.
// Throws InvalidArgument unless alpha is primitive and alpha, p share a ring.
bool divides(const LinearForm& alpha, const Polynomial& p);

}  // namespace milnor
