#pragma once

#include <optional>
#include <string>

#include "milnor/polynomial.hpp"

namespace milnor {

// Quotient of integer polynomials kept in lowest terms: numerator and
// denominator are coprime and the denominator's leading coefficient is
// positive. The zero function is stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(0, 1)) {}
  // Throws DivisionByZero if den is zero.
  RationalFunction(const Polynomial& num, const Polynomial& den);
  explicit RationalFunction(const Polynomial& p);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // The polynomial p when the denominator is a unit, otherwise nullopt.
  std::optional<Polynomial> to_polynomial() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  // Throws DivisionByZero if b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // t_k := value for a rational value; nullopt if the denominator vanishes.
  std::optional<RationalFunction> substitute(int k, const Polynomial& value) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

RationalFunction rational(const Polynomial& num, const Polynomial& den);

}  // namespace milnor
