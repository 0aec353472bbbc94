#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/monomial.hpp"
#include "milnor/permutation.hpp"

namespace milnor {

using Integer = mpz_class;
using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial with integer coefficients in t_1..t_n (n <= 8).
//
// Terms are kept sorted by decreasing graded-lex order with no zero
// coefficients, so equality of polynomials is equality of term vectors and
// terms().front() is the leading term. Values are immutable once built.
class Polynomial {
 public:
  // The zero polynomial in zero variables. Binary operations treat a
  // zero-variable operand as a constant in the other operand's ring.
  Polynomial() = default;
  explicit Polynomial(int nvars);
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial constant(int nvars, const Integer& c);
  // t_k, 1-based.
  static Polynomial variable(int nvars, int k);
  static Polynomial monomial(int nvars, Monomial m, const Integer& c = 1);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  // Coefficient of the unit monomial.
  Integer constant_term() const;
  Integer coefficient(Monomial m) const;

  // -1 for the zero polynomial.
  int degree() const;
  int degree_in(int k) const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous() const;
  bool is_homogeneous_of(int d) const;
  const Term& leading_term() const { return terms_.front(); }

  Integer content() const;
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Exact division by an integer; throws if some coefficient is not divisible.
  Polynomial divided_by(const Integer& c) const;

  // t_k := t_j (1-based).
  Polynomial substitute_variable(int k, int j) const;
  // t_k := 0.
  Polynomial substitute_zero(int k) const;
  // t_k := value, value must live in the same ring.
  Polynomial substitute(int k, const Polynomial& value) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Canonical text form, e.g. "t1^2*t2 - 3*t3".
  std::string to_string() const;
  static Polynomial parse(std::string_view text, int nvars);

  // JSON term map: {"n": n, "terms": [{"exp": [..], "coeff": ".."}, ..]}.
  std::string to_json() const;
  static Polynomial from_json(std::string_view json);

 private:
  void canonicalize();
  void adopt_nvars(const Polynomial& o);

  int nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Every variable t_k replaced by t_{sigma(k)}. Throws InvalidArgument if the
// permutation degree differs from the variable count.
Polynomial permute(const Permutation& sigma, const Polynomial& p);

// Quotient p / q when q divides p over the integers, std::nullopt otherwise.
// Throws DivisionByZero if q is zero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// Greatest common divisor over the integers, normalized to a positive
// leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

// Makes the leading coefficient positive.
Polynomial normalize_sign(const Polynomial& p);

}  // namespace milnor
