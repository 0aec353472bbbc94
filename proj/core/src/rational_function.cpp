#include "milnor/rational_function.hpp"

#include "milnor/errors.hpp"

namespace milnor {

namespace {

Polynomial quotient(const Polynomial& p, const Polynomial& q) {
  auto r = divide_exact(p, q);
  if (!r) throw std::logic_error("rational function: gcd does not divide");
  return std::move(*r);
}

}  // namespace

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  int n = std::max(num.nvars(), den.nvars());
  if (num.is_zero()) {
    num_ = Polynomial(n);
    den_ = Polynomial::constant(n, 1);
    return;
  }
  Polynomial g = gcd(num, den);
  if (den.leading_term().coeff < 0) g = -g;
  num_ = quotient(num, g);
  den_ = quotient(den, g);
}

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(p.nvars(), 1)) {}

std::optional<Polynomial> RationalFunction::to_polynomial() const {
  if (!den_.is_constant()) return std::nullopt;
  const Integer& d = den_.constant_term();
  if (d == 1) return num_;
  // Reduced form: a constant denominator other than 1 leaves a fraction.
  return std::nullopt;
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Both inputs are reduced, so the new numerator is prime to ad and bd and
  // only its gcd with g can cancel.
  Polynomial g = a.den_ == b.den_ ? a.den_ : gcd(a.den_, b.den_);
  Polynomial ad = quotient(a.den_, g);
  Polynomial bd = quotient(b.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RationalFunction(num);
  Polynomial h = gcd(num, g);
  Polynomial den = ad * bd * quotient(g, h);
  num = quotient(num, h);
  if (den.leading_term().coeff < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den), RationalFunction::Reduced{}};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) {
    int n = std::max(a.num_.nvars(), b.num_.nvars());
    return RationalFunction(Polynomial(n));
  }
  // Cross-cancel first so the intermediate products stay reduced.
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial num = quotient(a.num_, g1) * quotient(b.num_, g2);
  Polynomial den = quotient(a.den_, g2) * quotient(b.den_, g1);
  if (den.leading_term().coeff < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den), RationalFunction::Reduced{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

std::optional<RationalFunction> RationalFunction::substitute(int k, const Polynomial& value) const {
  Polynomial d = den_.substitute(k, value);
  if (d.is_zero()) return std::nullopt;
  return RationalFunction(num_.substitute(k, value), d);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction rational(const Polynomial& num, const Polynomial& den) { return {num, den}; }

}  // namespace milnor
