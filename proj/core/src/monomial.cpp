#include "milnor/monomial.hpp"

#include <stdexcept>

#include "milnor/errors.hpp"

namespace milnor {

Monomial Monomial::variable(int k, unsigned power) {
  if (k < 0 || k >= kMaxVars) throw InvalidArgument("variable index out of range");
  if (power > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
  return Monomial(static_cast<std::uint64_t>(power) << shift(k));
}

Monomial Monomial::from_exponents(const int* exps, int count) {
  if (count > kMaxVars) throw InvalidArgument("too many variables for a packed monomial");
  std::uint64_t bits = 0;
  unsigned total = 0;
  for (int k = 0; k < count; ++k) {
    if (exps[k] < 0) throw InvalidArgument("negative exponent");
    total += static_cast<unsigned>(exps[k]);
    if (total > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
    bits |= static_cast<std::uint64_t>(exps[k]) << shift(k);
  }
  return Monomial(bits);
}

Monomial Monomial::with_exponent(int k, unsigned e) const {
  unsigned total = degree() - exponent(k) + e;
  if (total > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
  std::uint64_t cleared = bits_ & ~(0xffull << shift(k));
  return Monomial(cleared | (static_cast<std::uint64_t>(e) << shift(k)));
}

bool Monomial::divides(Monomial other) const {
  for (int k = 0; k < kMaxVars; ++k)
    if (exponent(k) > other.exponent(k)) return false;
  return true;
}

Monomial operator*(Monomial a, Monomial b) {
  if (a.degree() + b.degree() > Monomial::kMaxDegree)
    throw std::overflow_error("monomial degree exceeds 255");
  // No per-byte carry is possible once the total degree fits in a byte.
  return Monomial(a.bits_ + b.bits_);
}

Monomial operator/(Monomial a, Monomial b) { return Monomial(a.bits_ - b.bits_); }

}  // namespace milnor
