#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace milnor {

// Exponent vector of at most kMaxVars variables, packed one byte per
// variable. t_1 occupies the most significant byte, so comparing the packed
// words compares exponent vectors lexicographically with t_1 first.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr unsigned kMaxDegree = 255;

  constexpr Monomial() = default;

  static Monomial variable(int k, unsigned power = 1);
  static Monomial from_exponents(const int* exps, int count);

  unsigned exponent(int k) const {
    return static_cast<unsigned>((bits_ >> shift(k)) & 0xffu);
  }
  Monomial with_exponent(int k, unsigned e) const;

  // Total degree. Valid because every constructor keeps it <= kMaxDegree.
  unsigned degree() const {
    return static_cast<unsigned>((bits_ * 0x0101010101010101ull) >> 56);
  }

  bool is_one() const { return bits_ == 0; }
  bool divides(Monomial other) const;
  std::uint64_t bits() const { return bits_; }

  // Throws std::overflow_error if the product exceeds kMaxDegree.
  friend Monomial operator*(Monomial a, Monomial b);
  // Precondition: b divides a.
  friend Monomial operator/(Monomial a, Monomial b);

  friend bool operator==(Monomial a, Monomial b) = default;

  // Graded lexicographic order.
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr int shift(int k) { return 8 * (kMaxVars - 1 - k); }

  std::uint64_t bits_ = 0;
};

}  // namespace milnor

template <>
struct std::hash<milnor::Monomial> {
  std::size_t operator()(milnor::Monomial m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits() * 0x9e3779b97f4a7c15ull);
  }
};
