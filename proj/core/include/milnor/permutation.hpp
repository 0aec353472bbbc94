#pragma once

#include <string>
#include <vector>

namespace milnor {

// A bijection of {1..n}. Stored 0-based internally; the public accessors
// speak 1-based indices to match the t_1..t_n naming.
class Permutation {
 public:
  // Throws InvalidArgument unless images (1-based) is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // The long cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation cycle(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1] + 1; }

  Permutation inverse() const;
  Permutation power(long k) const;
  bool is_identity() const;

  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::vector<int> images() const;
  std::string to_string() const;

 private:
  Permutation() = default;
  std::vector<int> image_;
};

}  // namespace milnor
