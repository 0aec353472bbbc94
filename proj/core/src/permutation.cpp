#include "milnor/permutation.hpp"

#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

Permutation::Permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  image_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) throw InvalidArgument("permutation is not a bijection");
    seen[v - 1] = true;
    image_[i] = v - 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image_.resize(n);
  for (int i = 0; i < n; ++i) p.image_[i] = i;
  return p;
}

Permutation Permutation::cycle(int n) {
  Permutation p;
  p.image_.resize(n);
  for (int i = 0; i < n; ++i) p.image_[i] = (i + 1) % n;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = static_cast<int>(i);
  return p;
}

Permutation Permutation::power(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Permutation result = identity(size());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("composing permutations of different degree");
  Permutation p;
  p.image_.resize(a.image_.size());
  for (std::size_t i = 0; i < a.image_.size(); ++i) p.image_[i] = a.image_[b.image_[i]];
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? " " : "") << image_[i] + 1;
  os << ']';
  return os.str();
}

}  // namespace milnor
