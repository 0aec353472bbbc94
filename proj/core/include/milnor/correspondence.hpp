#pragma once

#include <memory>
#include <string>
#include <vector>

#include "milnor/chow_model.hpp"

namespace milnor {

// A correspondence stored by its graded action: blocks[m] is the matrix of
// CH^m(source) -> CH^{m+shift}(target), zero-sized when the target degree
// is out of range.
class Correspondence {
 public:
  // Throws InvalidArgument if a block shape does not match the bases.
  Correspondence(std::shared_ptr<const ChowModel> source, std::shared_ptr<const ChowModel> target, int shift,
                 std::vector<IntMatrix> blocks);

  static Correspondence zero(std::shared_ptr<const ChowModel> source, std::shared_ptr<const ChowModel> target,
                             int shift);
  static Correspondence identity(std::shared_ptr<const ChowModel> model);
  // Multiplication by h^a H^b on X or Y (shift a + b); h^a on P.
  static Correspondence multiplication(std::shared_ptr<const ChowModel> model, int a, int b);

  const ChowModel& source() const { return *source_; }
  const ChowModel& target() const { return *target_; }
  const std::shared_ptr<const ChowModel>& source_ptr() const { return source_; }
  const std::shared_ptr<const ChowModel>& target_ptr() const { return target_; }
  int shift() const { return shift_; }
  const IntMatrix& block(int m) const { return blocks_.at(m); }
  const std::vector<IntMatrix>& blocks() const { return blocks_; }

  bool is_zero() const;
  bool is_identity() const;
  // Requires source == target and shift 0.
  bool is_idempotent() const;
  // Rank of the image in each target degree.
  std::vector<std::size_t> image_ranks() const;
  std::size_t image_rank() const;

  std::string to_text() const;

  friend bool operator==(const Correspondence& a, const Correspondence& b);
  friend Correspondence operator+(const Correspondence& a, const Correspondence& b);
  friend Correspondence operator-(const Correspondence& a, const Correspondence& b);
  friend Correspondence operator*(const Integer& c, const Correspondence& a);

 private:
  std::shared_ptr<const ChowModel> source_;
  std::shared_ptr<const ChowModel> target_;
  int shift_;
  std::vector<IntMatrix> blocks_;
};

bool same_model(const ChowModel& a, const ChowModel& b);

// b o a. Throws InvalidArgument unless a's target is b's source.
Correspondence compose(const Correspondence& b, const Correspondence& a);
// The Gram adjoint: <c^t(y), x>_source = <y, c(x)>_target.
Correspondence transpose(const Correspondence& c);

}  // namespace milnor
