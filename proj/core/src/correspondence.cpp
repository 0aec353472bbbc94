#include "milnor/correspondence.hpp"

#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

bool same_model(const ChowModel& a, const ChowModel& b) {
  return &a == &b || (a.variety == b.variety && a.n == b.n);
}

Correspondence::Correspondence(std::shared_ptr<const ChowModel> source, std::shared_ptr<const ChowModel> target,
                               int shift, std::vector<IntMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != source_->dim + 1) throw InvalidArgument("correspondence needs one block per source degree");
  for (int m = 0; m <= source_->dim; ++m) {
    const IntMatrix& b = blocks_[m];
    if (b.rows() != target_->rank(m + shift_) || b.cols() != source_->rank(m))
      throw InvalidArgument("correspondence block " + std::to_string(m) + " has shape " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
  }
}

Correspondence Correspondence::zero(std::shared_ptr<const ChowModel> source, std::shared_ptr<const ChowModel> target,
                                    int shift) {
  std::vector<IntMatrix> blocks;
  for (int m = 0; m <= source->dim; ++m) blocks.emplace_back(target->rank(m + shift), source->rank(m));
  return {std::move(source), std::move(target), shift, std::move(blocks)};
}

Correspondence Correspondence::identity(std::shared_ptr<const ChowModel> model) {
  std::vector<IntMatrix> blocks;
  for (int m = 0; m <= model->dim; ++m) blocks.push_back(IntMatrix::identity(model->rank(m)));
  return {model, model, 0, std::move(blocks)};
}

Correspondence Correspondence::multiplication(std::shared_ptr<const ChowModel> model, int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("negative exponent");
  if (b > 0 && model->mult_H.empty()) throw InvalidArgument("model has no class H");
  if (a > 0 && model->mult_h.empty()) throw InvalidArgument("model has no class h");
  Correspondence c = identity(model);
  auto step = [&](const std::vector<IntMatrix>& table) {
    std::vector<IntMatrix> blocks;
    for (int m = 0; m <= model->dim; ++m) {
      int mid = m + c.shift_;
      if (mid > model->dim) {
        blocks.emplace_back(model->rank(mid + 1), model->rank(m));
      } else {
        blocks.push_back(table[mid] * c.blocks_[m]);
      }
    }
    c = Correspondence(model, model, c.shift_ + 1, std::move(blocks));
  };
  for (int k = 0; k < a; ++k) step(model->mult_h);
  for (int k = 0; k < b; ++k) step(model->mult_H);
  return c;
}

bool Correspondence::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

bool Correspondence::is_identity() const {
  return same_model(*source_, *target_) && shift_ == 0 && *this == identity(source_);
}

bool Correspondence::is_idempotent() const {
  if (!same_model(*source_, *target_) || shift_ != 0) throw InvalidArgument("idempotence needs an endomorphism of degree 0");
  return compose(*this, *this) == *this;
}

std::vector<std::size_t> Correspondence::image_ranks() const {
  std::vector<std::size_t> out(target_->dim + 1, 0);
  for (int m = 0; m <= source_->dim; ++m) {
    int t = m + shift_;
    if (t < 0 || t > target_->dim) continue;
    out[t] = rank(blocks_[m]);
  }
  return out;
}

std::size_t Correspondence::image_rank() const {
  std::size_t s = 0;
  for (std::size_t r : image_ranks()) s += r;
  return s;
}

std::string Correspondence::to_text() const {
  std::ostringstream os;
  os << to_string(source_->variety) << " -> " << to_string(target_->variety) << ", shift " << shift_ << '\n';
  for (int m = 0; m <= source_->dim; ++m) {
    const IntMatrix& b = blocks_[m];
    if (b.empty()) continue;
    os << "CH^" << m << " -> CH^" << m + shift_ << ":\n" << b.to_string();
  }
  return os.str();
}

bool operator==(const Correspondence& a, const Correspondence& b) {
  return same_model(*a.source_, *b.source_) && same_model(*a.target_, *b.target_) && a.shift_ == b.shift_ &&
         a.blocks_ == b.blocks_;
}

namespace {

void require_parallel(const Correspondence& a, const Correspondence& b) {
  if (!same_model(a.source(), b.source()) || !same_model(a.target(), b.target()) || a.shift() != b.shift())
    throw InvalidArgument("correspondences have different source, target or shift");
}

}  // namespace

Correspondence operator+(const Correspondence& a, const Correspondence& b) {
  require_parallel(a, b);
  std::vector<IntMatrix> blocks;
  for (std::size_t m = 0; m < a.blocks_.size(); ++m) blocks.push_back(a.blocks_[m] + b.blocks_[m]);
  return {a.source_, a.target_, a.shift_, std::move(blocks)};
}

Correspondence operator-(const Correspondence& a, const Correspondence& b) { return a + Integer(-1) * b; }

Correspondence operator*(const Integer& c, const Correspondence& a) {
  std::vector<IntMatrix> blocks;
  for (const auto& b : a.blocks_) blocks.push_back(c * b);
  return {a.source_, a.target_, a.shift_, std::move(blocks)};
}

Correspondence compose(const Correspondence& b, const Correspondence& a) {
  if (!same_model(a.target(), b.source())) throw InvalidArgument("composition: target and source differ");
  int shift = a.shift() + b.shift();
  std::vector<IntMatrix> blocks;
  for (int m = 0; m <= a.source().dim; ++m) {
    int mid = m + a.shift();
    if (mid < 0 || mid > b.source().dim) {
      blocks.emplace_back(b.target().rank(m + shift), a.source().rank(m));
    } else {
      blocks.push_back(b.block(mid) * a.block(m));
    }
  }
  return {a.source_ptr(), b.target_ptr(), shift, std::move(blocks)};
}

Correspondence transpose(const Correspondence& c) {
  const ChowModel& S = c.source();
  const ChowModel& T = c.target();
  int shift = c.shift() + S.dim - T.dim;
  std::vector<IntMatrix> blocks;
  for (int k = 0; k <= T.dim; ++k) {
    int out = k + shift;  // degree in S
    int m = T.dim - k - c.shift();  // S degree complementary to out
    if (out < 0 || out > S.dim || m < 0 || m > S.dim) {
      blocks.emplace_back(S.rank(out), T.rank(k));
      continue;
    }
    // B = (G_S[out]^T)^{-1} A^T G_T[k]^T with A = block(m).
    blocks.push_back(S.gram_t_inverse[out] * c.block(m).transpose() * T.gram[k].transpose());
  }
  return {c.target_ptr(), c.source_ptr(), shift, std::move(blocks)};
}

}  // namespace milnor
