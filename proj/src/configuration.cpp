#include "csn/configuration.hpp"

#include <algorithm>

#include "csn/errors.hpp"

namespace csn {

CsConfiguration::CsConfiguration(Role role, int dim, std::vector<Vec> vectors)
    : role_(role), dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 0) throw ParseError("negative dimension");
  if (int(vectors_.size()) < dim_)
    throw RankDeficientError("fewer vectors than the ambient dimension");
  for (size_t i = 0; i < vectors_.size(); ++i) {
    if (int(vectors_[i].size()) != dim_)
      throw ParseError("vector " + std::to_string(i + 1) + " has wrong length");
    if (dim_ > 0 && is_zero(vectors_[i]))
      throw ParseError("vector " + std::to_string(i + 1) + " is zero");
  }
  if (dim_ > 0 && rank(as_matrix()) < dim_)
    throw RankDeficientError("vectors do not span the ambient space");
}

Matrix CsConfiguration::as_matrix() const {
  return Matrix::from_rows(vectors_, dim_);
}

std::vector<std::pair<int, int>> CsConfiguration::duplicate_pairs() const {
  std::vector<std::pair<int, int>> dup;
  if (dim_ == 0) return dup;  // one-point space; distinctness lives on the other side
  for (int i = 0; i < count(); ++i) {
    for (int j = i + 1; j < count(); ++j) {
      bool same = true, opposite = true;
      for (int k = 0; k < dim_; ++k) {
        if (vectors_[i][k] != vectors_[j][k]) same = false;
        if (vectors_[i][k] != -vectors_[j][k]) opposite = false;
      }
      if (same || opposite) dup.emplace_back(i, j);
    }
  }
  return dup;
}

SignedSubset::SignedSubset(std::vector<int> indices, std::vector<int> signs)
    : indices_(std::move(indices)), signs_(std::move(signs)) {
  if (indices_.empty()) throw PreconditionError("empty signed subset");
  if (indices_.size() != signs_.size())
    throw PreconditionError("index/sign length mismatch");
  for (size_t k = 0; k + 1 < indices_.size(); ++k)
    if (indices_[k] >= indices_[k + 1])
      throw PreconditionError("indices must be strictly increasing");
  for (int s : signs_)
    if (s != 1 && s != -1) throw PreconditionError("signs must be ±1");
}

bool SignedSubset::contains(int idx) const {
  return std::binary_search(indices_.begin(), indices_.end(), idx);
}

void SignedSubset::check_within(int m) const {
  if (indices_.front() < 0 || indices_.back() >= m)
    throw PreconditionError("subset index out of range");
}

std::string SignedSubset::str() const {
  std::string s = "{";
  for (int k = 0; k < size(); ++k) {
    if (k) s += ",";
    s += (signs_[k] > 0 ? "+" : "-");
    s += std::to_string(indices_[k] + 1);
  }
  return s + "}";
}

}  // namespace csn
