#pragma once

#include <string>
#include <vector>

#include "csn/matrix.hpp"

namespace csn {

enum class Role { Primal, Transform };

/// One half of a centrally symmetric vector set {±v₁,…,±vₘ}.
///
/// `dim` is the ambient dimension (d on the primal side, n on the
/// transform side). Vectors must span the ambient space and none may be
/// zero; duplicates up to sign are legal but flagged, since then the
/// signed vectors are not 2m distinct points.
class CsConfiguration {
 public:
  CsConfiguration(Role role, int dim, std::vector<Vec> vectors);

  Role role() const { return role_; }
  int dim() const { return dim_; }
  int count() const { return int(vectors_.size()); }  // m
  const std::vector<Vec>& vectors() const { return vectors_; }
  const Vec& vector(int i) const { return vectors_[i]; }

  /// m×dim matrix whose rows are the vectors.
  Matrix as_matrix() const;

  /// Pairs (i, j), i < j, with vᵢ = ±vⱼ.
  std::vector<std::pair<int, int>> duplicate_pairs() const;
  bool has_duplicates() const { return !duplicate_pairs().empty(); }

 private:
  Role role_;
  int dim_;
  std::vector<Vec> vectors_;
};

/// An index subset of [m] with one sign per index; names the candidate
/// face {δᵢ vᵢ : i ∈ I}. Indices are 0-based, strictly increasing.
class SignedSubset {
 public:
  SignedSubset(std::vector<int> indices, std::vector<int> signs);

  int size() const { return int(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  const std::vector<int>& signs() const { return signs_; }
  int index(int k) const { return indices_[k]; }
  int sign(int k) const { return signs_[k]; }

  bool contains(int idx) const;

  /// Throws PreconditionError when an index is out of [0, m).
  void check_within(int m) const;

  std::string str() const;  // e.g. "{+1,-3}" (1-based display)

 private:
  std::vector<int> indices_;
  std::vector<int> signs_;
};

}  // namespace csn
