#pragma once

#include <initializer_list>
#include <vector>

#include "csn/rational.hpp"

namespace csn {

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& c);
Rat l1_norm(const Vec& a);
Rat l2_norm_squared(const Vec& a);
bool is_zero(const Vec& a);

/// Smallest positive rational whose product with every entry is an
/// integer (the lcm of denominators). Scaling LP data by it keeps
/// scale-invariant decisions unchanged while speeding exact pivoting.
Rat integerizing_scale(const std::vector<Vec>& rows);

/// Dense matrix of exact rationals, row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  std::vector<Vec> row_list() const;

  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // M x

  bool operator==(const Matrix& o) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// In-place reduced row echelon form; returns the pivot column per pivot row.
std::vector<int> rref_in_place(Matrix& m);

/// Exact rank over the rationals.
int rank(const Matrix& m);

/// Canonical basis of {x : M x = 0}, returned as columns.
///
/// The basis is the transpose of the reduced row echelon form of any
/// kernel basis, so it depends only on the kernel subspace itself and
/// two calls on row-equivalent inputs produce identical output.
Matrix kernel_columns(const Matrix& m);

/// Canonical nullspace basis B with Mᵀ B = 0 for an m×d matrix M of
/// rank d; B is m×(m−d). Throws RankDeficientError when rank(M) < d.
Matrix nullspace_basis(const Matrix& m);

/// Determinant of a square matrix (Gaussian elimination).
Rat determinant(const Matrix& m);

}  // namespace csn
