#include "csn/matrix.hpp"

#include <cassert>

namespace csn {

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rat& c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Rat l1_norm(const Vec& a) {
  Rat s;
  for (const Rat& x : a) s += x.abs();
  return s;
}

Rat l2_norm_squared(const Vec& a) {
  Rat s;
  for (const Rat& x : a)
    if (!x.is_zero()) s += x * x;
  return s;
}

bool is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Rat integerizing_scale(const std::vector<Vec>& rows) {
  mpz_class l(1);
  for (const Vec& row : rows)
    for (const Rat& x : row) {
      mpz_class den = x.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
  return Rat(mpq_class(l));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.reserve(size_t(rows_) * cols_);
  for (const auto& r : rows) {
    assert(int(r.size()) == cols_);
    for (const Rat& x : r) a_.push_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(int(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    assert(int(rows[i].size()) == cols);
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> rows(rows_);
  for (int i = 0; i < rows_; ++i) rows[i] = row(i);
  return rows;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols_ == o.rows_);
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  assert(int(x.size()) == cols_);
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) s += at(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int pivot = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    Rat inv = Rat(1) / m.at(lead, col);
    for (int j = col; j < m.cols(); ++j)
      if (!m.at(lead, j).is_zero()) m.at(lead, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Rat f = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) {
        if (!m.at(lead, j).is_zero()) m.at(r, j) -= f * m.at(lead, j);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int rank(const Matrix& m) {
  Matrix c = m;
  return int(rref_in_place(c).size());
}

Matrix kernel_columns(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = Rat(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(int(pr), free);
    basis.push_back(std::move(v));
  }

  // Canonicalize: the RREF of the stacked basis rows is unique for the
  // kernel subspace; its transpose gives reduced column echelon columns.
  Matrix stacked = Matrix::from_rows(basis, n);
  rref_in_place(stacked);
  return stacked.transposed();
}

Matrix nullspace_basis(const Matrix& m) {
  Matrix t = m.transposed();  // d×m; kernel of Mᵀ lives in R^m
  Matrix b = kernel_columns(t);
  if (b.cols() != m.rows() - m.cols()) {
    throw RankDeficientError("matrix rank " + std::to_string(m.rows() - b.cols()) +
                             " below column count " + std::to_string(m.cols()));
  }
  return b;
}

Rat determinant(const Matrix& m) {
  assert(m.rows() == m.cols());
  Matrix a = m;
  Rat det(1);
  int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rat inv = Rat(1) / a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rat f = a.at(r, col) * inv;
      for (int j = col; j < n; ++j)
        if (!a.at(col, j).is_zero()) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

}  // namespace csn
