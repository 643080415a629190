#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csn/matrix.hpp"

using namespace csn;

namespace {

Matrix from_ints(std::vector<std::vector<int>> rows) {
  std::vector<Vec> r;
  for (auto& row : rows) {
    Vec v;
    for (int x : row) v.push_back(Rat(x));
    r.push_back(std::move(v));
  }
  return Matrix::from_rows(r, r.empty() ? 0 : int(r[0].size()));
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(from_ints({{1, 0}, {0, 1}, {1, 1}})) == 2);
  CHECK(rank(from_ints({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace of the 3x2 configuration") {
  Matrix m = from_ints({{1, 0}, {0, 1}, {1, 1}});
  Matrix b = nullspace_basis(m);
  REQUIRE(b.rows() == 3);
  REQUIRE(b.cols() == 1);
  CHECK(b.at(0, 0) == Rat(1));
  CHECK(b.at(1, 0) == Rat(1));
  CHECK(b.at(2, 0) == Rat(-1));
}

TEST_CASE("nullspace of a square invertible matrix is empty") {
  Matrix b = nullspace_basis(Matrix::identity(4));
  CHECK(b.rows() == 4);
  CHECK(b.cols() == 0);
}

TEST_CASE("nullspace requires full column rank") {
  CHECK_THROWS_AS(nullspace_basis(from_ints({{1, 0}, {2, 0}})), RankDeficientError);
}

TEST_CASE("nullspace contract on random full-rank inputs") {
  std::mt19937_64 eng(7);
  auto draw = [&] { return Rat(int(eng() % 9) - 4, 1 + int(eng() % 3)); };
  for (int it = 0; it < 200; ++it) {
    int d = 1 + int(eng() % 4);
    int m = d + int(eng() % 4);
    Matrix mat(m, d);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < d; ++j) mat.at(i, j) = draw();
    if (rank(mat) < d) continue;
    Matrix b = nullspace_basis(mat);
    CHECK(b.cols() == m - d);
    Matrix prod = mat.transposed() * b;
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j).is_zero());
    CHECK(rank(b) == m - d);
  }
}

TEST_CASE("kernel basis is canonical across row-equivalent inputs") {
  Matrix a = from_ints({{1, 1, -1}});
  Matrix b = from_ints({{2, 2, -2}, {3, 3, -3}});
  CHECK(kernel_columns(a) == kernel_columns(b));

  Matrix c = from_ints({{1, 2, 3}, {0, 1, 1}});
  Matrix d = from_ints({{1, 3, 4}, {2, 5, 7}});  // same row space
  CHECK(kernel_columns(c) == kernel_columns(d));
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(3)) == Rat(1));
  CHECK(determinant(from_ints({{2, 0}, {0, 3}})) == Rat(6));
  CHECK(determinant(from_ints({{1, 2}, {2, 4}})) == Rat(0));
  CHECK(determinant(from_ints({{0, 1}, {1, 0}})) == Rat(-1));
}
