#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tq/scalar.hpp"

namespace tq {

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  std::vector<Scalar> col(std::size_t j) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  std::size_t rank = 0;
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of the right null space.
Matrix kernel_basis(const Matrix& m);
// Rows form a basis of {y : y m = 0}.
Matrix left_kernel_basis(const Matrix& m);
// Columns of m at the pivot positions: a basis of the column space.
Matrix column_space_basis(const Matrix& m);

std::optional<Matrix> try_solve(const Matrix& m, const Matrix& b);
// Solves m x = b for a (multi-column) b. Throws NoSolution.
Matrix solve(const Matrix& m, const Matrix& b);
// Solves x m = b. Throws NoSolution.
Matrix solve_left(const Matrix& m, const Matrix& b);

bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);
Matrix power(const Matrix& m, std::size_t e);

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix direct_sum(const std::vector<Matrix>& parts);
// Row counts of the empty-part convention: hstack of nothing with known rows.
Matrix hstack(std::size_t rows, const std::vector<Matrix>& parts);
Matrix vstack(std::size_t cols, const std::vector<Matrix>& parts);

}  // namespace tq
