#include "tq/matrix.hpp"

#include <ostream>
#include <sstream>

#include "tq/error.hpp"

namespace tq {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix b(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = (*this)(i, idx[j]);
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix b(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[i], j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::DimensionMismatch,
                "matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_);
  Scalar t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y.is_zero()) continue;
        t = x;
        t *= y;
        c(i, j) += t;
      }
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

Rref rref(const Matrix& m) {
  Rref r;
  r.reduced = m;
  Matrix& a = r.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t row = 0;
  Scalar t;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(row, j));
    Scalar inv = a(row, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(row, j).is_zero()) continue;
        t = f;
        t *= a(row, j);
        a(i, j) -= t;
      }
    }
    r.pivots.push_back(c);
    ++row;
  }
  r.rank = r.pivots.size();
  return r;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix k(n, n - r.rank);
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = Scalar(1);
    for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], col) = -r.reduced(i, f);
    ++col;
  }
  return k;
}

Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

Matrix column_space_basis(const Matrix& m) { return m.select_cols(rref(m).pivots); }

std::optional<Matrix> try_solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs rows");
  Rref r = rref(hstack(m.rows(), {m, b}));
  const std::size_t n = m.cols();
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t p = r.pivots[i];
    if (p >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = r.reduced(i, n + j);
  }
  return x;
}

Matrix solve(const Matrix& m, const Matrix& b) {
  auto x = try_solve(m, b);
  if (!x) throw Error(ErrorKind::NoSolution, "right-hand side not in the image");
  return *x;
}

Matrix solve_left(const Matrix& m, const Matrix& b) { return solve(m.transpose(), b.transpose()).transpose(); }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!is_invertible(m)) throw Error(ErrorKind::NoSolution, "matrix not invertible");
  return solve(m, Matrix::identity(m.rows()));
}

Matrix power(const Matrix& m, std::size_t e) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "power of non-square");
  Matrix r = Matrix::identity(m.rows());
  Matrix b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Matrix hstack(std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(ErrorKind::DimensionMismatch, "hstack rows");
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix vstack(std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack cols");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  return hstack(parts.front().rows(), parts);
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  return vstack(parts.front().cols(), parts);
}

Matrix direct_sum(const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

}  // namespace tq
