#include "totcof/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "totcof/error.hpp"

namespace totcof {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    fail(ErrorCode::input, "matrix entry count " + std::to_string(data_.size()) +
                               " does not match shape " + std::to_string(rows_) + "x" +
                               std::to_string(cols_));
  }
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::input, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, const std::vector<IntegerVector>& columns) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail(ErrorCode::input, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntegerVector IntegerMatrix::column(std::size_t j) const {
  IntegerVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntegerVector IntegerMatrix::row(std::size_t i) const {
  return IntegerVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntegerVector> IntegerMatrix::columns() const {
  std::vector<IntegerVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (sgn(x) != 0) ++n;
  return n;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<std::size_t>& which) const {
  IntegerMatrix m(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < which.size(); ++k) m(i, k) = (*this)(i, which[k]);
  return m;
}

IntegerMatrix IntegerMatrix::select_rows(const std::vector<std::size_t>& which) const {
  IntegerMatrix m(which.size(), cols_);
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(which[k], j);
  return m;
}

IntegerVector IntegerMatrix::apply(const IntegerVector& v) const {
  if (v.size() != cols_) fail(ErrorCode::input, "vector length does not match matrix columns");
  IntegerVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Integer& a = (*this)(i, j);
      if (sgn(a) != 0 && sgn(v[j]) != 0) acc += a * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

// Skips zero entries of the left factor; boundary matrices are mostly zero.
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) {
    fail(ErrorCode::input, "matrix product shape mismatch " + std::to_string(a.rows_) + "x" +
                               std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                               std::to_string(b.cols_));
  }
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::input, "matrix sum shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::input, "matrix difference shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix c = *this;
  for (auto& x : c.data_) x = -x;
  return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::input, "hstack row mismatch");
  IntegerMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  for (const auto& t : entries_) {
    if (t.row >= rows_ || t.col >= cols_) {
      fail(ErrorCode::input, "sparse entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                 ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
}

SparseMatrix::SparseMatrix(const IntegerMatrix& dense) : rows_(dense.rows()), cols_(dense.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(dense(i, j)) != 0) entries_.push_back({i, j, dense(i, j)});
}

IntegerMatrix SparseMatrix::to_dense() const {
  IntegerMatrix m(rows_, cols_);
  for (const auto& t : entries_) m(t.row, t.col) += t.value;
  return m;
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::input, "dot product length mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const IntegerVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::input, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace totcof
