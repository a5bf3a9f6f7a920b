#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace totcof {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

class SparseMatrix;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntegerVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Integer>& entries() const noexcept { return data_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerVector column(std::size_t j) const;
  IntegerVector row(std::size_t i) const;
  std::vector<IntegerVector> columns() const;

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  std::size_t nonzeros() const;

  IntegerMatrix transpose() const;
  IntegerMatrix select_columns(const std::vector<std::size_t>& which) const;
  IntegerMatrix select_rows(const std::vector<std::size_t>& which) const;

  IntegerVector apply(const IntegerVector& v) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  IntegerMatrix operator-() const;
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// [A | B] with matching row counts.
IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
/// Block diagonal [[A, 0], [0, B]].
IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b);

/// Coordinate-list form used for boundary matrices and serialization.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  explicit SparseMatrix(const IntegerMatrix& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Triplet>& triplets() const noexcept { return entries_; }

  IntegerMatrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
};

Integer dot(const IntegerVector& a, const IntegerVector& b);
bool is_zero(const IntegerVector& v);

/// Exact determinant by fraction-free elimination; square input only.
Integer determinant(const IntegerMatrix& m);

}  // namespace totcof
