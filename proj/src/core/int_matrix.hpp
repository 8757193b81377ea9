#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace orbitk::exactla {

/// Dense matrix of arbitrary-precision integers, row-major.
/// All arithmetic is exact; empty matrices (0 rows and/or 0 columns) are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Convenience for literals in code and tests.
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transposed() const;
  IntMatrix negated() const;
  bool is_zero() const;
  bool is_identity() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;

  /// Exact determinant (Bareiss fraction-free elimination). Square only.
  mpz_class det() const;

  /// Elementary operations used by the normal form algorithms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& q);
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& q);
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

/// Horizontal block [a | b]; row counts must agree.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

/// Block-diagonal sum of two matrices.
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

}  // namespace orbitk::exactla
