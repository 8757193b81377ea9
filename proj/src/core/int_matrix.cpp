#include "int_matrix.hpp"

#include <sstream>

#include "error.hpp"

namespace orbitk::exactla {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      fail_validation("matrix-shape", "ragged rows in matrix literal");
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    fail_validation("matrix-shape", "dimension mismatch in matrix product");
  IntMatrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        m.at(i, j) += a * rhs.at(k, j);
    }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail_validation("matrix-shape", "dimension mismatch in matrix sum");
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] + rhs.entries_[k];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail_validation("matrix-shape", "dimension mismatch in matrix difference");
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] - rhs.entries_[k];
  return m;
}

mpz_class IntMatrix::det() const {
  if (rows_ != cols_)
    fail_validation("matrix-shape", "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss: exact, intermediate entries are minors of the input.
  IntMatrix w = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j)
      out << at(i, j) << (j + 1 < cols_ ? ", " : "");
    out << "]" << (i + 1 < rows_ ? "\n" : "");
  }
  out << "]";
  return out.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    fail_validation("matrix-shape", "hstack with mismatched row counts");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

}  // namespace orbitk::exactla
