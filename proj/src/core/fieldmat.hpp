#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbitk::field {

/// Coefficient field: the rationals (p == 0) or the prime field F_p.
/// F_p elements are kept as integer residues in [0, p).
struct Coeffs {
  unsigned long p = 0;

  bool is_rational() const { return p == 0; }
  mpq_class reduce(const mpq_class& x) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  bool is_zero(const mpq_class& a) const;
};

/// Dense matrix over an exact field; desk-scale sizes only.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpq_class& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  mpq_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(const mpq_class& c) const;
  Mat transposed() const;
  bool is_zero() const;

  std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> entries_;
};

std::size_t rank(const Mat& m, const Coeffs& k);

/// Column basis of the null space {x : m x = 0}.
Mat kernel(const Mat& m, const Coeffs& k);

/// Columns spanning the column space, reduced.
Mat column_space(const Mat& m, const Coeffs& k);

/// Whether v lies in the column span of m.
bool in_column_span(const Mat& m, const std::vector<mpq_class>& v, const Coeffs& k);

/// One solution of m x = b, free coordinates set to zero; nullopt when
/// unsolvable.
std::optional<std::vector<mpq_class>> solve(const Mat& m,
                                            const std::vector<mpq_class>& b,
                                            const Coeffs& k);

/// The three cohomology ingredients of a two-step complex
///   prev --din--> here --dout--> next
/// are ker(dout) and im(din); dimensions come out of ranks.
struct CohomologySpace {
  Mat cocycles;    // columns: basis of ker(dout)
  Mat coboundaries;  // columns: basis of im(din)
  std::size_t dim = 0;
};

CohomologySpace cohomology(const Mat& din, const Mat& dout, std::size_t here_dim,
                           const Coeffs& k);

/// Checks that `map` (a chain-level map on the middle term) induces an
/// isomorphism H(source) -> H(target) for the named cohomology spaces.
bool induces_iso(const CohomologySpace& source, const CohomologySpace& target,
                 const Mat& map, const Coeffs& k);

}  // namespace orbitk::field
