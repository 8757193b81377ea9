#include "fieldmat.hpp"

#include <sstream>

#include "error.hpp"

namespace orbitk::field {

mpq_class Coeffs::reduce(const mpq_class& x) const {
  if (p == 0) return x;
  // x must be an integer residue in F_p; rational inputs with denominators
  // divisible by p are rejected at parse time.
  mpz_class den = x.get_den();
  mpz_class num = x.get_num();
  mpz_class pp(p);
  if (den != 1) {
    mpz_class d = den % pp;
    if (d < 0) d += pp;
    if (d == 0)
      fail_validation("field-element", "denominator divisible by the characteristic");
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t()) == 0)
      fail_validation("field-element", "denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r = num % pp;
  if (r < 0) r += pp;
  return mpq_class(r);
}

mpq_class Coeffs::add(const mpq_class& a, const mpq_class& b) const {
  return reduce(a + b);
}

mpq_class Coeffs::sub(const mpq_class& a, const mpq_class& b) const {
  return reduce(a - b);
}

mpq_class Coeffs::mul(const mpq_class& a, const mpq_class& b) const {
  return reduce(a * b);
}

mpq_class Coeffs::neg(const mpq_class& a) const { return reduce(-a); }

mpq_class Coeffs::inv(const mpq_class& a) const {
  if (is_zero(a)) fail_validation("field-element", "inverse of zero");
  if (p == 0) return 1 / a;
  mpz_class pp(p), r = reduce(a).get_num(), out;
  if (mpz_invert(out.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t()) == 0)
    fail_validation("field-element", "element not invertible mod p");
  return mpq_class(out);
}

bool Coeffs::is_zero(const mpq_class& a) const { return reduce(a) == 0; }

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Mat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) fail_validation("matrix-shape", "ragged rows");
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_)
    fail_validation("matrix-shape", "dimension mismatch in matrix product");
  Mat m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
    }
  return m;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail_validation("matrix-shape", "dimension mismatch in matrix sum");
  Mat m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] + rhs.entries_[k];
  return m;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail_validation("matrix-shape", "dimension mismatch in matrix difference");
  Mat m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] - rhs.entries_[k];
  return m;
}

Mat Mat::scaled(const mpq_class& c) const {
  Mat m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = c * entries_[k];
  return m;
}

Mat Mat::transposed() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

std::vector<mpq_class> Mat::apply(const std::vector<mpq_class>& v) const {
  if (v.size() != cols_)
    fail_validation("matrix-shape", "dimension mismatch in matrix-vector product");
  std::vector<mpq_class> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::string Mat::to_string() const {
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

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelonize(Mat& m, const Coeffs& k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = k.reduce(m.at(i, j));
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && k.is_zero(m.at(p, col))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
    mpq_class inv = k.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j)
      m.at(row, j) = k.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m.at(i, col))) continue;
      mpq_class f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Mat& m, const Coeffs& k) {
  Mat w = m;
  return echelonize(w, k).size();
}

Mat kernel(const Mat& m, const Coeffs& k) {
  Mat w = m;
  std::vector<std::size_t> pivots = echelonize(w, k);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(m.cols(), free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    basis.at(fc, fi) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], fi) = k.neg(w.at(r, fc));
  }
  return basis;
}

Mat column_space(const Mat& m, const Coeffs& k) {
  Mat w = m;
  std::vector<std::size_t> pivots = echelonize(w, k);
  Mat basis(m.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r)
      basis.at(r, i) = k.reduce(m.at(r, pivots[i]));
  return basis;
}

bool in_column_span(const Mat& m, const std::vector<mpq_class>& v, const Coeffs& k) {
  Mat ext(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    ext.at(i, m.cols()) = v[i];
  }
  return rank(ext, k) == rank(m, k);
}

std::optional<std::vector<mpq_class>> solve(const Mat& m,
                                            const std::vector<mpq_class>& b,
                                            const Coeffs& k) {
  if (b.size() != m.rows())
    fail_validation("matrix-shape", "right-hand side size mismatch in solve");
  Mat ext(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    ext.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = echelonize(ext, k);
  for (std::size_t c : pivots)
    if (c == m.cols()) return std::nullopt;
  std::vector<mpq_class> x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = ext.at(r, m.cols());
  return x;
}

CohomologySpace cohomology(const Mat& din, const Mat& dout, std::size_t here_dim,
                           const Coeffs& k) {
  CohomologySpace h;
  if (dout.rows() > 0 && dout.cols() != here_dim)
    fail_validation("matrix-shape", "outgoing differential shape mismatch");
  if (din.cols() > 0 && din.rows() != here_dim)
    fail_validation("matrix-shape", "incoming differential shape mismatch");
  Mat out = dout.cols() == here_dim ? dout : Mat(0, here_dim);
  Mat in = din.rows() == here_dim ? din : Mat(here_dim, 0);
  h.cocycles = kernel(out, k);
  h.coboundaries = column_space(in, k);
  h.dim = h.cocycles.cols() - h.coboundaries.cols();
  return h;
}

bool induces_iso(const CohomologySpace& source, const CohomologySpace& target,
                 const Mat& map, const Coeffs& k) {
  if (source.dim != target.dim) return false;
  Mat mapped = map * source.cocycles;
  const std::size_t n = mapped.rows();
  // Images of cocycles must be cocycles again...
  for (std::size_t c = 0; c < mapped.cols(); ++c) {
    std::vector<mpq_class> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = mapped.at(i, c);
    if (!in_column_span(target.cocycles, v, k)) return false;
  }
  // ...and span H(target): rank of [B_target | mapped] minus rank of B_target
  // is the rank of the induced map on cohomology.
  Mat stacked(n, target.coboundaries.cols() + mapped.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < target.coboundaries.cols(); ++j)
      stacked.at(i, j) = target.coboundaries.at(i, j);
    for (std::size_t j = 0; j < mapped.cols(); ++j)
      stacked.at(i, target.coboundaries.cols() + j) = mapped.at(i, j);
  }
  std::size_t induced_rank = rank(stacked, k) - rank(target.coboundaries, k);
  return induced_rank == source.dim;
}

}  // namespace orbitk::field
