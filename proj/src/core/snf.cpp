#include "snf.hpp"

#include <algorithm>

#include "error.hpp"

namespace orbitk::exactla {

namespace {

// Truncated quotient; the remainder then satisfies |rem| < |den|.
mpz_class tquot(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  SnfDecomposition res{IntMatrix::identity(r), a, IntMatrix::identity(c)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block as pivot: keeps
      // coefficient growth down, correctness rests on U*A*V = D anyway.
      bool found = false;
      std::size_t pi = t, pj = t;
      mpz_class best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const mpz_class& e = d.at(i, j);
          if (e == 0) continue;
          mpz_class m = abs(e);
          if (!found || m < best) {
            found = true;
            best = m;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        // Trailing block is zero; remaining diagonal entries stay 0.
        if (d.at(t, t) < 0) {
          d.negate_row(t);
          u.negate_row(t);
        }
        return res;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q = -tquot(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d.at(i, t) != 0) residue = true;
      }
      if (residue) continue;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q = -tquot(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d.at(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Row and column are clear; force the pivot to divide the whole block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

HnfDecomposition hnf(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  HnfDecomposition res{IntMatrix::identity(r), a};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;

  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    // Euclid on the column below the current row.
    for (;;) {
      std::size_t p = row;
      bool found = false;
      mpz_class best;
      for (std::size_t i = row; i < r; ++i) {
        if (h.at(i, col) == 0) continue;
        mpz_class m = abs(h.at(i, col));
        if (!found || m < best) {
          found = true;
          best = m;
          p = i;
        }
      }
      if (!found) break;
      h.swap_rows(row, p);
      u.swap_rows(row, p);
      bool residue = false;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (h.at(i, col) == 0) continue;
        mpz_class q = -tquot(h.at(i, col), h.at(row, col));
        h.add_row_multiple(i, row, q);
        u.add_row_multiple(i, row, q);
        if (h.at(i, col) != 0) residue = true;
      }
      if (!residue) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(),
                 h.at(row, col).get_mpz_t());
      if (q != 0) {
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
      }
    }
    ++row;
  }
  return res;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix d = snf(a).d;
  std::size_t n = std::min(d.rows(), d.cols());
  std::size_t rk = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) ++rk;
  return rk;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  const std::size_t c = a.cols();
  const std::size_t n = std::min(a.rows(), c);
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < c; ++j)
    if (j >= n || s.d.at(j, j) == 0) zero_cols.push_back(j);
  IntMatrix basis(c, zero_cols.size());
  for (std::size_t k = 0; k < zero_cols.size(); ++k)
    for (std::size_t i = 0; i < c; ++i) basis.at(i, k) = s.v.at(i, zero_cols[k]);
  return basis;
}

abgroup::FgAbGroup cokernel_presentation(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t rk = 0;
  std::vector<mpz_class> torsion;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class& di = s.d.at(i, i);
    if (di == 0) break;
    ++rk;
    if (di >= 2) torsion.push_back(di);
  }
  return abgroup::FgAbGroup::from_invariant_chain(a.rows() - rk,
                                                  std::move(torsion));
}

bool lattice_contains(const IntMatrix& b, const std::vector<mpz_class>& x) {
  if (x.size() != b.rows())
    fail_validation("matrix-shape", "lattice membership with wrong vector size");
  SnfDecomposition s = snf(b);
  const std::size_t r = b.rows();
  const std::size_t n = std::min(r, b.cols());
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class ux = 0;
    for (std::size_t j = 0; j < r; ++j) ux += s.u.at(i, j) * x[j];
    if (i >= n || s.d.at(i, i) == 0) {
      if (ux != 0) return false;
    } else if (ux % s.d.at(i, i) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<mpz_class> lattice_solve(const IntMatrix& b,
                                     const std::vector<mpz_class>& x) {
  if (x.size() != b.rows())
    fail_validation("matrix-shape", "lattice solve with wrong vector size");
  SnfDecomposition s = snf(b);
  const std::size_t r = b.rows();
  const std::size_t c = b.cols();
  const std::size_t n = std::min(r, c);
  std::vector<mpz_class> z(c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class ux = 0;
    for (std::size_t j = 0; j < r; ++j) ux += s.u.at(i, j) * x[j];
    if (i < n && s.d.at(i, i) != 0) {
      if (ux % s.d.at(i, i) != 0)
        fail_validation("lattice-solve", "vector not in the column lattice");
      z[i] = ux / s.d.at(i, i);
    } else if (ux != 0) {
      fail_validation("lattice-solve", "vector not in the column lattice");
    }
  }
  std::vector<mpz_class> y(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) y[i] += s.v.at(i, j) * z[j];
  return y;
}

}  // namespace orbitk::exactla
