#pragma once

#include <cstddef>

#include "abgroup.hpp"
#include "int_matrix.hpp"

namespace orbitk::exactla {

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each
/// diagonal entry dividing the next, zeros trailing. D is unique given A.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SnfDecomposition snf(const IntMatrix& a);

/// Row-style Hermite form: U * A = H with U unimodular, H in row echelon form
/// with positive pivots and entries above each pivot reduced into [0, pivot).
struct HnfDecomposition {
  IntMatrix u;
  IntMatrix h;
};

HnfDecomposition hnf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Columns form a basis of the integer kernel lattice {x : A*x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^rows(A) / column-span(A) in canonical invariant-factor form.
abgroup::FgAbGroup cokernel_presentation(const IntMatrix& a);

/// Whether x lies in the column lattice of b.
bool lattice_contains(const IntMatrix& b, const std::vector<mpz_class>& x);

/// Solves b * y = x over the integers; validation error when unsolvable.
std::vector<mpz_class> lattice_solve(const IntMatrix& b,
                                     const std::vector<mpz_class>& x);

}  // namespace orbitk::exactla
