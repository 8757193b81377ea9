#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "snf.hpp"

using namespace orbitk::exactla;

TEST_CASE("snf of the s=2 presentation matrix") {
  auto a = IntMatrix::from_rows({{-2, 1}, {-1, -1}});
  auto s = snf(a);
  CHECK(s.d == IntMatrix::from_rows({{1, 0}, {0, 3}}));
  CHECK(s.u * a * s.v == s.d);
  CHECK(abs(s.u.det()) == 1);
  CHECK(abs(s.v.det()) == 1);
}

TEST_CASE("snf of identity and zero matrices") {
  auto id = IntMatrix::identity(4);
  CHECK(snf(id).d == id);
  IntMatrix zero(2, 3);
  auto s = snf(zero);
  CHECK(s.d == zero);
  CHECK(s.u == IntMatrix::identity(2));
  CHECK(s.v == IntMatrix::identity(3));
}

TEST_CASE("snf of empty matrices") {
  IntMatrix empty(0, 3);
  auto s = snf(empty);
  CHECK(s.d.rows() == 0);
  CHECK(s.d.cols() == 3);
  CHECK(rank(empty) == 0);
  CHECK(kernel_basis(empty).cols() == 3);
  IntMatrix tall(3, 0);
  CHECK(cokernel_presentation(tall).render() == "Z^3");
}

TEST_CASE("cokernel presentations from the worked examples") {
  CHECK(cokernel_presentation(IntMatrix::from_rows({{-2, 1}, {-1, -1}})).render() ==
        "Z/3");
  CHECK(cokernel_presentation(IntMatrix(2, 2)).render() == "Z^2");
  CHECK(cokernel_presentation(IntMatrix::from_rows({{0, 3}, {-3, -9}})).render() ==
        "Z/3 (+) Z/3");
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);
  CHECK(kernel_basis(IntMatrix(1, 2)).cols() == 2);

  auto a = IntMatrix::from_rows({{2, -2}});
  auto basis = kernel_basis(a);
  REQUIRE(basis.cols() == 1);
  // Basis generates exactly the brute-force kernel lattice in a small box.
  auto brute = oracles::brute_kernel_vectors(a, 3);
  for (const auto& v : brute) {
    // v must be an integer multiple of the basis column.
    mpz_class b0 = basis.at(0, 0), b1 = basis.at(1, 0);
    bool multiple = false;
    for (long k = -3; k <= 3; ++k)
      if (b0 * k == v[0] && b1 * k == v[1]) multiple = true;
    CHECK(multiple);
  }
  CHECK(brute.size() == 7);  // k in [-3, 3]
}

TEST_CASE("hermite form shape and transform") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a.at(i, j) = entry(rng);
    auto h = hnf(a);
    CHECK(h.u * a == h.h);
    CHECK(abs(h.u.det()) == 1);
    // Row echelon with strictly increasing positive pivots, entries above
    // each pivot reduced into [0, pivot), zero rows trailing.
    bool ok = true;
    long prev_pivot = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t j = 0;
      while (j < c && h.h.at(i, j) == 0) ++j;
      if (j == c) {
        seen_zero_row = true;
        continue;
      }
      if (seen_zero_row) ok = false;
      if (static_cast<long>(j) <= prev_pivot) ok = false;
      if (h.h.at(i, j) <= 0) ok = false;
      for (std::size_t above = 0; above < i; ++above)
        if (h.h.at(above, j) < 0 || h.h.at(above, j) >= h.h.at(i, j)) ok = false;
      prev_pivot = static_cast<long>(j);
    }
    CHECK(ok);
  }
}

TEST_CASE("snf property suite on random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(0, 6), entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a.at(i, j) = entry(rng);
    auto s = snf(a);
    CHECK(s.u * a * s.v == s.d);
    if (r > 0) CHECK(abs(oracles::naive_det(s.u)) == 1);
    if (c > 0) CHECK(abs(oracles::naive_det(s.v)) == 1);
    bool chain = true, seen_zero = false;
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      const mpz_class& di = s.d.at(i, i);
      if (di < 0) chain = false;
      if (di == 0) seen_zero = true;
      if (seen_zero && di != 0) chain = false;
      if (i > 0 && s.d.at(i - 1, i - 1) != 0 && di % s.d.at(i - 1, i - 1) != 0)
        chain = false;
    }
    CHECK(chain);
    // Transpose invariance of the cokernel on square matrices.
    if (r == c)
      CHECK(cokernel_presentation(a) == cokernel_presentation(a.transposed()));
    CHECK(cokernel_presentation(a).rank() + rank(a) == r);
    if (r == c && r > 0) {
      mpz_class det = oracles::naive_det(a);
      if (det != 0)
        CHECK(cokernel_presentation(a).torsion_order() == abs(det));
    }
  }
}

TEST_CASE("lattice membership and solve") {
  auto b = IntMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(lattice_contains(b, {mpz_class(4), mpz_class(3)}));
  CHECK(!lattice_contains(b, {mpz_class(1), mpz_class(0)}));
  auto y = lattice_solve(b, {mpz_class(4), mpz_class(-6)});
  CHECK(y[0] == 2);
  CHECK(y[1] == -2);
  CHECK_THROWS_AS(lattice_solve(b, {mpz_class(1), mpz_class(0)}), orbitk::Error);
}

TEST_CASE("determinant via Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
      CHECK(a.det() == oracles::naive_det(a));
    }
}
