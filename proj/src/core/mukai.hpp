#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "fieldmat.hpp"
#include "int_matrix.hpp"

namespace orbitk::mukai {

using abgroup::FgAbGroup;
using exactla::IntMatrix;

/// A de Rham cohomology model as pure data: graded basis, cup-product
/// structure constants, Mukai pairing, and named classes (ch_L, ch_E,
/// sqrt_Td, ...). The module never derives these from geometry.
class CohomologyModel {
 public:
  struct BasisElement {
    std::string name;
    int degree = 0;
  };

  CohomologyModel(std::vector<BasisElement> basis,
                  std::vector<std::vector<std::vector<mpq_class>>> mult,
                  field::Mat pairing,
                  std::map<std::string, std::vector<mpq_class>> classes);

  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const field::Mat& pairing() const { return pairing_; }
  const std::map<std::string, std::vector<mpq_class>>& classes() const {
    return classes_;
  }

  bool has_class(const std::string& name) const {
    return classes_.count(name) != 0;
  }
  const std::vector<mpq_class>& named_class(const std::string& name) const;

  std::vector<mpq_class> multiply(const std::vector<mpq_class>& a,
                                  const std::vector<mpq_class>& b) const;
  mpq_class pair(const std::vector<mpq_class>& a,
                 const std::vector<mpq_class>& b) const;

  /// Coordinate vector of the i-th basis element.
  std::vector<mpq_class> el_at(std::size_t i) const;
  const std::vector<mpq_class>& unit() const { return unit_; }

  /// Matrix of right multiplication x -> x * v on the whole basis.
  field::Mat right_multiplication(const std::vector<mpq_class>& v) const;

  std::vector<std::size_t> even_indices() const;
  std::vector<std::size_t> odd_indices() const;

 private:
  std::vector<BasisElement> basis_;
  std::vector<std::vector<std::vector<mpq_class>>> mult_;  // mult_[i][j] = e_i * e_j
  field::Mat pairing_;
  std::map<std::string, std::vector<mpq_class>> classes_;
  std::vector<mpq_class> unit_;
};

/// Matrices of alpha -> (-1)^n (alpha * ch_L) - alpha on the even and odd
/// graded parts: the horizontal maps of the six-term sequence for the
/// line-bundle twist - (x) L[n].
std::pair<field::Mat, field::Mat> line_bundle_hp_map(const CohomologyModel& m,
                                                     long n);

/// Projection alpha -> <alpha, v> v with v = ch_E * sqrt_Td: the HP-action of
/// the Fourier-Mukai kernel of a spherical twist. The six-term horizontal map
/// of the twist itself is minus this matrix.
field::Mat spherical_projection(const CohomologyModel& m);

/// Orbit HP dimensions from the horizontal maps themselves (the maps that
/// already include the -Id part).
std::pair<std::size_t, std::size_t> sixterm_dims_from_maps(const field::Mat& even,
                                                           const field::Mat& odd);

/// Even/odd blocks of the spherical-twist horizontal map -P; validation error
/// when the projection mixes parities.
std::pair<field::Mat, field::Mat> spherical_hp_maps(const CohomologyModel& m);

/// K_0-action of the spherical kernel: x -> (chi_row . x) * e_class on Z^m.
abgroup::GroupHom spherical_k0_map(const std::vector<mpz_class>& chi_row,
                                   const std::vector<mpz_class>& e_class);

/// coker(-spherical_k0_map): the degree-zero orbit K-group of the twist.
FgAbGroup spherical_orbit_k0(const std::vector<mpz_class>& chi_row,
                             const std::vector<mpz_class>& e_class);

/// K_0(C) = Z (+) Pic(C) with the class of the twisting line bundle recorded
/// in Pic-coordinates. Only finitely generated Picard presentations fit.
struct CurveK0 {
  FgAbGroup pic;
  std::vector<mpz_class> l_class;
};

struct CurveOrbitResult {
  FgAbGroup computed;       // honest cokernel of (-1)^n T_L - Id
  FgAbGroup paper_formula;  // Z (+) Pic/<L>, with a Z/2 factor when n is odd
  bool matches = false;
  IntMatrix matrix_used;
};

CurveOrbitResult curve_orbit_kh0(const CurveK0& c, long n);

/// Shipped example models.
CohomologyModel point_model();
CohomologyModel p1_model(const mpz_class& line_bundle_degree);
CohomologyModel genus_curve_model(std::size_t genus,
                                  const mpz_class& line_bundle_degree);
CohomologyModel k3_model();

}  // namespace orbitk::mukai
