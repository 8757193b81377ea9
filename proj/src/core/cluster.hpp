#pragma once

#include <cstddef>
#include <vector>

#include "abgroup.hpp"
#include "int_matrix.hpp"
#include "invariant.hpp"
#include "quiver.hpp"

namespace orbitk::cluster {

using abgroup::FgAbGroup;
using exactla::IntMatrix;

struct ClusterK0Result {
  FgAbGroup group;
  IntMatrix matrix_used;  // (-1)^n * Coxeter - Id
  /// n = 0 on a quiver that is not Dynkin A/D/E: the orbit category need not
  /// be triangulated, so the group is reported with a caveat, not an error.
  bool dynkin_caveat = false;
};

/// coker((-1)^n * coxeter_matrix(q) - Id); depends on n only through parity.
ClusterK0Result cluster_k0(const quiver::Quiver& q, long n);

/// Instantiates the invariant of D^b_dg(kQ) on the simple-module basis,
/// E_deg(A) = E_deg(k)^m with automorphism (-1)^n * Coxeter acting across the
/// simple summands, and runs the orbit computation degree by degree.
std::vector<orbit::OrbitDegreeResult> cluster_triangle(
    const quiver::Quiver& q, long n, const orbit::InvariantSpec& ek);

/// The s x s matrix presenting K_0 of the A_s Kleinian singularity:
/// first column -2, -1, ..., -1; superdiagonal 1; diagonal -1 past the first
/// entry; zero elsewhere.
IntMatrix kleinian_matrix(std::size_t s);

/// Z/(s+1), computed independently from kleinian_matrix(s) and from
/// coxeter_matrix(A_s) - Id; the two routes are compared before returning.
FgAbGroup kleinian_k0(std::size_t s);

}  // namespace orbitk::cluster
