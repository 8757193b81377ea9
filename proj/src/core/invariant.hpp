#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "fieldmat.hpp"
#include "int_matrix.hpp"

namespace orbitk::orbit {

using abgroup::FgAbGroup;
using abgroup::Presentation;
using exactla::IntMatrix;

struct InvariantFlags {
  bool connective = false;
  bool two_periodic = false;
  bool field_coefficients = false;
  unsigned long prime = 0;  // field characteristic; 0 = rationals
};

/// One degree of an invariant: a presentation of E_n(A) with the matrix of
/// E_n(F) on its generators. With field coefficients the group is a vector
/// space (dim + matrix over the field) instead.
struct DegreeData {
  Presentation pres;
  IntMatrix auto_z;
  std::size_t dim = 0;
  field::Mat auto_f;

  static DegreeData integral(const FgAbGroup& group, IntMatrix auto_matrix);
  static DegreeData vector_space(std::size_t dim, field::Mat auto_matrix);
};

/// Graded family (E_n(A), E_n(F)) for finitely many degrees. Degrees outside
/// the stored window: zero when connective, reduced mod 2 when two_periodic,
/// otherwise an error to query. Every automorphism is checked invertible.
class InvariantSpec {
 public:
  InvariantSpec(InvariantFlags flags, std::map<int, DegreeData> degrees);

  const InvariantFlags& flags() const { return flags_; }
  const std::map<int, DegreeData>& degrees() const { return degrees_; }
  field::Coeffs coeffs() const { return field::Coeffs{flags_.prime}; }

  const DegreeData& data_at(int n) const;
  /// Degrees for which orbit results are produced.
  std::vector<int> result_degrees() const;

  /// Same spec with every automorphism replaced by (-1)^n * Id.
  InvariantSpec with_sign_identity_autos(long n) const;

 private:
  InvariantFlags flags_;
  std::map<int, DegreeData> degrees_;
  DegreeData zero_;
};

/// One degree of the orbit invariant: the short exact sequence
///   0 -> coker(E_n(F)-Id) -> E_n(A/F^Z) -> ker(E_{n-1}(F)-Id) -> 0
/// read off the long exact sequence. `resolved` is filled only when the
/// extension is forced (free kernel piece, a trivial piece, identity
/// automorphism in the two degrees involved, or field coefficients);
/// everything else stays honestly ambiguous.
struct OrbitDegreeResult {
  int degree = 0;
  FgAbGroup coker_piece;
  FgAbGroup ker_piece;
  std::optional<FgAbGroup> resolved;
  bool ambiguous = false;
};

OrbitDegreeResult orbit_degree(const InvariantSpec& spec, int n);
std::vector<OrbitDegreeResult> orbit_groups(const InvariantSpec& spec);

/// Degree-zero orbit group under the regularity hypothesis: the cokernel of
/// K_0(F) - Id. Negative orbit KH vanishes; callers report that separately.
FgAbGroup kh0_orbit(const Presentation& k0, const IntMatrix& f);
FgAbGroup kh0_orbit(const FgAbGroup& k0, const IntMatrix& f);

std::vector<OrbitDegreeResult> suspension_orbit(const InvariantSpec& spec, long n);

/// Exactness of the six-term sequence over a field forces
///   dim HP^+(orbit) = dim coker(f_even - Id) + dim ker(f_odd - Id)
/// and symmetrically for HP^-.
std::pair<std::size_t, std::size_t> hp_sixterm(std::size_t even_dim,
                                               std::size_t odd_dim,
                                               const field::Mat& f_even,
                                               const field::Mat& f_odd);

/// For results produced from auto = -Id: the pieces must be E_m (x) Z/2 and
/// the 2-torsion subgroup of E_{m-1}.
bool universal_coeff_check(const OrbitDegreeResult& result, const FgAbGroup& e_m,
                           const FgAbGroup& e_m_minus_1);

}  // namespace orbitk::orbit
