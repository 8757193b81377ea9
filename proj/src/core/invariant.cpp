#include "invariant.hpp"

#include "error.hpp"

namespace orbitk::orbit {

using abgroup::cokernel_of_hom;
using abgroup::direct_sum;
using abgroup::endo_minus_identity;
using abgroup::GroupHom;
using abgroup::is_automorphism;
using abgroup::kernel_of_hom;

DegreeData DegreeData::integral(const FgAbGroup& group, IntMatrix auto_matrix) {
  DegreeData d;
  d.pres = Presentation::of(group);
  d.auto_z = std::move(auto_matrix);
  return d;
}

DegreeData DegreeData::vector_space(std::size_t dim, field::Mat auto_matrix) {
  DegreeData d;
  d.dim = dim;
  d.auto_f = std::move(auto_matrix);
  return d;
}

namespace {

bool degree_is_zero(const DegreeData& d, const InvariantFlags& flags) {
  return flags.field_coefficients ? d.dim == 0 : d.pres.gens == 0;
}

bool auto_is_identity(const DegreeData& d, const InvariantFlags& flags) {
  if (degree_is_zero(d, flags)) return true;
  if (flags.field_coefficients) return d.auto_f == field::Mat::identity(d.dim);
  return d.auto_z.is_identity();
}

}  // namespace

InvariantSpec::InvariantSpec(InvariantFlags flags, std::map<int, DegreeData> degrees)
    : flags_(flags), degrees_(std::move(degrees)) {
  if (flags_.two_periodic)
    for (const auto& [n, d] : degrees_)
      if (n != 0 && n != 1)
        fail_validation("invariant-spec",
                        "two-periodic specs store degrees 0 and 1 only");
  if (flags_.connective)
    for (const auto& [n, d] : degrees_)
      if (n < 0)
        fail_validation("invariant-spec",
                        "connective specs cannot store negative degrees");
  if (flags_.prime != 0 && !flags_.field_coefficients)
    fail_validation("invariant-spec",
                    "a prime is only meaningful with field coefficients");
  field::Coeffs k = coeffs();
  for (const auto& [n, d] : degrees_) {
    if (flags_.field_coefficients) {
      if (d.auto_f.rows() != d.dim || d.auto_f.cols() != d.dim)
        fail_validation("invariant-spec", "automorphism shape mismatch");
      if (field::rank(d.auto_f, k) != d.dim)
        fail_validation("non-invertible-auto",
                        "degree automorphism is singular over the field");
    } else {
      if (d.auto_z.rows() != d.pres.gens || d.auto_z.cols() != d.pres.gens)
        fail_validation("invariant-spec", "automorphism shape mismatch");
      GroupHom f(d.pres, d.pres, d.auto_z);
      if (!is_automorphism(f))
        fail_validation("non-invertible-auto",
                        "degree automorphism is not invertible");
    }
  }
}

const DegreeData& InvariantSpec::data_at(int n) const {
  int key = n;
  if (flags_.two_periodic) key = ((n % 2) + 2) % 2;
  auto it = degrees_.find(key);
  if (it != degrees_.end()) return it->second;
  if (flags_.two_periodic || flags_.connective) return zero_;
  fail_validation("degree-window", "degree " + std::to_string(n) +
                                       " is outside the stored window");
}

std::vector<int> InvariantSpec::result_degrees() const {
  std::vector<int> out;
  if (flags_.two_periodic) return {0, 1};
  if (degrees_.empty()) return out;
  int lo = degrees_.begin()->first;
  int hi = degrees_.rbegin()->first;
  if (flags_.connective) {
    for (int n = 0; n <= hi + 1; ++n) out.push_back(n);
  } else {
    for (int n = lo + 1; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

InvariantSpec InvariantSpec::with_sign_identity_autos(long n) const {
  const bool odd = ((n % 2) + 2) % 2 == 1;
  field::Coeffs k = coeffs();
  std::map<int, DegreeData> degrees;
  for (const auto& [deg, d] : degrees_) {
    DegreeData nd;
    if (flags_.field_coefficients) {
      nd.dim = d.dim;
      nd.auto_f = field::Mat::identity(d.dim);
      if (odd)
        for (std::size_t i = 0; i < d.dim; ++i)
          nd.auto_f.at(i, i) = k.reduce(mpq_class(-1));
    } else {
      nd.pres = d.pres;
      nd.auto_z = IntMatrix::identity(d.pres.gens);
      if (odd) nd.auto_z = nd.auto_z.negated();
    }
    degrees.emplace(deg, std::move(nd));
  }
  return InvariantSpec(flags_, std::move(degrees));
}

namespace {

FgAbGroup coker_piece_of(const DegreeData& d, const InvariantFlags& flags,
                         const field::Coeffs& k) {
  if (degree_is_zero(d, flags)) return FgAbGroup();
  if (flags.field_coefficients) {
    field::Mat m = d.auto_f - field::Mat::identity(d.dim);
    return FgAbGroup::free_group(d.dim - field::rank(m, k));
  }
  GroupHom f(d.pres, d.pres, d.auto_z);
  return cokernel_of_hom(endo_minus_identity(f));
}

FgAbGroup ker_piece_of(const DegreeData& d, const InvariantFlags& flags,
                       const field::Coeffs& k) {
  if (degree_is_zero(d, flags)) return FgAbGroup();
  if (flags.field_coefficients) {
    field::Mat m = d.auto_f - field::Mat::identity(d.dim);
    return FgAbGroup::free_group(d.dim - field::rank(m, k));
  }
  GroupHom f(d.pres, d.pres, d.auto_z);
  return kernel_of_hom(endo_minus_identity(f));
}

}  // namespace

OrbitDegreeResult orbit_degree(const InvariantSpec& spec, int n) {
  const InvariantFlags& flags = spec.flags();
  field::Coeffs k = spec.coeffs();
  const DegreeData& here = spec.data_at(n);
  const DegreeData& below = spec.data_at(n - 1);
  OrbitDegreeResult r;
  r.degree = n;
  r.coker_piece = coker_piece_of(here, flags, k);
  r.ker_piece = ker_piece_of(below, flags, k);
  const bool forced = flags.field_coefficients || r.ker_piece.is_free() ||
                      r.coker_piece.trivial() || r.ker_piece.trivial() ||
                      (auto_is_identity(here, flags) &&
                       auto_is_identity(below, flags));
  if (forced) r.resolved = direct_sum(r.coker_piece, r.ker_piece);
  r.ambiguous = !forced;
  return r;
}

std::vector<OrbitDegreeResult> orbit_groups(const InvariantSpec& spec) {
  std::vector<OrbitDegreeResult> out;
  for (int n : spec.result_degrees()) out.push_back(orbit_degree(spec, n));
  return out;
}

FgAbGroup kh0_orbit(const Presentation& k0, const IntMatrix& f) {
  GroupHom hom(k0, k0, f);
  if (!is_automorphism(hom))
    fail_validation("non-invertible-auto", "K_0(F) is not invertible");
  return cokernel_of_hom(endo_minus_identity(hom));
}

FgAbGroup kh0_orbit(const FgAbGroup& k0, const IntMatrix& f) {
  return kh0_orbit(Presentation::of(k0), f);
}

std::vector<OrbitDegreeResult> suspension_orbit(const InvariantSpec& spec, long n) {
  return orbit_groups(spec.with_sign_identity_autos(n));
}

std::pair<std::size_t, std::size_t> hp_sixterm(std::size_t even_dim,
                                               std::size_t odd_dim,
                                               const field::Mat& f_even,
                                               const field::Mat& f_odd) {
  if (f_even.rows() != even_dim || f_even.cols() != even_dim ||
      f_odd.rows() != odd_dim || f_odd.cols() != odd_dim)
    fail_validation("dimension-mismatch",
                    "six-term matrices must be square of the stated dimensions");
  field::Coeffs k{0};
  std::size_t rank_even = field::rank(f_even - field::Mat::identity(even_dim), k);
  std::size_t rank_odd = field::rank(f_odd - field::Mat::identity(odd_dim), k);
  // Square matrices: dim coker = dim ker = dim - rank on each parity.
  std::size_t null_even = even_dim - rank_even;
  std::size_t null_odd = odd_dim - rank_odd;
  return {null_even + null_odd, null_odd + null_even};
}

bool universal_coeff_check(const OrbitDegreeResult& result, const FgAbGroup& e_m,
                           const FgAbGroup& e_m_minus_1) {
  return result.coker_piece == e_m.tensor_with_cyclic(2) &&
         result.ker_piece == e_m_minus_1.torsion_subgroup(2);
}

}  // namespace orbitk::orbit
