#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace orbitk::abgroup {

using exactla::IntMatrix;

/// Finitely generated abelian group in canonical form: free rank plus an
/// invariant-factor chain d1 | d2 | ... with every di >= 2. Two values are
/// isomorphic as groups iff they compare equal.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // the trivial group

  static FgAbGroup free_group(std::size_t rank);
  static FgAbGroup cyclic(const mpz_class& d);
  /// Canonicalizes an arbitrary list of torsion coefficients (factors equal to
  /// 1 are dropped, the rest are rearranged into a divisibility chain).
  static FgAbGroup from_factors(std::size_t rank, std::vector<mpz_class> factors);
  /// Trusts the caller: factors must already form a divisibility chain, all >= 2.
  static FgAbGroup from_invariant_chain(std::size_t rank,
                                        std::vector<mpz_class> factors);

  std::size_t rank() const { return rank_; }
  const std::vector<mpz_class>& invariant_factors() const { return factors_; }
  std::size_t generator_count() const { return rank_ + factors_.size(); }

  bool trivial() const { return rank_ == 0 && factors_.empty(); }
  bool is_free() const { return factors_.empty(); }
  mpz_class torsion_order() const;

  /// G (x) Z/m and the m-torsion subgroup {g : m*g = 0}, in canonical form.
  FgAbGroup tensor_with_cyclic(const mpz_class& m) const;
  FgAbGroup torsion_subgroup(const mpz_class& m) const;

  bool operator==(const FgAbGroup&) const = default;

  /// Canonical rendering: "0" | "Z^r" | "Z/d1 (+) Z/d2 ..." |
  /// "Z^r (+) Z/d1 ...", factors in divisibility order. Golden tests compare
  /// this string byte for byte.
  std::string render() const;
  /// Accepts the rendering grammar plus "Z" as an alias for "Z^1".
  static FgAbGroup parse(const std::string& text);

 private:
  std::size_t rank_ = 0;
  std::vector<mpz_class> factors_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Presentation Z^gens / column-lattice(relations). The canonical presentation
/// of an FgAbGroup lists free generators first, then one generator per torsion
/// factor with relation di * ei.
struct Presentation {
  std::size_t gens = 0;
  IntMatrix relations;  // gens x k, columns are relators

  static Presentation of(const FgAbGroup& g);
  FgAbGroup group() const;
};

/// Homomorphism between presented groups, given by a matrix on generators.
/// Well-definedness (the matrix maps source relations into the target relation
/// lattice) is checked at construction, not assumed.
class GroupHom {
 public:
  GroupHom(Presentation source, Presentation target, IntMatrix matrix);

  static GroupHom endo(const FgAbGroup& g, IntMatrix matrix);
  static GroupHom identity(const FgAbGroup& g);

  const Presentation& source() const { return source_; }
  const Presentation& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  bool matrix_is_identity() const { return matrix_.is_identity(); }

 private:
  Presentation source_;
  Presentation target_;
  IntMatrix matrix_;
};

FgAbGroup cokernel_of_hom(const GroupHom& f);
FgAbGroup kernel_of_hom(const GroupHom& f);

/// Endomorphism f - id of the same presentation.
GroupHom endo_minus_identity(const GroupHom& f);

/// True iff f is bijective (trivial kernel and cokernel).
bool is_automorphism(const GroupHom& f);

/// Quotient of a presented group by the subgroup generated by the given
/// generator-coordinate vectors.
FgAbGroup quotient_by_elements(const Presentation& g,
                               const std::vector<std::vector<mpz_class>>& elems);

}  // namespace orbitk::abgroup
