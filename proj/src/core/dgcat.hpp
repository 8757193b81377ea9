#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fieldmat.hpp"

namespace orbitk::dg {

using field::Coeffs;
using field::Mat;

/// Bounded cochain complex of hom spaces between one ordered object pair:
/// dimensions per degree and differentials of degree +1.
struct HomComplex {
  std::map<int, std::size_t> dims;  // only nonzero degrees stored
  std::map<int, Mat> diff;          // d_k: rows = dim(k+1), cols = dim(k)

  std::size_t dim(int k) const;
  Mat diff_at(int k) const;  // correctly shaped zero matrix when absent
  int min_degree() const;
  int max_degree() const;
  bool is_zero() const;
};

using PairKey = std::pair<std::size_t, std::size_t>;
/// (x, y, z, gdeg, fdeg): composition hom^gdeg(y,z) x hom^fdeg(x,y) -> hom(x,z).
using CompKey = std::tuple<std::size_t, std::size_t, std::size_t, int, int>;
/// tensor[b][a] = coefficients of (g_b o f_a) over the basis of hom^{g+f}(x,z).
using CompTensor = std::vector<std::vector<std::vector<mpq_class>>>;

/// Finitely many objects with bounded hom complexes over Q or a prime field,
/// composition structure constants and unit elements. `validate()` re-derives
/// d*d = 0, the Leibniz rule, associativity and unitality on basis elements.
class FiniteDgCategory {
 public:
  FiniteDgCategory() = default;
  FiniteDgCategory(Coeffs coeffs, std::vector<std::string> objects,
                   std::map<PairKey, HomComplex> homs,
                   std::map<CompKey, CompTensor> comp,
                   std::map<std::size_t, std::vector<mpq_class>> units);

  const Coeffs& coeffs() const { return coeffs_; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t object_count() const { return objects_.size(); }

  const HomComplex& hom(std::size_t x, std::size_t y) const;
  const std::vector<mpq_class>& unit(std::size_t x) const;

  /// Bilinear composition of coefficient vectors g in hom^gdeg(y,z) and
  /// f in hom^fdeg(x,y).
  std::vector<mpq_class> compose(std::size_t x, std::size_t y, std::size_t z,
                                 int gdeg, const std::vector<mpq_class>& g,
                                 int fdeg, const std::vector<mpq_class>& f) const;

  void validate() const;

 private:
  const CompTensor* tensor(const CompKey& key) const;

  Coeffs coeffs_;
  std::vector<std::string> objects_;
  std::map<PairKey, HomComplex> homs_;
  std::map<CompKey, CompTensor> comp_;
  std::map<std::size_t, std::vector<mpq_class>> units_;
  HomComplex empty_;
};

/// Dg endofunctor: an object bijection plus degree-zero chain maps on every
/// hom complex. Functoriality and the H^0-equivalence hypothesis are checked
/// by validate_functor / check_h0_equivalence.
struct DgFunctor {
  std::vector<std::size_t> object_map;
  std::map<PairKey, std::map<int, Mat>> hom_maps;

  std::size_t on_object(std::size_t x) const { return object_map.at(x); }
  std::size_t iterate_object(std::size_t x, std::size_t times) const;
  Mat map_at(const FiniteDgCategory& a, std::size_t x, std::size_t y, int k) const;
  std::vector<mpq_class> apply(const FiniteDgCategory& a, std::size_t x,
                               std::size_t y, int k,
                               const std::vector<mpq_class>& v) const;
  /// Applies the functor `times` times to an element of hom^k(x,y).
  std::vector<mpq_class> apply_iterated(const FiniteDgCategory& a, std::size_t x,
                                        std::size_t y, int k,
                                        const std::vector<mpq_class>& v,
                                        std::size_t times) const;

  static DgFunctor identity(const FiniteDgCategory& a);
};

/// Structural checks: object bijection, chain maps, functoriality, units.
void validate_functor(const FiniteDgCategory& a, const DgFunctor& f);

/// H^0(F) bijective on every hom; the standing hypothesis for orbit
/// constructions. Strictly finite-level: genuinely non-strict essential
/// surjectivity is rejected with a diagnostic at the object-bijection stage.
void check_h0_equivalence(const FiniteDgCategory& a, const DgFunctor& f);

/// H^0 of every hom complex with the induced composition on chosen
/// representatives.
struct H0Category {
  std::vector<std::string> objects;
  std::map<PairKey, std::size_t> dims;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CompTensor> comp;
};

H0Category h0_category(const FiniteDgCategory& a);

/// Square-zero extension by the shifted twisted bimodule (x,y) -> A(x,F(y))[1]:
/// hom(x,y) = A(x,y) (+) A(x,F(y))[1], with the second summand composing to
/// zero against itself. All invariants are re-verified on the output.
FiniteDgCategory square_zero(const FiniteDgCategory& a, const DgFunctor& f);

}  // namespace orbitk::dg
