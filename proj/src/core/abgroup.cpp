#include "abgroup.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "snf.hpp"

namespace orbitk::abgroup {

using exactla::cokernel_presentation;
using exactla::hnf;
using exactla::kernel_basis;
using exactla::lattice_contains;
using exactla::lattice_solve;

FgAbGroup FgAbGroup::free_group(std::size_t rank) {
  FgAbGroup g;
  g.rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const mpz_class& d) {
  return from_factors(0, {d});
}

FgAbGroup FgAbGroup::from_invariant_chain(std::size_t rank,
                                          std::vector<mpz_class> factors) {
  FgAbGroup g;
  g.rank_ = rank;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      fail_internal("invariant factor below 2 in trusted constructor");
    if (i > 0 && factors[i] % factors[i - 1] != 0)
      fail_internal("broken divisibility chain in trusted constructor");
  }
  g.factors_ = std::move(factors);
  return g;
}

FgAbGroup FgAbGroup::from_factors(std::size_t rank,
                                  std::vector<mpz_class> factors) {
  std::size_t extra_rank = 0;
  std::vector<mpz_class> kept;
  for (auto& f : factors) {
    mpz_class a = abs(f);
    if (a == 0) {
      ++extra_rank;  // Z/0 = Z
    } else if (a > 1) {
      kept.push_back(a);
    }
  }
  // Canonicalize through the SNF of the diagonal relation matrix.
  IntMatrix diag(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) diag.at(i, i) = kept[i];
  FgAbGroup torsion = cokernel_presentation(diag);
  torsion.rank_ = rank + extra_rank;
  return torsion;
}

mpz_class FgAbGroup::torsion_order() const {
  mpz_class n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

FgAbGroup FgAbGroup::tensor_with_cyclic(const mpz_class& m) const {
  mpz_class a = abs(m);
  if (a == 0) return *this;  // G (x) Z
  std::vector<mpz_class> factors;
  for (std::size_t i = 0; i < rank_; ++i) factors.push_back(a);
  for (const auto& d : factors_) factors.push_back(gcd(d, a));
  return from_factors(0, std::move(factors));
}

FgAbGroup FgAbGroup::torsion_subgroup(const mpz_class& m) const {
  if (m <= 0)
    fail_validation("torsion-subgroup", "torsion exponent must be positive");
  std::vector<mpz_class> factors;
  for (const auto& d : factors_) factors.push_back(gcd(d, m));
  return from_factors(0, std::move(factors));
}

std::string FgAbGroup::render() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank_ > 0) {
    out << "Z^" << rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) out << " (+) ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

FgAbGroup FgAbGroup::parse(const std::string& text) {
  auto trim = [](std::string s) {
    const char* ws = " \t";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string t = trim(text);
  if (t == "0") return FgAbGroup();
  std::size_t rank = 0;
  std::vector<mpz_class> factors;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t sep = t.find("(+)", pos);
    std::string piece =
        trim(sep == std::string::npos ? t.substr(pos) : t.substr(pos, sep - pos));
    if (piece.empty()) fail_parse("group-grammar", "empty summand in '" + text + "'");
    if (piece == "Z") {
      rank += 1;
    } else if (piece.rfind("Z^", 0) == 0) {
      try {
        long r = std::stol(piece.substr(2));
        if (r < 0) throw std::invalid_argument("negative");
        rank += static_cast<std::size_t>(r);
      } catch (const std::exception&) {
        fail_parse("group-grammar", "bad free rank in '" + piece + "'");
      }
    } else if (piece.rfind("Z/", 0) == 0) {
      try {
        factors.emplace_back(piece.substr(2));
      } catch (const std::exception&) {
        fail_parse("group-grammar", "bad torsion factor in '" + piece + "'");
      }
      if (factors.back() < 1)
        fail_parse("group-grammar", "torsion factor must be positive");
    } else {
      fail_parse("group-grammar", "unrecognized summand '" + piece + "'");
    }
    if (sep == std::string::npos) break;
    pos = sep + 3;
  }
  return from_factors(rank, std::move(factors));
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<mpz_class> factors = a.invariant_factors();
  factors.insert(factors.end(), b.invariant_factors().begin(),
                 b.invariant_factors().end());
  return FgAbGroup::from_factors(a.rank() + b.rank(), std::move(factors));
}

Presentation Presentation::of(const FgAbGroup& g) {
  Presentation p;
  p.gens = g.generator_count();
  p.relations = IntMatrix(p.gens, g.invariant_factors().size());
  for (std::size_t i = 0; i < g.invariant_factors().size(); ++i)
    p.relations.at(g.rank() + i, i) = g.invariant_factors()[i];
  return p;
}

FgAbGroup Presentation::group() const { return cokernel_presentation(relations); }

GroupHom::GroupHom(Presentation source, Presentation target, IntMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.gens || matrix_.cols() != source_.gens)
    fail_validation("ill-formed-hom",
                    "matrix shape does not match the presentations");
  if (source_.relations.rows() != source_.gens ||
      target_.relations.rows() != target_.gens)
    fail_validation("ill-formed-hom", "presentation relation rows mismatch");
  // The matrix must map every source relation into the target relation
  // lattice; this is what makes the map well-defined on the quotient.
  for (std::size_t k = 0; k < source_.relations.cols(); ++k) {
    std::vector<mpz_class> image(target_.gens, 0);
    for (std::size_t i = 0; i < target_.gens; ++i)
      for (std::size_t j = 0; j < source_.gens; ++j)
        image[i] += matrix_.at(i, j) * source_.relations.at(j, k);
    if (!lattice_contains(target_.relations, image))
      fail_validation("ill-formed-hom",
                      "matrix does not preserve the relation lattice");
  }
}

GroupHom GroupHom::endo(const FgAbGroup& g, IntMatrix matrix) {
  Presentation p = Presentation::of(g);
  return GroupHom(p, p, std::move(matrix));
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return endo(g, IntMatrix::identity(g.generator_count()));
}

FgAbGroup cokernel_of_hom(const GroupHom& f) {
  return cokernel_presentation(
      exactla::hstack(f.target().relations, f.matrix()));
}

namespace {

// Basis of the lattice generated by the columns of g.
IntMatrix column_lattice_basis(const IntMatrix& g) {
  exactla::HnfDecomposition h = hnf(g.transposed());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < h.h.rows(); ++i) {
    bool z = true;
    for (std::size_t j = 0; j < h.h.cols(); ++j)
      if (h.h.at(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) nonzero = i + 1;
  }
  IntMatrix basis(g.rows(), nonzero);
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < g.rows(); ++j) basis.at(j, i) = h.h.at(i, j);
  return basis;
}

}  // namespace

FgAbGroup kernel_of_hom(const GroupHom& f) {
  // Preimage lattice L = {x : f(x) lies in the target relation lattice},
  // obtained from the kernel of [M | R_target]; then ker f = L / R_source.
  IntMatrix stacked = exactla::hstack(f.matrix(), f.target().relations);
  IntMatrix full_kernel = kernel_basis(stacked);
  IntMatrix generators(f.source().gens, full_kernel.cols());
  for (std::size_t i = 0; i < f.source().gens; ++i)
    for (std::size_t j = 0; j < full_kernel.cols(); ++j)
      generators.at(i, j) = full_kernel.at(i, j);
  IntMatrix basis = column_lattice_basis(generators);

  const IntMatrix& rel = f.source().relations;
  IntMatrix induced(basis.cols(), rel.cols());
  for (std::size_t k = 0; k < rel.cols(); ++k) {
    std::vector<mpz_class> target(rel.rows());
    for (std::size_t i = 0; i < rel.rows(); ++i) target[i] = rel.at(i, k);
    std::vector<mpz_class> coords = lattice_solve(basis, target);
    for (std::size_t i = 0; i < basis.cols(); ++i) induced.at(i, k) = coords[i];
  }
  return cokernel_presentation(induced);
}

GroupHom endo_minus_identity(const GroupHom& f) {
  if (f.matrix().rows() != f.matrix().cols())
    fail_validation("ill-formed-hom", "f - id requires an endomorphism");
  IntMatrix m = f.matrix() - IntMatrix::identity(f.matrix().rows());
  return GroupHom(f.source(), f.target(), std::move(m));
}

bool is_automorphism(const GroupHom& f) {
  return kernel_of_hom(f).trivial() && cokernel_of_hom(f).trivial();
}

FgAbGroup quotient_by_elements(const Presentation& g,
                               const std::vector<std::vector<mpz_class>>& elems) {
  IntMatrix extra(g.gens, elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k].size() != g.gens)
      fail_validation("dimension-mismatch",
                      "element coordinates do not match the presentation");
    for (std::size_t i = 0; i < g.gens; ++i) extra.at(i, k) = elems[k][i];
  }
  return cokernel_presentation(exactla::hstack(g.relations, extra));
}

}  // namespace orbitk::abgroup
