#include "mukai.hpp"

#include "error.hpp"
#include "invariant.hpp"
#include "snf.hpp"

namespace orbitk::mukai {

using abgroup::GroupHom;
using abgroup::Presentation;
using exactla::cokernel_presentation;

namespace {

const field::Coeffs kQ{0};

}  // namespace

CohomologyModel::CohomologyModel(
    std::vector<BasisElement> basis,
    std::vector<std::vector<std::vector<mpq_class>>> mult, field::Mat pairing,
    std::map<std::string, std::vector<mpq_class>> classes)
    : basis_(std::move(basis)),
      mult_(std::move(mult)),
      pairing_(std::move(pairing)),
      classes_(std::move(classes)) {
  const std::size_t n = basis_.size();
  if (mult_.size() != n)
    fail_validation("cohomology-model", "multiplication table row count");
  for (const auto& row : mult_) {
    if (row.size() != n)
      fail_validation("cohomology-model", "multiplication table column count");
    for (const auto& vec : row)
      if (vec.size() != n)
        fail_validation("cohomology-model", "multiplication table vector size");
  }
  if (pairing_.rows() != n || pairing_.cols() != n)
    fail_validation("cohomology-model", "pairing shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pairing_.at(i, j) != pairing_.at(j, i))
        fail_validation("cohomology-model", "pairing is not symmetric");
  if (field::rank(pairing_, kQ) != n)
    fail_validation("cohomology-model", "pairing is degenerate");
  for (const auto& [name, vec] : classes_)
    if (vec.size() != n)
      fail_validation("cohomology-model", "class '" + name + "' size mismatch");

  // Grading: e_i * e_j lives in degree deg_i + deg_j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        if (mult_[i][j][c] != 0 &&
            basis_[c].degree != basis_[i].degree + basis_[j].degree)
          fail_validation("cohomology-model",
                          "multiplication does not respect the grading");

  // Unit: solve for u with u * e_j = e_j = e_j * u for all j.
  field::Mat lhs(2 * n * n, n);
  std::vector<mpq_class> rhs(2 * n * n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        lhs.at(j * n + c, i) = mult_[i][j][c];
        lhs.at(n * n + j * n + c, i) = mult_[j][i][c];
      }
      rhs[j * n + c] = (j == c) ? 1 : 0;
      rhs[n * n + j * n + c] = (j == c) ? 1 : 0;
    }
  auto u = field::solve(lhs, rhs, kQ);
  if (!u) fail_validation("cohomology-model", "multiplication has no unit");
  unit_ = *u;

  // Associativity on basis triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpq_class> ij = mult_[i][j];
      for (std::size_t l = 0; l < n; ++l) {
        std::vector<mpq_class> el(n, 0);
        el[l] = 1;
        std::vector<mpq_class> left = multiply(ij, el);
        std::vector<mpq_class> right = multiply(el_at(i), mult_[j][l]);
        if (left != right)
          fail_validation("cohomology-model", "multiplication is not associative");
      }
    }

  auto it = classes_.find("sqrt_Td");
  if (it != classes_.end()) {
    for (std::size_t c = 0; c < n; ++c)
      if (basis_[c].degree == 0 && it->second[c] != unit_[c])
        fail_validation("cohomology-model",
                        "sqrt_Td must have degree-0 component 1");
  }
}

std::vector<mpq_class> CohomologyModel::el_at(std::size_t i) const {
  std::vector<mpq_class> e(basis_.size(), 0);
  e[i] = 1;
  return e;
}

const std::vector<mpq_class>& CohomologyModel::named_class(
    const std::string& name) const {
  auto it = classes_.find(name);
  if (it == classes_.end())
    fail_validation("missing-class", "model has no class named '" + name + "'");
  return it->second;
}

std::vector<mpq_class> CohomologyModel::multiply(
    const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
  const std::size_t n = basis_.size();
  std::vector<mpq_class> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      mpq_class c = a[i] * b[j];
      const auto& vec = mult_[i][j];
      for (std::size_t l = 0; l < n; ++l)
        if (vec[l] != 0) out[l] += c * vec[l];
    }
  }
  return out;
}

mpq_class CohomologyModel::pair(const std::vector<mpq_class>& a,
                                const std::vector<mpq_class>& b) const {
  mpq_class out = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (b[j] != 0) out += a[i] * pairing_.at(i, j) * b[j];
  }
  return out;
}

field::Mat CohomologyModel::right_multiplication(
    const std::vector<mpq_class>& v) const {
  const std::size_t n = basis_.size();
  field::Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<mpq_class> image = multiply(el_at(j), v);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = image[i];
  }
  return m;
}

std::vector<std::size_t> CohomologyModel::even_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (((basis_[i].degree % 2) + 2) % 2 == 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> CohomologyModel::odd_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (((basis_[i].degree % 2) + 2) % 2 == 1) out.push_back(i);
  return out;
}

namespace {

std::pair<field::Mat, field::Mat> parity_blocks(const CohomologyModel& m,
                                                const field::Mat& full) {
  std::vector<std::size_t> even = m.even_indices();
  std::vector<std::size_t> odd = m.odd_indices();
  auto in_list = [](const std::vector<std::size_t>& v, std::size_t x) {
    for (std::size_t e : v)
      if (e == x) return true;
    return false;
  };
  for (std::size_t i = 0; i < full.rows(); ++i)
    for (std::size_t j = 0; j < full.cols(); ++j)
      if (full.at(i, j) != 0 && in_list(even, i) != in_list(even, j))
        fail_validation("parity-mixing", "map does not preserve the even/odd split");
  field::Mat fe(even.size(), even.size());
  for (std::size_t a = 0; a < even.size(); ++a)
    for (std::size_t b = 0; b < even.size(); ++b)
      fe.at(a, b) = full.at(even[a], even[b]);
  field::Mat fo(odd.size(), odd.size());
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = 0; b < odd.size(); ++b)
      fo.at(a, b) = full.at(odd[a], odd[b]);
  return {std::move(fe), std::move(fo)};
}

}  // namespace

std::pair<field::Mat, field::Mat> line_bundle_hp_map(const CohomologyModel& m,
                                                     long n) {
  const std::vector<mpq_class>& ch_l = m.named_class("ch_L");
  field::Mat full = m.right_multiplication(ch_l);
  if (((n % 2) + 2) % 2 == 1) full = full.scaled(-1);
  full = full - field::Mat::identity(m.dim());
  return parity_blocks(m, full);
}

field::Mat spherical_projection(const CohomologyModel& m) {
  const std::vector<mpq_class>& ch_e = m.named_class("ch_E");
  const std::vector<mpq_class>& sqrt_td = m.named_class("sqrt_Td");
  std::vector<mpq_class> v = m.multiply(ch_e, sqrt_td);
  const std::size_t n = m.dim();
  field::Mat p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class coeff = 0;
    for (std::size_t l = 0; l < n; ++l) coeff += m.pairing().at(j, l) * v[l];
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) = coeff * v[i];
  }
  return p;
}

std::pair<std::size_t, std::size_t> sixterm_dims_from_maps(const field::Mat& even,
                                                           const field::Mat& odd) {
  if (even.rows() != even.cols() || odd.rows() != odd.cols())
    fail_validation("dimension-mismatch", "six-term maps must be square");
  std::size_t null_even = even.rows() - field::rank(even, kQ);
  std::size_t null_odd = odd.rows() - field::rank(odd, kQ);
  return {null_even + null_odd, null_odd + null_even};
}

std::pair<field::Mat, field::Mat> spherical_hp_maps(const CohomologyModel& m) {
  field::Mat p = spherical_projection(m).scaled(-1);
  return parity_blocks(m, p);
}

GroupHom spherical_k0_map(const std::vector<mpz_class>& chi_row,
                          const std::vector<mpz_class>& e_class) {
  if (chi_row.size() != e_class.size())
    fail_validation("dimension-mismatch",
                    "chi and e vectors must have equal length");
  const std::size_t m = chi_row.size();
  IntMatrix mat(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mat.at(i, j) = e_class[i] * chi_row[j];
  return GroupHom::endo(FgAbGroup::free_group(m), std::move(mat));
}

FgAbGroup spherical_orbit_k0(const std::vector<mpz_class>& chi_row,
                             const std::vector<mpz_class>& e_class) {
  GroupHom f = spherical_k0_map(chi_row, e_class);
  return cokernel_presentation(f.matrix().negated());
}

CurveOrbitResult curve_orbit_kh0(const CurveK0& c, long n) {
  const std::size_t pg = c.pic.generator_count();
  if (c.l_class.size() != pg)
    fail_validation("dimension-mismatch",
                    "line bundle class does not match the Picard presentation");
  Presentation pic_pres = Presentation::of(c.pic);
  Presentation pres;
  pres.gens = 1 + pg;
  pres.relations = IntMatrix(pres.gens, pic_pres.relations.cols());
  for (std::size_t i = 0; i < pg; ++i)
    for (std::size_t j = 0; j < pic_pres.relations.cols(); ++j)
      pres.relations.at(1 + i, j) = pic_pres.relations.at(i, j);

  // K_0(- (x) L) on Z (+) Pic: (r, e) -> (r, e + r * [L]).
  IntMatrix t = IntMatrix::identity(pres.gens);
  for (std::size_t i = 0; i < pg; ++i) t.at(1 + i, 0) = c.l_class[i];
  if (((n % 2) + 2) % 2 == 1) t = t.negated();

  CurveOrbitResult res;
  res.matrix_used = t - IntMatrix::identity(pres.gens);
  res.computed = orbit::kh0_orbit(pres, t);

  std::vector<std::vector<mpz_class>> quot = {c.l_class};
  FgAbGroup pic_mod_l = abgroup::quotient_by_elements(pic_pres, quot);
  FgAbGroup head = (((n % 2) + 2) % 2 == 0) ? FgAbGroup::free_group(1)
                                            : FgAbGroup::cyclic(2);
  res.paper_formula = abgroup::direct_sum(head, pic_mod_l);
  res.matches = res.computed == res.paper_formula;
  return res;
}

namespace {

std::vector<std::vector<std::vector<mpq_class>>> zero_mult(std::size_t n) {
  return std::vector<std::vector<std::vector<mpq_class>>>(
      n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
}

}  // namespace

CohomologyModel point_model() {
  std::vector<CohomologyModel::BasisElement> basis{{"1", 0}};
  auto mult = zero_mult(1);
  mult[0][0][0] = 1;
  field::Mat pairing = field::Mat::identity(1);
  std::map<std::string, std::vector<mpq_class>> classes;
  classes["ch_L"] = {mpq_class(1)};
  classes["ch_E"] = {mpq_class(1)};
  classes["sqrt_Td"] = {mpq_class(1)};
  return CohomologyModel(std::move(basis), std::move(mult), std::move(pairing),
                         std::move(classes));
}

CohomologyModel p1_model(const mpz_class& line_bundle_degree) {
  std::vector<CohomologyModel::BasisElement> basis{{"1", 0}, {"h", 2}};
  auto mult = zero_mult(2);
  mult[0][0][0] = 1;
  mult[0][1][1] = 1;
  mult[1][0][1] = 1;  // h * h = 0
  field::Mat pairing(2, 2);
  pairing.at(0, 1) = -1;
  pairing.at(1, 0) = -1;
  std::map<std::string, std::vector<mpq_class>> classes;
  classes["ch_L"] = {mpq_class(1), mpq_class(line_bundle_degree)};
  classes["ch_E"] = {mpq_class(1), mpq_class(0)};
  classes["sqrt_Td"] = {mpq_class(1), mpq_class(1, 2)};
  return CohomologyModel(std::move(basis), std::move(mult), std::move(pairing),
                         std::move(classes));
}

CohomologyModel genus_curve_model(std::size_t genus,
                                  const mpz_class& line_bundle_degree) {
  const std::size_t g = genus;
  const std::size_t n = 2 + 2 * g;  // 1, a_1..a_g, b_1..b_g, pt
  std::vector<CohomologyModel::BasisElement> basis;
  basis.push_back({"1", 0});
  for (std::size_t i = 1; i <= g; ++i)
    basis.push_back({"a" + std::to_string(i), 1});
  for (std::size_t i = 1; i <= g; ++i)
    basis.push_back({"b" + std::to_string(i), 1});
  basis.push_back({"pt", 2});
  auto mult = zero_mult(n);
  for (std::size_t j = 0; j < n; ++j) {
    mult[0][j][j] = 1;
    mult[j][0][j] = 1;
  }
  const std::size_t pt = n - 1;
  for (std::size_t i = 0; i < g; ++i) {
    mult[1 + i][1 + g + i][pt] = 1;   // a_i * b_i = pt
    mult[1 + g + i][1 + i][pt] = -1;  // b_i * a_i = -pt
  }
  field::Mat pairing(n, n);
  pairing.at(0, pt) = -1;
  pairing.at(pt, 0) = -1;
  for (std::size_t i = 0; i < g; ++i) {
    pairing.at(1 + i, 1 + g + i) = 1;
    pairing.at(1 + g + i, 1 + i) = 1;
  }
  std::map<std::string, std::vector<mpq_class>> classes;
  std::vector<mpq_class> ch_l(n, 0), ch_e(n, 0), sqrt_td(n, 0);
  ch_l[0] = 1;
  ch_l[pt] = mpq_class(line_bundle_degree);
  ch_e[0] = 1;
  sqrt_td[0] = 1;
  sqrt_td[pt] = mpq_class(mpz_class(1) - mpz_class(genus), mpz_class(2));
  classes["ch_L"] = std::move(ch_l);
  classes["ch_E"] = std::move(ch_e);
  classes["sqrt_Td"] = std::move(sqrt_td);
  return CohomologyModel(std::move(basis), std::move(mult), std::move(pairing),
                         std::move(classes));
}

CohomologyModel k3_model() {
  // H^2 lattice: U (+) U (+) U (+) E8(-1) (+) E8(-1).
  const std::size_t h2 = 22;
  std::vector<std::vector<long>> gram(h2, std::vector<long>(h2, 0));
  for (std::size_t u = 0; u < 3; ++u) {
    gram[2 * u][2 * u + 1] = 1;
    gram[2 * u + 1][2 * u] = 1;
  }
  // E8 as a tree: chain 1-..-7 with node 8 attached to node 3.
  auto e8_block = [&gram](std::size_t off) {
    for (std::size_t i = 0; i < 8; ++i) gram[off + i][off + i] = -2;
    auto link = [&gram, off](std::size_t a, std::size_t b) {
      gram[off + a][off + b] = 1;
      gram[off + b][off + a] = 1;
    };
    for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
    link(7, 2);
  };
  e8_block(6);
  e8_block(14);

  const std::size_t n = 24;
  std::vector<CohomologyModel::BasisElement> basis;
  basis.push_back({"1", 0});
  for (std::size_t i = 1; i <= h2; ++i)
    basis.push_back({"e" + std::to_string(i), 2});
  basis.push_back({"pt", 4});
  auto mult = zero_mult(n);
  for (std::size_t j = 0; j < n; ++j) {
    mult[0][j][j] = 1;
    mult[j][0][j] = 1;
  }
  const std::size_t pt = n - 1;
  for (std::size_t i = 0; i < h2; ++i)
    for (std::size_t j = 0; j < h2; ++j)
      if (gram[i][j] != 0) mult[1 + i][1 + j][pt] = gram[i][j];
  field::Mat pairing(n, n);
  pairing.at(0, pt) = -1;
  pairing.at(pt, 0) = -1;
  for (std::size_t i = 0; i < h2; ++i)
    for (std::size_t j = 0; j < h2; ++j) pairing.at(1 + i, 1 + j) = gram[i][j];
  std::map<std::string, std::vector<mpq_class>> classes;
  std::vector<mpq_class> ch_l(n, 0), ch_e(n, 0), sqrt_td(n, 0);
  ch_e[0] = 1;  // the structure sheaf, a spherical object
  sqrt_td[0] = 1;
  sqrt_td[pt] = 1;
  ch_l[0] = 1;
  ch_l[1] = 1;  // 1 + e1, with e1^2 = 0 in the first hyperbolic plane
  classes["ch_L"] = std::move(ch_l);
  classes["ch_E"] = std::move(ch_e);
  classes["sqrt_Td"] = std::move(sqrt_td);
  return CohomologyModel(std::move(basis), std::move(mult), std::move(pairing),
                         std::move(classes));
}

}  // namespace orbitk::mukai
