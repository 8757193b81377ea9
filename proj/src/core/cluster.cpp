#include "cluster.hpp"

#include "error.hpp"
#include "snf.hpp"

namespace orbitk::cluster {

using abgroup::Presentation;
using exactla::cokernel_presentation;

namespace {

bool parity_odd(long n) { return ((n % 2) + 2) % 2 == 1; }

}  // namespace

ClusterK0Result cluster_k0(const quiver::Quiver& q, long n) {
  IntMatrix phi = quiver::coxeter_matrix(q);
  if (parity_odd(n)) phi = phi.negated();
  ClusterK0Result res;
  res.matrix_used = phi - IntMatrix::identity(q.vertex_count());
  res.group = cokernel_presentation(res.matrix_used);
  res.dynkin_caveat = n == 0 && !q.is_dynkin_ade();
  return res;
}

std::vector<orbit::OrbitDegreeResult> cluster_triangle(
    const quiver::Quiver& q, long n, const orbit::InvariantSpec& ek) {
  const std::size_t m = q.vertex_count();
  IntMatrix phi = quiver::coxeter_matrix(q);
  if (parity_odd(n)) phi = phi.negated();
  field::Coeffs k = ek.coeffs();

  std::map<int, orbit::DegreeData> degrees;
  for (const auto& [deg, dk] : ek.degrees()) {
    orbit::DegreeData d;
    if (ek.flags().field_coefficients) {
      // Basis ordered (simple i, coordinate a): the automorphism is the
      // Kronecker product phi (x) Id.
      const std::size_t g = dk.dim;
      d.dim = m * g;
      d.auto_f = field::Mat(m * g, m * g);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          mpq_class c(phi.at(i, j));
          if (c == 0) continue;
          for (std::size_t a = 0; a < g; ++a)
            d.auto_f.at(i * g + a, j * g + a) = k.reduce(c);
        }
    } else {
      const std::size_t g = dk.pres.gens;
      d.pres.gens = m * g;
      d.pres.relations = IntMatrix(m * g, m * dk.pres.relations.cols());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < g; ++a)
          for (std::size_t c = 0; c < dk.pres.relations.cols(); ++c)
            d.pres.relations.at(i * g + a, i * dk.pres.relations.cols() + c) =
                dk.pres.relations.at(a, c);
      d.auto_z = IntMatrix(m * g, m * g);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          if (phi.at(i, j) == 0) continue;
          for (std::size_t a = 0; a < g; ++a)
            d.auto_z.at(i * g + a, j * g + a) = phi.at(i, j);
        }
    }
    degrees.emplace(deg, std::move(d));
  }
  return orbit::orbit_groups(orbit::InvariantSpec(ek.flags(), std::move(degrees)));
}

IntMatrix kleinian_matrix(std::size_t s) {
  if (s < 1) fail_validation("kleinian", "s must be at least 1");
  IntMatrix m(s, s);
  m.at(0, 0) = -2;
  for (std::size_t i = 1; i < s; ++i) {
    m.at(i, 0) = -1;
    m.at(i, i) = -1;
  }
  for (std::size_t i = 0; i + 1 < s; ++i) m.at(i, i + 1) = 1;
  return m;
}

FgAbGroup kleinian_k0(std::size_t s) {
  FgAbGroup from_matrix = cokernel_presentation(kleinian_matrix(s));
  ClusterK0Result from_coxeter =
      cluster_k0(quiver::Quiver::preset("A" + std::to_string(s)), 0);
  if (from_matrix != from_coxeter.group)
    fail_internal("Kleinian K_0 routes disagree at s = " + std::to_string(s));
  return from_matrix;
}

}  // namespace orbitk::cluster
