#include "dgorbit.hpp"

#include <set>
#include <sstream>

#include "error.hpp"

namespace orbitk::dg {

namespace {

std::vector<mpq_class> basis_vector(std::size_t dim, std::size_t idx) {
  std::vector<mpq_class> v(dim, 0);
  v[idx] = 1;
  return v;
}

void require_valid(const FiniteDgCategory& a, const DgFunctor& f) {
  a.validate();
  validate_functor(a, f);
  check_h0_equivalence(a, f);
}

}  // namespace

std::size_t GradedOrbitCategory::weight_offset(std::size_t x, std::size_t y,
                                               int deg, int w) const {
  auto pit = weights.find({x, y});
  if (pit == weights.end()) return 0;
  auto dit = pit->second.find(deg);
  if (dit == pit->second.end()) return 0;
  std::size_t off = 0;
  for (int wt : dit->second)
    if (wt < w) ++off;
  return off;
}

std::size_t GradedOrbitCategory::weight_dim(std::size_t x, std::size_t y, int deg,
                                            int w) const {
  auto pit = weights.find({x, y});
  if (pit == weights.end()) return 0;
  auto dit = pit->second.find(deg);
  if (dit == pit->second.end()) return 0;
  std::size_t d = 0;
  for (int wt : dit->second)
    if (wt == w) ++d;
  return d;
}

std::vector<mpq_class> GradedOrbitCategory::include_weight0(
    const FiniteDgCategory& a, std::size_t x, std::size_t y, int deg,
    const std::vector<mpq_class>& v) const {
  (void)a;
  std::vector<mpq_class> out(cat.hom(x, y).dim(deg), 0);
  std::size_t off = weight_offset(x, y, deg, 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
  return out;
}

std::vector<mpq_class> GradedOrbitCategory::epsilon(const FiniteDgCategory& a,
                                                    const DgFunctor& f,
                                                    std::size_t x) const {
  std::size_t fx = f.on_object(x);
  std::vector<mpq_class> out(cat.hom(x, fx).dim(0), 0);
  std::size_t off = weight_offset(x, fx, 0, 1);
  const auto& u = a.unit(fx);
  for (std::size_t i = 0; i < u.size(); ++i) out[off + i] = u[i];
  return out;
}

GradedOrbitCategory orbit_n(const FiniteDgCategory& a, const DgFunctor& f,
                            int weight_bound) {
  if (weight_bound < 0)
    fail_validation("invalid-dg-data", "weight bound must be nonnegative");
  require_valid(a, f);
  const Coeffs& k = a.coeffs();
  const std::size_t nobj = a.object_count();
  const int N = weight_bound;

  GradedOrbitCategory out;
  out.weight_bound = N;

  // hom(x,y)^deg = (+)_{n<=N} A(F^n x, y)^deg, blocks ordered by weight.
  std::map<PairKey, HomComplex> homs;
  for (std::size_t x = 0; x < nobj; ++x)
    for (std::size_t y = 0; y < nobj; ++y) {
      HomComplex h;
      std::map<int, std::vector<int>> wtags;
      for (int n = 0; n <= N; ++n) {
        const HomComplex& comp = a.hom(f.iterate_object(x, n), y);
        for (const auto& [deg, dim] : comp.dims) {
          h.dims[deg] += dim;
          auto& tags = wtags[deg];
          tags.insert(tags.end(), dim, n);
        }
      }
      for (auto it = h.dims.begin(); it != h.dims.end(); ++it) {
        int deg = it->first;
        Mat d(h.dim(deg + 1), it->second);
        for (int n = 0; n <= N; ++n) {
          const HomComplex& comp = a.hom(f.iterate_object(x, n), y);
          if (comp.dim(deg) == 0) continue;
          Mat block = comp.diff_at(deg);
          std::size_t roff = 0, coff = 0;
          for (int m = 0; m < n; ++m) {
            const HomComplex& c2 = a.hom(f.iterate_object(x, m), y);
            roff += c2.dim(deg + 1);
            coff += c2.dim(deg);
          }
          for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
              d.at(roff + i, coff + j) = block.at(i, j);
        }
        if (d.rows() > 0 && d.cols() > 0) h.diff[deg] = std::move(d);
      }
      if (!h.dims.empty()) {
        homs[{x, y}] = std::move(h);
        out.weights[{x, y}] = std::move(wtags);
      }
    }

  // Composition: the weight-m component of g o f is
  // sum over ng+nf=m of g_{ng} o F^{ng}(f_{nf}), truncated above N.
  std::map<CompKey, CompTensor> comp;
  for (std::size_t x = 0; x < nobj; ++x)
    for (std::size_t y = 0; y < nobj; ++y)
      for (std::size_t z = 0; z < nobj; ++z) {
        auto hxy = homs.find({x, y});
        auto hyz = homs.find({y, z});
        auto hxz = homs.find({x, z});
        if (hxy == homs.end() || hyz == homs.end() || hxz == homs.end())
          continue;
        for (const auto& [i, fdim_total] : hxy->second.dims)
          for (const auto& [j, gdim_total] : hyz->second.dims) {
            const std::size_t out_total = hxz->second.dim(i + j);
            if (out_total == 0) continue;
            CompTensor t(gdim_total,
                         std::vector<std::vector<mpq_class>>(
                             fdim_total, std::vector<mpq_class>(out_total, 0)));
            bool nonzero = false;
            std::size_t goff = 0;
            for (int ng = 0; ng <= N; ++ng) {
              std::size_t fyn = f.iterate_object(y, ng);
              const std::size_t gdim = a.hom(fyn, z).dim(j);
              if (gdim == 0) continue;
              std::size_t foff = 0;
              for (int nf = 0; nf <= N; ++nf) {
                std::size_t fxn = f.iterate_object(x, nf);
                const std::size_t fdim = a.hom(fxn, y).dim(i);
                if (fdim == 0) continue;
                const int m = ng + nf;
                if (m <= N) {
                  std::size_t fxm = f.iterate_object(x, static_cast<std::size_t>(m));
                  const std::size_t odim = a.hom(fxm, z).dim(i + j);
                  if (odim > 0) {
                    // offset of the weight-m block in the output degree i+j
                    std::size_t ooff = 0;
                    for (int w = 0; w < m; ++w)
                      ooff += a.hom(f.iterate_object(x, w), z).dim(i + j);
                    for (std::size_t bf = 0; bf < fdim; ++bf) {
                      auto fv = f.apply_iterated(a, fxn, y, i,
                                                 basis_vector(fdim, bf), ng);
                      for (std::size_t bg = 0; bg < gdim; ++bg) {
                        auto prod = a.compose(fxm, fyn, z, j,
                                              basis_vector(gdim, bg), i, fv);
                        for (std::size_t l = 0; l < odim; ++l)
                          if (prod[l] != 0) {
                            t[goff + bg][foff + bf][ooff + l] = prod[l];
                            nonzero = true;
                          }
                      }
                    }
                  }
                }
                foff += fdim;
              }
              goff += gdim;
            }
            if (nonzero) comp[{x, y, z, j, i}] = std::move(t);
          }
      }

  std::map<std::size_t, std::vector<mpq_class>> units;
  for (std::size_t x = 0; x < nobj; ++x) {
    std::size_t total = 0;
    auto it = homs.find({x, x});
    if (it != homs.end()) total = it->second.dim(0);
    std::vector<mpq_class> u(total, 0);
    const auto& base = a.unit(x);
    for (std::size_t i = 0; i < base.size(); ++i) u[i] = base[i];  // weight 0 first
    units[x] = std::move(u);
  }

  out.cat = FiniteDgCategory(k, a.objects(), std::move(homs), std::move(comp),
                             std::move(units));
  out.cat.validate();
  return out;
}

OrbitZReport orbit_z(const FiniteDgCategory& a, const DgFunctor& f,
                     int weight_bound, int stage_bound) {
  if (weight_bound < 0 || stage_bound < 0)
    fail_validation("invalid-dg-data", "bounds must be nonnegative");
  require_valid(a, f);
  const int N = weight_bound;
  const int P = stage_bound;

  OrbitZReport report;
  report.weight_bound = N;
  report.stage_bound = P;
  report.all_stabilized = true;

  auto stage_dims = [&](std::size_t x, std::size_t y,
                        int p) -> std::map<int, std::size_t> {
    std::map<int, std::size_t> dims;
    std::size_t yp = f.iterate_object(y, static_cast<std::size_t>(p));
    for (int n = 0; n <= N + p; ++n) {
      const HomComplex& h = a.hom(f.iterate_object(x, n), yp);
      for (const auto& [deg, dim] : h.dims) dims[deg] += dim;
    }
    return dims;
  };

  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      OrbitZHomReport hr;
      std::size_t yp = f.iterate_object(y, static_cast<std::size_t>(P));
      for (int n = 0; n <= N + P; ++n) {
        const HomComplex& h = a.hom(f.iterate_object(x, n), yp);
        for (const auto& [deg, dim] : h.dims)
          if (dim > 0) hr.dims_by_weight[n - P][deg] += dim;
      }
      hr.final_dims = stage_dims(x, y, P);
      if (P >= 1) {
        hr.prev_dims = stage_dims(x, y, P - 1);
        hr.stabilized = hr.prev_dims == hr.final_dims;
      } else {
        hr.stabilized = hr.final_dims.empty();
      }
      if (!hr.stabilized) report.all_stabilized = false;
      if (!hr.final_dims.empty() || !hr.prev_dims.empty())
        report.homs[{x, y}] = std::move(hr);
    }
  return report;
}

namespace {

field::CohomologySpace hom_cohomology(const FiniteDgCategory& a, std::size_t x,
                                      std::size_t y, int deg) {
  const HomComplex& h = a.hom(x, y);
  return field::cohomology(h.diff_at(deg - 1), h.diff_at(deg), h.dim(deg),
                           a.coeffs());
}

}  // namespace

EpsilonCheckReport epsilon_quasi_iso_check(const FiniteDgCategory& a,
                                           const DgFunctor& f, int weight_bound,
                                           int stage_bound) {
  if (weight_bound < 1)
    fail_validation("invalid-dg-data", "weight bound must be at least 1");
  if (stage_bound < 0)
    fail_validation("invalid-dg-data", "stage bound must be nonnegative");
  require_valid(a, f);
  const Coeffs& k = a.coeffs();
  const int N = weight_bound;
  const int P = stage_bound;

  EpsilonCheckReport report;
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    EpsilonCheckReport::PerObject po;
    po.object = x;
    auto record_failure = [&](const std::string& what, std::size_t z, int n,
                              int deg) {
      if (!po.pass) return;
      po.pass = false;
      std::ostringstream os;
      os << what << " with " << a.objects()[z] << " fails at weight " << n
         << ", degree " << deg;
      po.first_failure = os.str();
    };
    for (std::size_t z = 0; z < a.object_count(); ++z) {
      // Precomposition hom(F(x), z) -> hom(x, z): the weight-n component
      // A(F^n(Fx), F^P z) lands identically on the weight-(n+1) component
      // A(F^{n+1}x, F^P z); the iterated objects coincide on the nose.
      std::size_t zp = f.iterate_object(z, static_cast<std::size_t>(P));
      for (int n = 0; n <= N + P - 1; ++n) {
        std::size_t src = f.iterate_object(f.on_object(x), static_cast<std::size_t>(n));
        std::size_t dst = f.iterate_object(x, static_cast<std::size_t>(n + 1));
        const HomComplex& hs = a.hom(src, zp);
        const HomComplex& hd = a.hom(dst, zp);
        for (const auto& [deg, dim] : hs.dims) {
          auto cs = hom_cohomology(a, src, zp, deg);
          auto cd = hom_cohomology(a, dst, zp, deg);
          if (!field::induces_iso(cs, cd, Mat::identity(hd.dim(deg)), k))
            record_failure("precomposition", z, n, deg);
        }
      }
      // Postcomposition hom(z, x) -> hom(z, F(x)): weightwise the functor map
      // A(F^n z, F^P x) -> A(F^{n+1} z, F^{P+1} x).
      std::size_t xp = f.iterate_object(x, static_cast<std::size_t>(P));
      for (int n = 0; n <= N + P - 1; ++n) {
        std::size_t zn = f.iterate_object(z, static_cast<std::size_t>(n));
        const HomComplex& hs = a.hom(zn, xp);
        const HomComplex& hd = a.hom(f.on_object(zn), f.on_object(xp));
        std::set<int> degs;
        for (const auto& [deg, dim] : hs.dims) degs.insert(deg);
        for (const auto& [deg, dim] : hd.dims) degs.insert(deg);
        for (int deg : degs) {
          auto cs = hom_cohomology(a, zn, xp, deg);
          auto cd = hom_cohomology(a, f.on_object(zn), f.on_object(xp), deg);
          if (!field::induces_iso(cs, cd, f.map_at(a, zn, xp, deg), k))
            record_failure("postcomposition", z, n, deg);
        }
      }
    }
    if (!po.pass) report.all_pass = false;
    report.objects.push_back(std::move(po));
  }
  return report;
}

ComparisonReport comparison_map_check(const FiniteDgCategory& a,
                                      const DgFunctor& f, int weight_bound) {
  if (weight_bound < 2)
    fail_validation("truncation-too-small",
                    "comparison check needs a weight bound of at least 2");
  require_valid(a, f);
  const Coeffs& k = a.coeffs();
  const int N = weight_bound;

  ComparisonReport report;
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      ComparisonReport::PerPair pp;
      pp.x = x;
      pp.y = y;
      std::size_t fy = f.on_object(y);
      auto record = [&](bool& flag, const std::string& what, int w, int deg) {
        flag = false;
        if (pp.first_failure.empty()) {
          std::ostringstream os;
          os << what << " fails at weight " << w << ", degree " << deg;
          pp.first_failure = os.str();
        }
      };

      // All cochain degrees appearing anywhere in the three columns.
      std::set<int> degs;
      for (int n = 0; n <= N + 2; ++n) {
        std::size_t fxn = f.iterate_object(x, static_cast<std::size_t>(n));
        for (const auto& [deg, dim] : a.hom(fxn, y).dims) degs.insert(deg);
        for (const auto& [deg, dim] : a.hom(fxn, fy).dims) degs.insert(deg);
      }

      for (int deg : degs) {
        // d_{-1} injectivity (== H^{-1} iso against the zero row) on source
        // weights n <= N-1: matrix [Id; F] stacked.
        for (int n = 0; n + 1 <= N; ++n) {
          std::size_t src_obj = f.iterate_object(x, static_cast<std::size_t>(n + 1));
          const std::size_t s = a.hom(src_obj, y).dim(deg);
          if (s == 0) continue;
          Mat fmap = f.map_at(a, src_obj, y, deg);
          Mat stacked(s + fmap.rows(), s);
          for (std::size_t i = 0; i < s; ++i) stacked.at(i, i) = 1;
          for (std::size_t i = 0; i < fmap.rows(); ++i)
            for (std::size_t j = 0; j < s; ++j)
              stacked.at(s + i, j) = fmap.at(i, j);
          if (field::rank(stacked, k) != s) {
            record(pp.d_minus1_injective, "d_{-1} injectivity", n, deg);
            record(pp.h_minus1_iso, "H^{-1}", n, deg);
          }
        }

        // H^0 per C^0-weight v: kernel of d_0 against image of d_{-1}
        // (plus the square-zero row at weight 0).
        for (int v = 0; v + 1 <= N; ++v) {
          std::size_t fxv = f.iterate_object(x, static_cast<std::size_t>(v));
          std::size_t fxv1 = f.iterate_object(x, static_cast<std::size_t>(v + 1));
          const std::size_t da = a.hom(fxv, y).dim(deg);
          const std::size_t db = a.hom(fxv1, fy).dim(deg);
          if (da + db == 0) continue;
          Mat fmap = f.map_at(a, fxv, y, deg);  // A(F^v x, y) -> A(F^{v+1}x, Fy)
          Mat d0(db, da + db);
          for (std::size_t i = 0; i < db; ++i) {
            for (std::size_t j = 0; j < da; ++j) d0.at(i, j) = fmap.at(i, j);
            d0.at(i, da + i) = -1;
          }
          Mat ker = field::kernel(d0, k);
          if (v == 0) {
            // Top row H^0 = A(x,y): the map a -> (a, F(a)) must be a bijection
            // onto ker(d_0) at weight 0.
            if (ker.cols() != da) record(pp.h0_iso, "H^0 (weight 0)", v, deg);
            Mat top(da + db, da);
            for (std::size_t j = 0; j < da; ++j) {
              top.at(j, j) = 1;
              for (std::size_t i = 0; i < db; ++i) top.at(da + i, j) = fmap.at(i, j);
            }
            for (std::size_t c = 0; c < da && pp.h0_iso; ++c) {
              std::vector<mpq_class> col(da + db);
              for (std::size_t i = 0; i < da + db; ++i) col[i] = top.at(i, c);
              if (!field::in_column_span(ker, col, k))
                record(pp.h0_iso, "H^0 top-row image", v, deg);
            }
            if (field::rank(top, k) != da)
              record(pp.h0_iso, "H^0 top-row rank", v, deg);
          } else {
            // Exactness: ker(d_0) = im(d_{-1}) from weight v-1.
            std::size_t prev_obj = fxv;  // C^{-1} weight v-1 component is A(F^v x, y)
            const std::size_t s = a.hom(prev_obj, y).dim(deg);
            Mat dm1(da + db, s);
            Mat fm = f.map_at(a, prev_obj, y, deg);
            for (std::size_t j = 0; j < s; ++j) {
              dm1.at(j, j) = 1;  // identity onto the A-part (dims match: s == da)
              for (std::size_t i = 0; i < db; ++i) dm1.at(da + i, j) = fm.at(i, j);
            }
            std::size_t rk_ker = field::rank(ker, k);
            std::size_t rk_im = field::rank(dm1, k);
            Mat both(da + db, ker.cols() + s);
            for (std::size_t i = 0; i < da + db; ++i) {
              for (std::size_t j = 0; j < ker.cols(); ++j)
                both.at(i, j) = ker.at(i, j);
              for (std::size_t j = 0; j < s; ++j)
                both.at(i, ker.cols() + j) = dm1.at(i, j);
            }
            if (!(rk_ker == rk_im && field::rank(both, k) == rk_ker))
              record(pp.h0_iso, "H^0 exactness", v, deg);
          }
        }

        // H^1 per C^1-weight u: u = 0 is the identity embedding; u >= 1 needs
        // d_0 from weight u-1 to surject.
        for (int u = 1; u <= N; ++u) {
          std::size_t fxu = f.iterate_object(x, static_cast<std::size_t>(u));
          std::size_t fxu_prev = f.iterate_object(x, static_cast<std::size_t>(u - 1));
          const std::size_t target = a.hom(fxu, fy).dim(deg);
          if (target == 0) continue;
          const std::size_t da = a.hom(fxu_prev, y).dim(deg);
          Mat fmap = f.map_at(a, fxu_prev, y, deg);
          Mat d0(target, da + target);
          for (std::size_t i = 0; i < target; ++i) {
            for (std::size_t j = 0; j < da; ++j) d0.at(i, j) = fmap.at(i, j);
            d0.at(i, da + i) = -1;
          }
          if (field::rank(d0, k) != target)
            record(pp.h1_iso, "H^1 surjectivity", u, deg);
        }
      }

      if (!(pp.d_minus1_injective && pp.h_minus1_iso && pp.h0_iso && pp.h1_iso))
        report.all_pass = false;
      report.pairs.push_back(std::move(pp));
    }
  return report;
}

}  // namespace orbitk::dg
