#include "dgcat.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace orbitk::dg {

std::size_t HomComplex::dim(int k) const {
  auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

Mat HomComplex::diff_at(int k) const {
  auto it = diff.find(k);
  if (it != diff.end()) return it->second;
  return Mat(dim(k + 1), dim(k));
}

int HomComplex::min_degree() const {
  return dims.empty() ? 0 : dims.begin()->first;
}

int HomComplex::max_degree() const {
  return dims.empty() ? 0 : dims.rbegin()->first;
}

bool HomComplex::is_zero() const { return dims.empty(); }

FiniteDgCategory::FiniteDgCategory(
    Coeffs coeffs, std::vector<std::string> objects,
    std::map<PairKey, HomComplex> homs, std::map<CompKey, CompTensor> comp,
    std::map<std::size_t, std::vector<mpq_class>> units)
    : coeffs_(coeffs),
      objects_(std::move(objects)),
      homs_(std::move(homs)),
      comp_(std::move(comp)),
      units_(std::move(units)) {
  std::set<std::string> labels(objects_.begin(), objects_.end());
  if (labels.size() != objects_.size())
    fail_validation("invalid-dg-data", "duplicate object labels");
  for (auto it = homs_.begin(); it != homs_.end();) {
    auto& [key, hc] = *it;
    if (key.first >= objects_.size() || key.second >= objects_.size())
      fail_validation("invalid-dg-data", "hom references unknown object");
    for (auto d = hc.dims.begin(); d != hc.dims.end();) {
      if (d->second == 0)
        d = hc.dims.erase(d);
      else
        ++d;
    }
    for (const auto& [k, m] : hc.diff)
      if (m.rows() != hc.dim(k + 1) || m.cols() != hc.dim(k))
        fail_validation("invalid-dg-data", "differential shape mismatch");
    if (hc.dims.empty())
      it = homs_.erase(it);
    else
      ++it;
  }
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    auto it = units_.find(x);
    if (it == units_.end())
      fail_validation("invalid-dg-data",
                      "missing unit for object " + objects_[x]);
    if (it->second.size() != hom(x, x).dim(0))
      fail_validation("invalid-dg-data", "unit size mismatch");
  }
  for (const auto& [key, t] : comp_) {
    auto [x, y, z, gdeg, fdeg] = key;
    if (x >= objects_.size() || y >= objects_.size() || z >= objects_.size())
      fail_validation("invalid-dg-data", "composition references unknown object");
    const std::size_t gb = hom(y, z).dim(gdeg);
    const std::size_t fb = hom(x, y).dim(fdeg);
    const std::size_t ob = hom(x, z).dim(gdeg + fdeg);
    if (t.size() != gb)
      fail_validation("invalid-dg-data", "composition tensor g-extent");
    for (const auto& row : t) {
      if (row.size() != fb)
        fail_validation("invalid-dg-data", "composition tensor f-extent");
      for (const auto& vec : row)
        if (vec.size() != ob)
          fail_validation("invalid-dg-data", "composition tensor out-extent");
    }
  }
}

const HomComplex& FiniteDgCategory::hom(std::size_t x, std::size_t y) const {
  auto it = homs_.find({x, y});
  return it == homs_.end() ? empty_ : it->second;
}

const std::vector<mpq_class>& FiniteDgCategory::unit(std::size_t x) const {
  return units_.at(x);
}

const CompTensor* FiniteDgCategory::tensor(const CompKey& key) const {
  auto it = comp_.find(key);
  return it == comp_.end() ? nullptr : &it->second;
}

std::vector<mpq_class> FiniteDgCategory::compose(
    std::size_t x, std::size_t y, std::size_t z, int gdeg,
    const std::vector<mpq_class>& g, int fdeg,
    const std::vector<mpq_class>& f) const {
  const std::size_t out_dim = hom(x, z).dim(gdeg + fdeg);
  std::vector<mpq_class> out(out_dim, 0);
  // An absent tensor means the composition vanishes on that degree pair.
  const CompTensor* t = tensor({x, y, z, gdeg, fdeg});
  if (t == nullptr) return out;
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (coeffs_.is_zero(g[b])) continue;
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (coeffs_.is_zero(f[a])) continue;
      mpq_class c = coeffs_.mul(g[b], f[a]);
      const auto& vec = (*t)[b][a];
      for (std::size_t l = 0; l < out_dim; ++l)
        if (vec[l] != 0) out[l] = coeffs_.add(out[l], coeffs_.mul(c, vec[l]));
    }
  }
  return out;
}

namespace {

std::vector<mpq_class> basis_vector(std::size_t dim, std::size_t idx) {
  std::vector<mpq_class> v(dim, 0);
  v[idx] = 1;
  return v;
}

std::vector<mpq_class> apply_mat(const Coeffs& k, const Mat& m,
                                 const std::vector<mpq_class>& v) {
  std::vector<mpq_class> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) acc += m.at(i, j) * v[j];
    out[i] = k.reduce(acc);
  }
  return out;
}

bool vec_is_zero(const Coeffs& k, const std::vector<mpq_class>& v) {
  for (const auto& e : v)
    if (!k.is_zero(e)) return false;
  return true;
}

std::vector<mpq_class> vec_sub(const Coeffs& k, const std::vector<mpq_class>& a,
                               const std::vector<mpq_class>& b) {
  std::vector<mpq_class> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.sub(a[i], b[i]);
  return out;
}

}  // namespace

void FiniteDgCategory::validate() const {
  const std::size_t n = objects_.size();
  // d(d(f)) = 0
  for (const auto& [key, hc] : homs_)
    for (const auto& [k, m] : hc.diff) {
      Mat dd = hc.diff_at(k + 1) * m;
      for (std::size_t i = 0; i < dd.rows(); ++i)
        for (std::size_t j = 0; j < dd.cols(); ++j)
          if (!coeffs_.is_zero(dd.at(i, j)))
            fail_validation("invalid-dg-data", "d*d != 0 on a hom complex");
    }
  // Unit axioms and d(unit) = 0.
  for (std::size_t x = 0; x < n; ++x) {
    const auto& u = unit(x);
    const HomComplex& end_hom = hom(x, x);
    if (end_hom.dim(0) > 0) {
      auto du = apply_mat(coeffs_, end_hom.diff_at(0), u);
      if (!vec_is_zero(coeffs_, du))
        fail_validation("invalid-dg-data", "unit is not a cycle");
    } else if (!u.empty()) {
      fail_validation("invalid-dg-data", "unit in a zero hom");
    }
    for (std::size_t y = 0; y < n; ++y) {
      const HomComplex& xy = hom(x, y);
      for (const auto& [k, dim] : xy.dims)
        for (std::size_t a = 0; a < dim; ++a) {
          auto f = basis_vector(dim, a);
          auto left = compose(x, x, y, k, f, 0, u);   // f o id_x
          if (left != f)
            fail_validation("invalid-dg-data", "right unit law fails");
          const auto& uy = unit(y);
          auto right = compose(x, y, y, 0, uy, k, f);  // id_y o f
          if (right != f)
            fail_validation("invalid-dg-data", "left unit law fails");
        }
    }
  }
  // Leibniz: d(g o f) = dg o f + (-1)^{deg g} g o df, on basis pairs.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const HomComplex& xy = hom(x, y);
        const HomComplex& yz = hom(y, z);
        const HomComplex& xz = hom(x, z);
        for (const auto& [i, fdim] : xy.dims)
          for (const auto& [j, gdim] : yz.dims)
            for (std::size_t a = 0; a < fdim; ++a)
              for (std::size_t b = 0; b < gdim; ++b) {
                auto f = basis_vector(fdim, a);
                auto g = basis_vector(gdim, b);
                auto gf = compose(x, y, z, j, g, i, f);
                auto d_gf = apply_mat(coeffs_, xz.diff_at(i + j), gf);
                auto dg = apply_mat(coeffs_, yz.diff_at(j), g);
                auto df = apply_mat(coeffs_, xy.diff_at(i), f);
                auto dg_f = compose(x, y, z, j + 1, dg, i, f);
                auto g_df = compose(x, y, z, j, g, i + 1, df);
                std::vector<mpq_class> rhs(d_gf.size(), 0);
                for (std::size_t l = 0; l < rhs.size(); ++l) {
                  mpq_class sgn = (j % 2 == 0) ? g_df[l] : -g_df[l];
                  rhs[l] = coeffs_.add(dg_f[l], sgn);
                }
                if (vec_sub(coeffs_, d_gf, rhs) !=
                    std::vector<mpq_class>(d_gf.size(), 0))
                  fail_validation("invalid-dg-data", "Leibniz rule fails");
              }
      }
  // Associativity on basis triples.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const HomComplex& xy = hom(x, y);
          const HomComplex& yz = hom(y, z);
          const HomComplex& zw = hom(z, w);
          for (const auto& [i, fdim] : xy.dims)
            for (const auto& [j, gdim] : yz.dims)
              for (const auto& [l, hdim] : zw.dims)
                for (std::size_t a = 0; a < fdim; ++a)
                  for (std::size_t b = 0; b < gdim; ++b)
                    for (std::size_t c = 0; c < hdim; ++c) {
                      auto f = basis_vector(fdim, a);
                      auto g = basis_vector(gdim, b);
                      auto h = basis_vector(hdim, c);
                      auto gf = compose(x, y, z, j, g, i, f);
                      auto h_gf = compose(x, z, w, l, h, i + j, gf);
                      auto hg = compose(y, z, w, l, h, j, g);
                      auto hg_f = compose(x, y, w, l + j, hg, i, f);
                      if (h_gf != hg_f)
                        fail_validation("invalid-dg-data",
                                        "composition is not associative");
                    }
        }
}

std::size_t DgFunctor::iterate_object(std::size_t x, std::size_t times) const {
  std::size_t y = x;
  for (std::size_t i = 0; i < times; ++i) y = object_map.at(y);
  return y;
}

Mat DgFunctor::map_at(const FiniteDgCategory& a, std::size_t x, std::size_t y,
                      int k) const {
  const std::size_t src = a.hom(x, y).dim(k);
  const std::size_t dst = a.hom(on_object(x), on_object(y)).dim(k);
  auto pit = hom_maps.find({x, y});
  if (pit != hom_maps.end()) {
    auto mit = pit->second.find(k);
    if (mit != pit->second.end()) return mit->second;
  }
  return Mat(dst, src);
}

std::vector<mpq_class> DgFunctor::apply(const FiniteDgCategory& a, std::size_t x,
                                        std::size_t y, int k,
                                        const std::vector<mpq_class>& v) const {
  return apply_mat(a.coeffs(), map_at(a, x, y, k), v);
}

std::vector<mpq_class> DgFunctor::apply_iterated(const FiniteDgCategory& a,
                                                 std::size_t x, std::size_t y,
                                                 int k,
                                                 const std::vector<mpq_class>& v,
                                                 std::size_t times) const {
  std::vector<mpq_class> out = v;
  std::size_t cx = x, cy = y;
  for (std::size_t i = 0; i < times; ++i) {
    out = apply(a, cx, cy, k, out);
    cx = on_object(cx);
    cy = on_object(cy);
  }
  return out;
}

DgFunctor DgFunctor::identity(const FiniteDgCategory& a) {
  DgFunctor f;
  f.object_map.resize(a.object_count());
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    f.object_map[x] = x;
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      const HomComplex& h = a.hom(x, y);
      for (const auto& [k, dim] : h.dims)
        f.hom_maps[{x, y}][k] = Mat::identity(dim);
    }
  }
  return f;
}

void validate_functor(const FiniteDgCategory& a, const DgFunctor& f) {
  const std::size_t n = a.object_count();
  if (f.object_map.size() != n)
    fail_validation("invalid-dg-data", "functor object map size mismatch");
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (f.object_map[x] >= n)
      fail_validation("invalid-dg-data", "functor object map out of range");
    hit[f.object_map[x]] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!hit[x])
      fail_validation(
          "invalid-dg-data",
          "functor object map is not a bijection; essential surjectivity "
          "beyond a strict bijection is out of scope at this scale");
  const Coeffs& k = a.coeffs();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const HomComplex& src = a.hom(x, y);
      const HomComplex& dst = a.hom(f.on_object(x), f.on_object(y));
      for (const auto& [deg, dim] : src.dims) {
        Mat m = f.map_at(a, x, y, deg);
        if (m.rows() != dst.dim(deg) || m.cols() != dim)
          fail_validation("invalid-dg-data", "functor hom map shape mismatch");
        // chain map: F(df) = d(Ff)
        Mat lhs = f.map_at(a, x, y, deg + 1) * src.diff_at(deg);
        Mat rhs = dst.diff_at(deg) * m;
        for (std::size_t i = 0; i < lhs.rows(); ++i)
          for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (!k.is_zero(k.sub(lhs.at(i, j), rhs.at(i, j))))
              fail_validation("invalid-dg-data",
                              "functor hom map does not commute with d");
      }
    }
  for (std::size_t x = 0; x < n; ++x) {
    auto fu = f.apply(a, x, x, 0, a.unit(x));
    if (fu != a.unit(f.on_object(x)))
      fail_validation("invalid-dg-data", "functor does not preserve units");
  }
  // F(g o f) = F(g) o F(f) on basis pairs.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const HomComplex& xy = a.hom(x, y);
        const HomComplex& yz = a.hom(y, z);
        for (const auto& [i, fdim] : xy.dims)
          for (const auto& [j, gdim] : yz.dims)
            for (std::size_t p = 0; p < fdim; ++p)
              for (std::size_t q = 0; q < gdim; ++q) {
                auto fv = basis_vector(fdim, p);
                auto gv = basis_vector(gdim, q);
                auto gf = a.compose(x, y, z, j, gv, i, fv);
                auto lhs = f.apply(a, x, z, i + j, gf);
                auto rhs = a.compose(f.on_object(x), f.on_object(y),
                                     f.on_object(z), j, f.apply(a, y, z, j, gv),
                                     i, f.apply(a, x, y, i, fv));
                if (lhs != rhs)
                  fail_validation("invalid-dg-data", "functor is not functorial");
              }
      }
}

void check_h0_equivalence(const FiniteDgCategory& a, const DgFunctor& f) {
  const Coeffs& k = a.coeffs();
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      const HomComplex& src = a.hom(x, y);
      const HomComplex& dst = a.hom(f.on_object(x), f.on_object(y));
      auto hs = field::cohomology(src.diff_at(-1), src.diff_at(0), src.dim(0), k);
      auto hd = field::cohomology(dst.diff_at(-1), dst.diff_at(0), dst.dim(0), k);
      if (!field::induces_iso(hs, hd, f.map_at(a, x, y, 0), k))
        fail_validation("invalid-dg-data",
                        "functor does not induce an equivalence on H^0");
    }
}

H0Category h0_category(const FiniteDgCategory& a) {
  const Coeffs& k = a.coeffs();
  H0Category out;
  out.objects = a.objects();
  const std::size_t n = a.object_count();
  // Representatives: cocycle columns extending the coboundary span.
  std::map<PairKey, Mat> reps;
  std::map<PairKey, Mat> bounds;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const HomComplex& h = a.hom(x, y);
      auto coh = field::cohomology(h.diff_at(-1), h.diff_at(0), h.dim(0), k);
      Mat chosen(h.dim(0), coh.dim);
      std::size_t picked = 0;
      Mat span = coh.coboundaries;
      for (std::size_t c = 0; c < coh.cocycles.cols() && picked < coh.dim; ++c) {
        std::vector<mpq_class> v(h.dim(0));
        for (std::size_t i = 0; i < h.dim(0); ++i) v[i] = coh.cocycles.at(i, c);
        if (field::in_column_span(span, v, k)) continue;
        Mat grown(h.dim(0), span.cols() + 1);
        for (std::size_t i = 0; i < h.dim(0); ++i) {
          for (std::size_t j = 0; j < span.cols(); ++j)
            grown.at(i, j) = span.at(i, j);
          grown.at(i, span.cols()) = v[i];
        }
        span = std::move(grown);
        for (std::size_t i = 0; i < h.dim(0); ++i) chosen.at(i, picked) = v[i];
        ++picked;
      }
      out.dims[{x, y}] = coh.dim;
      reps[{x, y}] = std::move(chosen);
      bounds[{x, y}] = std::move(coh.coboundaries);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t fd = out.dims[{x, y}];
        std::size_t gd = out.dims[{y, z}];
        std::size_t od = out.dims[{x, z}];
        if (fd == 0 || gd == 0) continue;
        CompTensor t(gd, std::vector<std::vector<mpq_class>>(
                             fd, std::vector<mpq_class>(od, 0)));
        const Mat& fr = reps[{x, y}];
        const Mat& gr = reps[{y, z}];
        const Mat& orp = reps[{x, z}];
        const Mat& ob = bounds[{x, z}];
        for (std::size_t b = 0; b < gd; ++b)
          for (std::size_t a2 = 0; a2 < fd; ++a2) {
            std::vector<mpq_class> fv(fr.rows()), gv(gr.rows());
            for (std::size_t i = 0; i < fr.rows(); ++i) fv[i] = fr.at(i, a2);
            for (std::size_t i = 0; i < gr.rows(); ++i) gv[i] = gr.at(i, b);
            auto prod = a.compose(x, y, z, 0, gv, 0, fv);
            // Express the class of the product over the chosen representatives
            // modulo coboundaries.
            Mat sys(orp.rows(), od + ob.cols());
            for (std::size_t i = 0; i < orp.rows(); ++i) {
              for (std::size_t j = 0; j < od; ++j) sys.at(i, j) = orp.at(i, j);
              for (std::size_t j = 0; j < ob.cols(); ++j)
                sys.at(i, od + j) = ob.at(i, j);
            }
            auto sol = field::solve(sys, prod, k);
            if (!sol)
              fail_internal("H^0 composition fell outside the cocycle span");
            for (std::size_t l = 0; l < od; ++l) t[b][a2][l] = (*sol)[l];
          }
        if (od > 0) out.comp[{x, y, z}] = std::move(t);
      }
  return out;
}

FiniteDgCategory square_zero(const FiniteDgCategory& a, const DgFunctor& f) {
  validate_functor(a, f);
  const Coeffs& k = a.coeffs();
  const std::size_t n = a.object_count();
  // hom(x,y)^k = A(x,y)^k (+) A(x,Fy)^{k+1}; basis: A-part first.
  std::map<PairKey, HomComplex> homs;
  auto part_dims = [&](std::size_t x, std::size_t y, int deg) {
    return std::pair<std::size_t, std::size_t>{
        a.hom(x, y).dim(deg), a.hom(x, f.on_object(y)).dim(deg + 1)};
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const HomComplex& base = a.hom(x, y);
      const HomComplex& tw = a.hom(x, f.on_object(y));
      HomComplex h;
      std::set<int> degs;
      for (const auto& [d, dim] : base.dims) degs.insert(d);
      for (const auto& [d, dim] : tw.dims) degs.insert(d - 1);
      for (int d : degs) {
        auto [da, db] = part_dims(x, y, d);
        if (da + db > 0) h.dims[d] = da + db;
      }
      for (int d : degs) {
        auto [da, db] = part_dims(x, y, d);
        auto [ea, eb] = part_dims(x, y, d + 1);
        if (da + db == 0 || ea + eb == 0) continue;
        Mat m(ea + eb, da + db);
        Mat ma = base.diff_at(d);
        for (std::size_t i = 0; i < ea; ++i)
          for (std::size_t j = 0; j < da; ++j) m.at(i, j) = ma.at(i, j);
        Mat mb = tw.diff_at(d + 1);
        for (std::size_t i = 0; i < eb; ++i)
          for (std::size_t j = 0; j < db; ++j)
            m.at(ea + i, da + j) = k.neg(mb.at(i, j));  // shifted differential
        h.diff[d] = std::move(m);
      }
      if (!h.dims.empty()) homs[{x, y}] = std::move(h);
    }

  std::map<CompKey, CompTensor> comp;
  auto ensure = [&](const CompKey& key, std::size_t gb, std::size_t fb,
                    std::size_t ob) -> CompTensor& {
    auto it = comp.find(key);
    if (it == comp.end())
      it = comp
               .emplace(key, CompTensor(gb, std::vector<std::vector<mpq_class>>(
                                                fb, std::vector<mpq_class>(ob, 0))))
               .first;
    return it->second;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto hxy = homs.find({x, y});
        auto hyz = homs.find({y, z});
        auto hxz = homs.find({x, z});
        if (hxy == homs.end() || hyz == homs.end() || hxz == homs.end())
          continue;
        for (const auto& [i, fdim] : hxy->second.dims)
          for (const auto& [j, gdim] : hyz->second.dims) {
            auto [fa, fb] = part_dims(x, y, i);
            auto [ga, gb] = part_dims(y, z, j);
            auto [oa, ob] = part_dims(x, z, i + j);
            if (oa + ob == 0) continue;
            CompTensor& t =
                ensure({x, y, z, j, i}, ga + gb, fa + fb, oa + ob);
            // A o A -> A-part
            for (std::size_t q = 0; q < ga; ++q)
              for (std::size_t p = 0; p < fa; ++p) {
                auto prod = a.compose(x, y, z, j, basis_vector(ga, q), i,
                                      basis_vector(fa, p));
                for (std::size_t l = 0; l < oa; ++l) t[q][p][l] = prod[l];
              }
            // B o A -> B-part: g1 in A(y,Fz)^{j+1} composed with f0.
            for (std::size_t q = 0; q < gb; ++q)
              for (std::size_t p = 0; p < fa; ++p) {
                auto prod = a.compose(x, y, f.on_object(z), j + 1,
                                      basis_vector(gb, q), i, basis_vector(fa, p));
                for (std::size_t l = 0; l < ob; ++l) t[ga + q][p][oa + l] = prod[l];
              }
            // A o B -> B-part: (-1)^{deg g} F(g0) o f1.
            for (std::size_t q = 0; q < ga; ++q)
              for (std::size_t p = 0; p < fb; ++p) {
                auto fg = f.apply(a, y, z, j, basis_vector(ga, q));
                auto prod = a.compose(x, f.on_object(y), f.on_object(z), j, fg,
                                      i + 1, basis_vector(fb, p));
                mpq_class sgn = (j % 2 == 0) ? 1 : -1;
                for (std::size_t l = 0; l < ob; ++l)
                  t[q][fa + p][oa + l] = k.reduce(sgn * prod[l]);
              }
            // B o B -> 0 by the square-zero law.
          }
      }

  std::map<std::size_t, std::vector<mpq_class>> units;
  for (std::size_t x = 0; x < n; ++x) {
    auto [da, db] = part_dims(x, x, 0);
    std::vector<mpq_class> u(da + db, 0);
    const auto& base_unit = a.unit(x);
    for (std::size_t i = 0; i < da; ++i) u[i] = base_unit[i];
    units[x] = std::move(u);
  }

  FiniteDgCategory out(k, a.objects(), std::move(homs), std::move(comp),
                       std::move(units));
  out.validate();
  return out;
}

}  // namespace orbitk::dg
