#include "orbitk/orbitk.h"

#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "cluster.hpp"
#include "dgorbit.hpp"
#include "error.hpp"
#include "jsonio.hpp"
#include "mukai.hpp"
#include "snf.hpp"

using orbitk::Error;
using orbitk::ErrorKind;
using orbitk::abgroup::FgAbGroup;
using orbitk::exactla::IntMatrix;
using nlohmann::json;

struct orbitk_matrix {
  IntMatrix m;
};
struct orbitk_group {
  FgAbGroup g;
};
struct orbitk_quiver {
  orbitk::quiver::Quiver q;
};

struct orbitk_warning {
  std::string code;
  std::string message;
};

struct orbitk_result {
  std::string text;
  std::string json_text;
  std::vector<orbitk_warning> warnings;
};

namespace {

thread_local std::string g_last_message;
thread_local std::string g_last_code;

orbitk_status set_error(orbitk_status st, const std::string& code,
                        const std::string& message) {
  g_last_code = code;
  g_last_message = message;
  return st;
}

template <typename Fn>
orbitk_status guarded(Fn&& fn) {
  try {
    fn();
    return ORBITK_OK;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::Parse:
        return set_error(ORBITK_ERROR_PARSE, e.code(), e.what());
      case ErrorKind::Validation:
        return set_error(ORBITK_ERROR_VALIDATION, e.code(), e.what());
      case ErrorKind::Internal:
        return set_error(ORBITK_ERROR_INTERNAL, e.code(), e.what());
    }
    return set_error(ORBITK_ERROR_INTERNAL, "internal", e.what());
  } catch (const std::exception& e) {
    return set_error(ORBITK_ERROR_INTERNAL, "internal", e.what());
  }
}

orbitk_status need(bool ok, const char* what) {
  if (ok) return ORBITK_OK;
  return set_error(ORBITK_ERROR_ARGUMENT, "argument", what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

orbitk_result* make_result(std::string text, const json& results,
                           std::vector<orbitk_warning> warnings) {
  auto* r = new orbitk_result;
  r->text = std::move(text);
  r->json_text = results.dump();
  r->warnings = std::move(warnings);
  return r;
}

json degree_results_json(const std::vector<orbitk::orbit::OrbitDegreeResult>& rs,
                         bool field_coefficients) {
  json arr = json::array();
  for (const auto& r : rs) {
    json e;
    e["degree"] = r.degree;
    if (field_coefficients) {
      e["coker_dim"] = r.coker_piece.rank();
      e["ker_dim"] = r.ker_piece.rank();
      e["total_dim"] = r.resolved ? json(r.resolved->rank()) : json();
    } else {
      e["coker"] = r.coker_piece.render();
      e["ker"] = r.ker_piece.render();
      e["resolved"] = r.resolved ? json(r.resolved->render()) : json();
    }
    e["ambiguous"] = r.ambiguous;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string degree_results_text(
    const std::vector<orbitk::orbit::OrbitDegreeResult>& rs,
    bool field_coefficients) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << "degree " << r.degree << ": ";
    if (field_coefficients) {
      os << "coker dim " << r.coker_piece.rank() << ", ker dim "
         << r.ker_piece.rank();
      if (r.resolved) os << ", total dim " << r.resolved->rank();
    } else {
      os << "coker " << r.coker_piece.render() << ", ker "
         << r.ker_piece.render();
      if (r.resolved)
        os << ", resolved " << r.resolved->render();
      else
        os << ", extension ambiguous";
    }
    os << "\n";
  }
  return os.str();
}

const orbitk_warning kRegularityWarning{
    "regularity-hypothesis",
    "degree-zero identification assumes KH agrees with algebraic K-theory "
    "(regular case)"};

}  // namespace

extern "C" {

const char* orbitk_version(void) { return "0.1.0"; }

const char* orbitk_last_error_message(void) { return g_last_message.c_str(); }

const char* orbitk_last_error_code(void) { return g_last_code.c_str(); }

void orbitk_string_free(char* s) { delete[] s; }

/* ---- matrices ---- */

orbitk_status orbitk_matrix_new(size_t rows, size_t cols,
                                const char* const* entries_row_major,
                                orbitk_matrix** out) {
  if (auto st = need(out && (entries_row_major || rows * cols == 0),
                     "matrix_new: null argument"))
    return st;
  return guarded([&] {
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows * cols; ++i) {
      const char* e = entries_row_major[i];
      if (e == nullptr)
        orbitk::fail_parse("integer", "null entry in matrix data");
      try {
        m.at(i / cols, i % cols) = mpz_class(e);
      } catch (const std::invalid_argument&) {
        orbitk::fail_parse("integer", std::string("bad integer '") + e + "'");
      }
    }
    *out = new orbitk_matrix{std::move(m)};
  });
}

orbitk_status orbitk_matrix_parse(const char* text, orbitk_matrix** out) {
  if (auto st = need(out && text, "matrix_parse: null argument")) return st;
  return guarded([&] {
    *out = new orbitk_matrix{
        orbitk::jsonio::matrix_from_json(orbitk::jsonio::parse(text))};
  });
}

orbitk_status orbitk_matrix_dims(const orbitk_matrix* m, size_t* rows,
                                 size_t* cols) {
  if (auto st = need(m && rows && cols, "matrix_dims: null argument")) return st;
  *rows = m->m.rows();
  *cols = m->m.cols();
  return ORBITK_OK;
}

orbitk_status orbitk_matrix_entry(const orbitk_matrix* m, size_t row, size_t col,
                                  char** out) {
  if (auto st = need(m && out, "matrix_entry: null argument")) return st;
  if (auto st = need(row < m->m.rows() && col < m->m.cols(),
                     "matrix_entry: index out of range"))
    return st;
  *out = dup_string(m->m.at(row, col).get_str());
  return ORBITK_OK;
}

orbitk_status orbitk_matrix_to_json(const orbitk_matrix* m, char** out) {
  if (auto st = need(m && out, "matrix_to_json: null argument")) return st;
  return guarded(
      [&] { *out = dup_string(orbitk::jsonio::matrix_to_json(m->m).dump()); });
}

orbitk_status orbitk_matrix_mul(const orbitk_matrix* a, const orbitk_matrix* b,
                                orbitk_matrix** out) {
  if (auto st = need(a && b && out, "matrix_mul: null argument")) return st;
  return guarded([&] { *out = new orbitk_matrix{a->m * b->m}; });
}

orbitk_status orbitk_matrix_transpose(const orbitk_matrix* m,
                                      orbitk_matrix** out) {
  if (auto st = need(m && out, "matrix_transpose: null argument")) return st;
  return guarded([&] { *out = new orbitk_matrix{m->m.transposed()}; });
}

orbitk_status orbitk_matrix_equal(const orbitk_matrix* a, const orbitk_matrix* b,
                                  int* out) {
  if (auto st = need(a && b && out, "matrix_equal: null argument")) return st;
  *out = (a->m == b->m) ? 1 : 0;
  return ORBITK_OK;
}

orbitk_status orbitk_matrix_det(const orbitk_matrix* m, char** out) {
  if (auto st = need(m && out, "matrix_det: null argument")) return st;
  return guarded([&] { *out = dup_string(m->m.det().get_str()); });
}

void orbitk_matrix_free(orbitk_matrix* m) { delete m; }

orbitk_status orbitk_snf(const orbitk_matrix* a, orbitk_matrix** u,
                         orbitk_matrix** d, orbitk_matrix** v) {
  if (auto st = need(a && u && d && v, "snf: null argument")) return st;
  return guarded([&] {
    auto s = orbitk::exactla::snf(a->m);
    *u = new orbitk_matrix{std::move(s.u)};
    *d = new orbitk_matrix{std::move(s.d)};
    *v = new orbitk_matrix{std::move(s.v)};
  });
}

orbitk_status orbitk_matrix_rank(const orbitk_matrix* a, size_t* out) {
  if (auto st = need(a && out, "matrix_rank: null argument")) return st;
  return guarded([&] { *out = orbitk::exactla::rank(a->m); });
}

orbitk_status orbitk_kernel_basis(const orbitk_matrix* a, orbitk_matrix** out) {
  if (auto st = need(a && out, "kernel_basis: null argument")) return st;
  return guarded(
      [&] { *out = new orbitk_matrix{orbitk::exactla::kernel_basis(a->m)}; });
}

orbitk_status orbitk_cokernel(const orbitk_matrix* a, orbitk_group** out) {
  if (auto st = need(a && out, "cokernel: null argument")) return st;
  return guarded([&] {
    *out = new orbitk_group{orbitk::exactla::cokernel_presentation(a->m)};
  });
}

/* ---- groups ---- */

orbitk_status orbitk_group_parse(const char* text, orbitk_group** out) {
  if (auto st = need(text && out, "group_parse: null argument")) return st;
  return guarded([&] { *out = new orbitk_group{FgAbGroup::parse(text)}; });
}

orbitk_status orbitk_group_render(const orbitk_group* g, char** out) {
  if (auto st = need(g && out, "group_render: null argument")) return st;
  *out = dup_string(g->g.render());
  return ORBITK_OK;
}

orbitk_status orbitk_group_rank(const orbitk_group* g, size_t* out) {
  if (auto st = need(g && out, "group_rank: null argument")) return st;
  *out = g->g.rank();
  return ORBITK_OK;
}

orbitk_status orbitk_group_torsion_count(const orbitk_group* g, size_t* out) {
  if (auto st = need(g && out, "group_torsion_count: null argument")) return st;
  *out = g->g.invariant_factors().size();
  return ORBITK_OK;
}

orbitk_status orbitk_group_torsion_factor(const orbitk_group* g, size_t index,
                                          char** out) {
  if (auto st = need(g && out, "group_torsion_factor: null argument")) return st;
  if (auto st = need(index < g->g.invariant_factors().size(),
                     "group_torsion_factor: index out of range"))
    return st;
  *out = dup_string(g->g.invariant_factors()[index].get_str());
  return ORBITK_OK;
}

orbitk_status orbitk_group_direct_sum(const orbitk_group* a,
                                      const orbitk_group* b, orbitk_group** out) {
  if (auto st = need(a && b && out, "group_direct_sum: null argument")) return st;
  return guarded(
      [&] { *out = new orbitk_group{orbitk::abgroup::direct_sum(a->g, b->g)}; });
}

orbitk_status orbitk_group_equal(const orbitk_group* a, const orbitk_group* b,
                                 int* out) {
  if (auto st = need(a && b && out, "group_equal: null argument")) return st;
  *out = (a->g == b->g) ? 1 : 0;
  return ORBITK_OK;
}

void orbitk_group_free(orbitk_group* g) { delete g; }

/* ---- quivers ---- */

orbitk_status orbitk_quiver_preset(const char* name, orbitk_quiver** out) {
  if (auto st = need(name && out, "quiver_preset: null argument")) return st;
  return guarded(
      [&] { *out = new orbitk_quiver{orbitk::quiver::Quiver::preset(name)}; });
}

orbitk_status orbitk_quiver_parse(const char* text, orbitk_quiver** out) {
  if (auto st = need(text && out, "quiver_parse: null argument")) return st;
  return guarded([&] {
    *out = new orbitk_quiver{
        orbitk::jsonio::quiver_from_json(orbitk::jsonio::parse(text))};
  });
}

orbitk_status orbitk_quiver_vertex_count(const orbitk_quiver* q, size_t* out) {
  if (auto st = need(q && out, "quiver_vertex_count: null argument")) return st;
  *out = q->q.vertex_count();
  return ORBITK_OK;
}

orbitk_status orbitk_quiver_cartan(const orbitk_quiver* q, orbitk_matrix** out) {
  if (auto st = need(q && out, "quiver_cartan: null argument")) return st;
  return guarded(
      [&] { *out = new orbitk_matrix{orbitk::quiver::cartan_matrix(q->q)}; });
}

orbitk_status orbitk_quiver_coxeter(const orbitk_quiver* q, orbitk_matrix** out) {
  if (auto st = need(q && out, "quiver_coxeter: null argument")) return st;
  return guarded(
      [&] { *out = new orbitk_matrix{orbitk::quiver::coxeter_matrix(q->q)}; });
}

orbitk_status orbitk_quiver_euler_form(const orbitk_quiver* q,
                                       orbitk_matrix** out) {
  if (auto st = need(q && out, "quiver_euler_form: null argument")) return st;
  return guarded(
      [&] { *out = new orbitk_matrix{orbitk::quiver::euler_form(q->q)}; });
}

void orbitk_quiver_free(orbitk_quiver* q) { delete q; }

/* ---- computations ---- */

orbitk_status orbitk_kleinian(unsigned long s, orbitk_result** out) {
  if (auto st = need(out != nullptr, "kleinian: null argument")) return st;
  return guarded([&] {
    FgAbGroup g = orbitk::cluster::kleinian_k0(s);
    IntMatrix m = orbitk::cluster::kleinian_matrix(s);
    json results{{"s", s},
                 {"group", g.render()},
                 {"matrix", orbitk::jsonio::matrix_to_json(m)}};
    std::ostringstream text;
    text << g.render() << "\n"
         << "presentation matrix (both routes agree):\n"
         << m.to_string() << "\n";
    *out = make_result(text.str(), results, {kRegularityWarning});
  });
}

orbitk_status orbitk_cluster_k0(const orbitk_quiver* q, long n,
                                orbitk_result** out) {
  if (auto st = need(q && out, "cluster_k0: null argument")) return st;
  return guarded([&] {
    auto res = orbitk::cluster::cluster_k0(q->q, n);
    json results{{"n", n},
                 {"group", res.group.render()},
                 {"matrix", orbitk::jsonio::matrix_to_json(res.matrix_used)},
                 {"quiver", orbitk::jsonio::quiver_to_json(q->q)}};
    std::ostringstream text;
    text << res.group.render() << "\n"
         << "matrix used ((-1)^n C - Id):\n"
         << res.matrix_used.to_string() << "\n";
    std::vector<orbitk_warning> warnings;
    if (res.dynkin_caveat)
      warnings.push_back(
          {"cluster-n0-caveat",
           "n = 0 on a non-Dynkin quiver: the orbit category may not be "
           "triangulated; the cokernel is still well-defined as a group"});
    *out = make_result(text.str(), results, std::move(warnings));
  });
}

orbitk_status orbitk_cluster_triangle(const orbitk_quiver* q, long n,
                                      const char* ek_spec_json,
                                      orbitk_result** out) {
  if (auto st = need(q && ek_spec_json && out, "cluster_triangle: null argument"))
    return st;
  return guarded([&] {
    auto ek = orbitk::jsonio::invariant_spec_from_json(
        orbitk::jsonio::parse(ek_spec_json));
    auto rs = orbitk::cluster::cluster_triangle(q->q, n, ek);
    bool field = ek.flags().field_coefficients;
    json results{{"n", n},
                 {"degrees", degree_results_json(rs, field)},
                 {"quiver", orbitk::jsonio::quiver_to_json(q->q)}};
    *out = make_result(degree_results_text(rs, field), results, {});
  });
}

orbitk_status orbitk_orbit_triangle(const char* spec_json, orbitk_result** out) {
  if (auto st = need(spec_json && out, "orbit_triangle: null argument")) return st;
  return guarded([&] {
    auto spec =
        orbitk::jsonio::invariant_spec_from_json(orbitk::jsonio::parse(spec_json));
    auto rs = orbitk::orbit::orbit_groups(spec);
    bool field = spec.flags().field_coefficients;
    json results{{"degrees", degree_results_json(rs, field)}};
    *out = make_result(degree_results_text(rs, field), results, {});
  });
}

orbitk_status orbitk_suspension_orbit(const char* spec_json, long n,
                                      orbitk_result** out) {
  if (auto st = need(spec_json && out, "suspension_orbit: null argument"))
    return st;
  return guarded([&] {
    auto spec =
        orbitk::jsonio::invariant_spec_from_json(orbitk::jsonio::parse(spec_json));
    auto rs = orbitk::orbit::suspension_orbit(spec, n);
    bool field = spec.flags().field_coefficients;
    json results{{"n", n}, {"degrees", degree_results_json(rs, field)}};
    *out = make_result(degree_results_text(rs, field), results, {});
  });
}

orbitk_status orbitk_hp_sixterm(const char* f_even_json, const char* f_odd_json,
                                orbitk_result** out) {
  if (auto st =
          need(f_even_json && f_odd_json && out, "hp_sixterm: null argument"))
    return st;
  return guarded([&] {
    auto fe = orbitk::jsonio::rational_matrix_from_json(
        orbitk::jsonio::parse(f_even_json));
    auto fo = orbitk::jsonio::rational_matrix_from_json(
        orbitk::jsonio::parse(f_odd_json));
    auto [plus, minus] = orbitk::orbit::hp_sixterm(fe.rows(), fo.rows(), fe, fo);
    json results{{"even_dim", fe.rows()},
                 {"odd_dim", fo.rows()},
                 {"hp_plus", plus},
                 {"hp_minus", minus}};
    std::ostringstream text;
    text << "dim HP^+(orbit) = " << plus << "\n"
         << "dim HP^-(orbit) = " << minus << "\n";
    *out = make_result(text.str(), results, {});
  });
}

orbitk_status orbitk_hp_line_bundle(const char* model_json, long n,
                                    orbitk_result** out) {
  if (auto st = need(model_json && out, "hp_line_bundle: null argument"))
    return st;
  return guarded([&] {
    auto model = orbitk::jsonio::cohomology_model_from_json(
        orbitk::jsonio::parse(model_json));
    auto [even, odd] = orbitk::mukai::line_bundle_hp_map(model, n);
    auto [plus, minus] = orbitk::mukai::sixterm_dims_from_maps(even, odd);
    json results{{"n", n},
                 {"even_map", orbitk::jsonio::rational_matrix_to_json(even)},
                 {"odd_map", orbitk::jsonio::rational_matrix_to_json(odd)},
                 {"hp_plus", plus},
                 {"hp_minus", minus}};
    std::ostringstream text;
    text << "dim HP^+(orbit) = " << plus << "\n"
         << "dim HP^-(orbit) = " << minus << "\n"
         << "even map:\n"
         << even.to_string() << "\nodd map:\n"
         << odd.to_string() << "\n";
    *out = make_result(text.str(), results, {});
  });
}

orbitk_status orbitk_spherical_hp(const char* model_json, orbitk_result** out) {
  if (auto st = need(model_json && out, "spherical_hp: null argument")) return st;
  return guarded([&] {
    auto model = orbitk::jsonio::cohomology_model_from_json(
        orbitk::jsonio::parse(model_json));
    auto projection = orbitk::mukai::spherical_projection(model);
    auto [even, odd] = orbitk::mukai::spherical_hp_maps(model);
    auto [plus, minus] = orbitk::mukai::sixterm_dims_from_maps(even, odd);
    json results{
        {"projection", orbitk::jsonio::rational_matrix_to_json(projection)},
        {"hp_plus", plus},
        {"hp_minus", minus}};
    std::ostringstream text;
    text << "dim HP^+(orbit) = " << plus << "\n"
         << "dim HP^-(orbit) = " << minus << "\n"
         << "projection:\n"
         << projection.to_string() << "\n";
    *out = make_result(text.str(), results, {});
  });
}

orbitk_status orbitk_spherical_k0(const char* chi_csv, const char* e_csv,
                                  orbitk_result** out) {
  if (auto st = need(chi_csv && e_csv && out, "spherical_k0: null argument"))
    return st;
  return guarded([&] {
    auto chi = orbitk::jsonio::int_vector_from_csv(chi_csv);
    auto e = orbitk::jsonio::int_vector_from_csv(e_csv);
    auto hom = orbitk::mukai::spherical_k0_map(chi, e);
    auto group = orbitk::mukai::spherical_orbit_k0(chi, e);
    json results{{"group", group.render()},
                 {"matrix", orbitk::jsonio::matrix_to_json(hom.matrix())}};
    std::ostringstream text;
    text << group.render() << "\n"
         << "K_0 action of the kernel:\n"
         << hom.matrix().to_string() << "\n";
    *out = make_result(text.str(), results, {kRegularityWarning});
  });
}

orbitk_status orbitk_curve_kh0(const char* pic_text, const char* l_csv, long n,
                               orbitk_result** out) {
  if (auto st = need(pic_text && l_csv && out, "curve_kh0: null argument"))
    return st;
  return guarded([&] {
    orbitk::mukai::CurveK0 c;
    c.pic = FgAbGroup::parse(pic_text);
    c.l_class = orbitk::jsonio::int_vector_from_csv(l_csv);
    auto res = orbitk::mukai::curve_orbit_kh0(c, n);
    json results{{"n", n},
                 {"pic", c.pic.render()},
                 {"computed", res.computed.render()},
                 {"paper_formula", res.paper_formula.render()},
                 {"matches", res.matches},
                 {"matrix", orbitk::jsonio::matrix_to_json(res.matrix_used)}};
    std::ostringstream text;
    text << res.computed.render() << "\n"
         << "product formula would give: " << res.paper_formula.render()
         << "\n";
    std::vector<orbitk_warning> warnings{kRegularityWarning};
    if (!res.matches)
      warnings.push_back(
          {"picard-odd-discrepancy",
           "computed cokernel " + res.computed.render() +
               " differs from the displayed product formula " +
               res.paper_formula.render() +
               "; the displayed splitting is not forced by the sequence"});
    *out = make_result(text.str(), results, std::move(warnings));
  });
}

orbitk_status orbitk_dg_orbit(const char* category_json, const char* functor_json,
                              long weight_bound, long stage_bound,
                              const char* checks, orbitk_result** out) {
  if (auto st = need(category_json && out, "dg_orbit: null argument")) return st;
  return guarded([&] {
    namespace dg = orbitk::dg;
    auto cat = orbitk::jsonio::dg_category_from_json(
        orbitk::jsonio::parse(category_json));
    dg::DgFunctor f = functor_json == nullptr
                          ? dg::DgFunctor::identity(cat)
                          : orbitk::jsonio::dg_functor_from_json(
                                cat, orbitk::jsonio::parse(functor_json));
    std::string cs = checks == nullptr ? "all" : checks;
    auto wants = [&cs](const std::string& name) {
      if (cs == "all") return true;
      std::size_t pos = 0;
      while (pos <= cs.size()) {
        std::size_t comma = cs.find(',', pos);
        std::string item = comma == std::string::npos ? cs.substr(pos)
                                                      : cs.substr(pos, comma - pos);
        if (item == name) return true;
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      return false;
    };

    json results;
    std::ostringstream text;
    results["N"] = weight_bound;
    results["P"] = stage_bound;

    if (wants("validate")) {
      cat.validate();
      dg::validate_functor(cat, f);
      dg::check_h0_equivalence(cat, f);
      results["validate"] = "pass";
      text << "validate: pass\n";
    }
    if (wants("orbit")) {
      auto orb = dg::orbit_n(cat, f, static_cast<int>(weight_bound));
      json pairs = json::object();
      for (std::size_t x = 0; x < cat.object_count(); ++x)
        for (std::size_t y = 0; y < cat.object_count(); ++y) {
          const auto& h = orb.cat.hom(x, y);
          if (h.is_zero()) continue;
          json dims = json::object();
          for (const auto& [deg, dim] : h.dims) dims[std::to_string(deg)] = dim;
          pairs[cat.objects()[x] + "|" + cat.objects()[y]] = std::move(dims);
        }
      orb.cat.validate();
      results["orbit_n"] = {{"dims", std::move(pairs)}, {"revalidated", true}};
      text << "orbit A/F^N built (weights <= " << weight_bound
           << "), invariants revalidated\n";
    }
    if (wants("orbit-z")) {
      auto zr = dg::orbit_z(cat, f, static_cast<int>(weight_bound),
                            static_cast<int>(stage_bound));
      json homs = json::object();
      for (const auto& [key, hr] : zr.homs) {
        json dims = json::object();
        for (const auto& [deg, dim] : hr.final_dims)
          dims[std::to_string(deg)] = dim;
        homs[cat.objects()[key.first] + "|" + cat.objects()[key.second]] = {
            {"dims", std::move(dims)}, {"stabilized", hr.stabilized}};
      }
      results["orbit_z"] = {{"homs", std::move(homs)},
                            {"all_stabilized", zr.all_stabilized}};
      text << "orbit A/F^Z truncation at stage " << stage_bound
           << (zr.all_stabilized ? ": all homs stabilized\n"
                                 : ": not stabilized\n");
    }
    if (wants("epsilon")) {
      auto er = dg::epsilon_quasi_iso_check(
          cat, f, static_cast<int>(weight_bound), static_cast<int>(stage_bound));
      json objs = json::array();
      for (const auto& po : er.objects)
        objs.push_back(json{{"object", cat.objects()[po.object]},
                            {"pass", po.pass},
                            {"detail", po.first_failure}});
      results["epsilon"] = {{"objects", std::move(objs)},
                            {"all_pass", er.all_pass}};
      text << "epsilon quasi-isomorphism check: "
           << (er.all_pass ? "pass" : "FAIL") << "\n";
    }
    if (wants("comparison")) {
      auto cr = dg::comparison_map_check(cat, f, static_cast<int>(weight_bound));
      json pairs = json::array();
      for (const auto& pp : cr.pairs)
        pairs.push_back(json{{"from", cat.objects()[pp.x]},
                             {"to", cat.objects()[pp.y]},
                             {"d_minus1_injective", pp.d_minus1_injective},
                             {"h_minus1_iso", pp.h_minus1_iso},
                             {"h0_iso", pp.h0_iso},
                             {"h1_iso", pp.h1_iso},
                             {"detail", pp.first_failure}});
      results["comparison"] = {{"pairs", std::move(pairs)},
                               {"all_pass", cr.all_pass}};
      text << "square-zero comparison check: " << (cr.all_pass ? "pass" : "FAIL")
           << "\n";
    }
    if (wants("h0")) {
      auto h0 = dg::h0_category(cat);
      json dims = json::object();
      for (const auto& [key, dim] : h0.dims)
        if (dim > 0)
          dims[cat.objects()[key.first] + "|" + cat.objects()[key.second]] = dim;
      results["h0"] = {{"dims", std::move(dims)}};
      text << "H^0 category computed\n";
    }
    *out = make_result(text.str(), results, {});
  });
}

orbitk_status orbitk_model_preset(const char* name, unsigned long g,
                                  const char* ld, char** model_json_out) {
  if (auto st = need(name && model_json_out, "model_preset: null argument"))
    return st;
  return guarded([&] {
    mpz_class d;
    try {
      d = mpz_class(ld == nullptr ? "1" : ld);
    } catch (const std::invalid_argument&) {
      orbitk::fail_parse("integer", "bad line bundle degree");
    }
    std::string n(name);
    orbitk::mukai::CohomologyModel model = [&]() {
      if (n == "point") return orbitk::mukai::point_model();
      if (n == "p1") return orbitk::mukai::p1_model(d);
      if (n == "genus-curve") return orbitk::mukai::genus_curve_model(g, d);
      if (n == "k3") return orbitk::mukai::k3_model();
      orbitk::fail_validation("model-preset", "unknown model preset '" + n + "'");
    }();
    *model_json_out =
        dup_string(orbitk::jsonio::cohomology_model_to_json(model).dump());
  });
}

/* ---- results ---- */

orbitk_status orbitk_result_text(const orbitk_result* r, char** out) {
  if (auto st = need(r && out, "result_text: null argument")) return st;
  *out = dup_string(r->text);
  return ORBITK_OK;
}

orbitk_status orbitk_result_json(const orbitk_result* r, char** out) {
  if (auto st = need(r && out, "result_json: null argument")) return st;
  *out = dup_string(r->json_text);
  return ORBITK_OK;
}

orbitk_status orbitk_result_warning_count(const orbitk_result* r, size_t* out) {
  if (auto st = need(r && out, "result_warning_count: null argument")) return st;
  *out = r->warnings.size();
  return ORBITK_OK;
}

orbitk_status orbitk_result_warning(const orbitk_result* r, size_t index,
                                    char** code, char** message) {
  if (auto st = need(r && code && message, "result_warning: null argument"))
    return st;
  if (auto st = need(index < r->warnings.size(), "result_warning: out of range"))
    return st;
  *code = dup_string(r->warnings[index].code);
  *message = dup_string(r->warnings[index].message);
  return ORBITK_OK;
}

void orbitk_result_free(orbitk_result* r) { delete r; }

}  // extern "C"
