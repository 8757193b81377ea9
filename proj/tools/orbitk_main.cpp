// orbitk command line: one subcommand per computation, canonical text output
// on stdout, machine-readable reports with --json.
//
// Exit codes: 0 success, 1 input/validation error, 2 usage error, 3 internal.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitk/orbitk.h"

namespace {

using nlohmann::json;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(orbitk_status st) {
  switch (st) {
    case ORBITK_OK:
      return 0;
    case ORBITK_ERROR_INTERNAL:
      return 3;
    default:
      return 1;
  }
}

void check(orbitk_status st) {
  if (st == ORBITK_OK) return;
  throw CliError{exit_code_for(st), std::string(orbitk_last_error_code()) + ": " +
                                        orbitk_last_error_message()};
}

std::string take_string(char* s) {
  std::string out(s);
  orbitk_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot read file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON is accepted directly; anything else is a file path.
std::string inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return arg;
  return read_file(arg);
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Report {
  std::vector<std::string> command;
  std::string inputs;  // concatenated input payloads for the digest
  std::string text;
  json results = json::object();
  json warnings = json::array();

  void absorb(orbitk_result* r) {
    char* t = nullptr;
    check(orbitk_result_text(r, &t));
    text = take_string(t);
    char* j = nullptr;
    check(orbitk_result_json(r, &j));
    results = json::parse(take_string(j));
    size_t n = 0;
    check(orbitk_result_warning_count(r, &n));
    for (size_t i = 0; i < n; ++i) {
      char* code = nullptr;
      char* message = nullptr;
      check(orbitk_result_warning(r, i, &code, &message));
      warnings.push_back(
          json{{"code", take_string(code)}, {"message", take_string(message)}});
    }
    orbitk_result_free(r);
  }

  void print(bool as_json) const {
    if (as_json) {
      char digest[17];
      std::snprintf(digest, sizeof digest, "%016llx",
                    static_cast<unsigned long long>(fnv1a(inputs)));
      json out{{"command", command},
               {"inputs_digest", std::string(digest)},
               {"results", results},
               {"status", 0},
               {"warnings", warnings}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << text;
      for (const auto& w : warnings)
        std::cout << "warning [" << w["code"].get<std::string>()
                  << "]: " << w["message"].get<std::string>() << "\n";
    }
  }
};

struct MatrixHandle {
  orbitk_matrix* m = nullptr;
  ~MatrixHandle() { orbitk_matrix_free(m); }
};
struct QuiverHandle {
  orbitk_quiver* q = nullptr;
  ~QuiverHandle() { orbitk_quiver_free(q); }
};
struct GroupHandle {
  orbitk_group* g = nullptr;
  ~GroupHandle() { orbitk_group_free(g); }
};

orbitk_quiver* load_quiver(const std::string& preset, const std::string& file) {
  orbitk_quiver* q = nullptr;
  if (!preset.empty()) {
    check(orbitk_quiver_preset(preset.c_str(), &q));
  } else if (!file.empty()) {
    check(orbitk_quiver_parse(read_file(file).c_str(), &q));
  } else {
    throw CliError{2, "one of --quiver or --quiver-file is required"};
  }
  return q;
}

std::string load_model(const std::string& file, const std::string& preset,
                       unsigned long g, const std::string& ld) {
  if (!file.empty()) return inline_or_file(file);
  if (!preset.empty()) {
    char* out = nullptr;
    check(orbitk_model_preset(preset.c_str(), g, ld.empty() ? "1" : ld.c_str(),
                              &out));
    return take_string(out);
  }
  throw CliError{2, "one of --model or --preset is required"};
}

json matrix_json(orbitk_matrix* m) {
  char* s = nullptr;
  check(orbitk_matrix_to_json(m, &s));
  return json::parse(take_string(s));
}

int run_selftest(unsigned long trials, bool as_json, Report& report);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic invariants of dg orbit categories"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report on stdout");

  // snf
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form U*A*V = D");
  std::string snf_matrix;
  snf_cmd->add_option("--matrix", snf_matrix, "matrix JSON (inline or file)")
      ->required();

  // coxeter
  auto* cox_cmd =
      app.add_subcommand("coxeter", "Cartan, Coxeter and Euler-form matrices");
  std::string cox_preset, cox_file;
  cox_cmd->add_option("--quiver", cox_preset, "preset name (A5, D4, E6, kronecker3)");
  cox_cmd->add_option("--quiver-file", cox_file, "quiver JSON file");

  // kleinian
  auto* kle_cmd =
      app.add_subcommand("kleinian", "K_0 of the A_s Kleinian singularity");
  unsigned long kle_s = 1;
  kle_cmd->add_option("--s", kle_s, "index s >= 1")->required();

  // cluster-k0
  auto* ck0_cmd =
      app.add_subcommand("cluster-k0", "Grothendieck group of a cluster category");
  std::string ck0_preset, ck0_file;
  long ck0_n = 0;
  ck0_cmd->add_option("--quiver", ck0_preset, "preset name");
  ck0_cmd->add_option("--quiver-file", ck0_file, "quiver JSON file");
  ck0_cmd->add_option("--n", ck0_n, "cluster parameter n >= 0")->required();

  // cluster-triangle
  auto* ctr_cmd = app.add_subcommand(
      "cluster-triangle", "orbit invariant of a cluster category, degreewise");
  std::string ctr_preset, ctr_file, ctr_ek;
  long ctr_n = 0;
  ctr_cmd->add_option("--quiver", ctr_preset, "preset name");
  ctr_cmd->add_option("--quiver-file", ctr_file, "quiver JSON file");
  ctr_cmd->add_option("--ek", ctr_ek, "InvariantSpec of E(k) (inline or file)")
      ->required();
  ctr_cmd->add_option("--n", ctr_n, "cluster parameter")->required();

  // orbit-triangle
  auto* orb_cmd = app.add_subcommand(
      "orbit-triangle", "orbit invariant from an InvariantSpec, degreewise");
  std::string orb_spec;
  orb_cmd->add_option("--spec", orb_spec, "InvariantSpec JSON (inline or file)")
      ->required();

  // hp-sixterm
  auto* hp_cmd =
      app.add_subcommand("hp-sixterm", "six-term periodic cyclic dimensions");
  std::string hp_even, hp_odd;
  hp_cmd->add_option("--f-even", hp_even, "even automorphism matrix (inline or file)")
      ->required();
  hp_cmd->add_option("--f-odd", hp_odd, "odd automorphism matrix (inline or file)")
      ->required();

  // hp-line-bundle
  auto* hlb_cmd = app.add_subcommand(
      "hp-line-bundle", "six-term maps of a line-bundle twist on a model");
  std::string hlb_model, hlb_preset, hlb_ld;
  unsigned long hlb_g = 0;
  long hlb_n = 0;
  hlb_cmd->add_option("--model", hlb_model, "cohomology model JSON (inline or file)");
  hlb_cmd->add_option("--preset", hlb_preset, "point | p1 | genus-curve | k3");
  hlb_cmd->add_option("--g", hlb_g, "genus for the genus-curve preset");
  hlb_cmd->add_option("--ld", hlb_ld, "line bundle degree for presets");
  hlb_cmd->add_option("--n", hlb_n, "shift parameter")->required();

  // spherical-hp
  auto* shp_cmd = app.add_subcommand(
      "spherical-hp", "spherical-twist projection and orbit HP dimensions");
  std::string shp_model, shp_preset, shp_ld;
  unsigned long shp_g = 0;
  shp_cmd->add_option("--model", shp_model, "cohomology model JSON (inline or file)");
  shp_cmd->add_option("--preset", shp_preset, "point | p1 | genus-curve | k3");
  shp_cmd->add_option("--g", shp_g, "genus for the genus-curve preset");
  shp_cmd->add_option("--ld", shp_ld, "line bundle degree for presets");

  // spherical-k0
  auto* sk0_cmd = app.add_subcommand(
      "spherical-k0", "orbit K_0 of a spherical twist from K-theoretic data");
  std::string sk0_chi, sk0_e;
  sk0_cmd->add_option("--chi", sk0_chi, "Euler pairing row, e.g. \"2,0\"")
      ->required();
  sk0_cmd->add_option("--e", sk0_e, "class of the spherical object, e.g. \"1,0\"")
      ->required();

  // curve-kh0
  auto* cur_cmd = app.add_subcommand(
      "curve-kh0", "degree-zero orbit KH of a line-bundle twist on a curve");
  std::string cur_pic, cur_l;
  long cur_n = 0;
  cur_cmd->add_option("--pic", cur_pic, "Pic(C) in the group grammar, e.g. \"Z\"")
      ->required();
  cur_cmd->add_option("--l", cur_l, "class of L on the Pic generators, e.g. \"3\"")
      ->required();
  cur_cmd->add_option("--n", cur_n, "shift parameter")->required();

  // dg-orbit
  auto* dg_cmd = app.add_subcommand(
      "dg-orbit", "construct truncated orbit categories and run the checks");
  std::string dg_cat, dg_fun, dg_checks = "all";
  long dg_n = 4, dg_p = 4;
  dg_cmd->add_option("--cat", dg_cat, "dg category JSON (inline or file)")
      ->required();
  dg_cmd->add_option("--functor", dg_fun, "dg functor JSON (default: identity)");
  dg_cmd->add_option("--N", dg_n, "orbit weight bound");
  dg_cmd->add_option("--P", dg_p, "colimit stage bound");
  dg_cmd->add_option(
      "--check", dg_checks,
      "all or a comma list of validate,orbit,orbit-z,epsilon,comparison,h0");

  // model-preset
  auto* mp_cmd =
      app.add_subcommand("model-preset", "emit a shipped cohomology model");
  std::string mp_name, mp_ld;
  unsigned long mp_g = 0;
  mp_cmd->add_option("--preset", mp_name, "point | p1 | genus-curve | k3")
      ->required();
  mp_cmd->add_option("--g", mp_g, "genus for the genus-curve preset");
  mp_cmd->add_option("--ld", mp_ld, "line bundle degree");

  // selftest
  auto* st_cmd = app.add_subcommand(
      "selftest", "randomized normal-form property suite (ORBITK_SEED)");
  unsigned long st_trials = 500;
  st_cmd->add_option("--trials", st_trials, "number of random matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report report;
  for (int i = 0; i < argc; ++i) report.command.emplace_back(argv[i]);

  try {
    orbitk_result* res = nullptr;

    if (snf_cmd->parsed()) {
      std::string payload = inline_or_file(snf_matrix);
      report.inputs = payload;
      MatrixHandle a, u, d, v;
      check(orbitk_matrix_parse(payload.c_str(), &a.m));
      check(orbitk_snf(a.m, &u.m, &d.m, &v.m));
      size_t rank = 0;
      check(orbitk_matrix_rank(a.m, &rank));
      GroupHandle coker;
      check(orbitk_cokernel(a.m, &coker.g));
      char* render = nullptr;
      check(orbitk_group_render(coker.g, &render));
      std::string group = take_string(render);
      report.results = json{{"u", matrix_json(u.m)},
                            {"d", matrix_json(d.m)},
                            {"v", matrix_json(v.m)},
                            {"rank", rank},
                            {"cokernel", group}};
      std::ostringstream text;
      text << "D = " << report.results["d"].dump() << "\n"
           << "rank = " << rank << ", cokernel = " << group << "\n";
      report.text = text.str();
    } else if (cox_cmd->parsed()) {
      QuiverHandle q;
      report.inputs = cox_preset + cox_file;
      q.q = load_quiver(cox_preset, cox_file);
      MatrixHandle c, phi, e;
      check(orbitk_quiver_cartan(q.q, &c.m));
      check(orbitk_quiver_coxeter(q.q, &phi.m));
      check(orbitk_quiver_euler_form(q.q, &e.m));
      report.results = json{{"cartan", matrix_json(c.m)},
                            {"coxeter", matrix_json(phi.m)},
                            {"euler", matrix_json(e.m)}};
      std::ostringstream text;
      text << "cartan = " << report.results["cartan"].dump() << "\n"
           << "coxeter = " << report.results["coxeter"].dump() << "\n"
           << "euler = " << report.results["euler"].dump() << "\n";
      report.text = text.str();
    } else if (kle_cmd->parsed()) {
      report.inputs = std::to_string(kle_s);
      check(orbitk_kleinian(kle_s, &res));
      report.absorb(res);
    } else if (ck0_cmd->parsed()) {
      QuiverHandle q;
      report.inputs = ck0_preset + ck0_file + std::to_string(ck0_n);
      q.q = load_quiver(ck0_preset, ck0_file);
      check(orbitk_cluster_k0(q.q, ck0_n, &res));
      report.absorb(res);
    } else if (ctr_cmd->parsed()) {
      QuiverHandle q;
      std::string ek = inline_or_file(ctr_ek);
      report.inputs = ctr_preset + ctr_file + ek + std::to_string(ctr_n);
      q.q = load_quiver(ctr_preset, ctr_file);
      check(orbitk_cluster_triangle(q.q, ctr_n, ek.c_str(), &res));
      report.absorb(res);
    } else if (orb_cmd->parsed()) {
      std::string spec = inline_or_file(orb_spec);
      report.inputs = spec;
      check(orbitk_orbit_triangle(spec.c_str(), &res));
      report.absorb(res);
    } else if (hp_cmd->parsed()) {
      std::string fe = inline_or_file(hp_even);
      std::string fo = inline_or_file(hp_odd);
      report.inputs = fe + fo;
      check(orbitk_hp_sixterm(fe.c_str(), fo.c_str(), &res));
      report.absorb(res);
    } else if (hlb_cmd->parsed()) {
      std::string model = load_model(hlb_model, hlb_preset, hlb_g, hlb_ld);
      report.inputs = model + std::to_string(hlb_n);
      check(orbitk_hp_line_bundle(model.c_str(), hlb_n, &res));
      report.absorb(res);
    } else if (shp_cmd->parsed()) {
      std::string model = load_model(shp_model, shp_preset, shp_g, shp_ld);
      report.inputs = model;
      check(orbitk_spherical_hp(model.c_str(), &res));
      report.absorb(res);
    } else if (sk0_cmd->parsed()) {
      report.inputs = sk0_chi + ";" + sk0_e;
      check(orbitk_spherical_k0(sk0_chi.c_str(), sk0_e.c_str(), &res));
      report.absorb(res);
    } else if (cur_cmd->parsed()) {
      report.inputs = cur_pic + ";" + cur_l + ";" + std::to_string(cur_n);
      check(orbitk_curve_kh0(cur_pic.c_str(), cur_l.c_str(), cur_n, &res));
      report.absorb(res);
    } else if (dg_cmd->parsed()) {
      std::string cat = inline_or_file(dg_cat);
      std::string fun = dg_fun.empty() ? "" : inline_or_file(dg_fun);
      report.inputs = cat + fun + std::to_string(dg_n) + std::to_string(dg_p) +
                      dg_checks;
      check(orbitk_dg_orbit(cat.c_str(), fun.empty() ? nullptr : fun.c_str(),
                            dg_n, dg_p, dg_checks.c_str(), &res));
      report.absorb(res);
    } else if (mp_cmd->parsed()) {
      char* out = nullptr;
      report.inputs = mp_name + std::to_string(mp_g) + mp_ld;
      check(orbitk_model_preset(mp_name.c_str(), mp_g,
                                mp_ld.empty() ? "1" : mp_ld.c_str(), &out));
      std::string model = take_string(out);
      report.results = json::parse(model);
      report.text = model + "\n";
    } else if (st_cmd->parsed()) {
      return run_selftest(st_trials, as_json, report);
    }

    report.print(as_json);
    return 0;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
}

namespace {

// Randomized Smith-form property suite run through the public C API. The seed
// comes from ORBITK_SEED so failures are reproducible.
int run_selftest(unsigned long trials, bool as_json, Report& report) {
  std::uint64_t seed = 0x5eed0fba5eull;
  if (const char* env = std::getenv("ORBITK_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(0, 6);
  std::uniform_int_distribution<int> entry_dist(-9, 9);

  unsigned long failures = 0;
  std::string first_failure;
  auto fail_case = [&](const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  };

  for (unsigned long trial = 0; trial < trials; ++trial) {
    size_t rows = static_cast<size_t>(dim_dist(rng));
    size_t cols = static_cast<size_t>(dim_dist(rng));
    std::vector<std::string> entries(rows * cols);
    std::vector<const char*> ptrs(rows * cols);
    for (size_t i = 0; i < rows * cols; ++i) {
      entries[i] = std::to_string(entry_dist(rng));
      ptrs[i] = entries[i].c_str();
    }
    MatrixHandle a, u, d, v;
    check(orbitk_matrix_new(rows, cols, ptrs.data(), &a.m));
    check(orbitk_snf(a.m, &u.m, &d.m, &v.m));

    MatrixHandle ua, uav;
    check(orbitk_matrix_mul(u.m, a.m, &ua.m));
    check(orbitk_matrix_mul(ua.m, v.m, &uav.m));
    int eq = 0;
    check(orbitk_matrix_equal(uav.m, d.m, &eq));
    if (!eq) fail_case("U*A*V != D");

    char* det_u = nullptr;
    char* det_v = nullptr;
    check(orbitk_matrix_det(u.m, &det_u));
    check(orbitk_matrix_det(v.m, &det_v));
    std::string du = take_string(det_u), dv = take_string(det_v);
    if ((du != "1" && du != "-1") || (dv != "1" && dv != "-1"))
      fail_case("transform not unimodular");

    // Divisibility chain, nonnegative diagonal, zeros trailing.
    std::vector<long long> diag;
    for (size_t i = 0; i < std::min(rows, cols); ++i) {
      char* e = nullptr;
      check(orbitk_matrix_entry(d.m, i, i, &e));
      diag.push_back(std::stoll(take_string(e)));
    }
    for (size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] < 0) fail_case("negative diagonal entry");
      if (i > 0 && diag[i - 1] == 0 && diag[i] != 0) fail_case("zero before nonzero");
      if (i > 0 && diag[i - 1] != 0 && diag[i] % diag[i - 1] != 0)
        fail_case("divisibility chain broken");
    }

    // coker(A) == coker(A^T)
    MatrixHandle at;
    check(orbitk_matrix_transpose(a.m, &at.m));
    GroupHandle ca, cat;
    check(orbitk_cokernel(a.m, &ca.g));
    check(orbitk_cokernel(at.m, &cat.g));
    char* ra = nullptr;
    char* rat = nullptr;
    check(orbitk_group_render(ca.g, &ra));
    check(orbitk_group_render(cat.g, &rat));
    std::string sa = take_string(ra), sat = take_string(rat);
    if (rows == cols && sa != sat) fail_case("coker(A) != coker(A^T)");

    // |torsion(coker A)| == |det A| on square nonsingular matrices.
    if (rows == cols && rows > 0) {
      char* det_a = nullptr;
      check(orbitk_matrix_det(a.m, &det_a));
      long long da = std::stoll(take_string(det_a));
      if (da != 0) {
        long long torsion = 1;
        size_t tc = 0;
        check(orbitk_group_torsion_count(ca.g, &tc));
        for (size_t i = 0; i < tc; ++i) {
          char* f = nullptr;
          check(orbitk_group_torsion_factor(ca.g, i, &f));
          torsion *= std::stoll(take_string(f));
        }
        if (torsion != (da < 0 ? -da : da)) fail_case("|torsion| != |det|");
      }
    }
  }

  report.results = json{{"trials", trials},
                        {"failures", failures},
                        {"first_failure", first_failure},
                        {"seed", seed}};
  std::ostringstream text;
  text << "selftest: " << trials << " trials, " << failures << " failures\n";
  report.text = text.str();
  report.inputs = std::to_string(seed) + ":" + std::to_string(trials);
  report.print(as_json);
  return failures == 0 ? 0 : 3;
}

}  // namespace
