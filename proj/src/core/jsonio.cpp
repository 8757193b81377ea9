#include "jsonio.hpp"

#include <cstdint>

#include "error.hpp"

namespace orbitk::jsonio {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_parse("json", "malformed JSON input");
  return j;
}

mpz_class mpz_from_json(const json& j) {
  try {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer())
      return mpz_class(std::to_string(j.get<long long>()));
  } catch (const std::exception&) {
  }
  fail_parse("integer", "expected a decimal integer or integer string");
}

mpq_class mpq_from_json(const json& j) {
  try {
    if (j.is_string()) {
      mpq_class q(j.get<std::string>());
      q.canonicalize();
      return q;
    }
    if (j.is_number_integer())
      return mpq_class(std::to_string(j.get<long long>()));
  } catch (const std::exception&) {
  }
  fail_parse("rational", "expected a rational like \"3/2\" or an integer");
}

std::string mpq_to_string(const mpq_class& q) { return q.get_str(); }

json matrix_to_json(const exactla::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

exactla::IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail_parse("matrix", "matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) fail_parse("matrix", "matrix rows must be arrays");
    cols = j[0].size();
  }
  exactla::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      fail_parse("matrix", "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = mpz_from_json(j[i][c]);
  }
  return m;
}

json rational_matrix_to_json(const field::Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(mpq_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

field::Mat rational_matrix_from_json(const json& j) {
  if (!j.is_array()) fail_parse("matrix", "matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) fail_parse("matrix", "matrix rows must be arrays");
    cols = j[0].size();
  }
  field::Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      fail_parse("matrix", "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = mpq_from_json(j[i][c]);
  }
  return m;
}

json group_to_json(const abgroup::FgAbGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.invariant_factors()) torsion.push_back(d.get_str());
  return json{{"rank", g.rank()}, {"torsion", std::move(torsion)}};
}

abgroup::FgAbGroup group_from_json(const json& j) {
  if (!j.is_object()) fail_parse("group", "group must be an object");
  std::size_t rank = 0;
  if (j.contains("rank")) {
    if (!j["rank"].is_number_unsigned())
      fail_parse("group", "rank must be a nonnegative integer");
    rank = j["rank"].get<std::size_t>();
  }
  std::vector<mpz_class> torsion;
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) fail_parse("group", "torsion must be an array");
    for (const auto& t : j["torsion"]) torsion.push_back(mpz_from_json(t));
  }
  return abgroup::FgAbGroup::from_factors(rank, std::move(torsion));
}

quiver::Quiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    fail_parse("quiver", "quiver needs \"vertices\" and \"arrows\"");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail_parse("quiver", "vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      fail_parse("quiver", "arrows must be [source, target] label pairs");
    arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
  }
  return quiver::Quiver(std::move(vertices), std::move(arrows));
}

json quiver_to_json(const quiver::Quiver& q) {
  json vertices = json::array();
  for (const auto& v : q.vertices()) vertices.push_back(v);
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows())
    arrows.push_back(json::array({q.vertices()[s], q.vertices()[t]}));
  return json{{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

orbit::InvariantSpec invariant_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degrees"))
    fail_parse("invariant-spec", "spec needs a \"degrees\" object");
  orbit::InvariantFlags flags;
  if (j.contains("flags")) {
    const json& f = j["flags"];
    flags.connective = f.value("connective", false);
    flags.two_periodic = f.value("two_periodic", false);
    flags.field_coefficients = f.value("field_coefficients", false);
    flags.prime = f.value("p", 0ul);
  }
  std::map<int, orbit::DegreeData> degrees;
  for (const auto& [key, val] : j["degrees"].items()) {
    int n = 0;
    try {
      n = std::stoi(key);
    } catch (const std::exception&) {
      fail_parse("invariant-spec", "degree keys must be integers");
    }
    if (!val.is_object() || !val.contains("group") || !val.contains("auto"))
      fail_parse("invariant-spec", "each degree needs \"group\" and \"auto\"");
    orbit::DegreeData d;
    if (flags.field_coefficients) {
      const json& g = val["group"];
      std::size_t dim = 0;
      if (g.contains("dim"))
        dim = g["dim"].get<std::size_t>();
      else if (g.contains("rank"))
        dim = g["rank"].get<std::size_t>();
      field::Mat m = rational_matrix_from_json(val["auto"]);
      field::Coeffs k{flags.prime};
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m.at(r, c) = k.reduce(m.at(r, c));
      d = orbit::DegreeData::vector_space(dim, std::move(m));
    } else {
      d = orbit::DegreeData::integral(group_from_json(val["group"]),
                                      matrix_from_json(val["auto"]));
    }
    degrees.emplace(n, std::move(d));
  }
  return orbit::InvariantSpec(flags, std::move(degrees));
}

namespace {

std::size_t basis_index(const std::vector<mukai::CohomologyModel::BasisElement>& basis,
                        const std::string& name) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].name == name) return i;
  fail_parse("cohomology-model", "unknown basis element '" + name + "'");
}

}  // namespace

mukai::CohomologyModel cohomology_model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("mult") ||
      !j.contains("pairing"))
    fail_parse("cohomology-model",
               "model needs \"basis\", \"mult\" and \"pairing\"");
  std::vector<mukai::CohomologyModel::BasisElement> basis;
  for (const auto& b : j["basis"]) {
    if (!b.is_object() || !b.contains("name") || !b.contains("degree"))
      fail_parse("cohomology-model", "basis entries need name and degree");
    basis.push_back({b["name"].get<std::string>(), b["degree"].get<int>()});
  }
  const std::size_t n = basis.size();
  std::vector<std::vector<std::vector<mpq_class>>> mult(
      n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
  for (const auto& [key, val] : j["mult"].items()) {
    auto sep = key.find('|');
    if (sep == std::string::npos)
      fail_parse("cohomology-model", "mult keys look like \"a|b\"");
    std::size_t i = basis_index(basis, key.substr(0, sep));
    std::size_t jj = basis_index(basis, key.substr(sep + 1));
    for (const auto& [out, coeff] : val.items())
      mult[i][jj][basis_index(basis, out)] = mpq_from_json(coeff);
  }
  field::Mat pairing = rational_matrix_from_json(j["pairing"]);
  std::map<std::string, std::vector<mpq_class>> classes;
  if (j.contains("classes"))
    for (const auto& [name, val] : j["classes"].items()) {
      std::vector<mpq_class> v(n, 0);
      for (const auto& [bname, coeff] : val.items())
        v[basis_index(basis, bname)] = mpq_from_json(coeff);
      classes[name] = std::move(v);
    }
  return mukai::CohomologyModel(std::move(basis), std::move(mult),
                                std::move(pairing), std::move(classes));
}

json cohomology_model_to_json(const mukai::CohomologyModel& m) {
  json basis = json::array();
  for (const auto& b : m.basis())
    basis.push_back(json{{"name", b.name}, {"degree", b.degree}});
  json mult = json::object();
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = m.multiply(m.el_at(i), m.el_at(j));
      json entry = json::object();
      for (std::size_t l = 0; l < n; ++l)
        if (prod[l] != 0) entry[m.basis()[l].name] = mpq_to_string(prod[l]);
      if (!entry.empty())
        mult[m.basis()[i].name + "|" + m.basis()[j].name] = std::move(entry);
    }
  json classes = json::object();
  for (const auto& [name, v] : m.classes()) {
    json entry = json::object();
    for (std::size_t l = 0; l < n; ++l)
      if (v[l] != 0) entry[m.basis()[l].name] = mpq_to_string(v[l]);
    classes[name] = std::move(entry);
  }
  return json{{"basis", std::move(basis)},
              {"mult", std::move(mult)},
              {"pairing", rational_matrix_to_json(m.pairing())},
              {"classes", std::move(classes)}};
}

namespace {

std::size_t object_index(const std::vector<std::string>& objects,
                         const std::string& name) {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  fail_parse("dg-category", "unknown object '" + name + "'");
}

std::pair<std::string, std::string> split2(const std::string& key) {
  auto sep = key.find('|');
  if (sep == std::string::npos)
    fail_parse("dg-category", "pair keys look like \"x|y\"");
  return {key.substr(0, sep), key.substr(sep + 1)};
}

}  // namespace

dg::FiniteDgCategory dg_category_from_json(const json& j) {
  if (!j.is_object() || !j.contains("objects"))
    fail_parse("dg-category", "category needs \"objects\"");
  field::Coeffs k{0};
  if (j.contains("field")) {
    std::string f = j["field"].get<std::string>();
    if (f == "Q") {
      k.p = 0;
    } else if (f.size() > 1 && f[0] == 'F') {
      try {
        k.p = std::stoul(f.substr(1));
      } catch (const std::exception&) {
        fail_parse("dg-category", "field must be \"Q\" or \"F<p>\"");
      }
      if (k.p < 2) fail_parse("dg-category", "field characteristic must be >= 2");
    } else {
      fail_parse("dg-category", "field must be \"Q\" or \"F<p>\"");
    }
  }
  std::vector<std::string> objects;
  for (const auto& o : j["objects"]) objects.push_back(o.get<std::string>());

  std::map<dg::PairKey, dg::HomComplex> homs;
  if (j.contains("homs"))
    for (const auto& [key, val] : j["homs"].items()) {
      auto [xs, ys] = split2(key);
      dg::PairKey pk{object_index(objects, xs), object_index(objects, ys)};
      dg::HomComplex hc;
      if (val.contains("dims"))
        for (const auto& [deg, dim] : val["dims"].items())
          hc.dims[std::stoi(deg)] = dim.get<std::size_t>();
      if (val.contains("diff"))
        for (const auto& [deg, mat] : val["diff"].items())
          hc.diff[std::stoi(deg)] = rational_matrix_from_json(mat);
      homs[pk] = std::move(hc);
    }

  std::map<dg::CompKey, dg::CompTensor> comp;
  if (j.contains("comp"))
    for (const auto& [key, entries] : j["comp"].items()) {
      auto sep1 = key.find('|');
      auto sep2 = key.find('|', sep1 + 1);
      if (sep1 == std::string::npos || sep2 == std::string::npos)
        fail_parse("dg-category", "comp keys look like \"x|y|z\"");
      std::size_t x = object_index(objects, key.substr(0, sep1));
      std::size_t y = object_index(objects, key.substr(sep1 + 1, sep2 - sep1 - 1));
      std::size_t z = object_index(objects, key.substr(sep2 + 1));
      for (const auto& e : entries) {
        int gdeg = e.at("gdeg").get<int>();
        int fdeg = e.at("fdeg").get<int>();
        dg::CompTensor t;
        for (const auto& grow : e.at("tensor")) {
          std::vector<std::vector<mpq_class>> row;
          for (const auto& fvec : grow) {
            std::vector<mpq_class> v;
            for (const auto& c : fvec) v.push_back(mpq_from_json(c));
            row.push_back(std::move(v));
          }
          t.push_back(std::move(row));
        }
        comp[{x, y, z, gdeg, fdeg}] = std::move(t);
      }
    }

  std::map<std::size_t, std::vector<mpq_class>> units;
  if (j.contains("units"))
    for (const auto& [name, vec] : j["units"].items()) {
      std::vector<mpq_class> v;
      for (const auto& c : vec) v.push_back(mpq_from_json(c));
      units[object_index(objects, name)] = std::move(v);
    }

  return dg::FiniteDgCategory(k, std::move(objects), std::move(homs),
                              std::move(comp), std::move(units));
}

dg::DgFunctor dg_functor_from_json(const dg::FiniteDgCategory& a, const json& j) {
  dg::DgFunctor f;
  f.object_map.resize(a.object_count());
  if (!j.is_object() || !j.contains("objects"))
    fail_parse("dg-functor", "functor needs an \"objects\" map");
  for (const auto& [from, to] : j["objects"].items())
    f.object_map.at(object_index(a.objects(), from)) =
        object_index(a.objects(), to.get<std::string>());
  if (j.contains("maps"))
    for (const auto& [key, val] : j["maps"].items()) {
      auto [xs, ys] = split2(key);
      dg::PairKey pk{object_index(a.objects(), xs), object_index(a.objects(), ys)};
      for (const auto& [deg, mat] : val.items())
        f.hom_maps[pk][std::stoi(deg)] = rational_matrix_from_json(mat);
    }
  return f;
}

std::vector<mpz_class> int_vector_from_csv(const std::string& text) {
  std::vector<mpz_class> out;
  std::string cur;
  auto flush = [&]() {
    std::string t;
    for (char c : cur)
      if (c != ' ' && c != '\t') t += c;
    if (t.empty()) fail_parse("int-list", "empty entry in integer list");
    try {
      out.emplace_back(t);
    } catch (const std::exception&) {
      fail_parse("int-list", "bad integer '" + t + "'");
    }
    cur.clear();
  };
  if (text.empty()) return out;
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

std::string digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace orbitk::jsonio
