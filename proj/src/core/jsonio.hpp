#pragma once

#include <string>

#include "json.hpp"

#include "abgroup.hpp"
#include "dgcat.hpp"
#include "fieldmat.hpp"
#include "int_matrix.hpp"
#include "invariant.hpp"
#include "mukai.hpp"
#include "quiver.hpp"

namespace orbitk::jsonio {

using nlohmann::json;

/// Integer matrices serialize as arrays-of-arrays of decimal strings; parsing
/// also accepts plain JSON integers.
json matrix_to_json(const exactla::IntMatrix& m);
exactla::IntMatrix matrix_from_json(const json& j);

json rational_matrix_to_json(const field::Mat& m);
field::Mat rational_matrix_from_json(const json& j);

json group_to_json(const abgroup::FgAbGroup& g);
abgroup::FgAbGroup group_from_json(const json& j);

quiver::Quiver quiver_from_json(const json& j);
json quiver_to_json(const quiver::Quiver& q);

orbit::InvariantSpec invariant_spec_from_json(const json& j);

mukai::CohomologyModel cohomology_model_from_json(const json& j);
json cohomology_model_to_json(const mukai::CohomologyModel& m);

dg::FiniteDgCategory dg_category_from_json(const json& j);
dg::DgFunctor dg_functor_from_json(const dg::FiniteDgCategory& a, const json& j);

mpz_class mpz_from_json(const json& j);
mpq_class mpq_from_json(const json& j);
std::string mpq_to_string(const mpq_class& q);

/// Comma-separated integer list ("2,0,-1").
std::vector<mpz_class> int_vector_from_csv(const std::string& text);

json parse(const std::string& text);

/// FNV-1a 64-bit hex digest; used to echo inputs in reports.
std::string digest(const std::string& data);

}  // namespace orbitk::jsonio
