#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hamrep/interpolation.hpp"
#include "hamrep/matrix.hpp"
#include "hamrep/multi_index.hpp"
#include "hamrep/poly_field.hpp"
#include "hamrep/rational.hpp"
#include "hamrep/rep_data.hpp"
#include "hamrep/report.hpp"
#include "hamrep/torus_field.hpp"
#include "hamrep/weight_module.hpp"

namespace hamrep {

using Json = nlohmann::json;

// Scalars serialize as strings "p/q" (or "p" when the denominator is 1);
// multi-indices as integer arrays; matrices as arrays of string rows.
// All from_* functions throw std::invalid_argument on malformed input.

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const MultiIndex& r);
MultiIndex multi_index_from_json(const Json& j);

Json to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);

Json to_json(const RatMatrix& a);
RatMatrix matrix_from_json(const Json& j);

// {"m":int, "d":[{"i":int,"c":"p/q"}], "h":[{"r":[ints],"c":"p/q"}]};
// derivation indices are 1-based on the wire.
Json to_json(const TorusField& f);
TorusField torus_field_from_json(const Json& j);

// {"m":int, "terms":[{"r":[ints], "c":"p/q"}]}
Json to_json(const PolyField& f);
PolyField poly_field_from_json(const Json& j);

// {"m":int, "dim":int, "terms":[{"k":[ints], "matrix":[["p/q",...],...]}]}
Json to_json(const RepData& rep);
RepData rep_data_from_json(const Json& j);

// {"m":int, "dim":int, "phi":{label: matrix}, "mu":["p/q",...]}
Json to_json(const IrreducibleSpec& spec);
IrreducibleSpec irreducible_spec_from_json(const Json& j);

// {"lambda":["p/q",...], "terms":[{"s":[ints], "v":["p/q",...]}]}
Json element_to_json(const std::vector<Rational>& lambda, const ModuleElement& x);
std::pair<std::vector<Rational>, ModuleElement> element_from_json(const Json& j);

// RepData layout plus "total_degree".
Json to_json(const PolyEndo& fit);
PolyEndo poly_endo_from_json(const Json& j);

// {"command":str, "passed":bool, "seed":uint, "checks":[{"name","status","witness"?}]}
// plus "timing_ms" when the report carries one.
Json to_json(const Report& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hamrep
