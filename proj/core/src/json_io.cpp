#include "hamrep/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hamrep {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int expect_positive_int(const Json& j, const char* key) {
  const Json& v = expect(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    bad(std::string("field '") + key + "' must be a positive integer");
  return static_cast<int>(v.get<std::int64_t>());
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("rational must be a string like \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const MultiIndex& r) {
  Json a = Json::array();
  for (int i = 0; i < r.size(); ++i) a.push_back(r[i]);
  return a;
}

MultiIndex multi_index_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("multi-index must be a nonempty integer array");
  std::vector<std::int64_t> e;
  e.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("multi-index entries must be integers");
    e.push_back(v.get<std::int64_t>());
  }
  return MultiIndex(std::move(e));
}

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

RatVec rat_vec_from_json(const Json& j) {
  if (!j.is_array()) bad("vector must be an array of rationals");
  RatVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RatMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j.at(0).is_array() || j.at(0).empty()) bad("matrix rows must be nonempty arrays");
  const int cols = static_cast<int>(j.at(0).size());
  RatMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("ragged matrix");
    for (int c = 0; c < cols; ++c) a(i, c) = rational_from_json(row.at(c));
  }
  return a;
}

Json to_json(const TorusField& f) {
  Json j;
  j["m"] = f.m();
  Json d = Json::array();
  for (const auto& [i, c] : f.d_terms())
    d.push_back(Json{{"i", i + 1}, {"c", to_json(c)}});
  Json h = Json::array();
  for (const auto& [r, c] : f.h_terms())
    h.push_back(Json{{"r", to_json(r)}, {"c", to_json(c)}});
  j["d"] = std::move(d);
  j["h"] = std::move(h);
  return j;
}

TorusField torus_field_from_json(const Json& j) {
  TorusField f(expect_positive_int(j, "m"));
  for (const auto& term : expect(j, "d")) {
    const int i = static_cast<int>(expect(term, "i").get<std::int64_t>());
    if (i < 1 || i > f.n()) bad("derivation index out of range");
    f.add_d(i - 1, rational_from_json(expect(term, "c")));
  }
  for (const auto& term : expect(j, "h")) {
    const MultiIndex r = multi_index_from_json(expect(term, "r"));
    if (r.size() != f.n()) bad("field index has the wrong length");
    f.add_h(r, rational_from_json(expect(term, "c")));
  }
  return f;
}

Json to_json(const PolyField& f) {
  Json j;
  j["m"] = f.m();
  Json terms = Json::array();
  for (const auto& [r, c] : f.terms())
    terms.push_back(Json{{"r", to_json(r)}, {"c", to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

PolyField poly_field_from_json(const Json& j) {
  PolyField f(expect_positive_int(j, "m"));
  for (const auto& term : expect(j, "terms")) {
    const MultiIndex r = multi_index_from_json(expect(term, "r"));
    if (r.size() != f.n()) bad("field index has the wrong length");
    f.add_term(r, rational_from_json(expect(term, "c")));
  }
  return f;
}

Json to_json(const RepData& rep) {
  Json j;
  j["m"] = rep.m;
  j["dim"] = rep.dim;
  Json terms = Json::array();
  for (const auto& [k, mat] : rep.terms)
    terms.push_back(Json{{"k", to_json(k)}, {"matrix", to_json(mat)}});
  j["terms"] = std::move(terms);
  j["degree_bound"] = rep.degree_bound;
  return j;
}

RepData rep_data_from_json(const Json& j) {
  RepData rep;
  rep.m = expect_positive_int(j, "m");
  rep.dim = expect_positive_int(j, "dim");
  std::int64_t inferred = 0;
  for (const auto& term : expect(j, "terms")) {
    const MultiIndex k = multi_index_from_json(expect(term, "k"));
    if (k.size() != rep.n()) bad("coefficient key has the wrong length");
    if (!k.is_non_negative()) bad("coefficient key must be non-negative");
    const RatMatrix mat = matrix_from_json(expect(term, "matrix"));
    if (mat.rows() != rep.dim || mat.cols() != rep.dim)
      bad("coefficient matrix does not match dim");
    rep.set(k, mat);
    inferred = std::max(inferred, k.degree() + 1);
  }
  if (j.contains("degree_bound")) {
    if (!j.at("degree_bound").is_number_integer()) bad("degree_bound must be an integer");
    rep.degree_bound = j.at("degree_bound").get<std::int64_t>();
  } else {
    rep.degree_bound = inferred;
  }
  return rep;
}

Json to_json(const IrreducibleSpec& spec) {
  Json j;
  j["m"] = spec.m;
  j["dim"] = spec.dim;
  Json phi = Json::object();
  for (const auto& [label, mat] : spec.phi) phi[label] = to_json(mat);
  j["phi"] = std::move(phi);
  j["mu"] = to_json(spec.mu);
  return j;
}

IrreducibleSpec irreducible_spec_from_json(const Json& j) {
  IrreducibleSpec spec;
  spec.m = expect_positive_int(j, "m");
  const Json& phi = expect(j, "phi");
  if (!phi.is_object()) bad("phi must be an object keyed by basis labels");
  for (const auto& [label, mat] : phi.items()) spec.phi[label] = matrix_from_json(mat);
  if (j.contains("dim"))
    spec.dim = expect_positive_int(j, "dim");
  else if (!spec.phi.empty())
    spec.dim = spec.phi.begin()->second.rows();
  else
    bad("cannot infer dim from an empty phi");
  spec.mu = rat_vec_from_json(expect(j, "mu"));
  if (static_cast<int>(spec.mu.size()) != 2 * spec.m) bad("mu must have length 2m");
  return spec;
}

Json element_to_json(const std::vector<Rational>& lambda, const ModuleElement& x) {
  Json j;
  j["lambda"] = to_json(lambda);
  Json terms = Json::array();
  for (const auto& [s, v] : x.terms())
    terms.push_back(Json{{"s", to_json(s)}, {"v", to_json(v)}});
  j["terms"] = std::move(terms);
  return j;
}

std::pair<std::vector<Rational>, ModuleElement> element_from_json(const Json& j) {
  const RatVec lambda = rat_vec_from_json(expect(j, "lambda"));
  const int n = static_cast<int>(lambda.size());
  if (n < 2 || n % 2 != 0) bad("lambda must have positive even length");
  const Json& terms = expect(j, "terms");
  if (!terms.is_array() || terms.empty()) bad("element needs at least one term");
  const RatVec first = rat_vec_from_json(expect(terms.at(0), "v"));
  ModuleElement x(n, static_cast<int>(first.size()));
  for (const auto& term : terms) {
    const MultiIndex s = multi_index_from_json(expect(term, "s"));
    if (s.size() != n) bad("term key has the wrong length");
    x.add_term(s, rat_vec_from_json(expect(term, "v")));
  }
  return {lambda, x};
}

Json to_json(const PolyEndo& fit) {
  Json j;
  j["m"] = fit.m;
  j["dim"] = fit.dim;
  Json terms = Json::array();
  for (const auto& [k, mat] : fit.coeffs)
    terms.push_back(Json{{"k", to_json(k)}, {"matrix", to_json(mat)}});
  j["terms"] = std::move(terms);
  j["total_degree"] = fit.total_degree;
  return j;
}

PolyEndo poly_endo_from_json(const Json& j) {
  PolyEndo fit;
  fit.m = expect_positive_int(j, "m");
  fit.dim = expect_positive_int(j, "dim");
  for (const auto& term : expect(j, "terms")) {
    const MultiIndex k = multi_index_from_json(expect(term, "k"));
    if (k.size() != fit.n()) bad("coefficient key has the wrong length");
    const RatMatrix mat = matrix_from_json(expect(term, "matrix"));
    if (mat.rows() != fit.dim || mat.cols() != fit.dim)
      bad("coefficient matrix does not match dim");
    if (!mat.is_zero()) fit.coeffs[k] = mat;
  }
  const Json& deg = expect(j, "total_degree");
  if (!deg.is_number_integer()) bad("total_degree must be an integer");
  fit.total_degree = deg.get<std::int64_t>();
  return fit;
}

Json to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["passed"] = report.passed();
  j["seed"] = report.seed;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace hamrep
