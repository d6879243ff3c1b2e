// Command-line surface for the exact verification library: drives the
// algebra checks, module-law checks, the irreducible construction, and the
// interpolation round trip, with JSON reports on stdout and a human summary
// on stderr.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error,
// 3 input file did not parse.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamrep/interpolation.hpp"
#include "hamrep/json_io.hpp"
#include "hamrep/poly_field.hpp"
#include "hamrep/rep_data.hpp"
#include "hamrep/report.hpp"
#include "hamrep/torus_field.hpp"
#include "hamrep/weight_module.hpp"

namespace {

using namespace hamrep;

/// Raised when an input file exists but its content does not parse; mapped
/// to exit code 3 (as opposed to 2 for bad flags).
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RepData load_rep(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw ParseFailure(e.what());
  }
  try {
    return rep_data_from_json(Json::parse(text));
  } catch (const std::exception& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(Rational::parse(piece));
  if (out.empty()) throw std::invalid_argument("empty scalar list");
  return out;
}

/// Parses a comma-separated scalar list of expected length n; an absent
/// option yields the zero vector.
std::vector<Rational> parse_scalar_option(const std::string& text, int n,
                                          const std::string& flag) {
  if (text.empty()) return std::vector<Rational>(n);
  auto out = parse_rational_list(text);
  if (static_cast<int>(out.size()) != n) {
    std::ostringstream os;
    os << flag << " needs exactly " << n << " comma-separated scalars, got "
       << out.size();
    throw std::invalid_argument(os.str());
  }
  return out;
}

/// Runs `build`, stamps the elapsed time when requested, prints the JSON
/// report to stdout and the summary to stderr, and maps pass/fail to 0/1.
template <typename Fn>
int emit_report(bool timing, Fn&& build) {
  const auto t0 = std::chrono::steady_clock::now();
  Report report = build();
  const auto t1 = std::chrono::steady_clock::now();
  if (timing)
    report.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::cout << to_json(report).dump(2) << "\n";
  report.summarize(std::cerr);
  return report.passed() ? 0 : 1;
}

/// Prints every nonzero H(r) with |r|_1 <= 2 so the linear and quadratic
/// action coefficients can be inspected directly.
void echo_h_table(const RepData& rep, std::ostream& os) {
  const int n = rep.n();
  os << "H(r) on the window |r|_1 <= 2 (nonzero values only):\n";
  bool any = false;
  MultiIndex r = MultiIndex::zero(n);
  for (int i = 0; i < n; ++i) r[i] = -2;
  for (;;) {
    std::int64_t l1 = 0;
    for (int i = 0; i < n; ++i) l1 += r[i] < 0 ? -r[i] : r[i];
    if (l1 <= 2) {
      const RatMatrix h = h_operator(rep, r);
      if (!h.is_zero()) {
        os << "  H" << r << " = " << h << "\n";
        any = true;
      }
    }
    int axis = n - 1;
    while (axis >= 0 && r[axis] == 2) r[axis--] = -2;
    if (axis < 0) break;
    ++r[axis];
  }
  if (!any) os << "  (all vanish)\n";
}

int run_verify_algebra(int m, int samples, std::uint64_t seed, int extent,
                       bool timing) {
  return emit_report(timing, [&] {
    Report report;
    report.command = "verify-algebra";
    report.seed = seed;
    report.merge(verify_jacobi(m, samples, seed, extent));
    report.merge(verify_weight_grading(m, samples, seed, extent));
    report.merge(verify_grade_additivity(m, 2));
    report.merge(verify_sp_transport(m));
    return report;
  });
}

int run_verify_module(const std::string& rep_path, const std::string& lambda_text,
                      int samples, std::uint64_t seed, int extent,
                      int probe_radius, int depth, bool timing) {
  const RepData rep = load_rep(rep_path);
  const auto lambda = parse_scalar_option(lambda_text, rep.n(), "--lambda");
  return emit_report(timing, [&] {
    Report report;
    report.command = "verify-module";
    report.seed = seed;
    report.merge(validate_rep(rep));
    if (report.passed()) {
      const WeightModule mod{rep, lambda};
      report.merge(verify_module_axioms(mod, samples, seed, extent));
      report.merge(eigenvalue_bound_check(rep));
      if (probe_radius >= 1) {
        RatVec start(rep.dim);
        start[0] = 1;
        report.merge(cyclicity_probe(mod, probe_radius, start, depth));
      }
    }
    return report;
  });
}

int run_build_irreducible(int m, const std::string& phi_name,
                          const std::string& mu_text, const std::string& out_path,
                          bool require_irreducible, bool timing) {
  IrreducibleSpec spec = phi_name == "defining" ? sp_defining_rep(m) : sp_trivial_rep(m);
  spec.mu = parse_scalar_option(mu_text, 2 * m, "--mu");
  return emit_report(timing, [&] {
    Report report;
    report.command = "build-irreducible";
    if (require_irreducible) {
      std::vector<RatMatrix> generators;
      for (const auto& [label, mat] : spec.phi) generators.push_back(mat);
      report.merge(invariant_subspace_sweep(generators, spec.dim));
    }
    const RepData rep = from_sp_rep(spec);
    report.merge(validate_rep(rep));
    report.merge(eigenvalue_bound_check(rep));
    write_text_file(out_path, to_json(rep).dump(2) + "\n");
    std::ostringstream os;
    os << out_path << ": dim=" << rep.dim << ", " << rep.terms.size()
       << " nonzero coefficient keys, degree_bound=" << rep.degree_bound;
    report.add_pass("wrote representation data", os.str());
    echo_h_table(rep, std::cerr);
    return report;
  });
}

int run_interpolate(const std::string& rep_path, int extent, std::uint64_t seed,
                    int points, const std::string& out_path, bool timing) {
  const RepData rep = load_rep(rep_path);
  const int used_extent =
      extent > 0 ? extent : static_cast<int>(rep.degree_bound) + 1;
  return emit_report(timing, [&] {
    Report report;
    report.command = "interpolate";
    report.seed = seed;
    report.merge(validate_rep(rep));
    if (report.passed()) {
      report.merge(verify_polynomial_action(rep, used_extent, seed, points));
      report.merge(delta_correction_check(rep));
      if (!out_path.empty()) {
        const GridSpec grid = GridSpec::positive_uniform(rep.n(), used_extent);
        std::map<MultiIndex, RatMatrix> samples;
        for (const auto& r : grid.points()) samples.emplace(r, h_operator(rep, r));
        const PolyEndo fit = fit_on_grid(samples, grid, rep.degree_bound);
        write_text_file(out_path, to_json(fit).dump(2) + "\n");
        std::ostringstream os;
        os << out_path << ": total_degree=" << fit.total_degree << ", "
           << fit.coeffs.size() << " nonzero coefficient keys";
        report.add_pass("wrote fitted polynomial", os.str());
      }
    }
    return report;
  });
}

int run_hwv(int m, std::int64_t n) {
  const auto vectors = highest_weight_vectors(m, n);
  Json out = Json::array();
  for (const auto& v : vectors) out.push_back(to_json(v));
  std::cout << out.dump(2) << "\n";
  std::cerr << "grade " << n << " component at m=" << m << " carries "
            << vectors.size() << " highest-weight vector(s)\n";
  return 0;
}

int run_irreducible_component(int m, std::int64_t n, bool timing) {
  return emit_report(timing, [&] { return verify_irreducible_component(m, n); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational verifier for the Hamiltonian-field algebra on a torus "
               "and its polynomial weight modules"};
  app.require_subcommand(1);

  struct {
    int m = 1;
    int samples = 1000;
    std::uint64_t seed = 0;
    int extent = 3;
    bool timing = false;
  } va_opt;
  auto* va = app.add_subcommand("verify-algebra",
                                "Jacobi, grading, and symplectic-transport checks");
  va->add_option("--m", va_opt.m, "Half the torus dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  va->add_option("--samples", va_opt.samples, "Random triples to test")->capture_default_str();
  va->add_option("--seed", va_opt.seed, "Root seed")->capture_default_str();
  va->add_option("--extent", va_opt.extent, "Index entries drawn from [-extent, extent]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  va->add_flag("--timing", va_opt.timing, "Record elapsed milliseconds in the report");

  struct {
    std::string rep_path;
    std::string lambda_text;
    int samples = 200;
    std::uint64_t seed = 0;
    int extent = 3;
    int probe_radius = 0;
    int depth = 2;
    bool timing = false;
  } vm_opt;
  auto* vm = app.add_subcommand("verify-module",
                                "Validate a stored P family and the module laws built on it");
  vm->add_option("--rep", vm_opt.rep_path, "Representation data (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  vm->add_option("--lambda", vm_opt.lambda_text,
                 "Weight offset, comma-separated scalars of length 2m (default all 0)");
  vm->add_option("--samples", vm_opt.samples, "Random samples per law")->capture_default_str();
  vm->add_option("--seed", vm_opt.seed, "Root seed")->capture_default_str();
  vm->add_option("--extent", vm_opt.extent, "Index entries drawn from [-extent, extent]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  vm->add_option("--probe-radius", vm_opt.probe_radius,
                 "When >= 1, run the cyclicity probe on this index window")->capture_default_str();
  vm->add_option("--depth", vm_opt.depth, "Maximum word length for the cyclicity probe")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  vm->add_flag("--timing", vm_opt.timing, "Record elapsed milliseconds in the report");

  struct {
    int m = 1;
    std::string phi_name;
    std::string mu_text;
    std::string out_path;
    bool require_irreducible = false;
    bool timing = false;
  } bi_opt;
  auto* bi = app.add_subcommand("build-irreducible",
                                "Construct the P family of a weight module from "
                                "symplectic representation data");
  bi->add_option("--m", bi_opt.m, "Half the torus dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  bi->add_option("--phi", bi_opt.phi_name, "Built-in symplectic representation")
      ->required()
      ->check(CLI::IsMember({"defining", "trivial"}));
  bi->add_option("--mu", bi_opt.mu_text,
                 "Scalars for the 2m commuting generators, comma-separated (default all 0)");
  bi->add_option("--out", bi_opt.out_path, "Output path for the representation JSON")
      ->required();
  bi->add_flag("--require-irreducible", bi_opt.require_irreducible,
               "Also sweep for proper invariant subspaces of the input representation");
  bi->add_flag("--timing", bi_opt.timing, "Record elapsed milliseconds in the report");

  struct {
    std::string rep_path;
    int extent = 0;
    std::uint64_t seed = 0xC0FFEE;
    int points = 200;
    std::string out_path;
    bool timing = false;
  } ip_opt;
  auto* ip = app.add_subcommand("interpolate",
                                "Fit the operator family on a grid and verify the "
                                "polynomial action off-grid");
  ip->add_option("--rep", ip_opt.rep_path, "Representation data (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  ip->add_option("--extent", ip_opt.extent,
                 "Grid {1..extent}^2m; 0 selects degree_bound + 1")->capture_default_str();
  ip->add_option("--seed", ip_opt.seed, "Seed for off-grid sampling")->capture_default_str();
  ip->add_option("--points", ip_opt.points, "Off-grid points to verify")->capture_default_str();
  ip->add_option("--out", ip_opt.out_path, "Optional output path for the fitted polynomial");
  ip->add_flag("--timing", ip_opt.timing, "Record elapsed milliseconds in the report");

  struct {
    int m = 1;
    std::int64_t grade = 0;
  } hw_opt;
  auto* hw = app.add_subcommand("hwv",
                                "Print the highest-weight vectors of a graded component");
  hw->add_option("--m", hw_opt.m, "Half the number of variables")
      ->required()
      ->check(CLI::PositiveNumber);
  hw->add_option("--n", hw_opt.grade, "Grade of the component")
      ->required()
      ->check(CLI::NonNegativeNumber);

  struct {
    int m = 1;
    std::int64_t grade = 0;
    bool timing = false;
  } ic_opt;
  auto* ic = app.add_subcommand("irreducible-component",
                                "Check that one graded component is irreducible with a "
                                "one-dimensional highest-weight space");
  ic->add_option("--m", ic_opt.m, "Half the number of variables")
      ->required()
      ->check(CLI::PositiveNumber);
  ic->add_option("--n", ic_opt.grade, "Grade of the component")
      ->required()
      ->check(CLI::NonNegativeNumber);
  ic->add_flag("--timing", ic_opt.timing, "Record elapsed milliseconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (va->parsed())
      return run_verify_algebra(va_opt.m, va_opt.samples, va_opt.seed, va_opt.extent,
                                va_opt.timing);
    if (vm->parsed())
      return run_verify_module(vm_opt.rep_path, vm_opt.lambda_text, vm_opt.samples,
                               vm_opt.seed, vm_opt.extent, vm_opt.probe_radius,
                               vm_opt.depth, vm_opt.timing);
    if (bi->parsed())
      return run_build_irreducible(bi_opt.m, bi_opt.phi_name, bi_opt.mu_text,
                                   bi_opt.out_path, bi_opt.require_irreducible,
                                   bi_opt.timing);
    if (ip->parsed())
      return run_interpolate(ip_opt.rep_path, ip_opt.extent, ip_opt.seed, ip_opt.points,
                             ip_opt.out_path, ip_opt.timing);
    if (hw->parsed()) return run_hwv(hw_opt.m, hw_opt.grade);
    if (ic->parsed()) return run_irreducible_component(ic_opt.m, ic_opt.grade, ic_opt.timing);
  } catch (const ParseFailure& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
