#include "hamrep/interpolation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamrep/parallel.hpp"
#include "hamrep/rng.hpp"

namespace hamrep {

RatMatrix PolyEndo::evaluate(const MultiIndex& r) const {
  if (r.size() != n()) throw std::invalid_argument("PolyEndo: index length mismatch");
  RatMatrix out(dim, dim);
  for (const auto& [k, mat] : coeffs) {
    const Rational c = monomial_power(r, k) / Rational(multi_factorial(k));
    if (!c.is_zero()) out += c * mat;
  }
  return out;
}

GridSpec GridSpec::positive_uniform(int n, int extent) {
  if (n < 1 || extent < 1)
    throw std::invalid_argument("GridSpec: need at least one axis and one value");
  GridSpec g;
  g.axes.assign(n, {});
  for (auto& axis : g.axes)
    for (std::int64_t v = 1; v <= extent; ++v) axis.push_back(v);
  return g;
}

std::vector<MultiIndex> GridSpec::points() const {
  const int n = static_cast<int>(axes.size());
  std::vector<MultiIndex> out;
  std::vector<std::size_t> pos(n, 0);
  for (;;) {
    MultiIndex p = MultiIndex::zero(n);
    for (int i = 0; i < n; ++i) p[i] = axes[i][pos[i]];
    out.push_back(std::move(p));
    int axis = n - 1;
    while (axis >= 0 && ++pos[axis] == axes[axis].size()) pos[axis--] = 0;
    if (axis < 0) break;
  }
  return out;
}

bool GridSpec::contains(const MultiIndex& r) const {
  if (r.size() != static_cast<int>(axes.size())) return false;
  for (int i = 0; i < r.size(); ++i)
    if (std::find(axes[i].begin(), axes[i].end(), r[i]) == axes[i].end()) return false;
  return true;
}

namespace {

// Monomial coefficients of the unique polynomial through (x_j, y_j):
// divided differences, then expansion of the Newton form.
std::vector<RatMatrix> interpolate_axis(const std::vector<std::int64_t>& xs,
                                        std::vector<RatMatrix> ys) {
  const int k = static_cast<int>(xs.size()) - 1;
  for (int level = 1; level <= k; ++level)
    for (int j = k; j >= level; --j) {
      ys[j] -= ys[j - 1];
      ys[j] *= Rational(1, xs[j] - xs[j - level]);
    }
  std::vector<RatMatrix> coeffs;
  coeffs.push_back(ys[k]);
  for (int j = k - 1; j >= 0; --j) {
    // coeffs <- coeffs * (x - x_j) + dd_j
    coeffs.push_back(coeffs.back());
    for (int p = static_cast<int>(coeffs.size()) - 2; p >= 1; --p) {
      coeffs[p] *= Rational(-xs[j]);
      coeffs[p] += coeffs[p - 1];
    }
    coeffs[0] *= Rational(-xs[j]);
    coeffs[0] += ys[j];
  }
  return coeffs;
}

}  // namespace

PolyEndo fit_on_grid(const std::map<MultiIndex, RatMatrix>& samples,
                     const GridSpec& grid, std::int64_t degree) {
  const int n = static_cast<int>(grid.axes.size());
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("fit_on_grid: axis count must be even and >= 2");
  std::size_t total = 1;
  for (const auto& axis : grid.axes) {
    if (static_cast<std::int64_t>(axis.size()) < degree + 1)
      throw std::invalid_argument("fit_on_grid: axis too small for the requested degree");
    if (std::set<std::int64_t>(axis.begin(), axis.end()).size() != axis.size())
      throw std::invalid_argument("fit_on_grid: duplicate axis values");
    total *= axis.size();
  }
  if (samples.empty()) throw std::invalid_argument("fit_on_grid: no samples");
  const int d = samples.begin()->second.rows();

  // Row-major flat array over the per-axis positions.
  std::vector<std::size_t> stride(n, 1);
  for (int a = n - 2; a >= 0; --a) stride[a] = stride[a + 1] * grid.axes[a + 1].size();

  std::vector<RatMatrix> data;
  data.reserve(total);
  for (const auto& p : grid.points()) {
    const auto it = samples.find(p);
    if (it == samples.end()) {
      std::ostringstream os;
      os << "fit_on_grid: missing sample at grid point " << p;
      throw std::invalid_argument(os.str());
    }
    if (it->second.rows() != d || it->second.cols() != d)
      throw std::invalid_argument("fit_on_grid: inconsistent sample dimensions");
    data.push_back(it->second);
  }

  // Sweep axis by axis; after the sweep, the index along that axis means
  // monomial power instead of sample position.
  for (int a = 0; a < n; ++a) {
    const std::size_t len = grid.axes[a].size();
    const std::size_t block = stride[a];
    const std::size_t jump = block * len;
    for (std::size_t base = 0; base < total; base += jump)
      for (std::size_t off = 0; off < block; ++off) {
        std::vector<RatMatrix> ys;
        ys.reserve(len);
        for (std::size_t t = 0; t < len; ++t) ys.push_back(data[base + off + t * block]);
        const std::vector<RatMatrix> cs = interpolate_axis(grid.axes[a], std::move(ys));
        for (std::size_t t = 0; t < len; ++t) data[base + off + t * block] = cs[t];
      }
  }

  PolyEndo fit;
  fit.m = n / 2;
  fit.dim = d;
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (!data[flat].is_zero()) {
      MultiIndex k = MultiIndex::zero(n);
      for (int a = 0; a < n; ++a) k[a] = static_cast<std::int64_t>(pos[a]);
      RatMatrix scaled = data[flat];
      scaled *= Rational(multi_factorial(k));
      fit.coeffs.emplace(std::move(k), std::move(scaled));
    }
    int axis = n - 1;
    while (axis >= 0 && ++pos[axis] == grid.axes[axis].size()) pos[axis--] = 0;
  }
  for (const auto& [k, mat] : fit.coeffs)
    fit.total_degree = std::max(fit.total_degree, k.degree());
  return fit;
}

Report verify_polynomial_action(const RepData& rep, int extent, std::uint64_t seed,
                                int off_grid_points) {
  if (extent < rep.degree_bound + 1)
    throw std::invalid_argument(
        "verify_polynomial_action: extent must be at least degree_bound + 1");
  Report report;
  report.command = "verify_polynomial_action";
  report.seed = seed;

  const GridSpec grid = GridSpec::positive_uniform(rep.n(), extent);
  std::map<MultiIndex, RatMatrix> samples;
  for (const auto& p : grid.points()) samples.emplace(p, h_operator(rep, p));
  const PolyEndo fit = fit_on_grid(samples, grid, rep.degree_bound);

  {
    std::string witness;
    if (!(fit.coeffs == rep.terms)) {
      std::ostringstream os;
      os << "fitted support {";
      for (const auto& [k, mat] : fit.coeffs) os << k << " ";
      os << "} vs stored {";
      for (const auto& [k, mat] : rep.terms) os << k << " ";
      os << "}";
      for (const auto& [k, mat] : fit.coeffs) {
        if (!(rep.at_or_zero(k) == mat)) {
          os << "; first mismatch at " << k;
          break;
        }
      }
      witness = os.str();
      report.add_fail("fitted coefficients equal the stored family", witness);
    } else {
      std::ostringstream os;
      os << fit.coeffs.size() << " coefficients, total degree " << fit.total_degree;
      report.add_pass("fitted coefficients equal the stored family", os.str());
    }
  }

  const SplitRng root(seed);
  const auto witnesses =
      parallel_map(static_cast<std::size_t>(off_grid_points), [&](std::size_t i) {
        SplitRng rng = root.split(i);
        MultiIndex r = MultiIndex::zero(rep.n());
        do {
          for (int a = 0; a < rep.n(); ++a)
            r[a] = rng.uniform_int(-3L * extent, 3L * extent);
        } while (r.is_zero() || grid.contains(r));
        std::string witness;
        if (!(fit.evaluate(r) == h_operator(rep, r))) {
          std::ostringstream os;
          os << "prediction differs at r=" << r;
          witness = os.str();
        }
        return witness;
      });
  int failures = 0;
  for (const auto& w : witnesses)
    if (!w.empty()) {
      report.add_fail("off-grid prediction", w);
      ++failures;
    }
  std::ostringstream os;
  os << off_grid_points << " points in [-3*extent, 3*extent]^" << rep.n() << ", "
     << failures << " mismatches";
  if (failures == 0)
    report.add_pass("off-grid predictions match", os.str());
  else
    report.add_fail("off-grid predictions match", os.str());
  return report;
}

Report delta_correction_check(const RepData& rep) {
  Report report;
  report.command = "delta_correction_check";

  const int extent = static_cast<int>(std::max<std::int64_t>(2, rep.degree_bound + 1));
  const GridSpec grid = GridSpec::positive_uniform(rep.n(), extent);
  std::map<MultiIndex, RatMatrix> samples;
  for (const auto& p : grid.points()) samples.emplace(p, h_operator(rep, p));
  const PolyEndo fit = fit_on_grid(samples, grid, std::max<std::int64_t>(rep.degree_bound, 0));

  const MultiIndex origin = MultiIndex::zero(rep.n());
  const RatMatrix p0 = rep.at_or_zero(origin);
  const bool vacuous = p0.is_zero();

  std::ostringstream note;
  note << (vacuous ? "center matrix is zero (vacuous case)" : "center matrix is nonzero");
  if (fit.evaluate(origin) == p0)
    report.add_pass("fitted value at the origin equals the center matrix", note.str());
  else {
    std::ostringstream os;
    os << "fit(0)=" << fit.evaluate(origin) << ", center=" << p0;
    report.add_fail("fitted value at the origin equals the center matrix", os.str());
  }
  if (h_operator(rep, origin).is_zero())
    report.add_pass("operator vanishes at the origin");
  else
    report.add_fail("operator vanishes at the origin", "H(0) != 0");
  return report;
}

}  // namespace hamrep
