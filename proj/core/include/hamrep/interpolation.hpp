#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hamrep/matrix.hpp"
#include "hamrep/multi_index.hpp"
#include "hamrep/rep_data.hpp"
#include "hamrep/report.hpp"

namespace hamrep {

/// Endomorphism-valued polynomial in 2m integer variables, with the matrix
/// stored at key k being the coefficient of r^k / k!. All stored matrices
/// are nonzero; total_degree bounds |k| over the support.
struct PolyEndo {
  int m = 1;
  int dim = 1;
  std::map<NonNegIndex, RatMatrix> coeffs;
  std::int64_t total_degree = 0;

  int n() const { return 2 * m; }
  /// Exact evaluation of the finite sum at the integer point r.
  RatMatrix evaluate(const MultiIndex& r) const;
};

/// Product grid: one list of distinct integer sample values per axis.
struct GridSpec {
  std::vector<std::vector<std::int64_t>> axes;

  /// The grid {1..extent}^n of strictly positive points (avoids the origin).
  static GridSpec positive_uniform(int n, int extent);
  /// All grid points, lexicographic in the per-axis positions.
  std::vector<MultiIndex> points() const;
  bool contains(const MultiIndex& r) const;
};

/// The unique interpolant of per-axis degree < axis size through samples
/// covering the full product grid, computed by iterated one-dimensional
/// divided-difference interpolation, exactly. `degree` states the intended
/// per-axis fit degree; every axis must carry at least degree+1 values.
/// Throws std::invalid_argument on duplicate axis values or a missing
/// grid sample.
PolyEndo fit_on_grid(const std::map<MultiIndex, RatMatrix>& samples,
                     const GridSpec& grid, std::int64_t degree);

/// Samples H(r) on {1..extent}^2m, fits, and asserts (a) the fitted
/// coefficients reproduce the stored P family exactly and (b) the fit
/// predicts H(r) at `off_grid_points` random points away from the grid and
/// the origin, with entries in [-3 extent, 3 extent].
/// Requires extent >= rep.degree_bound + 1.
Report verify_polynomial_action(const RepData& rep, int extent,
                                std::uint64_t seed = 0xC0FFEE,
                                int off_grid_points = 200);

/// Confirms the removable defect at the origin: the fitted polynomial's
/// value at r = 0 is P(0) while the operator itself satisfies H(0) = 0.
Report delta_correction_check(const RepData& rep);

}  // namespace hamrep
