#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hamrep/matrix.hpp"
#include "hamrep/multi_index.hpp"
#include "hamrep/rational.hpp"
#include "hamrep/report.hpp"

namespace hamrep {

/// Element of the polynomial Hamiltonian algebra on 2m variables: a finite
/// rational combination of the basis fields X(r), r in Z_{>=0}^{2m}, r != 0,
/// where X(r) is the Hamiltonian field of the monomial x^r. Canonical form:
/// no zero coefficients, no X(0) key.
class PolyField {
 public:
  explicit PolyField(int m);

  static PolyField zero(int m) { return PolyField(m); }
  static PolyField basis(int m, const NonNegIndex& r);  // r = 0 gives zero

  int m() const { return m_; }
  int n() const { return 2 * m_; }

  void add_term(const NonNegIndex& r, const Rational& c);
  const std::map<NonNegIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  PolyField& operator*=(const Rational& c);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(const Rational& c, PolyField a) { return a *= c; }
  friend PolyField operator-(const PolyField& a) { return Rational(-1) * a; }

  friend bool operator==(const PolyField&, const PolyField&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PolyField& f);

 private:
  int m_;
  std::map<NonNegIndex, Rational> terms_;
};

/// Bilinear extension of
///   [X(r), X(s)] = sum_i (r_{m+i} s_i - r_i s_{m+i}) X(r + s - e_i - e_{m+i}).
/// Whenever the scalar factor is nonzero the shifted index is entrywise
/// non-negative, so the sum is well formed.
PolyField x_bracket(const PolyField& a, const PolyField& b);

/// Index set of the degree-n graded component: all r >= 0 with |r| = n + 2,
/// lexicographic. Size C(n + 2m + 1, 2m - 1). Requires n >= -1.
std::vector<NonNegIndex> grade_component(int m, std::int64_t n);

/// The symplectic form J (with J x pairing axis i against axis m+i) used by
/// the membership predicate below.
RatMatrix symplectic_form(int m);

/// Whether a 2m x 2m matrix lies in the symplectic Lie algebra:
/// M^T J + J M = 0.
bool in_symplectic_algebra(const RatMatrix& mat);

/// Linear isomorphism from the degree-0 component onto the symplectic
/// algebra: expand each X(r), |r| = 2, into linear vector fields x_a d/dx_b
/// and identify x_a d/dx_b with the matrix unit E_{a,b}. Throws when some
/// key has |r| != 2.
RatMatrix sp_iso(const PolyField& a);

/// Inverse of sp_iso. Throws when the matrix is not in the image (i.e. not
/// in the symplectic algebra).
PolyField sp_iso_inverse(int m, const RatMatrix& mat);

/// The weight (r_1 - r_{m+1}, ..., r_m - r_{2m}) of X(r) under the Cartan
/// elements X(e_i + e_{m+i}).
std::vector<std::int64_t> cartan_weight(const NonNegIndex& r);

/// Indices of the raising operators (positive root vectors) in the degree-0
/// component: 2e_i for i <= m, e_i + e_{m+j} for i < j, e_i + e_j for i < j.
std::vector<NonNegIndex> raising_indices(int m);

/// Basis of the joint kernel of ad(R) over all raising operators R, inside
/// the degree-n component. Expected to be one-dimensional. Requires n >= 0.
std::vector<PolyField> highest_weight_vectors(int m, std::int64_t n);

/// Closes the span of the degree-(n+2) field X((n+2) e_1) under the adjoint
/// action of the degree-0 component and checks that it fills the whole
/// component and that the highest-weight space is one-dimensional.
/// Throws std::length_error when the component dimension exceeds 5000.
Report verify_irreducible_component(int m, std::int64_t n);

/// Coordinates of a field supported on `index_set` (lexicographically
/// sorted), and the inverse. Throws when a key falls outside the set.
RatVec to_coordinates(const PolyField& a, const std::vector<NonNegIndex>& index_set);
PolyField from_coordinates(int m, const RatVec& coords,
                           const std::vector<NonNegIndex>& index_set);

/// For every pair of grades a, b in [-1, max_grade] and every basis pair
/// X(j), X(k) of those grades, checks that x_bracket(X(j), X(k)) lies in the
/// grade-(a+b) component, i.e. every surviving key has degree a + b + 2.
Report verify_grade_additivity(int m, std::int64_t max_grade);

/// For every basis element X(j) of the degree-0 component: sp membership of
/// sp_iso(X(j)) and the round trip through sp_iso_inverse; and for every
/// ordered basis pair, transport of the bracket:
/// sp_iso(x_bracket(u, v)) == sp_iso(u) sp_iso(v) - sp_iso(v) sp_iso(u).
Report verify_sp_transport(int m);

}  // namespace hamrep
