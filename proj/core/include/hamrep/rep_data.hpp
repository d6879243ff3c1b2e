#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamrep/matrix.hpp"
#include "hamrep/multi_index.hpp"
#include "hamrep/report.hpp"

namespace hamrep {

/// Finite-dimensional representation data: a finitely supported family of
/// d x d rational matrices P(k) indexed by non-negative multi-indices of
/// length 2m, with P(k) = 0 for |k| >= degree_bound. The linear keys e_i
/// and the key 0 realize a Heisenberg algebra, the higher keys the positive
/// part of the polynomial Hamiltonian algebra.
struct RepData {
  int m = 1;
  int dim = 1;
  std::map<NonNegIndex, RatMatrix> terms;  // nonzero matrices only
  std::int64_t degree_bound = 0;

  int n() const { return 2 * m; }
  /// Stored matrix or nullptr when the key is absent (i.e. P(k) = 0).
  const RatMatrix* find(const NonNegIndex& k) const;
  RatMatrix at_or_zero(const NonNegIndex& k) const;
  /// Inserts, replaces, or erases (when zero) the matrix at key k.
  void set(const NonNegIndex& k, const RatMatrix& value);
};

/// Input data for the irreducible construction: a representation phi of the
/// symplectic algebra given on the standard basis (keyed by label), plus the
/// scalar vector mu for the N commuting generators adjoined to it.
struct IrreducibleSpec {
  int m = 1;
  int dim = 1;
  std::map<std::string, RatMatrix> phi;
  std::vector<Rational> mu;  // length 2m
};

/// One element of the standard basis of the symplectic algebra sp_{2m}:
/// its display label, its 2m x 2m matrix, and the degree-2 index r with
/// sp_iso(X(r)) = x_sign * matrix. The x_index values enumerate every
/// degree-2 multi-index exactly once.
struct SpBasisElement {
  std::string label;
  RatMatrix matrix;
  NonNegIndex x_index;
  int x_sign;
};

/// The standard basis of sp_{2m}: E[i,j]-E[m+j,m+i] for all i,j <= m;
/// E[i,m+j]+E[j,m+i] and E[m+i,j]+E[m+j,i] for i <= j. Labels carry the
/// substituted 1-based indices, e.g. "E[1,1]-E[2,2]" for m = 1.
std::vector<SpBasisElement> sp_basis(int m);

/// Checks that phi respects commutators on all basis pairs; returns a
/// witness describing the first violated pair, or nullopt when valid.
std::optional<std::string> phi_violation(const IrreducibleSpec& spec);

/// The irreducible construction: P(0) = 0, P(e_i) = -mu_i Id and
/// P(e_{m+i}) = +mu_{m+i} Id for i <= m, P(k) = phi(sp_iso(X(k))) for
/// |k| = 2, nothing beyond, degree_bound = 3. Throws std::invalid_argument
/// when phi fails commutator validation.
RepData from_sp_rep(const IrreducibleSpec& spec);

/// The defining representation: phi maps each basis matrix to itself.
IrreducibleSpec sp_defining_rep(int m);

/// The one-dimensional trivial representation (phi = 0 on 1 x 1 matrices).
IrreducibleSpec sp_trivial_rep(int m);

/// Block-diagonal direct sum; both inputs must share m, and the result
/// keeps a's mu vector.
IrreducibleSpec direct_sum(const IrreducibleSpec& a, const IrreducibleSpec& b);

/// Verifies the commutation relations of the P family over all pairs drawn
/// from the support completed by the grid |k| <= degree_bound + 1:
/// [P(j), P(k)] equals the weighted shift sum when |j|, |k| >= 2; equals
/// +-P(0) on the conjugate linear pairs (e_i, e_{m+i}); vanishes otherwise.
Report validate_rep(const RepData& rep);

/// For each axis i <= m, counts the exponents n >= 1 with P(n e_i) != 0 and
/// checks the count against the bound d^2 - d + 1.
Report eigenvalue_bound_check(const RepData& rep);

/// Exact evaluation of the finite sum H(r) = sum_k (r^k / k!) P(k), minus
/// P(0) when r = 0 so that H(0) = 0.
RatMatrix h_operator(const RepData& rep, const MultiIndex& r);

/// Searches for a proper invariant subspace common to all generators by
/// closing each generator's rational eigenspaces (and, when every generator
/// is scalar, flagging dimension >= 2 directly). Finding one proves
/// reducibility; finding none is reported as a clean sweep, not a proof.
/// Throws std::length_error when the dimension exceeds 12.
Report invariant_subspace_sweep(const std::vector<RatMatrix>& generators, int dim);

}  // namespace hamrep
