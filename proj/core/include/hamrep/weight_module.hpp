#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "hamrep/matrix.hpp"
#include "hamrep/multi_index.hpp"
#include "hamrep/rep_data.hpp"
#include "hamrep/report.hpp"

namespace hamrep {

/// A weight module carried by Laurent polynomials tensored with a fixed
/// finite-dimensional space V: the torus algebra acts through the P family
/// in `rep`, and the derivations act diagonally with offset `lambda`.
struct WeightModule {
  RepData rep;
  std::vector<Rational> lambda;  // length 2m

  int n() const { return rep.n(); }
};

/// Finite sum of homogeneous terms t^s (x) v with v a rational vector.
/// Canonical form: zero vectors are never stored, so equality of elements
/// is structural equality of the term maps.
class ModuleElement {
 public:
  ModuleElement(int n, int dim);

  static ModuleElement term(int n, const MultiIndex& s, RatVec v);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const std::map<MultiIndex, RatVec>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& s, const RatVec& v);

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement& operator*=(const Rational& c);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Rational& c, ModuleElement a) { return a *= c; }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ModuleElement& x);

 private:
  int n_;
  int dim_;
  std::map<MultiIndex, RatVec> terms_;
};

/// Derivation action: scales each term t^s (x) v by (s_a + lambda_a).
/// The axis a is 0-based; throws std::out_of_range when a >= 2m.
ModuleElement act_d(const WeightModule& mod, int a, const ModuleElement& x);

/// Multiplication by the Laurent monomial t^r: shifts every key by r.
ModuleElement act_laurent(const WeightModule& mod, const MultiIndex& r,
                          const ModuleElement& x);

/// The field action: t^s (x) v maps to
///   omega(r, s) t^{r+s} (x) v + t^{r+s} (x) H(r) v,
/// and r = 0 acts as zero.
ModuleElement act_h(const WeightModule& mod, const MultiIndex& r,
                    const ModuleElement& x);

/// Randomized exact verification of the module laws: bracket compatibility,
/// the Leibniz rule against Laurent multiplication, the H-matrix commutator
/// identity, and derivation-eigenvalue bookkeeping.
Report verify_module_axioms(const WeightModule& mod, int samples,
                            std::uint64_t seed, int extent);

/// Canonical basis of the span of V-vectors reachable from `start` by words
/// of length <= depth in the weight-preserving operators H(r), 0 < r with
/// max-norm <= window_radius. A finite-window necessary condition for the
/// module generated by t^0 (x) start to exhaust V.
std::vector<RatVec> reachable_span(const WeightModule& mod, int window_radius,
                                   const RatVec& start, int depth = 2);

/// Reports the reachable-span dimension against dim V. Heuristic by design
/// (finite window, bounded word length) and labeled as such in the report.
Report cyclicity_probe(const WeightModule& mod, int window_radius,
                       const RatVec& start, int depth = 2);

}  // namespace hamrep
