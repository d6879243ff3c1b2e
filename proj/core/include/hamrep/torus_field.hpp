#pragma once

#include <cstdint>
#include <map>
#include <ostream>

#include "hamrep/multi_index.hpp"
#include "hamrep/rational.hpp"
#include "hamrep/report.hpp"

namespace hamrep {

/// Element of the Lie algebra of Hamiltonian vector fields on the 2m-torus:
/// a finite rational combination of the degree derivations d_i (0-based,
/// i < 2m) and the fields h(r), r in Z^{2m} \ {0}. Canonical form is kept at
/// all times — zero coefficients and the identically-zero symbol h(0) are
/// never stored — so equality of values is structural equality.
class TorusField {
 public:
  explicit TorusField(int m);

  static TorusField zero(int m) { return TorusField(m); }
  static TorusField d(int m, int i);
  static TorusField h(int m, const MultiIndex& r);  // r = 0 gives zero

  int m() const { return m_; }
  int n() const { return 2 * m_; }

  void add_d(int i, const Rational& c);
  void add_h(const MultiIndex& r, const Rational& c);

  const std::map<int, Rational>& d_terms() const { return d_terms_; }
  const std::map<MultiIndex, Rational>& h_terms() const { return h_terms_; }
  bool is_zero() const { return d_terms_.empty() && h_terms_.empty(); }

  TorusField& operator+=(const TorusField& o);
  TorusField& operator-=(const TorusField& o);
  TorusField& operator*=(const Rational& c);
  friend TorusField operator+(TorusField a, const TorusField& b) { return a += b; }
  friend TorusField operator-(TorusField a, const TorusField& b) { return a -= b; }
  friend TorusField operator*(const Rational& c, TorusField a) { return a *= c; }
  friend TorusField operator-(const TorusField& a) { return Rational(-1) * a; }

  friend bool operator==(const TorusField&, const TorusField&) = default;
  friend std::ostream& operator<<(std::ostream& os, const TorusField& f);

 private:
  int m_;
  std::map<int, Rational> d_terms_;
  std::map<MultiIndex, Rational> h_terms_;
};

/// Bilinear extension of [d_i, d_j] = 0, [d_i, h(r)] = r_i h(r),
/// [h(r), h(s)] = omega(r, s) h(r+s).
TorusField bracket(const TorusField& a, const TorusField& b);

/// The Hamiltonian field of the Laurent monomial t^r; zero when r = 0.
TorusField hamiltonian_field_of_monomial(const MultiIndex& r);

/// Samples random basis-element triples with indices in [-extent, extent]^2m
/// and checks the Jacobi identity exactly. Failures are listed individually.
Report verify_jacobi(int m, int samples, std::uint64_t seed, int extent);

/// Samples random combinations a of the derivations d_i and b of the fields
/// h(r) and checks that bracket(a, b) is diagonal in the h-basis with the
/// expected eigenvalue: bracket(a, b) = sum_s (sum_i a_i s_i) b_s h(s).
Report verify_weight_grading(int m, int samples, std::uint64_t seed, int extent);

}  // namespace hamrep
