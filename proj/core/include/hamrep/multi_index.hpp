#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "hamrep/rational.hpp"

namespace hamrep {

/// Integer exponent vector of length N = 2m. Indexes Laurent monomials t^r,
/// basis fields h(r) and X(r), grid points and polynomial coefficients.
/// Entries are signed; functions that require non-negative entries state so.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::int64_t> entries) : e_(std::move(entries)) {}
  MultiIndex(std::initializer_list<std::int64_t> entries) : e_(entries) {}

  static MultiIndex zero(int n) { return MultiIndex(std::vector<std::int64_t>(n, 0)); }
  /// Standard basis vector e_i (0-based axis).
  static MultiIndex unit(int n, int i) {
    MultiIndex r = zero(n);
    r.e_[i] = 1;
    return r;
  }

  int size() const { return static_cast<int>(e_.size()); }
  std::int64_t operator[](int i) const { return e_[i]; }
  std::int64_t& operator[](int i) { return e_[i]; }
  const std::vector<std::int64_t>& entries() const { return e_; }

  /// Sum of entries (the paper-style degree |r|).
  std::int64_t degree() const {
    std::int64_t s = 0;
    for (auto v : e_) s += v;
    return s;
  }
  std::int64_t max_abs() const {
    std::int64_t s = 0;
    for (auto v : e_) s = std::max(s, v < 0 ? -v : v);
    return s;
  }
  bool is_zero() const {
    for (auto v : e_)
      if (v != 0) return false;
    return true;
  }
  bool is_non_negative() const {
    for (auto v : e_)
      if (v < 0) return false;
    return true;
  }

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
  friend MultiIndex operator-(const MultiIndex& a) {
    MultiIndex r = a;
    for (auto& v : r.e_) v = -v;
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Lexicographic; total order used for canonical (deterministic) maps.
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.e_ <=> b.e_;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& r);

 private:
  std::vector<std::int64_t> e_;
};

/// Multi-index with all entries >= 0 (exponents k of the P^(k) family).
/// The constraint is enforced by the owning containers, not the type.
using NonNegIndex = MultiIndex;

/// omega(r, s) = sum_{i<m} (r[m+i]*s[i] - r[i]*s[m+i]); the universal
/// structure constant of every bracket here. Antisymmetric and bilinear.
/// Throws std::invalid_argument on length mismatch or odd length.
std::int64_t symplectic_pairing(const MultiIndex& r, const MultiIndex& s);

/// r^k = prod r[i]^k[i] with 0^0 = 1. k must be entrywise non-negative.
Rational monomial_power(const MultiIndex& r, const NonNegIndex& k);

/// k! = prod k[i]!.
Integer multi_factorial(const NonNegIndex& k);

/// All r in Z_{>=0}^n with |r| = total, in lexicographic order.
std::vector<NonNegIndex> compositions_of(int n, std::int64_t total);

/// All k in Z_{>=0}^n with |k| <= max_total, in lexicographic order.
std::vector<NonNegIndex> indices_up_to(int n, std::int64_t max_total);

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace hamrep
