#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "hamrep/rational.hpp"

namespace hamrep {

using RatVec = std::vector<Rational>;

/// Dense matrix over the exact rationals. Small-dimension workhorse for
/// structure-constant transport, representation validation, and the exact
/// null-space computations behind highest-weight extraction.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const;
  RatMatrix transpose() const;
  Rational trace() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
  friend RatMatrix operator-(const RatMatrix& a) { return Rational(-1) * a; }
  RatMatrix operator*(const RatMatrix& o) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RatMatrix& a);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;  // row-major
};

RatVec operator*(const RatMatrix& a, const RatVec& x);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

bool is_zero(const RatVec& v);
RatVec& operator+=(RatVec& a, const RatVec& b);
RatVec operator*(const Rational& c, RatVec v);

/// Gauss–Jordan to reduced row echelon form, in place; returns the pivot
/// column of each nonzero row, in order.
std::vector<int> rref_in_place(RatMatrix& a);

int rank(RatMatrix a);

/// Basis of {x : A x = 0}, one vector per free column, deterministic order.
std::vector<RatVec> null_space(const RatMatrix& a);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

/// Monic characteristic polynomial det(xI - A); coeffs[i] multiplies x^i.
/// Faddeev–LeVerrier recurrence, exact throughout.
std::vector<Rational> char_poly(const RatMatrix& a);

/// All rational eigenvalues of A, each listed once, ascending. Exact: scales
/// the characteristic polynomial to a monic integer polynomial and tests the
/// finitely many integer root candidates below the Gershgorin radius.
std::vector<Rational> rational_eigenvalues(const RatMatrix& a);

/// Incremental span tracker over Q^dim. Maintains a fully reduced echelon
/// basis, so basis() is canonical: it depends only on the span, not on the
/// order vectors were added. add() returns whether the span grew.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}

  bool add(RatVec v);
  bool contains(RatVec v) const;
  int ambient_dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_full() const { return rank() == dim_; }
  const std::vector<RatVec>& basis() const { return rows_; }

 private:
  // Reduces v against the current rows; returns the first nonzero position
  // of the remainder, or dim_ when v lies in the span.
  int reduce(RatVec& v) const;

  int dim_;
  std::vector<int> pivots_;     // strictly increasing
  std::vector<RatVec> rows_;    // rows_[k] has pivot 1 at pivots_[k]
};

}  // namespace hamrep
