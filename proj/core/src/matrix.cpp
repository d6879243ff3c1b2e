#include "hamrep/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hamrep {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("RatMatrix: ragged initializer");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix e(n, n);
  for (int i = 0; i < n; ++i) e(i, i) = 1;
  return e;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in *");
  RatMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o(k, j);
        if (!bkj.is_zero()) p(i, j) += aik * bkj;
      }
    }
  return p;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& a) {
  os << '[';
  for (int i = 0; i < a.rows(); ++i) {
    if (i) os << "; ";
    os << '[';
    for (int j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << a(i, j);
    }
    os << ']';
  }
  return os << ']';
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("RatMatrix: shape mismatch in mat*vec");
  RatVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RatVec& operator+=(RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("RatVec: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RatVec operator*(const Rational& c, RatVec v) {
  for (auto& x : v) x *= c;
  return v;
}

std::vector<int> rref_in_place(RatMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = inverse(a(row, col));
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(RatMatrix a) { return static_cast<int>(rref_in_place(a).size()); }

std::vector<RatVec> null_space(const RatMatrix& a) {
  RatMatrix r = a;
  const std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec x(a.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(static_cast<int>(i), f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("solve: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug(static_cast<int>(i), a.cols());
  return x;
}

std::vector<Rational> char_poly(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const int n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    const RatMatrix am = a * m;
    c[n - k] = -am.trace() / Rational(k);
    m = am;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return c;
}

std::vector<Rational> rational_eigenvalues(const RatMatrix& a) {
  const int n = a.rows();
  if (n == 0) return {};
  std::vector<Rational> p = char_poly(a);

  // Scale: x = y / den turns p into a monic integer polynomial q in y.
  Integer den = 1;
  for (const auto& c : p) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    den = g;
  }
  std::vector<Integer> q(n + 1);
  Integer scale = 1;  // den^(n - i) applied from the top coefficient down
  for (int i = n; i >= 0; --i) {
    q[i] = Rational(p[i] * Rational(scale)).numerator();
    scale *= den;
  }

  // Gershgorin: every eigenvalue x of A has |x| <= max row sum of |entries|,
  // so integer roots y = den * x satisfy |y| <= den * bound.
  Rational row_bound;
  for (int i = 0; i < n; ++i) {
    Rational s;
    for (int j = 0; j < n; ++j) {
      Rational e = a(i, j);
      s += e.sign() < 0 ? -e : e;
    }
    if (s > row_bound) row_bound = s;
  }
  Integer limit = (Rational(den) * row_bound).numerator() /
                  (Rational(den) * row_bound).denominator() +
                  1;
  if (limit > 4000000)
    throw std::length_error("rational_eigenvalues: root search bound too large");

  auto eval = [&](const Integer& y) {
    Integer acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * y + q[i];
    return acc;
  };

  // Strip factors of y so divisibility filtering has a nonzero constant term.
  std::vector<Integer> roots;
  std::vector<Integer> qq(q);
  int shift = 0;
  while (shift < n && qq[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  const Integer q0 = qq[shift];

  for (Integer y = 1; y <= limit; ++y) {
    if (!mpz_divisible_p(q0.get_mpz_t(), y.get_mpz_t())) continue;
    if (eval(y) == 0) roots.push_back(y);
    Integer ny = -y;
    if (eval(ny) == 0) roots.push_back(ny);
  }

  std::vector<Rational> out;
  out.reserve(roots.size());
  for (const auto& y : roots) out.emplace_back(y, den);
  std::sort(out.begin(), out.end());
  return out;
}

int SpanBuilder::reduce(RatVec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Rational f = c;
    for (int j = pivots_[k]; j < dim_; ++j)
      if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
  }
  for (int j = 0; j < dim_; ++j)
    if (!v[j].is_zero()) return j;
  return dim_;
}

bool SpanBuilder::add(RatVec v) {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("SpanBuilder: vector length mismatch");
  const int p = reduce(v);
  if (p == dim_) return false;
  const Rational inv = inverse(v[p]);
  for (int j = p; j < dim_; ++j) v[j] *= inv;
  // Keep earlier rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (int j = p; j < dim_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool SpanBuilder::contains(RatVec v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("SpanBuilder: vector length mismatch");
  return reduce(v) == dim_;
}

}  // namespace hamrep
