#include "hamrep/poly_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamrep {

PolyField::PolyField(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("PolyField: m must be positive");
}

PolyField PolyField::basis(int m, const NonNegIndex& r) {
  PolyField f(m);
  f.add_term(r, 1);
  return f;
}

void PolyField::add_term(const NonNegIndex& r, const Rational& c) {
  if (r.size() != n()) throw std::invalid_argument("PolyField: index length mismatch");
  if (!r.is_non_negative())
    throw std::invalid_argument("PolyField: index must be non-negative");
  if (c.is_zero() || r.is_zero()) return;  // X(0) = 0
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyField& PolyField::operator+=(const PolyField& o) {
  if (m_ != o.m_) throw std::invalid_argument("PolyField: dimension mismatch");
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  if (m_ != o.m_) throw std::invalid_argument("PolyField: dimension mismatch");
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

PolyField& PolyField::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, v] : terms_) v *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const PolyField& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [r, c] : f.terms()) {
    os << (first ? "" : " + ") << c << "*X" << r;
    first = false;
  }
  return os;
}

PolyField x_bracket(const PolyField& a, const PolyField& b) {
  if (a.m() != b.m()) throw std::invalid_argument("x_bracket: dimension mismatch");
  const int m = a.m();
  PolyField out(m);
  for (const auto& [r, ca] : a.terms())
    for (const auto& [s, cb] : b.terms()) {
      const Rational c = ca * cb;
      for (int i = 0; i < m; ++i) {
        const std::int64_t w = r[m + i] * s[i] - r[i] * s[m + i];
        if (w == 0) continue;
        MultiIndex key = r + s;
        key[i] -= 1;
        key[m + i] -= 1;
        out.add_term(key, c * Rational(w));
      }
    }
  return out;
}

std::vector<NonNegIndex> grade_component(int m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("grade_component: m must be positive");
  if (n < -1) throw std::invalid_argument("grade_component: n must be >= -1");
  return compositions_of(2 * m, n + 2);
}

RatMatrix symplectic_form(int m) {
  const int n = 2 * m;
  RatMatrix j(n, n);
  for (int i = 0; i < m; ++i) {
    j(i, m + i) = -1;
    j(m + i, i) = 1;
  }
  return j;
}

bool in_symplectic_algebra(const RatMatrix& mat) {
  if (mat.rows() != mat.cols() || mat.rows() % 2 != 0) return false;
  const RatMatrix j = symplectic_form(mat.rows() / 2);
  return (mat.transpose() * j + j * mat).is_zero();
}

namespace {

// The axis of a degree-one non-negative index (the unique position holding 1).
int single_axis(const MultiIndex& r) {
  for (int i = 0; i < r.size(); ++i)
    if (r[i] != 0) return i;
  throw std::logic_error("single_axis: zero index");
}

}  // namespace

RatMatrix sp_iso(const PolyField& a) {
  const int m = a.m();
  const int n = 2 * m;
  RatMatrix out(n, n);
  for (const auto& [r, c] : a.terms()) {
    if (r.degree() != 2)
      throw std::invalid_argument("sp_iso: field is not in the degree-0 component");
    // X(r) = sum_i r_{m+i} x^{r-e_{m+i}} d/dx_i - r_i x^{r-e_i} d/dx_{m+i};
    // each surviving monomial x^{r-e_a} has degree 1, so the field is linear
    // and x_a d/dx_b contributes to the (a, b) matrix entry.
    for (int i = 0; i < m; ++i) {
      if (r[m + i] > 0) {
        MultiIndex mono = r;
        mono[m + i] -= 1;
        out(single_axis(mono), i) += c * Rational(r[m + i]);
      }
      if (r[i] > 0) {
        MultiIndex mono = r;
        mono[i] -= 1;
        out(single_axis(mono), m + i) -= c * Rational(r[i]);
      }
    }
  }
  return out;
}

PolyField sp_iso_inverse(int m, const RatMatrix& mat) {
  const int n = 2 * m;
  if (mat.rows() != n || mat.cols() != n)
    throw std::invalid_argument("sp_iso_inverse: matrix size mismatch");
  const std::vector<NonNegIndex> basis = grade_component(m, 0);
  const int dim = static_cast<int>(basis.size());
  RatMatrix images(n * n, dim);
  for (int j = 0; j < dim; ++j) {
    const RatMatrix img = sp_iso(PolyField::basis(m, basis[j]));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) images(a * n + b, j) = img(a, b);
  }
  RatVec target(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) target[a * n + b] = mat(a, b);
  const auto coords = solve(images, target);
  if (!coords)
    throw std::invalid_argument("sp_iso_inverse: matrix is not in the symplectic algebra");
  return from_coordinates(m, *coords, basis);
}

std::vector<std::int64_t> cartan_weight(const NonNegIndex& r) {
  if (r.size() % 2 != 0) throw std::invalid_argument("cartan_weight: odd length");
  if (r.is_zero()) throw std::invalid_argument("cartan_weight: zero index");
  const int m = r.size() / 2;
  std::vector<std::int64_t> w(m);
  for (int i = 0; i < m; ++i) w[i] = r[i] - r[m + i];
  return w;
}

std::vector<NonNegIndex> raising_indices(int m) {
  const int n = 2 * m;
  std::vector<NonNegIndex> out;
  for (int i = 0; i < m; ++i) {
    MultiIndex r = MultiIndex::zero(n);
    r[i] = 2;
    out.push_back(r);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      out.push_back(MultiIndex::unit(n, i) + MultiIndex::unit(n, m + j));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      out.push_back(MultiIndex::unit(n, i) + MultiIndex::unit(n, j));
  return out;
}

RatVec to_coordinates(const PolyField& a, const std::vector<NonNegIndex>& index_set) {
  RatVec coords(index_set.size());
  for (const auto& [r, c] : a.terms()) {
    const auto it = std::lower_bound(index_set.begin(), index_set.end(), r);
    if (it == index_set.end() || !(*it == r))
      throw std::invalid_argument("to_coordinates: key outside the index set");
    coords[it - index_set.begin()] = c;
  }
  return coords;
}

PolyField from_coordinates(int m, const RatVec& coords,
                           const std::vector<NonNegIndex>& index_set) {
  if (coords.size() != index_set.size())
    throw std::invalid_argument("from_coordinates: length mismatch");
  PolyField f(m);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(index_set[i], coords[i]);
  return f;
}

std::vector<PolyField> highest_weight_vectors(int m, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("highest_weight_vectors: n must be >= 0");
  const std::vector<NonNegIndex> component = grade_component(m, n);
  const int dim = static_cast<int>(component.size());
  const std::vector<NonNegIndex> raising = raising_indices(m);

  // Intersect ker ad(R) over the raising operators, working in coordinates
  // of the current kernel so each null-space problem stays small.
  std::vector<RatVec> kernel;  // basis of the running intersection
  kernel.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    RatVec e(dim);
    e[i] = 1;
    kernel.push_back(std::move(e));
  }

  for (const auto& rk : raising) {
    const PolyField op = PolyField::basis(m, rk);
    const int cur = static_cast<int>(kernel.size());
    if (cur == 0) break;
    RatMatrix action(dim, cur);
    for (int j = 0; j < cur; ++j) {
      const PolyField img = x_bracket(op, from_coordinates(m, kernel[j], component));
      const RatVec coords = to_coordinates(img, component);
      for (int i = 0; i < dim; ++i) action(i, j) = coords[i];
    }
    std::vector<RatVec> reduced = null_space(action);
    std::vector<RatVec> next;
    next.reserve(reduced.size());
    for (const auto& combo : reduced) {
      RatVec v(dim);
      for (int j = 0; j < cur; ++j)
        if (!combo[j].is_zero())
          for (int i = 0; i < dim; ++i) v[i] += combo[j] * kernel[j][i];
      next.push_back(std::move(v));
    }
    kernel = std::move(next);
  }

  std::vector<PolyField> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) out.push_back(from_coordinates(m, v, component));
  return out;
}

Report verify_irreducible_component(int m, std::int64_t n) {
  if (n < 0)
    throw std::invalid_argument("verify_irreducible_component: n must be >= 0");
  Report report;
  report.command = "verify_irreducible_component";

  const std::vector<NonNegIndex> component = grade_component(m, n);
  const int dim = static_cast<int>(component.size());
  if (dim > 5000)
    throw std::length_error("verify_irreducible_component: component dimension " +
                            std::to_string(dim) + " exceeds the guard (5000)");
  const Integer expected = binomial(n + 2 * m + 1, 2 * m - 1);

  const std::vector<NonNegIndex> degree_zero = grade_component(m, 0);
  MultiIndex start = MultiIndex::zero(2 * m);
  start[0] = n + 2;

  SpanBuilder span(dim);
  span.add(to_coordinates(PolyField::basis(m, start), component));
  std::vector<RatVec> frontier = span.basis();
  int passes = 0;
  while (!frontier.empty() && !span.is_full() && passes <= dim + 1) {
    ++passes;
    std::vector<RatVec> next;
    for (const auto& v : frontier) {
      const PolyField field = from_coordinates(m, v, component);
      for (const auto& rk : degree_zero) {
        const PolyField img = x_bracket(PolyField::basis(m, rk), field);
        RatVec coords = to_coordinates(img, component);
        if (span.add(coords)) next.push_back(std::move(coords));
      }
    }
    frontier = std::move(next);
  }

  {
    std::ostringstream os;
    os << "m=" << m << ", n=" << n << ", reached=" << span.rank()
       << ", expected=" << expected << ", passes=" << passes;
    if (Integer(span.rank()) == expected)
      report.add_pass("adjoint closure spans the component", os.str());
    else
      report.add_fail("adjoint closure spans the component", os.str());
  }
  {
    const auto hwv = highest_weight_vectors(m, n);
    std::ostringstream os;
    os << "m=" << m << ", n=" << n << ", kernel rank=" << hwv.size();
    if (!hwv.empty()) os << ", vector=" << hwv.front();
    if (hwv.size() == 1)
      report.add_pass("highest-weight space is one-dimensional", os.str());
    else
      report.add_fail("highest-weight space is one-dimensional", os.str());
  }
  return report;
}

Report verify_grade_additivity(int m, std::int64_t max_grade) {
  if (m < 1) throw std::invalid_argument("verify_grade_additivity: m must be positive");
  if (max_grade < -1) throw std::invalid_argument("verify_grade_additivity: max_grade must be >= -1");
  Report report;
  report.command = "verify_grade_additivity";

  std::int64_t pairs = 0;
  std::int64_t failures = 0;
  for (std::int64_t a = -1; a <= max_grade; ++a) {
    const auto left = grade_component(m, a);
    for (std::int64_t b = -1; b <= max_grade; ++b) {
      const auto right = grade_component(m, b);
      for (const auto& j : left) {
        for (const auto& k : right) {
          ++pairs;
          const PolyField br = x_bracket(PolyField::basis(m, j), PolyField::basis(m, k));
          bool ok = true;
          for (const auto& [key, coeff] : br.terms())
            if (key.degree() != a + b + 2) ok = false;
          if (!ok) {
            ++failures;
            std::ostringstream os;
            os << "j=" << j << " (grade " << a << "), k=" << k << " (grade " << b
               << "), bracket=" << br;
            report.add_fail("grade additivity pair", os.str());
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << "m=" << m << ", grades in [-1," << max_grade << "], pairs=" << pairs
     << ", failures=" << failures;
  if (failures == 0)
    report.add_pass("brackets of graded components land in the sum grade", os.str());
  else
    report.add_fail("brackets of graded components land in the sum grade", os.str());
  return report;
}

Report verify_sp_transport(int m) {
  if (m < 1) throw std::invalid_argument("verify_sp_transport: m must be positive");
  Report report;
  report.command = "verify_sp_transport";

  const auto basis = grade_component(m, 0);
  std::int64_t membership_failures = 0;
  std::int64_t round_trip_failures = 0;
  for (const auto& j : basis) {
    const PolyField u = PolyField::basis(m, j);
    const RatMatrix image = sp_iso(u);
    if (!in_symplectic_algebra(image)) {
      ++membership_failures;
      std::ostringstream os;
      os << "j=" << j << ", image=" << image;
      report.add_fail("sp membership of basis image", os.str());
    }
    if (sp_iso_inverse(m, image) != u) {
      ++round_trip_failures;
      std::ostringstream os;
      os << "j=" << j << ", image=" << image << ", pullback=" << sp_iso_inverse(m, image);
      report.add_fail("round trip through the inverse map", os.str());
    }
  }
  {
    std::ostringstream os;
    os << "m=" << m << ", basis size=" << basis.size()
       << ", failures=" << membership_failures;
    if (membership_failures == 0)
      report.add_pass("basis images lie in the symplectic algebra", os.str());
    else
      report.add_fail("basis images lie in the symplectic algebra", os.str());
  }
  {
    std::ostringstream os;
    os << "m=" << m << ", basis size=" << basis.size()
       << ", failures=" << round_trip_failures;
    if (round_trip_failures == 0)
      report.add_pass("inverse map recovers every basis element", os.str());
    else
      report.add_fail("inverse map recovers every basis element", os.str());
  }

  std::int64_t transport_failures = 0;
  for (const auto& j : basis) {
    for (const auto& k : basis) {
      const PolyField u = PolyField::basis(m, j);
      const PolyField v = PolyField::basis(m, k);
      const RatMatrix lhs = sp_iso(x_bracket(u, v));
      const RatMatrix rhs = commutator(sp_iso(u), sp_iso(v));
      if (lhs != rhs) {
        ++transport_failures;
        std::ostringstream os;
        os << "j=" << j << ", k=" << k << ", iso(bracket)=" << lhs
           << ", commutator=" << rhs;
        report.add_fail("transport pair", os.str());
      }
    }
  }
  std::ostringstream os;
  os << "m=" << m << ", ordered pairs=" << basis.size() * basis.size()
     << ", failures=" << transport_failures;
  if (transport_failures == 0)
    report.add_pass("bracket transport matches the matrix commutator", os.str());
  else
    report.add_fail("bracket transport matches the matrix commutator", os.str());
  return report;
}

}  // namespace hamrep
