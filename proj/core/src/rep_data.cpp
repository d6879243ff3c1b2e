#include "hamrep/rep_data.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamrep/parallel.hpp"
#include "hamrep/poly_field.hpp"

namespace hamrep {

const RatMatrix* RepData::find(const NonNegIndex& k) const {
  const auto it = terms.find(k);
  return it == terms.end() ? nullptr : &it->second;
}

RatMatrix RepData::at_or_zero(const NonNegIndex& k) const {
  const RatMatrix* p = find(k);
  return p ? *p : RatMatrix(dim, dim);
}

void RepData::set(const NonNegIndex& k, const RatMatrix& value) {
  if (k.size() != n()) throw std::invalid_argument("RepData: key length mismatch");
  if (!k.is_non_negative())
    throw std::invalid_argument("RepData: key must be non-negative");
  if (value.rows() != dim || value.cols() != dim)
    throw std::invalid_argument("RepData: matrix size mismatch");
  if (value.is_zero())
    terms.erase(k);
  else
    terms[k] = value;
}

namespace {

std::string index_label(int i) { return std::to_string(i + 1); }

RatMatrix unit_matrix(int n, int a, int b) {
  RatMatrix e(n, n);
  e(a, b) = 1;
  return e;
}

}  // namespace

std::vector<SpBasisElement> sp_basis(int m) {
  if (m < 1) throw std::invalid_argument("sp_basis: m must be positive");
  const int n = 2 * m;
  std::vector<SpBasisElement> out;
  out.reserve(2 * m * m + m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      SpBasisElement e;
      e.label = "E[" + index_label(i) + "," + index_label(j) + "]-E[" +
                index_label(m + j) + "," + index_label(m + i) + "]";
      e.matrix = unit_matrix(n, i, j) - unit_matrix(n, m + j, m + i);
      e.x_index = MultiIndex::unit(n, i) + MultiIndex::unit(n, m + j);
      e.x_sign = 1;
      out.push_back(std::move(e));
    }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      SpBasisElement e;
      e.label = "E[" + index_label(i) + "," + index_label(m + j) + "]+E[" +
                index_label(j) + "," + index_label(m + i) + "]";
      e.matrix = unit_matrix(n, i, m + j) + unit_matrix(n, j, m + i);
      e.x_index = MultiIndex::unit(n, i) + MultiIndex::unit(n, j);
      e.x_sign = -1;
      out.push_back(std::move(e));
    }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      SpBasisElement e;
      e.label = "E[" + index_label(m + i) + "," + index_label(j) + "]+E[" +
                index_label(m + j) + "," + index_label(i) + "]";
      e.matrix = unit_matrix(n, m + i, j) + unit_matrix(n, m + j, i);
      e.x_index = MultiIndex::unit(n, m + i) + MultiIndex::unit(n, m + j);
      e.x_sign = 1;
      out.push_back(std::move(e));
    }
  return out;
}

std::optional<std::string> phi_violation(const IrreducibleSpec& spec) {
  const std::vector<SpBasisElement> basis = sp_basis(spec.m);
  const int n = 2 * spec.m;
  const int dim_sp = static_cast<int>(basis.size());
  const int d = spec.dim;

  if (static_cast<int>(spec.mu.size()) != n)
    return "mu has length " + std::to_string(spec.mu.size()) + ", expected " +
           std::to_string(n);

  std::vector<RatMatrix> images;
  images.reserve(dim_sp);
  for (const auto& e : basis) {
    const auto it = spec.phi.find(e.label);
    if (it == spec.phi.end()) return "phi is missing basis element " + e.label;
    if (it->second.rows() != d || it->second.cols() != d)
      return "phi(" + e.label + ") is not " + std::to_string(d) + "x" +
             std::to_string(d);
    images.push_back(it->second);
  }

  // Coordinates of an sp matrix in the chosen basis, by exact solve.
  RatMatrix basis_cols(n * n, dim_sp);
  for (int t = 0; t < dim_sp; ++t)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) basis_cols(a * n + b, t) = basis[t].matrix(a, b);

  for (int s = 0; s < dim_sp; ++s)
    for (int t = 0; t < dim_sp; ++t) {
      const RatMatrix lie = commutator(basis[s].matrix, basis[t].matrix);
      RatVec target(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) target[a * n + b] = lie(a, b);
      const auto coords = solve(basis_cols, target);
      if (!coords)
        return "commutator of " + basis[s].label + " and " + basis[t].label +
               " left the symplectic algebra";
      RatMatrix expected(d, d);
      for (int u = 0; u < dim_sp; ++u)
        if (!(*coords)[u].is_zero()) expected += (*coords)[u] * images[u];
      if (!(commutator(images[s], images[t]) == expected))
        return "phi breaks the commutator of " + basis[s].label + " and " +
               basis[t].label;
    }
  return std::nullopt;
}

RepData from_sp_rep(const IrreducibleSpec& spec) {
  if (const auto violation = phi_violation(spec))
    throw std::invalid_argument("from_sp_rep: " + *violation);

  const int n = 2 * spec.m;
  RepData rep;
  rep.m = spec.m;
  rep.dim = spec.dim;
  rep.degree_bound = 3;

  const RatMatrix id = RatMatrix::identity(spec.dim);
  for (int i = 0; i < spec.m; ++i) {
    rep.set(MultiIndex::unit(n, i), -spec.mu[i] * id);
    rep.set(MultiIndex::unit(n, spec.m + i), spec.mu[spec.m + i] * id);
  }
  for (const auto& e : sp_basis(spec.m))
    rep.set(e.x_index, Rational(e.x_sign) * spec.phi.at(e.label));
  return rep;
}

IrreducibleSpec sp_defining_rep(int m) {
  IrreducibleSpec spec;
  spec.m = m;
  spec.dim = 2 * m;
  spec.mu.assign(2 * m, Rational(0));
  for (const auto& e : sp_basis(m)) spec.phi[e.label] = e.matrix;
  return spec;
}

IrreducibleSpec sp_trivial_rep(int m) {
  IrreducibleSpec spec;
  spec.m = m;
  spec.dim = 1;
  spec.mu.assign(2 * m, Rational(0));
  for (const auto& e : sp_basis(m)) spec.phi[e.label] = RatMatrix(1, 1);
  return spec;
}

IrreducibleSpec direct_sum(const IrreducibleSpec& a, const IrreducibleSpec& b) {
  if (a.m != b.m) throw std::invalid_argument("direct_sum: dimension mismatch");
  IrreducibleSpec out;
  out.m = a.m;
  out.dim = a.dim + b.dim;
  out.mu = a.mu;
  for (const auto& e : sp_basis(a.m)) {
    RatMatrix block(out.dim, out.dim);
    const RatMatrix& top = a.phi.at(e.label);
    const RatMatrix& bottom = b.phi.at(e.label);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) block(i, j) = top(i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) block(a.dim + i, a.dim + j) = bottom(i, j);
    out.phi[e.label] = block;
  }
  return out;
}

namespace {

// The commutator the relations dictate for the pair (j, k).
RatMatrix expected_bracket(const RepData& rep, const MultiIndex& j, const MultiIndex& k) {
  const int m = rep.m;
  RatMatrix out(rep.dim, rep.dim);
  if (j.degree() >= 2 && k.degree() >= 2) {
    for (int i = 0; i < m; ++i) {
      const std::int64_t w = j[m + i] * k[i] - j[i] * k[m + i];
      if (w == 0) continue;
      MultiIndex key = j + k;
      key[i] -= 1;
      key[m + i] -= 1;
      if (const RatMatrix* p = rep.find(key)) out += Rational(w) * *p;
    }
    return out;
  }
  if (j.degree() == 1 && k.degree() == 1) {
    const int a = [&] {
      for (int i = 0; i < 2 * m; ++i)
        if (j[i] != 0) return i;
      return 0;
    }();
    const int b = [&] {
      for (int i = 0; i < 2 * m; ++i)
        if (k[i] != 0) return i;
      return 0;
    }();
    if (b == a + m) return rep.at_or_zero(MultiIndex::zero(2 * m));
    if (a == b + m) return -rep.at_or_zero(MultiIndex::zero(2 * m));
  }
  return out;  // zero: the center commutes, and mixed low/high pairs vanish
}

std::string matrix_str(const RatMatrix& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string index_str(const MultiIndex& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

Report validate_rep(const RepData& rep) {
  Report report;
  report.command = "validate_rep";

  bool shape_ok = true;
  for (const auto& [k, mat] : rep.terms) {
    std::string problem;
    if (k.size() != rep.n())
      problem = "key length " + std::to_string(k.size());
    else if (!k.is_non_negative())
      problem = "negative entry in key";
    else if (mat.rows() != rep.dim || mat.cols() != rep.dim)
      problem = "matrix is " + std::to_string(mat.rows()) + "x" +
                std::to_string(mat.cols());
    else if (mat.is_zero())
      problem = "stored zero matrix";
    else if (k.degree() >= rep.degree_bound)
      problem = "support exceeds degree bound " + std::to_string(rep.degree_bound);
    if (!problem.empty()) {
      report.add_fail("structure of key " + index_str(k), problem);
      shape_ok = false;
    }
  }
  if (!shape_ok) return report;  // pair checks need well-formed keys
  report.add_pass("structural invariants",
                  "support size " + std::to_string(rep.terms.size()));

  std::set<MultiIndex> pair_set;
  for (const auto& [k, mat] : rep.terms) pair_set.insert(k);
  for (const auto& k : indices_up_to(rep.n(), rep.degree_bound + 1)) pair_set.insert(k);
  const std::vector<MultiIndex> keys(pair_set.begin(), pair_set.end());
  const std::size_t count = keys.size();

  const auto witnesses = parallel_map(count * count, [&](std::size_t idx) {
    const MultiIndex& j = keys[idx / count];
    const MultiIndex& k = keys[idx % count];
    const RatMatrix lhs = commutator(rep.at_or_zero(j), rep.at_or_zero(k));
    const RatMatrix rhs = expected_bracket(rep, j, k);
    std::string witness;
    if (!(lhs == rhs))
      witness = "j=" + index_str(j) + ", k=" + index_str(k) +
                ", commutator=" + matrix_str(lhs) + ", required=" + matrix_str(rhs);
    return witness;
  });
  int violated = 0;
  for (const auto& w : witnesses)
    if (!w.empty()) {
      report.add_fail("commutation relation", w);
      ++violated;
    }
  std::ostringstream os;
  os << count * count << " pairs over " << count << " indices, " << violated
     << " violated";
  if (violated == 0)
    report.add_pass("commutation relations", os.str());
  else
    report.add_fail("commutation relations", os.str());
  return report;
}

Report eigenvalue_bound_check(const RepData& rep) {
  Report report;
  report.command = "eigenvalue_bound_check";
  const Integer bound =
      Integer(rep.dim) * Integer(rep.dim) - Integer(rep.dim) + 1;
  for (int i = 0; i < rep.m; ++i) {
    Integer count = 0;
    std::int64_t largest = 0;
    for (const auto& [k, mat] : rep.terms) {
      bool pure_axis = k[i] >= 1;
      for (int a = 0; a < rep.n() && pure_axis; ++a)
        if (a != i && k[a] != 0) pure_axis = false;
      if (pure_axis) {
        ++count;
        largest = std::max(largest, k[i]);
      }
    }
    std::ostringstream os;
    os << "axis " << (i + 1) << ": " << count << " nonzero powers (largest "
       << largest << "), bound " << bound;
    if (count <= bound)
      report.add_pass("eigenvalue count within bound", os.str());
    else
      report.add_fail("eigenvalue count within bound", os.str());
  }
  return report;
}

RatMatrix h_operator(const RepData& rep, const MultiIndex& r) {
  if (r.size() != rep.n())
    throw std::invalid_argument("h_operator: index length mismatch");
  RatMatrix out(rep.dim, rep.dim);
  for (const auto& [k, mat] : rep.terms) {
    const Rational c =
        monomial_power(r, k) / Rational(multi_factorial(k));
    if (!c.is_zero()) out += c * mat;
  }
  if (r.is_zero())
    if (const RatMatrix* p0 = rep.find(MultiIndex::zero(rep.n()))) out -= *p0;
  return out;
}

Report invariant_subspace_sweep(const std::vector<RatMatrix>& generators, int dim) {
  if (dim > 12)
    throw std::length_error("invariant_subspace_sweep: dimension " +
                            std::to_string(dim) + " exceeds the guard (12)");
  Report report;
  report.command = "invariant_subspace_sweep";

  bool all_scalar = true;
  for (const auto& g : generators) {
    RatMatrix scalar = RatMatrix::identity(dim);
    scalar *= g(0, 0);
    if (!(g == scalar)) {
      all_scalar = false;
      break;
    }
  }
  if (all_scalar && dim >= 2) {
    report.add_fail("irreducibility sweep",
                    "every generator acts as a scalar; any line is invariant");
    return report;
  }

  for (std::size_t t = 0; t < generators.size(); ++t) {
    for (const Rational& ev : rational_eigenvalues(generators[t])) {
      RatMatrix shifted = generators[t];
      for (int i = 0; i < dim; ++i) shifted(i, i) -= ev;
      const std::vector<RatVec> eigen = null_space(shifted);
      if (eigen.empty() || static_cast<int>(eigen.size()) == dim) continue;

      SpanBuilder closure(dim);
      std::vector<RatVec> frontier;
      for (const auto& v : eigen)
        if (closure.add(v)) frontier.push_back(v);
      while (!frontier.empty() && !closure.is_full()) {
        std::vector<RatVec> next;
        for (const auto& v : frontier)
          for (const auto& g : generators) {
            RatVec w = g * v;
            if (closure.add(w)) next.push_back(std::move(w));
          }
        frontier = std::move(next);
      }
      if (!closure.is_full()) {
        std::ostringstream os;
        os << "generator " << (t + 1) << ", eigenvalue " << ev
           << ": closure of the eigenspace has dimension " << closure.rank()
           << " < " << dim;
        report.add_fail("irreducibility sweep", os.str());
        return report;
      }
    }
  }
  report.add_pass("irreducibility sweep",
                  "no proper invariant subspace detected (eigenspace sweep; "
                  "absence is not a proof of irreducibility)");
  return report;
}

}  // namespace hamrep
