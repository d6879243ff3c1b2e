#include "hamrep/torus_field.hpp"

#include <sstream>
#include <stdexcept>

#include "hamrep/parallel.hpp"
#include "hamrep/rng.hpp"

namespace hamrep {

TorusField::TorusField(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("TorusField: m must be positive");
}

TorusField TorusField::d(int m, int i) {
  TorusField f(m);
  f.add_d(i, 1);
  return f;
}

TorusField TorusField::h(int m, const MultiIndex& r) {
  TorusField f(m);
  f.add_h(r, 1);
  return f;
}

void TorusField::add_d(int i, const Rational& c) {
  if (i < 0 || i >= n()) throw std::out_of_range("TorusField: derivation index");
  if (c.is_zero()) return;
  auto [it, inserted] = d_terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) d_terms_.erase(it);
  }
}

void TorusField::add_h(const MultiIndex& r, const Rational& c) {
  if (r.size() != n()) throw std::invalid_argument("TorusField: index length mismatch");
  if (c.is_zero() || r.is_zero()) return;  // h(0) = 0
  auto [it, inserted] = h_terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) h_terms_.erase(it);
  }
}

TorusField& TorusField::operator+=(const TorusField& o) {
  if (m_ != o.m_) throw std::invalid_argument("TorusField: dimension mismatch");
  for (const auto& [i, c] : o.d_terms_) add_d(i, c);
  for (const auto& [r, c] : o.h_terms_) add_h(r, c);
  return *this;
}

TorusField& TorusField::operator-=(const TorusField& o) {
  if (m_ != o.m_) throw std::invalid_argument("TorusField: dimension mismatch");
  for (const auto& [i, c] : o.d_terms_) add_d(i, -c);
  for (const auto& [r, c] : o.h_terms_) add_h(r, -c);
  return *this;
}

TorusField& TorusField::operator*=(const Rational& c) {
  if (c.is_zero()) {
    d_terms_.clear();
    h_terms_.clear();
    return *this;
  }
  for (auto& [i, v] : d_terms_) v *= c;
  for (auto& [r, v] : h_terms_) v *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const TorusField& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [i, c] : f.d_terms()) {
    os << (first ? "" : " + ") << c << "*d_" << (i + 1);
    first = false;
  }
  for (const auto& [r, c] : f.h_terms()) {
    os << (first ? "" : " + ") << c << "*h" << r;
    first = false;
  }
  return os;
}

TorusField bracket(const TorusField& a, const TorusField& b) {
  if (a.m() != b.m()) throw std::invalid_argument("bracket: dimension mismatch");
  TorusField out(a.m());
  // [d_i, d_j] = 0.
  for (const auto& [i, ca] : a.d_terms())
    for (const auto& [r, cb] : b.h_terms()) out.add_h(r, ca * cb * Rational(r[i]));
  for (const auto& [r, ca] : a.h_terms())
    for (const auto& [i, cb] : b.d_terms()) out.add_h(r, -(ca * cb * Rational(r[i])));
  for (const auto& [r, ca] : a.h_terms())
    for (const auto& [s, cb] : b.h_terms()) {
      const std::int64_t w = symplectic_pairing(r, s);
      if (w != 0) out.add_h(r + s, ca * cb * Rational(w));
    }
  return out;
}

TorusField hamiltonian_field_of_monomial(const MultiIndex& r) {
  if (r.size() < 2 || r.size() % 2 != 0)
    throw std::invalid_argument("hamiltonian_field_of_monomial: bad index length");
  return TorusField::h(r.size() / 2, r);
}

namespace {

MultiIndex random_index(SplitRng& rng, int n, int extent, bool nonzero) {
  for (;;) {
    MultiIndex r = MultiIndex::zero(n);
    for (int i = 0; i < n; ++i) r[i] = rng.uniform_int(-extent, extent);
    if (!nonzero || !r.is_zero()) return r;
  }
}

TorusField random_basis_element(SplitRng& rng, int m, int extent) {
  const int n = 2 * m;
  if (rng.uniform_int(0, 3) == 0) {
    return TorusField::d(m, static_cast<int>(rng.uniform_int(0, n - 1)));
  }
  return TorusField::h(m, random_index(rng, n, extent, /*nonzero=*/true));
}

}  // namespace

Report verify_jacobi(int m, int samples, std::uint64_t seed, int extent) {
  if (m < 1) throw std::invalid_argument("verify_jacobi: m must be positive");
  if (extent < 1) throw std::invalid_argument("verify_jacobi: extent must be >= 1");
  Report report;
  report.command = "verify_jacobi";
  report.seed = seed;

  const SplitRng root(seed);
  const auto failures = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t i) {
    SplitRng rng = root.split(i);
    const TorusField a = random_basis_element(rng, m, extent);
    const TorusField b = random_basis_element(rng, m, extent);
    const TorusField c = random_basis_element(rng, m, extent);
    const TorusField sum =
        bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
    std::string witness;
    if (!sum.is_zero()) {
      std::ostringstream os;
      os << "a=" << a << ", b=" << b << ", c=" << c << ", residual=" << sum;
      witness = os.str();
    }
    return witness;
  });

  for (std::size_t i = 0; i < failures.size(); ++i)
    if (!failures[i].empty())
      report.add_fail("jacobi sample " + std::to_string(i), failures[i]);
  const int failed = report.failed_count();
  std::ostringstream os;
  os << "m=" << m << ", samples=" << samples << ", extent=" << extent
     << ", failures=" << failed;
  if (failed == 0)
    report.add_pass("jacobi identity", os.str());
  else
    report.add_fail("jacobi identity", os.str());
  return report;
}

Report verify_weight_grading(int m, int samples, std::uint64_t seed, int extent) {
  if (m < 1) throw std::invalid_argument("verify_weight_grading: m must be positive");
  if (extent < 1) throw std::invalid_argument("verify_weight_grading: extent must be >= 1");
  Report report;
  report.command = "verify_weight_grading";
  report.seed = seed;

  const int n = 2 * m;
  const SplitRng root(seed);
  const auto failures = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t i) {
    SplitRng rng = root.split(i);
    TorusField a(m);
    const int d_count = static_cast<int>(rng.uniform_int(1, n));
    for (int t = 0; t < d_count; ++t)
      a.add_d(static_cast<int>(rng.uniform_int(0, n - 1)),
              Rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 3)));
    TorusField b(m);
    const int h_count = static_cast<int>(rng.uniform_int(1, 3));
    for (int t = 0; t < h_count; ++t)
      b.add_h(random_index(rng, n, extent, /*nonzero=*/true),
              Rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 3)));

    TorusField expected(m);
    for (const auto& [s, cb] : b.h_terms()) {
      Rational eigen;
      for (const auto& [idx, ca] : a.d_terms()) eigen += ca * Rational(s[idx]);
      expected.add_h(s, eigen * cb);
    }
    std::string witness;
    if (bracket(a, b) != expected) {
      std::ostringstream os;
      os << "a=" << a << ", b=" << b << ", bracket=" << bracket(a, b)
         << ", expected=" << expected;
      witness = os.str();
    }
    return witness;
  });

  for (std::size_t i = 0; i < failures.size(); ++i)
    if (!failures[i].empty())
      report.add_fail("weight grading sample " + std::to_string(i), failures[i]);
  const int failed = report.failed_count();
  std::ostringstream os;
  os << "m=" << m << ", samples=" << samples << ", extent=" << extent
     << ", failures=" << failed;
  if (failed == 0)
    report.add_pass("derivations act diagonally with eigenvalue sum(a_i s_i)", os.str());
  else
    report.add_fail("derivations act diagonally with eigenvalue sum(a_i s_i)", os.str());
  return report;
}

}  // namespace hamrep
