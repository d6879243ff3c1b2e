#include "hamrep/multi_index.hpp"

#include <stdexcept>

namespace hamrep {

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (size() != o.size()) throw std::invalid_argument("MultiIndex: length mismatch");
  for (int i = 0; i < size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (size() != o.size()) throw std::invalid_argument("MultiIndex: length mismatch");
  for (int i = 0; i < size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& r) {
  os << '(';
  for (int i = 0; i < r.size(); ++i) {
    if (i) os << ',';
    os << r[i];
  }
  return os << ')';
}

std::int64_t symplectic_pairing(const MultiIndex& r, const MultiIndex& s) {
  if (r.size() != s.size())
    throw std::invalid_argument("symplectic_pairing: length mismatch");
  if (r.size() % 2 != 0)
    throw std::invalid_argument("symplectic_pairing: length must be even");
  const int m = r.size() / 2;
  std::int64_t acc = 0;
  for (int i = 0; i < m; ++i) acc += r[m + i] * s[i] - r[i] * s[m + i];
  return acc;
}

Rational monomial_power(const MultiIndex& r, const NonNegIndex& k) {
  if (r.size() != k.size())
    throw std::invalid_argument("monomial_power: length mismatch");
  Integer acc = 1;
  for (int i = 0; i < r.size(); ++i) {
    if (k[i] < 0) throw std::invalid_argument("monomial_power: negative exponent");
    if (k[i] == 0) continue;  // 0^0 = 1 by convention: factor is 1
    Integer base(static_cast<long>(r[i]));
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k[i]));
    acc *= p;
  }
  return Rational(acc);
}

Integer multi_factorial(const NonNegIndex& k) {
  Integer acc = 1;
  for (int i = 0; i < k.size(); ++i) {
    if (k[i] < 0) throw std::invalid_argument("multi_factorial: negative entry");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k[i]));
    acc *= f;
  }
  return acc;
}

namespace {

void enumerate(int n, std::int64_t budget, bool exact, MultiIndex& cur, int pos,
               std::vector<NonNegIndex>& out) {
  if (pos == n) {
    if (!exact || budget == 0) out.push_back(cur);
    return;
  }
  if (exact && pos == n - 1) {
    cur[pos] = budget;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (std::int64_t v = 0; v <= budget; ++v) {
    cur[pos] = v;
    enumerate(n, budget - v, exact, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<NonNegIndex> compositions_of(int n, std::int64_t total) {
  if (n <= 0) throw std::invalid_argument("compositions_of: length must be positive");
  std::vector<NonNegIndex> out;
  if (total < 0) return out;
  MultiIndex cur = MultiIndex::zero(n);
  enumerate(n, total, /*exact=*/true, cur, 0, out);
  return out;
}

std::vector<NonNegIndex> indices_up_to(int n, std::int64_t max_total) {
  if (n <= 0) throw std::invalid_argument("indices_up_to: length must be positive");
  std::vector<NonNegIndex> out;
  if (max_total < 0) return out;
  MultiIndex cur = MultiIndex::zero(n);
  enumerate(n, max_total, /*exact=*/false, cur, 0, out);
  return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

}  // namespace hamrep
