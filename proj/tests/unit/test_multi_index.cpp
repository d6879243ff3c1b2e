#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "hamrep/multi_index.hpp"
#include "hamrep/rng.hpp"

using hamrep::binomial;
using hamrep::compositions_of;
using hamrep::indices_up_to;
using hamrep::Integer;
using hamrep::monomial_power;
using hamrep::multi_factorial;
using hamrep::MultiIndex;
using hamrep::Rational;
using hamrep::SplitRng;
using hamrep::symplectic_pairing;

namespace {

MultiIndex random_index(SplitRng& rng, int n, int extent) {
  MultiIndex r = MultiIndex::zero(n);
  for (int i = 0; i < n; ++i) r[i] = rng.uniform_int(-extent, extent);
  return r;
}

}  // namespace

TEST_CASE("vector arithmetic and basic queries") {
  const MultiIndex a{1, -2, 3, 0};
  const MultiIndex b{0, 5, -1, 2};
  CHECK(a + b == MultiIndex{1, 3, 2, 2});
  CHECK(a - b == MultiIndex{1, -7, 4, -2});
  CHECK(-a == MultiIndex{-1, 2, -3, 0});
  CHECK(a.degree() == 2);
  CHECK(a.max_abs() == 3);
  CHECK(MultiIndex::zero(3).is_zero());
  CHECK_FALSE(a.is_zero());
  CHECK_FALSE(a.is_non_negative());
  CHECK(MultiIndex({0, 1, 2}).is_non_negative());
  CHECK(MultiIndex::unit(4, 2) == MultiIndex{0, 0, 1, 0});
}

TEST_CASE("lexicographic order is total and matches examples") {
  CHECK(MultiIndex{0, 2} < MultiIndex{1, 0});
  CHECK(MultiIndex{1, 0} < MultiIndex{1, 1});
  CHECK(MultiIndex{-1, 5} < MultiIndex{0, 0});
}

TEST_CASE("symplectic pairing frozen values") {
  CHECK(symplectic_pairing(MultiIndex{1, 0}, MultiIndex{0, 1}) == -1);
  CHECK(symplectic_pairing(MultiIndex{0, 1}, MultiIndex{1, 0}) == 1);
  CHECK(symplectic_pairing(MultiIndex{1, 0}, MultiIndex{1, 0}) == 0);
  // (2,3) vs (4,5): 3*4 - 2*5 = 2.
  CHECK(symplectic_pairing(MultiIndex{2, 3}, MultiIndex{4, 5}) == 2);
  // (1,2,3,4) vs (5,6,7,8): (3*5 - 1*7) + (4*6 - 2*8) = 8 + 8 = 16.
  CHECK(symplectic_pairing(MultiIndex{1, 2, 3, 4}, MultiIndex{5, 6, 7, 8}) == 16);
  CHECK_THROWS_AS(symplectic_pairing(MultiIndex{1, 0}, MultiIndex{1, 0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(symplectic_pairing(MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("symplectic pairing is antisymmetric and bilinear") {
  SplitRng rng(42);
  for (int n : {2, 4, 6}) {
    for (int trial = 0; trial < 3000; ++trial) {
      const MultiIndex r = random_index(rng, n, 6);
      const MultiIndex s = random_index(rng, n, 6);
      const MultiIndex u = random_index(rng, n, 6);
      CHECK(symplectic_pairing(r, s) == -symplectic_pairing(s, r));
      CHECK(symplectic_pairing(r, r) == 0);
      CHECK(symplectic_pairing(r + u, s) ==
            symplectic_pairing(r, s) + symplectic_pairing(u, s));
    }
  }
}

TEST_CASE("monomial power with the zero-exponent convention") {
  CHECK(monomial_power(MultiIndex{2, -3}, MultiIndex{2, 1}) == Rational(-12));
  CHECK(monomial_power(MultiIndex{0, 5}, MultiIndex{0, 2}) == Rational(25));
  CHECK(monomial_power(MultiIndex{0, 5}, MultiIndex{0, 0}) == Rational(1));
  CHECK(monomial_power(MultiIndex{5, 0}, MultiIndex{0, 3}) == Rational(0));
  CHECK(monomial_power(MultiIndex::zero(2), MultiIndex::zero(2)) == Rational(1));
  CHECK(monomial_power(MultiIndex{-1, -1}, MultiIndex{3, 2}) == Rational(-1));
}

TEST_CASE("factorial of a multi-index multiplies per-axis factorials") {
  CHECK(multi_factorial(MultiIndex{2, 1}) == Integer(2));
  CHECK(multi_factorial(MultiIndex{0, 0}) == Integer(1));
  CHECK(multi_factorial(MultiIndex{3, 3}) == Integer(36));
  CHECK(multi_factorial(MultiIndex{4, 2}) == Integer(48));
  CHECK(multi_factorial(MultiIndex{1, 0, 5, 2}) == Integer(240));
}

TEST_CASE("compositions enumerate exactly once in lexicographic order") {
  const auto c = compositions_of(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == MultiIndex{0, 2});
  CHECK(c[1] == MultiIndex{1, 1});
  CHECK(c[2] == MultiIndex{2, 0});
  // Count matches the stars-and-bars formula C(total + n - 1, n - 1).
  CHECK(Integer(compositions_of(4, 2).size()) == binomial(5, 3));
  CHECK(Integer(compositions_of(6, 3).size()) == binomial(8, 5));
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1] < c[i]);
  for (const auto& r : compositions_of(4, 3)) {
    CHECK(r.degree() == 3);
    CHECK(r.is_non_negative());
  }
}

TEST_CASE("bounded index enumeration is the union of compositions") {
  const auto all = indices_up_to(2, 2);
  REQUIRE(all.size() == 6);
  CHECK(all[0] == MultiIndex{0, 0});
  CHECK(all[1] == MultiIndex{0, 1});
  CHECK(all[2] == MultiIndex{0, 2});
  CHECK(all[3] == MultiIndex{1, 0});
  CHECK(all[4] == MultiIndex{1, 1});
  CHECK(all[5] == MultiIndex{2, 0});
  // |{k >= 0 : |k| <= t}| = C(t + n, n).
  CHECK(Integer(indices_up_to(4, 3).size()) == binomial(7, 4));
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == Integer(10));
  CHECK(binomial(7, 0) == Integer(1));
  CHECK(binomial(3, 5) == Integer(0));
  CHECK(binomial(10, 5) == Integer(252));
  CHECK(binomial(3, -1) == Integer(0));
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << MultiIndex{1, -2, 0};
  CHECK(os.str() == "(1,-2,0)");
}
