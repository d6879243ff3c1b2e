#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hamrep/matrix.hpp"
#include "hamrep/rng.hpp"

using hamrep::commutator;
using hamrep::null_space;
using hamrep::rank;
using hamrep::Rational;
using hamrep::RatMatrix;
using hamrep::RatVec;
using hamrep::solve;
using hamrep::SpanBuilder;
using hamrep::SplitRng;

namespace {

RatMatrix random_matrix(SplitRng& rng, int n) {
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = Rational(rng.uniform_int(-4, 4), rng.uniform_int(1, 3));
  return a;
}

}  // namespace

TEST_CASE("products, transpose, trace") {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatMatrix b{{5, 6}, {7, 8}};
  CHECK(a * b == RatMatrix{{19, 22}, {43, 50}});
  CHECK(a.transpose() == RatMatrix{{1, 3}, {2, 4}});
  CHECK(a.trace() == Rational(5));
  CHECK(RatMatrix::identity(2) * a == a);
  CHECK(Rational(1, 2) * a == RatMatrix{{Rational(1, 2), 1}, {Rational(3, 2), 2}});
  CHECK((a - a).is_zero());
}

TEST_CASE("commutator of the standard nilpotent pair") {
  const RatMatrix e{{0, 1}, {0, 0}};
  const RatMatrix f{{0, 0}, {1, 0}};
  CHECK(commutator(e, f) == RatMatrix{{1, 0}, {0, -1}});
  CHECK(commutator(e, e).is_zero());
}

TEST_CASE("matrix-vector product") {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatVec x{Rational(1), Rational(-1)};
  const RatVec y = a * x;
  CHECK(y == RatVec{Rational(-1), Rational(-1)});
}

TEST_CASE("rank") {
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix(2, 2)) == 0);
  CHECK(rank(RatMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
}

TEST_CASE("null space vectors satisfy A x = 0 and span the kernel") {
  const RatMatrix a{{1, 2}};
  const auto basis = null_space(a);
  REQUIRE(basis.size() == 1);
  CHECK(hamrep::is_zero(a * basis[0]));

  CHECK(null_space(RatMatrix::identity(2)).empty());

  SplitRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix m(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = Rational(rng.uniform_int(-2, 2));
    const auto kernel = null_space(m);
    // Rank-nullity: rank + kernel dimension = column count.
    CHECK(rank(m) + static_cast<int>(kernel.size()) == 4);
    for (const auto& v : kernel) CHECK(hamrep::is_zero(m * v));
  }
}

TEST_CASE("solve finds a solution exactly when one exists") {
  const RatMatrix d{{2, 0}, {0, 3}};
  const auto x = solve(d, RatVec{Rational(4), Rational(9)});
  REQUIRE(x.has_value());
  CHECK(*x == RatVec{Rational(2), Rational(3)});

  CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, RatVec{Rational(1), Rational(2)}).has_value());

  // Underdetermined but consistent: any returned solution must verify.
  const RatMatrix wide{{1, 2, 3}};
  const RatVec b{Rational(6)};
  const auto y = solve(wide, b);
  REQUIRE(y.has_value());
  CHECK(wide * *y == b);
}

TEST_CASE("characteristic polynomial frozen and against 2x2 formulas") {
  // det(xI - [[2,1],[1,2]]) = x^2 - 4x + 3.
  const auto coeffs = hamrep::char_poly(RatMatrix{{2, 1}, {1, 2}});
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == Rational(3));
  CHECK(coeffs[1] == Rational(-4));
  CHECK(coeffs[2] == Rational(1));

  const auto diag = hamrep::char_poly(RatMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(diag == std::vector<Rational>{Rational(-6), Rational(11), Rational(-6), Rational(1)});

  SplitRng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix a = random_matrix(rng, 2);
    const auto c = hamrep::char_poly(a);
    const Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    REQUIRE(c.size() == 3);
    CHECK(c[2] == Rational(1));
    CHECK(c[1] == -a.trace());
    CHECK(c[0] == det);
  }
}

TEST_CASE("rational eigenvalues, exact and ascending") {
  CHECK(hamrep::rational_eigenvalues(RatMatrix{{2, 1}, {1, 2}}) ==
        std::vector<Rational>{Rational(1), Rational(3)});
  CHECK(hamrep::rational_eigenvalues(RatMatrix{{Rational(1, 2), 0}, {0, -3}}) ==
        std::vector<Rational>{Rational(-3), Rational(1, 2)});
  // Nilpotent: only eigenvalue 0.
  CHECK(hamrep::rational_eigenvalues(RatMatrix{{0, 1}, {0, 0}}) ==
        std::vector<Rational>{Rational(0)});
  // x^2 + 1 has no rational roots.
  CHECK(hamrep::rational_eigenvalues(RatMatrix{{0, -1}, {1, 0}}).empty());

  SplitRng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const RatMatrix a = random_matrix(rng, 3);
    for (const auto& ev : hamrep::rational_eigenvalues(a)) {
      RatMatrix shifted = a;
      for (int i = 0; i < 3; ++i) shifted(i, i) -= ev;
      CHECK(rank(shifted) < 3);  // a genuine eigenvalue
    }
  }
}

TEST_CASE("span builder basis is canonical and order independent") {
  const RatVec v1{Rational(1), Rational(2), Rational(0)};
  const RatVec v2{Rational(0), Rational(1), Rational(1)};
  const RatVec v3{Rational(1), Rational(3), Rational(1)};  // v1 + v2

  SpanBuilder forward(3);
  CHECK(forward.add(v1));
  CHECK(forward.add(v2));
  CHECK_FALSE(forward.add(v3));  // dependent: span unchanged
  CHECK(forward.rank() == 2);

  SpanBuilder backward(3);
  CHECK(backward.add(v3));
  CHECK(backward.add(v2));
  CHECK_FALSE(backward.add(v1));
  CHECK(backward.basis() == forward.basis());

  CHECK(forward.contains(v3));
  CHECK_FALSE(forward.contains(RatVec{Rational(0), Rational(0), Rational(1)}));
  CHECK_FALSE(forward.is_full());
  CHECK(forward.add(RatVec{Rational(0), Rational(0), Rational(5)}));
  CHECK(forward.is_full());
  CHECK_FALSE(forward.add(RatVec{Rational(7), Rational(7), Rational(7)}));
}

TEST_CASE("span builder ignores the zero vector") {
  SpanBuilder span(2);
  CHECK_FALSE(span.add(RatVec{Rational(0), Rational(0)}));
  CHECK(span.rank() == 0);
  CHECK(span.contains(RatVec{Rational(0), Rational(0)}));
}
