#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "hamrep/matrix.hpp"
#include "hamrep/multi_index.hpp"
#include "hamrep/poly_field.hpp"

using hamrep::binomial;
using hamrep::MultiIndex;
using hamrep::PolyField;
using hamrep::RatMatrix;
using hamrep::Rational;

TEST_CASE("x_bracket structure constants, frozen examples") {
  // [X(2,0), X(0,2)] = -4 X(1,1).
  CHECK(hamrep::x_bracket(PolyField::basis(1, MultiIndex{2, 0}),
                          PolyField::basis(1, MultiIndex{0, 2})) ==
        Rational(-4) * PolyField::basis(1, MultiIndex{1, 1}));
  // [X(1,1), X(3,0)] = 3 X(3,0): the diagonal index acts by the axis weight.
  CHECK(hamrep::x_bracket(PolyField::basis(1, MultiIndex{1, 1}),
                          PolyField::basis(1, MultiIndex{3, 0})) ==
        Rational(3) * PolyField::basis(1, MultiIndex{3, 0}));
  // Four variables, cross-pair contraction: [X(2,0,0,0), X(0,0,1,1)] = -2 X(1,0,0,1).
  CHECK(hamrep::x_bracket(PolyField::basis(2, MultiIndex{2, 0, 0, 0}),
                          PolyField::basis(2, MultiIndex{0, 0, 1, 1})) ==
        Rational(-2) * PolyField::basis(2, MultiIndex{1, 0, 0, 1}));
  // Self bracket vanishes.
  CHECK(hamrep::x_bracket(PolyField::basis(1, MultiIndex{3, 1}),
                          PolyField::basis(1, MultiIndex{3, 1}))
            .is_zero());
}

TEST_CASE("graded component dimensions match the closed form") {
  CHECK(hamrep::grade_component(1, -1).size() == 2);
  CHECK(hamrep::grade_component(1, 0).size() == 3);
  CHECK(hamrep::grade_component(1, 1).size() == 4);
  CHECK(hamrep::grade_component(1, 2).size() == 5);
  CHECK(hamrep::grade_component(2, -1).size() == 4);
  CHECK(hamrep::grade_component(2, 0).size() == 10);
  CHECK(hamrep::grade_component(2, 1).size() == 20);
  CHECK(hamrep::grade_component(2, 2).size() == 35);
  CHECK(hamrep::grade_component(3, 0).size() == 21);
  for (int m : {1, 2, 3}) {
    for (int n = -1; n <= 3; ++n) {
      CHECK(hamrep::Integer(hamrep::grade_component(m, n).size()) ==
            binomial(n + 2 * m + 1, 2 * m - 1));
    }
  }
  CHECK_THROWS_AS(hamrep::grade_component(1, -2), std::invalid_argument);
}

TEST_CASE("grade additivity and symplectic transport suites pass") {
  CHECK(hamrep::verify_grade_additivity(1, 3).passed());
  CHECK(hamrep::verify_grade_additivity(2, 2).passed());
  CHECK(hamrep::verify_sp_transport(1).passed());
  CHECK(hamrep::verify_sp_transport(2).passed());
  CHECK(hamrep::verify_sp_transport(3).passed());
}

TEST_CASE("matrix realization of the quadratic fields, frozen examples") {
  // One pair of variables.
  {
    RatMatrix e12(2, 2);
    e12(0, 1) = 1;
    CHECK(hamrep::sp_iso(PolyField::basis(1, MultiIndex{2, 0})) == Rational(-2) * e12);
    RatMatrix e21(2, 2);
    e21(1, 0) = 1;
    CHECK(hamrep::sp_iso(PolyField::basis(1, MultiIndex{0, 2})) == Rational(2) * e21);
    RatMatrix diag(2, 2);
    diag(0, 0) = 1;
    diag(1, 1) = -1;
    CHECK(hamrep::sp_iso(PolyField::basis(1, MultiIndex{1, 1})) == diag);
  }
  // Two pairs of variables: cross terms.
  {
    RatMatrix atype(4, 4);  // X(e_1 + e_4) -> E[1,2] - E[4,3]
    atype(0, 1) = 1;
    atype(3, 2) = -1;
    CHECK(hamrep::sp_iso(PolyField::basis(2, MultiIndex{1, 0, 0, 1})) == atype);

    RatMatrix btype(4, 4);  // X(e_1 + e_2) -> -(E[1,4] + E[2,3])
    btype(0, 3) = -1;
    btype(1, 2) = -1;
    CHECK(hamrep::sp_iso(PolyField::basis(2, MultiIndex{1, 1, 0, 0})) == btype);

    RatMatrix ctype(4, 4);  // X(e_3 + e_4) -> E[3,2] + E[4,1]
    ctype(2, 1) = 1;
    ctype(3, 0) = 1;
    CHECK(hamrep::sp_iso(PolyField::basis(2, MultiIndex{0, 0, 1, 1})) == ctype);
  }
  // Only degree-0 (quadratic) fields have a matrix image.
  CHECK_THROWS_AS(hamrep::sp_iso(PolyField::basis(1, MultiIndex{3, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(hamrep::sp_iso(PolyField::basis(1, MultiIndex{1, 0})),
                  std::invalid_argument);
}

TEST_CASE("matrix membership test for the symplectic algebra") {
  RatMatrix diag(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = -1;
  CHECK(hamrep::in_symplectic_algebra(diag));
  CHECK_FALSE(hamrep::in_symplectic_algebra(RatMatrix::identity(2)));
  RatMatrix e12(2, 2);
  e12(0, 1) = 1;
  CHECK(hamrep::in_symplectic_algebra(e12));
  RatMatrix bad(4, 4);
  bad(0, 1) = 1;  // E[1,2] alone is not symplectic in four variables
  CHECK_FALSE(hamrep::in_symplectic_algebra(bad));
  CHECK_FALSE(hamrep::in_symplectic_algebra(RatMatrix(3, 3)));

  const RatMatrix j = hamrep::symplectic_form(1);
  CHECK(j(0, 1) == Rational(-1));
  CHECK(j(1, 0) == Rational(1));
  CHECK(j(0, 0).is_zero());
}

TEST_CASE("round trip between quadratic fields and matrices") {
  for (int m : {1, 2, 3}) {
    for (const MultiIndex& r : hamrep::grade_component(m, 0)) {
      const PolyField f = PolyField::basis(m, r);
      CHECK(hamrep::sp_iso_inverse(m, hamrep::sp_iso(f)) == f);
    }
  }
  // A matrix outside the symplectic algebra has no preimage.
  CHECK_THROWS_AS(hamrep::sp_iso_inverse(1, RatMatrix::identity(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hamrep::sp_iso_inverse(2, RatMatrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("diagonal weights and raising indices") {
  CHECK(hamrep::cartan_weight(MultiIndex{5, 0}) == std::vector<std::int64_t>{5});
  CHECK(hamrep::cartan_weight(MultiIndex{3, 1, 0, 2}) ==
        std::vector<std::int64_t>{3, -1});
  CHECK_THROWS_AS(hamrep::cartan_weight(MultiIndex{0, 0}), std::invalid_argument);

  const auto raising = hamrep::raising_indices(2);
  CHECK(raising.size() == 4);
  const std::set<MultiIndex> expected{MultiIndex{2, 0, 0, 0}, MultiIndex{0, 2, 0, 0},
                                      MultiIndex{1, 0, 0, 1}, MultiIndex{1, 1, 0, 0}};
  CHECK(std::set<MultiIndex>(raising.begin(), raising.end()) == expected);
  CHECK(hamrep::raising_indices(1).size() == 1);
  CHECK(hamrep::raising_indices(3).size() == 9);
}

TEST_CASE("diagonal quadratic fields act diagonally on the index basis") {
  for (int m : {1, 2}) {
    for (int n = -1; n <= 2; ++n) {
      for (const MultiIndex& r : hamrep::grade_component(m, n)) {
        const auto weight = hamrep::cartan_weight(r);
        for (int i = 0; i < m; ++i) {
          MultiIndex diag = MultiIndex::zero(2 * m);
          diag[i] = 1;
          diag[m + i] = 1;
          CHECK(hamrep::x_bracket(PolyField::basis(m, diag), PolyField::basis(m, r)) ==
                Rational(weight[static_cast<std::size_t>(i)]) *
                    PolyField::basis(m, r));
        }
      }
    }
  }
}

TEST_CASE("each graded component has a single highest weight line") {
  for (int n = 0; n <= 4; ++n) {
    const auto hwvs = hamrep::highest_weight_vectors(1, n);
    REQUIRE(hwvs.size() == 1);
    MultiIndex top = MultiIndex::zero(2);
    top[0] = n + 2;
    CHECK(hwvs[0] == PolyField::basis(1, top));
  }
  const auto hwvs2 = hamrep::highest_weight_vectors(2, 1);
  REQUIRE(hwvs2.size() == 1);
  MultiIndex top2 = MultiIndex::zero(4);
  top2[0] = 3;
  CHECK(hwvs2[0] == PolyField::basis(2, top2));
}

TEST_CASE("adjoint closure of a graded component from its highest weight line") {
  for (int n : {0, 1, 2, 3}) {
    CHECK(hamrep::verify_irreducible_component(1, n).passed());
  }
  CHECK(hamrep::verify_irreducible_component(2, 1).passed());
  CHECK_THROWS_AS(hamrep::verify_irreducible_component(3, 10), std::length_error);
}

TEST_CASE("coordinates within a graded component") {
  const auto basis = hamrep::grade_component(1, 1);
  REQUIRE(basis.size() == 4);
  PolyField f(1);
  f.add_term(basis[0], Rational(2));
  f.add_term(basis[2], Rational(-1, 3));
  const auto coords = hamrep::to_coordinates(f, basis);
  REQUIRE(coords.size() == basis.size());
  CHECK(coords[0] == Rational(2));
  CHECK(coords[1] == Rational(0));
  CHECK(coords[2] == Rational(-1, 3));
  CHECK(hamrep::from_coordinates(1, coords, basis) == f);
  // A field outside the span of the index set cannot be expressed.
  PolyField off(1);
  off.add_term(MultiIndex{2, 0}, Rational(1));
  CHECK_THROWS_AS(hamrep::to_coordinates(off, basis), std::invalid_argument);
}
