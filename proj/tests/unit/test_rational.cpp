#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "hamrep/rational.hpp"

using hamrep::Integer;
using hamrep::Rational;

TEST_CASE("construction canonicalizes sign and common factors") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q and rejects garbage") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0/5") == Rational(0));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("str round-trips through parse") {
  for (const auto* text : {"0", "5", "-5", "1/2", "-22/7", "355/113"}) {
    const Rational r = Rational::parse(text);
    CHECK(r.str() == text);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(hamrep::inverse(Rational(2, 3)) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(hamrep::inverse(Rational(0)), std::domain_error);
}

TEST_CASE("ordering follows the rational order") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("predicates") {
  CHECK(Rational(0).is_zero());
  CHECK_FALSE(Rational(1, 9).is_zero());
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(2, 3).is_integer());
}

TEST_CASE("no overflow: arithmetic stays exact far beyond 64 bits") {
  const std::string big = "1" + std::string(30, '0');          // 10^30
  const std::string big_sq = "1" + std::string(60, '0');       // 10^60
  const Rational x = Rational::parse(big);
  CHECK(x * x == Rational::parse(big_sq));
  CHECK((x + Rational(1)) - x == Rational(1));
  CHECK(x / x == Rational(1));
  // 1/10^30 + 1/10^30 = 2/10^30 = 1/(5*10^29).
  const Rational tiny = hamrep::inverse(x);
  CHECK(tiny + tiny == Rational::parse("1/" + std::string("5") + std::string(29, '0')));
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << Rational(-3, 9);
  CHECK(os.str() == "-1/3");
}
