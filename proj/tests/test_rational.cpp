#include "threshold_lab/rational.hpp"

#include <sstream>

#include "doctest.h"

using tlab::Rational;

TEST_CASE("rational normalizes on construction") {
  CHECK(Rational(6, 20) == Rational(3, 10));
  CHECK(Rational(-6, 20) == Rational(-3, 10));
  CHECK(Rational(6, -20) == Rational(-3, 10));
  CHECK(Rational(-6, -20) == Rational(3, 10));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
  CHECK(-Rational(3, 7) == Rational(-3, 7));
}

TEST_CASE("rational ordering cross-multiplies") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 30) <= Rational(4, 17));
  CHECK(Rational(1, 4) + Rational(1, 20) > Rational(4, 17));
  CHECK(Rational(5, 10) >= Rational(1, 2));
  // Values near the 64-bit edge still compare correctly.
  const std::int64_t big = 3'000'000'000LL;
  CHECK(Rational(big, big + 1) < Rational(1));
  CHECK(Rational(1) < Rational(big + 1, big));
}

TEST_CASE("rational parse and print round-trip") {
  CHECK(Rational::parse("3/10") == Rational(3, 10));
  CHECK(Rational::parse("-3/10") == Rational(-3, 10));
  CHECK(Rational::parse("6/20") == Rational(3, 10));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational(3, 10).str() == "3/10");
  CHECK(Rational(42).str() == "42");
  CHECK(Rational(-1, 6).str() == "-1/6");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

  std::ostringstream out;
  out << Rational(7, 2);
  CHECK(out.str() == "7/2");
}

TEST_CASE("rational refuses silent overflow") {
  const Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
}
