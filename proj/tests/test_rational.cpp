#include "lieco/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace lieco;

TEST_CASE("rat_parse handles fractions, integers, and decimals") {
  CHECK(rat_parse("3/4") == Rat(3, 4));
  CHECK(rat_parse("-3/4") == Rat(-3, 4));
  CHECK(rat_parse("6/8") == Rat(3, 4));    // canonicalized
  CHECK(rat_parse("3/-4") == Rat(-3, 4));  // sign moves to the numerator
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_parse("+7") == Rat(7));
  CHECK(rat_parse(" -12 ") == Rat(-12));
  CHECK(rat_parse("0.125") == Rat(1, 8));
  CHECK(rat_parse("-0.5") == Rat(-1, 2));
  CHECK(rat_parse("-.5") == Rat(-1, 2));
  CHECK(rat_parse("2.") == Rat(2));
  CHECK(rat_parse("0.000000001") == Rat(1, 1000000000)); // nine digits, exact
}

TEST_CASE("rat_parse rejects garbage") {
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1e-3"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("0.0000000001"), std::invalid_argument); // ten digits
  CHECK_THROWS_AS(rat_parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("rat_str is canonical and round-trips") {
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(Rat(0)) == "0");
  for (const char* text : {"3/4", "-7", "0", "22/7", "-1000000007/3"})
    CHECK(rat_str(rat_parse(text)) == text);
}

TEST_CASE("ratvec_parse_csv splits on commas") {
  RatVec v = ratvec_parse_csv("1, -2/3 ,0.5");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rat(1));
  CHECK(v[1] == Rat(-2, 3));
  CHECK(v[2] == Rat(1, 2));
  CHECK_THROWS_AS(ratvec_parse_csv(""), std::invalid_argument);
}

TEST_CASE("rat_d converts without surprises") {
  CHECK(rat_d(Rat(1, 2)) == 0.5);
  CHECK(rat_d(Rat(-3)) == -3.0);
}
