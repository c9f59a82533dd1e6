#include <doctest.h>

#include "sf/field.hpp"

using namespace sf;

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  CHECK(F.add(3, 5) == 1);
  CHECK(F.sub(3, 5) == 5);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.neg(0) == 0);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.from_int(14) == 0);
  for (Fe a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_NOTHROW(Field::prime(2));
}

TEST_CASE("F4 has the modulus t^2+t+1 from the smallest-code search") {
  Field F = Field::extension(2, 2);
  CHECK(F.q() == 4);
  REQUIRE(F.modulus() == std::vector<uint32_t>{1, 1, 1});
  // a^2 = a + 1, a(a+1) = 1
  CHECK(F.mul(2, 2) == 3);
  CHECK(F.mul(2, 3) == 1);
  CHECK(F.inv(2) == 3);
  CHECK(F.add(2, 3) == 1);   // a + (a+1) = 1 in characteristic 2
  CHECK(F.to_string(3) == "a + 1");
  CHECK(F.parse_elem("a + 1") == 3);
  CHECK(F.parse_elem("a+1") == 3);
  CHECK(F.parse_elem("0") == 0);
}

TEST_CASE("F9 modulus and arithmetic") {
  Field F = Field::extension(3, 2);
  REQUIRE(F.modulus() == std::vector<uint32_t>{1, 0, 1});  // t^2 + 1
  // a^2 = -1 = 2
  CHECK(F.mul(3, 3) == 2);
  for (Fe a = 1; a < 9; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  // multiplicative group has order 8
  for (Fe a = 1; a < 9; ++a) CHECK(F.pow(a, 8) == 1);
}

TEST_CASE("constants embed code-for-code") {
  Field F2 = Field::prime(2);
  Field F4 = Field::extension(2, 2);
  for (Fe a = 0; a < 2; ++a)
    for (Fe b = 0; b < 2; ++b) CHECK(F4.mul(a, b) == F2.mul(a, b));
}
