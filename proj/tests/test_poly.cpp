#include <doctest.h>

#include "oracles.hpp"
#include "sf/groebner.hpp"

using namespace sf;

namespace {

PolyRing flagship_ring() {
  return PolyRing(Field::prime(2), {{"x", 1}, {"y", 1}}, OrderKind::grevlex);
}

}  // namespace

TEST_CASE("parse and print round-trip in the canonical form") {
  PolyRing R = flagship_ring();
  for (const char* s : {"x^2*y + y^3", "x + y", "1", "0", "x^2", "y"}) {
    Poly p = parse_poly(&R, s);
    CHECK(p.to_string() == s);
    CHECK(parse_poly(&R, p.to_string()) == p);
  }
  // non-canonical inputs normalize
  CHECK(parse_poly(&R, "y^3 + x^2*y").to_string() == "x^2*y + y^3");
  CHECK(parse_poly(&R, "x + x").to_string() == "0");
  CHECK(parse_poly(&R, "2*x").to_string() == "0");
  CHECK(parse_poly(&R, "3*x").to_string() == "x");
  CHECK_THROWS_AS(parse_poly(&R, "z + 1"), Error);
}

TEST_CASE("coefficients mod p and subtraction") {
  PolyRing R(Field::prime(5), {{"x", 1}}, OrderKind::grevlex);
  Poly p = parse_poly(&R, "x - 2");
  CHECK(p.to_string() == "x + 3");
  CHECK(p.sub(p).is_zero());
  CHECK(p.mul(p).to_string() == "x^2 + x + 4");  // (x+3)^2 = x^2+6x+9
}

TEST_CASE("grevlex and lex orders") {
  PolyRing R = flagship_ring();
  // grevlex: x^2 > xy > y^2 > x > y
  Poly p = parse_poly(&R, "y^2 + x*y + y + x^2 + x");
  CHECK(p.to_string() == "x^2 + x*y + y^2 + x + y");
  PolyRing L(Field::prime(2), {{"x", 1}, {"y", 1}}, OrderKind::lex);
  Poly q = parse_poly(&L, "y^3 + x");
  CHECK(q.lt().m.e[0] == 1);  // lex puts x first despite lower degree
}

TEST_CASE("weighted degrees and homogeneity") {
  PolyRing C(Field::prime(2), {{"x1", 2}, {"x2", 2}}, OrderKind::grevlex);
  Poly p = parse_poly(&C, "x1^2 + x1*x2");
  CHECK(p.is_homogeneous());
  CHECK(p.hdeg() == 4);
  Poly q = parse_poly(&C, "x1 + x1*x2");
  CHECK_FALSE(q.is_homogeneous());
}

TEST_CASE("division: exact divisor") {
  PolyRing R = flagship_ring();
  std::vector<Poly> quot;
  Poly r = poly_divide(parse_poly(&R, "x^2"), {parse_poly(&R, "x^2")}, &quot);
  CHECK(r.is_zero());
  CHECK(quot[0].to_string() == "1");
}

TEST_CASE("division: x^2*y + y^3 by [x^2, y^2]") {
  PolyRing R = flagship_ring();
  std::vector<Poly> d = {parse_poly(&R, "x^2"), parse_poly(&R, "y^2")};
  Poly g = parse_poly(&R, "x^2*y + y^3");
  std::vector<Poly> quot;
  Poly r = poly_divide(g, d, &quot);
  CHECK(r.is_zero());
  CHECK(quot[0].to_string() == "y");
  CHECK(quot[1].to_string() == "y");
  // division identity
  Poly back = quot[0].mul(d[0]).add(quot[1].mul(d[1])).add(r);
  CHECK(back == g);
}

TEST_CASE("division: no leading term divides") {
  PolyRing R = flagship_ring();
  std::vector<Poly> quot;
  Poly r = poly_divide(parse_poly(&R, "x*y"),
                       {parse_poly(&R, "x^2"), parse_poly(&R, "y^2")}, &quot);
  CHECK(r.to_string() == "x*y");
  CHECK(quot[0].is_zero());
  CHECK(quot[1].is_zero());
}

TEST_CASE("division identity on random instances, homogeneous quotients") {
  PolyRing R(Field::prime(3), {{"x", 1}, {"y", 1}, {"z", 1}}, OrderKind::grevlex);
  sforacle::Rng rng(11);
  auto random_homog = [&](long deg) {
    Poly p = Poly::zero(&R);
    for (const auto& m : sforacle::monomials_of_degree(&R, deg))
      p = p.add(Poly::monomial(&R, m, rng.below(3)));
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Poly g = random_homog(1 + rng.below(4));
    std::vector<Poly> divisors;
    for (int i = 0; i < 2; ++i) {
      Poly d = random_homog(1 + rng.below(3));
      if (!d.is_zero()) divisors.push_back(d);
    }
    if (divisors.empty()) continue;
    std::vector<Poly> quot;
    Poly r = poly_divide(g, divisors, &quot);
    Poly back = r;
    for (size_t i = 0; i < divisors.size(); ++i) back = back.add(quot[i].mul(divisors[i]));
    CHECK(back == g);
    for (size_t i = 0; i < divisors.size(); ++i) CHECK(quot[i].is_homogeneous());
    CHECK(r.is_homogeneous());
  }
}

TEST_CASE("evaluation over an extension") {
  PolyRing C(Field::prime(2), {{"x1", 2}, {"x2", 2}}, OrderKind::grevlex);
  Field F4 = Field::extension(2, 2);
  Poly conic = parse_poly(&C, "x1^2 + x1*x2 + x2^2");
  CHECK(conic.evaluate(F4, {1, 1}) == 1);
  CHECK(conic.evaluate(F4, {1, 2}) == 0);  // (1, a): 1 + a + a^2 = 0
  CHECK(conic.evaluate(F4, {1, 3}) == 0);  // (1, a+1)
}
