#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duval/parse.hpp"
#include "test_util.hpp"

using namespace duval;

TEST_CASE("grammar basics") {
  auto vs = parse_vars_header("vars: x y z t");
  CHECK(vs->arity() == 4);
  Poly p = parse_poly("3/2*x^2*y - t^3 + u", make_vars("x y t u"));
  CHECK(p.coefficient(Monomial({2, 1, 0, 0})) == Rat(3, 2));
  CHECK(p.coefficient(Monomial({0, 0, 3, 0})) == Rat(-1));
  CHECK(p.coefficient(Monomial({0, 0, 0, 1})) == 1);
}

TEST_CASE("whitespace insensitive") {
  auto vs = make_vars("x z");
  CHECK(parse_poly("x^2+ 2 * x *z^ 2", vs) == parse_poly("x^2+2*x*z^2", vs));
}

TEST_CASE("parentheses and signs") {
  auto vs = make_vars("x z t");
  CHECK(parse_poly("(z^3 + 1)*t^2", vs) == parse_poly("z^3*t^2 + t^2", vs));
  CHECK(parse_poly("-x - -1", vs) == parse_poly("1 - x", vs));
  CHECK(parse_poly("x - (z - t)^2", vs) ==
        parse_poly("x - z^2 + 2*z*t - t^2", vs));
}

TEST_CASE("errors") {
  auto vs = make_vars("x y");
  CHECK_THROWS_AS(parse_poly("x + w", vs), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", vs), ParseError);
  CHECK_THROWS_AS(parse_poly("x ^ y", vs), ParseError);
  CHECK_THROWS_AS(parse_poly("x / z", vs), ParseError);
  CHECK_THROWS_AS(parse_vars_header("vars: x x"), ParseError);
}

TEST_CASE("round trip: printing reparses to the same poly") {
  auto vs = make_vars("x y z t");
  std::mt19937 rng(23);
  for (int i = 0; i < 80; ++i) {
    Poly p = testutil::random_poly(rng, vs, 5, 6);
    CHECK(parse_poly(p.str(), vs) == p);
  }
}
