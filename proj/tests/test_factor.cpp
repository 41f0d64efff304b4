#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duval/factor.hpp"
#include "duval/parse.hpp"
#include "test_util.hpp"

using namespace duval;

namespace {
Poly P(const char* s, const VarSetPtr& vs) { return parse_poly(s, vs); }
}  // namespace

TEST_CASE("univariate roots and orders") {
  auto vs = make_vars("s");
  UPoly p = UPoly::from_poly(P("s^3*(s-1)^2*(s^2+1)", vs), 0);
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rat, int>{Rat(0), 3});
  CHECK(roots[1] == std::pair<Rat, int>{Rat(1), 2});
  CHECK(vanishing_order_at(p, Rat(0)) == 3);
  CHECK(vanishing_order_at(p, Rat(2)) == 0);

  UPoly minp = UPoly::from_poly(P("s^2+1", vs), 0);
  CHECK(vanishing_order_mod(p, minp) == 1);
  UPoly z3 = UPoly::from_poly(P("(s^3+1)^2*s", vs), 0);
  CHECK(vanishing_order_mod(z3, UPoly::from_poly(P("s^2-s+1", vs), 0)) == 2);
}

TEST_CASE("fractional roots") {
  auto vs = make_vars("s");
  UPoly p = UPoly::from_poly(P("(2*s-3)*(3*s+1)", vs), 0);
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Rat(-1, 3));
  CHECK(roots[1].first == Rat(3, 2));
}

TEST_CASE("component factorization splits restrictions") {
  auto vs = make_vars("x y z t");
  // x*y: two coordinate components.
  auto f1 = factor_for_components(P("x*y", vs));
  REQUIRE(f1.pieces.size() == 2);
  CHECK(f1.pieces[0].poly == P("x", vs));
  CHECK(f1.pieces[1].poly == P("y", vs));

  // x*z^2: coordinate with multiplicity.
  auto f2 = factor_for_components(P("x*z^2", vs));
  REQUIRE(f2.pieces.size() == 2);
  CHECK(f2.pieces[1].multiplicity == 2);

  // z*(y^2 + x*z - 4): monomial times an irreducible core.
  auto f3 = factor_for_components(P("z*(y^2 + x*z - 4)", vs));
  REQUIRE(f3.pieces.size() == 2);
  CHECK(f3.pieces[1].poly == P("y^2 + x*z - 4", vs));
  CHECK(f3.pieces[1].geometric_count == 1);

  // x^2 + x = x(x+1): univariate split.
  auto f4 = factor_for_components(P("x^2 + x", vs));
  REQUIRE(f4.pieces.size() == 2);
  CHECK(f4.pieces[1].poly == P("x + 1", vs));

  // Binary homogeneous with a conjugate pair: x^2 + z^2.
  auto f5 = factor_for_components(P("x^2 + z^2", vs));
  REQUIRE(f5.pieces.size() == 1);
  CHECK(f5.pieces[0].geometric_count == 2);

  // Binary with rational lines: x^2 - z^2.
  auto f6 = factor_for_components(P("x^2 - z^2", vs));
  REQUIRE(f6.pieces.size() == 2);
  CHECK(f6.pieces[0].geometric_count == 1);
  CHECK(f6.pieces[1].geometric_count == 1);

  // z^3 + 1 over one variable: rational root plus quadratic core.
  auto f7 = factor_for_components(P("z^3 + 1", vs));
  REQUIRE(f7.pieces.size() == 2);
  CHECK(f7.pieces[0].poly == P("z + 1", vs));
  CHECK(f7.pieces[1].geometric_count == 2);
}

TEST_CASE("cubic factor types") {
  auto vs = make_vars("z t");
  CHECK(cubic_factor_type(P("z*t*(z+t)", vs)) == CubicType::ThreeDistinct);
  CHECK(cubic_factor_type(P("z^2*t", vs)) == CubicType::DoubleSimple);
  CHECK(cubic_factor_type(P("z^3", vs)) == CubicType::TripleLine);
  CHECK(cubic_factor_type(P("(z+t)^3", vs)) == CubicType::TripleLine);
  CHECK(cubic_factor_type(P("z^3 + t^3", vs)) == CubicType::ThreeDistinct);
  CHECK(cubic_factor_type(P("z^3 - z*t^2", vs)) == CubicType::ThreeDistinct);
  CHECK(cubic_factor_type(Poly::zero(vs)) == CubicType::NotSplit);
  CHECK_THROWS_AS(cubic_factor_type(P("z^2", vs)), MathError);
}

TEST_CASE("cubic type invariant under linear substitution") {
  auto vs = make_vars("z t");
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> k(-3, 3);
  std::vector<std::pair<const char*, CubicType>> cases = {
      {"z*t*(z+t)", CubicType::ThreeDistinct},
      {"z^2*t", CubicType::DoubleSimple},
      {"z^3", CubicType::TripleLine}};
  for (auto& [text, type] : cases) {
    Poly c = P(text, vs);
    for (int trial = 0; trial < 8; ++trial) {
      int a = k(rng), b = k(rng), d = k(rng), e = k(rng);
      if (a * e - b * d == 0) continue;
      std::map<int, Poly> img = {
          {0, Poly::variable(vs, 0) * Rat(a) + Poly::variable(vs, 1) * Rat(b)},
          {1, Poly::variable(vs, 0) * Rat(d) + Poly::variable(vs, 1) * Rat(e)}};
      CHECK(cubic_factor_type(c.substitute(img, vs)) == type);
    }
  }
}

TEST_CASE("resultant eliminates a variable exactly") {
  auto vs = make_vars("x y");
  // res_y(x^2 + y^2 - 1, x - y) = 2x^2 - 1 up to a constant.
  Poly r = resultant(P("x^2 + y^2 - 1", vs), P("x - y", vs), 1);
  CHECK(proportional(r, P("2*x^2 - 1", vs)));

  // Common factor forces a zero resultant.
  Poly a = P("(x + y)*(x - 2)", vs);
  Poly b = P("(x + y)*(y + 5)", vs);
  CHECK(resultant(a, b, 1).is_zero());
}

TEST_CASE("resultant matches product formula on random univariate pairs") {
  auto vs = make_vars("x");
  std::mt19937 rng(53);
  for (int t = 0; t < 10; ++t) {
    // Build p, q from known roots; res = lc stuff * prod of differences.
    std::vector<Rat> pr = {testutil::random_rat(rng), testutil::random_rat(rng)};
    std::vector<Rat> qr = {testutil::random_rat(rng)};
    Poly p = (Poly::variable(vs, 0) - Poly::constant(vs, pr[0])) *
             (Poly::variable(vs, 0) - Poly::constant(vs, pr[1]));
    Poly q = Poly::variable(vs, 0) - Poly::constant(vs, qr[0]);
    Rat expect = (qr[0] - pr[0]) * (qr[0] - pr[1]);
    Poly r = resultant(p, q, 0);
    REQUIRE(r.is_constant());
    CHECK(r.constant_term() == expect);
  }
}

TEST_CASE("small system solving") {
  auto vs = make_vars("x y z");
  // Simple transverse intersection.
  auto s1 = solve_small_system({P("x - 1", vs), P("y - 2", vs), P("z", vs)});
  REQUIRE(s1.rational_points.size() == 1);
  CHECK(s1.rational_points[0] == std::vector<Rat>{Rat(1), Rat(2), Rat(0)});

  // Two points of a conic meeting a line.
  auto s2 = solve_small_system({P("x^2 + y^2 - 25", vs), P("y - 3", vs), P("z", vs)});
  CHECK(s2.rational_points.size() == 2);

  // Conjugate-only intersection.
  auto s3 = solve_small_system({P("x^2 + 1", vs), P("y", vs), P("z", vs)});
  CHECK(s3.rational_points.empty());
  CHECK(s3.conjugate_count == 2);

  // A whole curve of solutions.
  auto s4 = solve_small_system({P("x", vs), P("x*y", vs)});
  CHECK(s4.positive_dimensional);

  // Inconsistent.
  auto s5 = solve_small_system({P("x", vs), P("x + 1", vs), P("y", vs), P("z", vs)});
  CHECK(s5.rational_points.empty());
  CHECK(s5.conjugate_count == 0);
}

TEST_CASE("nonlinear pair via resultants") {
  auto vs = make_vars("x y");
  // x^2 - y = 0 and y^2 - 4 = 0 hmm: y = x^2, y = +-2 -> x^2 = 2 conj, x^2 = -2 conj.
  auto s = solve_small_system({P("x^2 - y", vs), P("y^2 - 4", vs)});
  CHECK(s.rational_points.empty());
  CHECK(s.conjugate_count > 0);

  auto s2 = solve_small_system({P("x^2 - y", vs), P("y - 4", vs)});
  REQUIRE(s2.rational_points.size() == 2);
}
