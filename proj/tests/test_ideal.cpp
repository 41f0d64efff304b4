#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duval/ideal.hpp"
#include "duval/parse.hpp"
#include "test_util.hpp"

using namespace duval;

namespace {
Poly P(const char* s, const VarSetPtr& vs) { return parse_poly(s, vs); }
VarSetPtr S() { return make_vars("s"); }
}  // namespace

TEST_CASE("singular ideal of a cDV hypersurface") {
  auto vs = make_vars("x y z u");
  Poly f = P("x*y + y*u + x*u", vs);
  // Partials are y+u, x+u, 0, x+y; the zero one is pruned.
  Ideal I = hypersurface_singular_ideal(f);
  REQUIRE(I.size() == 4);

  // The line x = y = u = 0 sits inside the singular locus.
  ParamCurve L0(vs, "s",
                {Poly::zero(S()), Poly::zero(S()), Poly::variable(S(), 0), Poly::zero(S())});
  CHECK(curve_in_locus(L0, I));

  // A generic line through the origin does not.
  ParamCurve gen(vs, "s",
                 {Poly::variable(S(), 0), Poly::variable(S(), 0) * Rat(2),
                  Poly::variable(S(), 0) * Rat(3), Poly::variable(S(), 0) * Rat(5)});
  CHECK(!curve_in_locus(gen, I));
}

TEST_CASE("smooth hypersurface has unit singular ideal") {
  auto vs = make_vars("x y z");
  Ideal I = hypersurface_singular_ideal(P("x", vs));
  CHECK(I.is_unit());
}

TEST_CASE("singular locus of the central fiber model") {
  auto vs = make_vars("x y z t");
  Poly f = P("x*y + (z^3 + 1)*t^2", vs);
  Ideal I = hypersurface_singular_ideal(f);
  ParamCurve L(vs, "s",
               {Poly::zero(S()), Poly::zero(S()), Poly::variable(S(), 0), Poly::zero(S())});
  CHECK(curve_in_locus(L, I));
}

TEST_CASE("the l_d lines are singular on the first-blow-up chart") {
  // x^2*t^2 + y^2*z + x*z^2 + a3*z with a3 = -4; lines z = t = y - d = 0,
  // d^2 + a3 = 0, so d = 2.
  auto vs = make_vars("x y z t");
  Poly f = P("x^2*t^2 + y^2*z + x*z^2 - 4*z", vs);
  Ideal I = hypersurface_singular_ideal(f);
  ParamCurve ld(vs, "s",
                {Poly::variable(S(), 0), Poly::constant(S(), Rat(2)), Poly::zero(S()),
                 Poly::zero(S())});
  CHECK(curve_in_locus(ld, I));
}

TEST_CASE("curve_in_locus agrees with random evaluation") {
  auto vs = make_vars("x y z u");
  std::mt19937 rng(31);
  auto s = S();
  for (int trial = 0; trial < 10; ++trial) {
    Poly f = testutil::random_poly(rng, vs, 3, 4);
    if (f.is_zero()) continue;
    Ideal I = hypersurface_singular_ideal(f);
    std::vector<Poly> imgs;
    for (int i = 0; i < 4; ++i) imgs.push_back(testutil::random_poly(rng, s, 2, 2));
    bool some_nonconst = false;
    for (auto& p : imgs) some_nonconst |= !p.is_constant();
    if (!some_nonconst) continue;
    ParamCurve c(vs, "s", imgs);
    bool in = curve_in_locus(c, I);
    // Necessary condition check at 20 random parameter values.
    bool all_zero = true;
    for (int k = 0; k < 20 && all_zero; ++k) {
      Rat sval = testutil::random_rat(rng);
      std::vector<Rat> pt;
      for (auto& img : imgs) pt.push_back(img.eval({sval}));
      for (const auto& g : I.generators())
        if (g.eval(pt) != 0) {
          all_zero = false;
          break;
        }
    }
    if (in) CHECK(all_zero);
    if (!all_zero) CHECK(!in);
  }
}

TEST_CASE("ideal invariants: duplicates pruned, zero rejected") {
  auto vs = make_vars("x y");
  Ideal I(vs, {P("x", vs), P("2*x", vs), P("y", vs), Poly::zero(vs)});
  CHECK(I.size() == 2);
  CHECK_THROWS_AS(Ideal(vs, {Poly::zero(vs)}), MathError);
}
