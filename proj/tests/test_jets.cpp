#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duval/jets.hpp"
#include "duval/parse.hpp"
#include "test_util.hpp"

using namespace duval;

namespace {

Poly P(const char* s, const VarSetPtr& vs) { return parse_poly(s, vs); }

// Random unimodular integer change of coordinates (product of shears).
std::map<int, Poly> random_unimodular(std::mt19937& rng, const VarSetPtr& vs) {
  int n = vs->arity();
  std::vector<Poly> cols;
  for (int i = 0; i < n; ++i) cols.push_back(Poly::variable(vs, i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> amt(-2, 2);
  for (int k = 0; k < 6; ++k) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    cols[i] += cols[j] * Rat(amt(rng));
  }
  std::map<int, Poly> images;
  for (int i = 0; i < n; ++i) images.emplace(i, cols[i]);
  return images;
}

}  // namespace

TEST_CASE("jet membership basics") {
  auto vs = make_vars("x y z");
  Ideal X(vs, {P("x", vs)});
  CHECK(jet_membership(P("x", vs), X, 1));

  Ideal M(vs, {P("x", vs), P("y", vs), P("z", vs)});
  CHECK(!jet_membership(Poly::constant(vs, 1), M, 1));
  CHECK(!jet_membership(Poly::constant(vs, 1), M, 6));
}

TEST_CASE("z^4 lies in the Jacobian ideal of the D5 germ") {
  auto vs = make_vars("x y z");
  Poly f = P("x^2 + y^2*z + z^4", vs);
  Ideal J(vs, {f.derivative(0), f.derivative(1), f.derivative(2)});
  // z*(y^2 + 4z^3) - (y/2)*(2yz) = 4z^4, so membership holds by D=4.
  CHECK(jet_membership(P("z^4", vs), J, 4));
  CHECK(!jet_membership(P("z^3", vs), J, 5));
}

TEST_CASE("jet membership is monotone in D") {
  auto vs = make_vars("x y z");
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    Poly g1 = testutil::random_poly(rng, vs, 2, 3);
    Poly g2 = testutil::random_poly(rng, vs, 2, 3);
    Poly h = testutil::random_poly(rng, vs, 2, 3);
    if (g1.is_zero() || g2.is_zero() || h.is_zero()) continue;
    Ideal I(vs, {g1, g2});
    Poly target = g1 * h;  // a genuine member
    int d0 = target.total_degree();
    bool prev = false;
    for (int d = d0; d <= d0 + 3; ++d) {
      bool now = jet_membership(target, I, d);
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("Milnor numbers of the A_n chain germs") {
  auto vs = make_vars("x y z");
  for (int n = 1; n <= 4; ++n) {
    Poly f = P("x*y", vs) + Poly::variable(vs, 2, n + 1);
    CHECK(milnor_number_auto(f, n) == n);
  }
}

TEST_CASE("Morse point and the D5 germ") {
  auto vs = make_vars("x y z");
  CHECK(milnor_number_auto(P("x^2 + y^2 + z^2", vs)) == 1);
  CHECK(milnor_number_auto(P("x^2 + y^2*z + z^4", vs), 5) == 5);
}

TEST_CASE("smooth germ has Milnor number zero") {
  auto vs = make_vars("x y z");
  CHECK(milnor_number_auto(P("x + y^2 + z^5", vs)) == 0);
}

TEST_CASE("Milnor number is invariant under unimodular changes") {
  auto vs = make_vars("x y z");
  std::mt19937 rng(43);
  std::vector<std::pair<const char*, int>> germs = {
      {"x*y + z^3", 2}, {"x^2 + y^2*z + z^4", 5}, {"x^2 + y^3 + z^4", 6}};
  for (auto& [text, mu] : germs) {
    Poly f = P(text, vs);
    for (int k = 0; k < 4; ++k) {
      auto change = random_unimodular(rng, vs);
      CHECK(milnor_number_auto(f.substitute(change, vs)) == mu);
    }
  }
}

TEST_CASE("stabilization: adding a square keeps mu") {
  auto vs = make_vars("x y z");
  for (int n = 2; n <= 5; ++n) {
    Poly g2 = Poly::variable(vs, 0, n + 1) + P("y^2", vs);  // A_n in (x, y)
    Poly f = g2 + P("z^2", vs);
    CHECK(milnor_number_auto(f, n) == n);
  }
}

TEST_CASE("non-isolated singularity is refused up to the cap") {
  auto vs = make_vars("x y z");
  CHECK_THROWS_AS(milnor_number_auto(P("x*y*z", vs)), NotStabilized);
}

TEST_CASE("hessian corank") {
  auto vs = make_vars("x y z");
  CHECK(hessian_corank(P("x^2 + y^2 + z^2", vs)) == 0);
  CHECK(hessian_corank(P("x*y + z^3", vs)) == 1);
  CHECK(hessian_corank(P("x^2 + y^2*z + z^4", vs)) == 2);
  CHECK(hessian_corank(P("y^3 + z^3", vs)) == 3);
}

TEST_CASE("jet space ambient dimension") {
  CHECK(jet_dimension(3, 2) == 10);
  CHECK(jet_dimension(4, 1) == 5);
  JetSpace S(make_vars("x y"), 2);
  CHECK(S.ambient_dim() == 6);
  CHECK(S.add(parse_poly("x + y", make_vars("x y"))));
  CHECK(!S.add(parse_poly("2*x + 2*y", make_vars("x y"))));
  CHECK(S.rank() == 1);
}
