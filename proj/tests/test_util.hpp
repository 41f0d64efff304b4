#pragma once

#include <random>

#include "duval/parse.hpp"
#include "duval/poly.hpp"

namespace duval::testutil {

// Deterministic random polynomials for the property suites.
inline Poly random_poly(std::mt19937& rng, const VarSetPtr& vs, int max_deg, int nterms,
                        int coeff_bound = 9) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> den(1, 4);
  Poly p(vs);
  for (int i = 0; i < nterms; ++i) {
    Monomial m(vs->arity());
    int budget = deg(rng);
    std::uniform_int_distribution<int> pick(0, vs->arity() - 1);
    for (int j = 0; j < budget; ++j) m.e[pick(rng)] += 1;
    Rat c(coeff(rng), den(rng));
    c.canonicalize();
    p += Poly::term(vs, m, c);
  }
  return p;
}

inline Rat random_rat(std::mt19937& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  Rat c(num(rng), den(rng));
  c.canonicalize();
  return c;
}

}  // namespace duval::testutil
