#pragma once

#include <vector>

#include "duval/ideal.hpp"
#include "duval/poly.hpp"

namespace duval {

/// Row-reduced Q-linear span inside the space of polynomials of total
/// degree <= D over a fixed VarSet. Pivot = grlex-largest monomial of a
/// row; rows are kept reduced against each other (online RREF).
class JetSpace {
 public:
  JetSpace(VarSetPtr vs, int degree_bound);

  int degree_bound() const { return bound_; }
  int ambient_dim() const;  // number of monomials of degree <= D
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Insert the (truncated) polynomial; returns true if it enlarged the span.
  bool add(const Poly& p);
  /// True iff the (truncated) polynomial lies in the current span.
  bool contains(const Poly& p) const;

  /// Residual after reduction against the basis (zero iff contained).
  Poly reduce(const Poly& p) const;

 private:
  Poly reduce_impl(Poly p) const;

  VarSetPtr vs_;
  int bound_;
  std::map<Monomial, Poly, GrlexLess> pivots_;  // pivot -> monic row
};

/// Number of monomials in `arity` variables of total degree <= D.
long jet_dimension(int arity, int degree_bound);

/// All monomials of the exact degree d.
std::vector<Monomial> monomials_of_degree(int arity, int d);

/// True iff g lies in the degree-<=D span of { m * g_i } over monomials m
/// with deg(m * g_i) <= D (no truncation).
bool jet_membership(const Poly& g, const Ideal& I, int degree_bound);

/// Milnor number via jet linear algebra with a stabilization certificate:
/// the span of all trunc_{<=D}(m * df/dx_i) must cover every monomial of
/// degree exactly D, which forces m^D into the Jacobian ideal; the stable
/// quotient dimension is then exact. Throws NotStabilized otherwise.
int milnor_number(const Poly& f, int degree_bound);

/// milnor_number with the default bound policy: D = 2*hint + 2, doubling
/// on NotStabilized up to the hard cap of 24.
int milnor_number_auto(const Poly& f, int candidate_hint = 3);

/// Corank of the symmetric matrix of second partials at the origin.
/// Requires no constant or linear terms.
int hessian_corank(const Poly& f);

}  // namespace duval
