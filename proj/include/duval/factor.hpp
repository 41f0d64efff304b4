#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "duval/poly.hpp"

namespace duval {

/// Dense univariate polynomial over Q; index = degree.
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat lc() const { return c.back(); }
  Rat eval(const Rat& x) const;

  UPoly operator+(const UPoly& q) const;
  UPoly operator-(const UPoly& q) const;
  UPoly operator*(const UPoly& q) const;
  UPoly operator*(const Rat& k) const;
  UPoly monic() const;
  UPoly derivative() const;

  /// Quotient/remainder by a nonzero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  /// Extract from a Poly that involves only `var`.
  static UPoly from_poly(const Poly& p, int var);
  Poly to_poly(const VarSetPtr& vs, int var) const;
};

UPoly upoly_gcd(UPoly a, UPoly b);

/// Rational roots with multiplicities (exact, via primitivized RRT).
std::vector<std::pair<Rat, int>> rational_roots(const UPoly& p);

/// Multiplicity of the root `at` (0 when p(at) != 0); errors on zero p.
int vanishing_order_at(const UPoly& p, const Rat& at);

/// Multiplicity of the (squarefree) factor m in p, i.e. the largest k with
/// m^k | p. Used for parameter values in small algebraic extensions.
int vanishing_order_mod(const UPoly& p, const UPoly& minpoly);

/// One multiplicative piece of a component factorization.
struct FactorPiece {
  Poly poly;            // the factor, content-normalized
  int multiplicity;     // power in the input
  int geometric_count;  // components over the algebraic closure
};

struct Factorization {
  Rat unit;
  std::vector<FactorPiece> pieces;
};

/// Factor a restriction polynomial into coordinate powers, rational linear
/// pieces and residual cores, enough to enumerate divisor components at
/// fixture scale: variable powers split off; univariate and binary
/// homogeneous parts fully split over Q with irreducible-over-Q cores kept
/// whole (geometric_count = degree); genuinely multivariate residuals stay
/// one piece. Degrees beyond 10 are rejected.
Factorization factor_for_components(const Poly& p);

enum class CubicType { ThreeDistinct, DoubleSimple, TripleLine, NotSplit };

/// Factorization type over the closure of a homogeneous binary cubic,
/// decided by gcd degrees (no root finding). Zero input gives NotSplit;
/// non-cubic or non-binary input is an error.
CubicType cubic_factor_type(const Poly& c);

const char* cubic_type_name(CubicType t);

/// Resultant of p and q with respect to `var` (both may involve other
/// variables; computed exactly by evaluation and interpolation in one
/// remaining variable, or directly when univariate).
Poly resultant(const Poly& p, const Poly& q, int var);

/// Zero set of a small polynomial system, used on systems whose solutions
/// are finite. Rational points are enumerated exactly; conjugate solutions
/// are detected and counted (not enumerated).
struct SmallZeroSet {
  std::vector<std::vector<Rat>> rational_points;
  int conjugate_count = 0;   // solutions outside Q, with multiplicity ignored
  bool positive_dimensional = false;
};

SmallZeroSet solve_small_system(const std::vector<Poly>& gens);

}  // namespace duval
