#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "duval/errors.hpp"

namespace duval {

// Exact rational scalar. The whole kernel is exact; no floating point.
using Rat = mpq_class;

std::string rat_str(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Ordered set of distinct variable names. Fixed for the lifetime of any
/// Poly that references it; compared by value.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  int arity() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;        // -1 if absent
  int index_checked(const std::string& name) const;  // throws
  bool operator==(const VarSet& o) const { return names_ == o.names_; }
  bool operator!=(const VarSet& o) const { return !(*this == o); }

  /// True if every variable of `sub` appears here.
  bool contains_all(const VarSet& sub) const;

  /// New VarSet with extra names appended (must be fresh).
  std::shared_ptr<const VarSet> extended(const std::vector<std::string>& extra) const;

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names);
VarSetPtr make_vars(const std::string& space_separated);

/// Exponent vector aligned with a VarSet.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int arity) : e(arity, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int degree() const;
  int degree_in(const std::vector<int>& vars) const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial quotient(const Monomial& m) const;  // assumes m.divides(*this)
  bool operator==(const Monomial& m) const { return e == m.e; }
};

/// Graded lexicographic: total degree first, then lex with earlier
/// variables more significant. Canonical order throughout.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

using TermMap = std::map<Monomial, Rat, GrlexLess>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariants: no stored zero coefficients; terms canonically ordered.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarSetPtr vs) : vs_(std::move(vs)) {}
  Poly(VarSetPtr vs, const Rat& c);

  static Poly zero(VarSetPtr vs) { return Poly(std::move(vs)); }
  static Poly constant(VarSetPtr vs, const Rat& c) { return Poly(std::move(vs), c); }
  static Poly variable(VarSetPtr vs, int var, int power = 1);
  static Poly variable(VarSetPtr vs, const std::string& name, int power = 1);
  static Poly term(VarSetPtr vs, Monomial m, const Rat& c);

  const VarSetPtr& varset() const { return vs_; }
  const VarSet& vars() const { return *vs_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rat coefficient(const Monomial& m) const;
  Rat constant_term() const;
  const Monomial& leading_monomial() const;  // grlex-largest; throws on zero
  Rat leading_coefficient() const;

  int total_degree() const;  // max term degree; -1 for zero
  int order() const;         // min term degree; throws on zero
  int degree_in(int var) const;
  int order_in(int var) const;  // min exponent of var across terms
  bool involves(int var) const;

  Poly operator+(const Poly& q) const;
  Poly operator-(const Poly& q) const;
  Poly operator-() const;
  Poly operator*(const Poly& q) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  /// In-place p -= c*q without temporaries.
  Poly& sub_scaled(const Poly& q, const Rat& c);
  bool operator==(const Poly& q) const;
  bool operator!=(const Poly& q) const { return !(*this == q); }

  Poly pow(int n) const;

  /// p(v + point), expanded exactly.
  Poly translate_origin(const std::vector<Rat>& point) const;

  /// Formal partial derivative.
  Poly derivative(int var) const;

  /// Substitution; unmapped variables go to the same-named variable of
  /// `target` (identity). Optional total-degree truncation bound applied
  /// to the result and all intermediates.
  Poly substitute(const std::map<int, Poly>& images, const VarSetPtr& target,
                  std::optional<int> truncate_deg = std::nullopt) const;
  Poly substitute(const std::map<std::string, Poly>& images, const VarSetPtr& target,
                  std::optional<int> truncate_deg = std::nullopt) const;

  /// Same polynomial over a superset varset.
  Poly embed(const VarSetPtr& target) const;

  /// All terms of total degree > d removed.
  Poly truncate(int d) const;
  /// Keep only terms with degree in designated vars > / <= bound, etc.
  Poly truncate_in(const std::vector<int>& vars, int d) const;

  /// Homogeneous part of total degree d.
  Poly homogeneous_part(int d) const;
  /// Homogeneous part w.r.t. a subset of variables (parameters get degree 0).
  Poly homogeneous_part_in(const std::vector<int>& vars, int d) const;

  /// Minimum over terms of the weighted degree (weights per variable).
  int weighted_order(const std::vector<int>& weights) const;

  /// Substitute var := 0.
  Poly at_zero(int var) const;
  /// Full rational point evaluation.
  Rat eval(const std::vector<Rat>& point) const;

  /// Coefficient of var^k, a polynomial in the remaining variables.
  Poly coefficient_of(int var, int k) const;

  /// Exact division; nullopt when q does not divide exactly.
  std::optional<Poly> divided_by(const Poly& q) const;
  /// Largest k with var^k dividing every term (0 for zero poly).
  int max_var_power(int var) const;
  Poly divide_by_var_power(int var, int k) const;

  /// Content (gcd of coefficients) times sign of the leading coefficient.
  Rat unit_content() const;
  /// Scalar-normalized copy: leading coefficient 1. For up-to-unit compares.
  Poly monic() const;

  /// Canonical text form, grlex-descending: "3/2*x^2*y - t^3 + u".
  std::string str() const;

 private:
  void check_same_vars(const Poly& q, const char* op) const;
  void insert_term(const Monomial& m, const Rat& c);

  VarSetPtr vs_;
  TermMap terms_;
};

/// Equal up to a nonzero rational scalar.
bool proportional(const Poly& p, const Poly& q);

/// Spec op poly_arith: add|sub|mul with varset check.
enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

/// Spec op multiplicity_at_origin: minimal total degree among terms.
int multiplicity_at_origin(const Poly& p);

/// Spec op weighted_order as a free function (errors on zero).
int weighted_order(const Poly& p, const std::vector<int>& weights);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace duval
