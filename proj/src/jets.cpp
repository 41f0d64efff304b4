#include "duval/jets.hpp"

#include <algorithm>
#include <functional>

namespace duval {

JetSpace::JetSpace(VarSetPtr vs, int degree_bound) : vs_(std::move(vs)), bound_(degree_bound) {
  if (bound_ < 0) throw MathError("negative jet bound");
}

long jet_dimension(int arity, int degree_bound) {
  // C(D + n, n)
  long r = 1;
  for (int i = 1; i <= arity; ++i) r = r * (degree_bound + i) / i;
  return r;
}

int JetSpace::ambient_dim() const { return static_cast<int>(jet_dimension(vs_->arity(), bound_)); }

Poly JetSpace::reduce_impl(Poly p) const {
  p = p.truncate(bound_);
  // Pivot-driven reduction: peel the leading monomial; either a stored row
  // kills it or it is irreducible and moves to the residue. Subtraction only
  // alters strictly smaller monomials, so one pass suffices.
  Poly residue(vs_);
  while (!p.is_zero()) {
    const Monomial lead = p.leading_monomial();
    auto it = pivots_.find(lead);
    Rat c = p.leading_coefficient();
    if (it == pivots_.end()) {
      Poly t = Poly::term(vs_, lead, c);
      residue += t;
      p -= t;
    } else {
      p.sub_scaled(it->second, c);
    }
  }
  return residue;
}

bool JetSpace::add(const Poly& p) {
  if (*p.varset() != *vs_) throw VarSetMismatch("JetSpace::add");
  Poly r = reduce_impl(p);
  if (r.is_zero()) return false;
  pivots_.emplace(r.leading_monomial(), r.monic());
  return true;
}

bool JetSpace::contains(const Poly& p) const { return reduce_impl(p).is_zero(); }

Poly JetSpace::reduce(const Poly& p) const { return reduce_impl(p); }

std::vector<Monomial> monomials_of_degree(int arity, int d) {
  std::vector<Monomial> out;
  Monomial m(arity);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == arity - 1) {
      m.e[var] = left;
      out.push_back(m);
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[var] = k;
      rec(var + 1, left - k);
    }
    m.e[var] = 0;
  };
  if (arity == 0) return out;
  rec(0, d);
  return out;
}

namespace {

std::vector<Monomial> monomials_up_to(int arity, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(arity, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

bool jet_membership(const Poly& g, const Ideal& I, int degree_bound) {
  if (*g.varset() != *I.varset()) throw VarSetMismatch("jet_membership");
  if (g.is_zero()) return true;
  if (g.total_degree() > degree_bound) throw MathError("jet_membership: deg g exceeds bound");
  JetSpace span(g.varset(), degree_bound);
  int arity = g.vars().arity();
  for (const auto& gen : I.generators()) {
    int room = degree_bound - gen.total_degree();
    if (room < 0) continue;
    for (const auto& m : monomials_up_to(arity, room))
      span.add(gen * Poly::term(gen.varset(), m, Rat(1)));
  }
  return span.contains(g);
}

int milnor_number(const Poly& f, int degree_bound) {
  if (f.is_zero()) throw ZeroPolynomial("milnor_number");
  const auto& vs = f.varset();
  int arity = f.vars().arity();
  JetSpace span(vs, degree_bound);
  for (int v = 0; v < arity; ++v) {
    Poly g = f.derivative(v);
    if (g.is_zero()) continue;
    int room = degree_bound - g.order();
    for (int k = 0; k <= room; ++k)
      for (const auto& m : monomials_of_degree(arity, k))
        span.add((g * Poly::term(vs, m, Rat(1))).truncate(degree_bound));
  }
  // Stabilization certificate: every degree-D monomial must be covered.
  for (const auto& m : monomials_of_degree(arity, degree_bound)) {
    if (!span.contains(Poly::term(vs, m, Rat(1))))
      throw NotStabilized("degree-" + std::to_string(degree_bound) + " monomial " +
                          Poly::term(vs, m, Rat(1)).str() + " not in Jacobian span");
  }
  return static_cast<int>(jet_dimension(arity, degree_bound)) - span.rank();
}

int milnor_number_auto(const Poly& f, int candidate_hint) {
  constexpr int kCap = 24;
  int d = 2 * candidate_hint + 2;
  if (d > kCap) d = kCap;
  while (true) {
    try {
      return milnor_number(f, d);
    } catch (const NotStabilized&) {
      if (d >= kCap) throw;
      d = std::min(2 * d, kCap);
    }
  }
}

int hessian_corank(const Poly& f) {
  if (!f.is_zero() && f.order() < 2)
    throw MathError("hessian_corank: constant or linear terms present");
  int n = f.vars().arity();
  std::vector<std::vector<Rat>> h(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial m(n);
      m.e[i] += 1;
      m.e[j] += 1;
      h[i][j] = f.coefficient(m) * (i == j ? 2 : 1);
    }
  // Exact Gaussian elimination.
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (h[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(h[rank], h[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || h[r][col] == 0) continue;
      Rat factor = h[r][col] / h[rank][col];
      for (int c = col; c < n; ++c) h[r][c] -= factor * h[rank][c];
    }
    ++rank;
  }
  return n - rank;
}

}  // namespace duval
