#include "duval/factor.hpp"

#include <algorithm>
#include <set>

namespace duval {

void UPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator+(const UPoly& q) const {
  std::vector<Rat> r(std::max(c.size(), q.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& q) const { return *this + q * Rat(-1); }

UPoly UPoly::operator*(const UPoly& q) const {
  if (is_zero() || q.is_zero()) return UPoly();
  std::vector<Rat> r(c.size() + q.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += c[i] * q.c[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& k) const {
  if (k == 0) return UPoly();
  std::vector<Rat> r = c;
  for (auto& x : r) x *= k;
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / lc());
}

UPoly UPoly::derivative() const {
  if (c.size() <= 1) return UPoly();
  std::vector<Rat> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw MathError("UPoly division by zero");
  UPoly r = *this;
  std::vector<Rat> q(std::max<int>(0, degree() - d.degree() + 1), Rat(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rat f = r.lc() / d.lc();
    q[k] = f;
    for (int i = 0; i <= d.degree(); ++i) r.c[i + k] -= f * d.c[i];
    r.trim();
  }
  return {UPoly(std::move(q)), r};
}

UPoly UPoly::from_poly(const Poly& p, int var) {
  std::vector<Rat> c(std::max(0, p.degree_in(var)) + 1, Rat(0));
  for (const auto& [m, coeff] : p.terms()) {
    if (m.degree() != m.e.at(var))
      throw MathError("from_poly: polynomial is not univariate in the given variable");
    c[m.e[var]] = coeff;
  }
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(const VarSetPtr& vs, int var) const {
  Poly p(vs);
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p += Poly::variable(vs, var, static_cast<int>(i)) * c[i];
  return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}

// Integer-coefficient copy (clears denominators).
std::vector<mpz_class> integerized(const UPoly& p) {
  mpz_class l(1);
  for (const auto& r : p.c) l = lcm(l, r.get_den());
  std::vector<mpz_class> out;
  for (const auto& r : p.c) out.push_back(mpz_class(r * Rat(l)));
  return out;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const UPoly& p0) {
  if (p0.is_zero()) throw ZeroPolynomial("rational_roots");
  std::vector<std::pair<Rat, int>> roots;
  UPoly p = p0;
  // Strip zero roots first.
  int zero_mult = 0;
  while (!p.is_zero() && p.c[0] == 0) {
    p.c.erase(p.c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rat(0), zero_mult});
  if (p.degree() < 1) return roots;

  auto zc = integerized(p);
  auto nums = positive_divisors(zc.front());
  auto dens = positive_divisors(zc.back());
  std::set<Rat> candidates;
  for (const auto& n : nums)
    for (const auto& d : dens) {
      Rat r(n, d);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  for (const auto& r : candidates) {
    if (p.eval(r) != 0) continue;
    int mult = 0;
    UPoly lin({-r, Rat(1)});
    while (true) {
      auto [q, rem] = p.divmod(lin);
      if (!rem.is_zero()) break;
      p = q;
      ++mult;
    }
    roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

int vanishing_order_at(const UPoly& p, const Rat& at) {
  if (p.is_zero()) throw ZeroPolynomial("vanishing_order_at");
  UPoly lin({-at, Rat(1)});
  UPoly cur = p;
  int ord = 0;
  while (true) {
    auto [q, rem] = cur.divmod(lin);
    if (!rem.is_zero()) break;
    cur = q;
    ++ord;
  }
  return ord;
}

int vanishing_order_mod(const UPoly& p, const UPoly& minpoly) {
  if (p.is_zero()) throw ZeroPolynomial("vanishing_order_mod");
  if (minpoly.degree() < 1) throw MathError("vanishing_order_mod: constant modulus");
  UPoly cur = p;
  int ord = 0;
  while (true) {
    auto [q, rem] = cur.divmod(minpoly);
    if (!rem.is_zero()) break;
    cur = q;
    ++ord;
  }
  return ord;
}

namespace {

// Yun squarefree decomposition: p = prod part_i^i (parts monic, pairwise
// coprime, squarefree).
std::vector<UPoly> yun_squarefree(const UPoly& p) {
  std::vector<UPoly> parts;
  UPoly a = p.monic();
  if (a.degree() < 1) return parts;
  UPoly d = a.derivative();
  UPoly g = upoly_gcd(a, d);
  UPoly w = a.divmod(g).first;
  UPoly y = d.divmod(g).first;
  while (w.degree() >= 1) {
    UPoly z = y - w.derivative();
    UPoly part = upoly_gcd(w, z);
    parts.push_back(part);
    w = w.divmod(part).first;
    y = z.divmod(part).first;
  }
  return parts;
}

std::vector<int> present_vars(const Poly& p) {
  std::vector<int> out;
  for (int v = 0; v < p.vars().arity(); ++v)
    if (p.involves(v)) out.push_back(v);
  return out;
}

// Univariate (in `var`) factor split: rational-root linear pieces plus
// irreducible-over-Q cores per squarefree layer.
void split_univariate(const Poly& p, int var, std::vector<FactorPiece>& pieces) {
  const auto& vs = p.varset();
  UPoly u = UPoly::from_poly(p, var);
  auto layers = yun_squarefree(u);
  for (size_t i = 0; i < layers.size(); ++i) {
    UPoly layer = layers[i];
    if (layer.degree() < 1) continue;
    int mult = static_cast<int>(i) + 1;
    for (auto& [root, m] : rational_roots(layer)) {
      (void)m;  // squarefree: m == 1
      Poly lin = Poly::variable(vs, var) - Poly::constant(vs, root);
      pieces.push_back({lin, mult, 1});
      layer = layer.divmod(UPoly({-root, Rat(1)})).first;
    }
    if (layer.degree() >= 1)
      pieces.push_back({layer.to_poly(vs, var).monic(), mult, layer.degree()});
  }
}

// Binary homogeneous split after variable powers were removed: both pure
// powers have nonzero coefficients.
void split_binary_homogeneous(const Poly& p, int u, int v, std::vector<FactorPiece>& pieces) {
  const auto& vs = p.varset();
  int d = p.total_degree();
  std::vector<Rat> coeffs(d + 1, Rat(0));
  for (const auto& [m, c] : p.terms()) coeffs[m.e.at(u)] = c;
  UPoly h{coeffs};
  auto layers = yun_squarefree(h);
  for (size_t i = 0; i < layers.size(); ++i) {
    UPoly layer = layers[i];
    if (layer.degree() < 1) continue;
    int mult = static_cast<int>(i) + 1;
    for (auto& [root, m] : rational_roots(layer)) {
      (void)m;
      Poly lin = Poly::variable(vs, u) - Poly::variable(vs, v) * root;
      pieces.push_back({lin.monic(), mult, 1});
      layer = layer.divmod(UPoly({-root, Rat(1)})).first;
    }
    if (layer.degree() >= 1) {
      // Homogenize the leftover core back in (u, v).
      Poly core(vs);
      int dc = layer.degree();
      for (int k = 0; k <= dc; ++k) {
        if (layer.c[k] == 0) continue;
        Monomial m(vs->arity());
        m.e[u] = k;
        m.e[v] = dc - k;
        core += Poly::term(vs, m, layer.c[k]);
      }
      pieces.push_back({core.monic(), mult, dc});
    }
  }
}

}  // namespace

Factorization factor_for_components(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("factor_for_components");
  if (p.total_degree() > 10) throw MathError("factor_for_components: degree beyond fixture scale");
  Factorization out;
  out.unit = Rat(1);
  Poly r = p;
  const auto& vs = p.varset();
  for (int v = 0; v < vs->arity(); ++v) {
    int k = r.order_in(v);
    if (k > 0) {
      out.pieces.push_back({Poly::variable(vs, v), k, 1});
      r = r.divide_by_var_power(v, k);
    }
  }
  if (r.is_constant()) {
    out.unit = r.constant_term();
    return out;
  }
  auto active = present_vars(r);
  if (active.size() == 1) {
    split_univariate(r, active[0], out.pieces);
    return out;
  }
  if (active.size() == 2 && r.homogeneous_part(r.total_degree()) == r) {
    split_binary_homogeneous(r, active[0], active[1], out.pieces);
    return out;
  }
  // Residual multivariate core: kept whole, treated as one component.
  out.pieces.push_back({r.monic(), 1, 1});
  return out;
}

CubicType cubic_factor_type(const Poly& c) {
  if (c.is_zero()) return CubicType::NotSplit;
  if (c.homogeneous_part(3) != c) throw MathError("cubic_factor_type: not a homogeneous cubic");
  auto active = present_vars(c);
  if (active.size() > 2) throw MathError("cubic_factor_type: more than two variables");
  if (active.size() == 1) return CubicType::TripleLine;
  int u = active[0], v = active[1];
  std::vector<Rat> coeffs(4, Rat(0));
  for (const auto& [m, k] : c.terms()) coeffs[m.e.at(u)] = k;
  UPoly h{coeffs};
  int d = h.degree();
  int defect = 0;
  if (d >= 1) {
    UPoly g = upoly_gcd(h, h.derivative());
    defect += g.degree();
  }
  if (d < 3) defect += (3 - d) - 1;  // the root at (1:0) has multiplicity 3-d
  switch (defect) {
    case 0: return CubicType::ThreeDistinct;
    case 1: return CubicType::DoubleSimple;
    case 2: return CubicType::TripleLine;
    default: throw MathError("cubic_factor_type: impossible defect");
  }
}

const char* cubic_type_name(CubicType t) {
  switch (t) {
    case CubicType::ThreeDistinct: return "ThreeDistinct";
    case CubicType::DoubleSimple: return "DoubleSimple";
    case CubicType::TripleLine: return "TripleLine";
    case CubicType::NotSplit: return "NotSplit";
  }
  return "?";
}

namespace {

// Determinant by fraction-free (Bareiss) elimination over the polynomial
// ring; all divisions are exact.
Poly poly_det(std::vector<std::vector<Poly>> m, const VarSetPtr& vs) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(vs, 1);
  Poly prev = Poly::constant(vs, 1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return Poly::zero(vs);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.divided_by(prev);
        if (!q) throw MathError("poly_det: non-exact Bareiss division");
        m[i][j] = *q;
      }
      m[i][k] = Poly::zero(vs);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Poly resultant(const Poly& p, const Poly& q, int var) {
  if (*p.varset() != *q.varset()) throw VarSetMismatch("resultant");
  const auto& vs = p.varset();
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp < 0 || dq < 0) throw ZeroPolynomial("resultant");
  if (dp == 0 && dq == 0) return Poly::constant(vs, 1);
  if (dp == 0) return p.pow(dq);
  if (dq == 0) return q.pow(dp);
  // Sylvester matrix with polynomial entries in the remaining variables.
  int n = dp + dq;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(vs)));
  for (int row = 0; row < dq; ++row)
    for (int k = 0; k <= dp; ++k) m[row][row + dp - k] = p.coefficient_of(var, k);
  for (int row = 0; row < dp; ++row)
    for (int k = 0; k <= dq; ++k) m[dq + row][row + dq - k] = q.coefficient_of(var, k);
  return poly_det(std::move(m), vs);
}

namespace {

struct Elimination {
  int var;
  Poly expr;  // var := expr (expr free of var and of later-eliminated vars)
};

void collect_points_1var(const std::vector<Poly>& gens, int var, SmallZeroSet& out,
                         const VarSetPtr& vs, std::vector<Rat>& base,
                         const std::vector<Elimination>& elim);

// Resolve eliminated variables and record a full point.
void emit_point(std::vector<Rat> pt, const std::vector<Elimination>& elim, SmallZeroSet& out) {
  for (auto it = elim.rbegin(); it != elim.rend(); ++it) pt[it->var] = it->expr.eval(pt);
  out.rational_points.push_back(std::move(pt));
}

void solve_rec(std::vector<Poly> gens, std::vector<int> active, const VarSetPtr& vs,
               std::vector<Elimination>& elim, SmallZeroSet& out, int depth) {
  if (depth > 12) throw MathError("solve_small_system: recursion depth");
  // Simplify.
  std::vector<Poly> live;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return;  // inconsistent, no solutions
    live.push_back(g);
  }
  if (live.empty()) {
    if (active.empty()) {
      std::vector<Rat> pt(vs->arity(), Rat(0));
      emit_point(std::move(pt), elim, out);
    } else {
      out.positive_dimensional = true;
    }
    return;
  }

  // Recompute which active variables still occur; vanished ones are free,
  // so any solution set found below is positive-dimensional.
  std::vector<int> occur;
  for (int v : active) {
    bool used = false;
    for (const auto& g : live) used |= g.involves(v);
    if (used) occur.push_back(v);
  }
  if (occur.empty()) return;  // nonzero constants among live (handled), defensive
  if (occur.size() < active.size()) {
    size_t pts_before = out.rational_points.size();
    int conj_before = out.conjugate_count;
    solve_rec(std::move(live), occur, vs, elim, out, depth + 1);
    if (out.rational_points.size() > pts_before || out.conjugate_count > conj_before)
      out.positive_dimensional = true;
    return;
  }

  // Linear elimination: a generator a*v + b with rational a and v-free b.
  for (const auto& g : live) {
    for (int v : occur) {
      if (g.degree_in(v) != 1) continue;
      Poly a = g.coefficient_of(v, 1);
      if (!a.is_constant()) continue;
      Poly b = g.coefficient_of(v, 0);
      if (b.involves(v)) continue;
      Poly expr = b * (Rat(-1) / a.constant_term());
      std::map<int, Poly> image{{v, expr}};
      std::vector<Poly> next;
      for (const auto& h : live) {
        if (&h == &g) continue;
        next.push_back(h.substitute(image, vs));
      }
      std::vector<int> next_active;
      for (int w : active)
        if (w != v) next_active.push_back(w);
      elim.push_back({v, expr});
      solve_rec(std::move(next), std::move(next_active), vs, elim, out, depth + 1);
      elim.pop_back();
      return;
    }
  }

  if (occur.size() == 1) {
    std::vector<Rat> base(vs->arity(), Rat(0));
    collect_points_1var(live, occur[0], out, vs, base, elim);
    return;
  }

  if (occur.size() == 2) {
    int u = occur[0], w = occur[1];
    // Eliminate w by pairwise resultants; fold in w-free generators.
    UPoly ru;
    bool have = false;
    auto fold = [&](const Poly& cand) {
      if (cand.is_zero()) return;
      UPoly up = UPoly::from_poly(cand, u);
      ru = have ? upoly_gcd(ru, up) : up.monic();
      have = true;
    };
    for (size_t i = 0; i < live.size(); ++i) {
      if (!live[i].involves(w)) {
        fold(live[i]);
        continue;
      }
      for (size_t j = i + 1; j < live.size(); ++j) {
        if (!live[j].involves(w)) continue;
        fold(resultant(live[i], live[j], w));
      }
    }
    if (!have || ru.is_zero()) {
      out.positive_dimensional = true;
      return;
    }
    if (ru.degree() == 0) return;  // no common u
    // Rational u-roots: substitute and solve in w.
    auto roots = rational_roots(ru);
    int rational_u = 0;
    for (auto& [r, mult] : roots) {
      (void)mult;
      ++rational_u;
      std::map<int, Poly> image{{u, Poly::constant(vs, r)}};
      std::vector<Poly> next;
      for (const auto& h : live) next.push_back(h.substitute(image, vs));
      std::vector<int> next_active = {w};
      elim.push_back({u, Poly::constant(vs, r)});
      solve_rec(std::move(next), std::move(next_active), vs, elim, out, depth + 1);
      elim.pop_back();
    }
    // Conjugate u-values: count roots of the squarefree part beyond Q.
    UPoly sf = ru.divmod(upoly_gcd(ru, ru.derivative())).first;
    out.conjugate_count += sf.degree() - rational_u;
    return;
  }

  throw MathError("solve_small_system: no linear elimination and >2 active variables");
}

void collect_points_1var(const std::vector<Poly>& gens, int var, SmallZeroSet& out,
                         const VarSetPtr& vs, std::vector<Rat>& base,
                         const std::vector<Elimination>& elim) {
  UPoly g;
  bool have = false;
  for (const auto& p : gens) {
    UPoly up = UPoly::from_poly(p, var);
    g = have ? upoly_gcd(g, up) : up.monic();
    have = true;
  }
  if (!have || g.is_zero()) {
    out.positive_dimensional = true;
    return;
  }
  if (g.degree() == 0) return;
  int rational = 0;
  for (auto& [r, mult] : rational_roots(g)) {
    (void)mult;
    ++rational;
    std::vector<Rat> pt = base;
    pt[var] = r;
    emit_point(pt, elim, out);
  }
  UPoly sf = g.divmod(upoly_gcd(g, g.derivative())).first;
  out.conjugate_count += sf.degree() - rational;
}

}  // namespace

SmallZeroSet solve_small_system(const std::vector<Poly>& gens) {
  if (gens.empty()) throw MathError("solve_small_system: empty system");
  const auto& vs = gens.front().varset();
  std::vector<int> active;
  for (int v = 0; v < vs->arity(); ++v) {
    bool used = false;
    for (const auto& g : gens) used |= g.involves(v);
    if (used) active.push_back(v);
  }
  SmallZeroSet out;
  std::vector<Elimination> elim;
  solve_rec(gens, active, vs, elim, out, 0);
  return out;
}

}  // namespace duval
