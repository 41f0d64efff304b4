#include "duval/blowup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "duval/factor.hpp"

namespace duval {

namespace {

std::string chart_name(const VarSet& vs, const std::vector<int>& center, int chart_var) {
  std::ostringstream os;
  bool first = true;
  for (int v : center) {
    if (v == chart_var) continue;
    if (!first) os << ", ";
    first = false;
    os << vs.name(v) << "=" << vs.name(v) << vs.name(chart_var);
  }
  return os.str();
}

}  // namespace

Chart blowup_coordinate_center(const Poly& f, const std::vector<int>& center, int chart_var) {
  if (f.is_zero()) throw ZeroPolynomial("blowup_coordinate_center");
  const auto& vs = f.varset();
  if (center.size() < 2) throw UnsupportedCenter("coordinate center needs >= 2 variables");
  for (int v : center)
    if (v < 0 || v >= vs->arity()) throw VarSetMismatch("center variable out of range");
  if (std::find(center.begin(), center.end(), chart_var) == center.end())
    throw UnsupportedCenter("chart variable must belong to the center");

  std::map<int, Poly> sigma;
  Poly e = Poly::variable(vs, chart_var);
  for (int v : center) {
    if (v == chart_var) continue;
    sigma.emplace(v, Poly::variable(vs, v) * e);
  }
  Poly total = f.substitute(sigma, vs);
  if (total.is_zero()) throw DegenerateCenter("center contains a component of V(f)");
  int m = total.order_in(chart_var);
  Chart chart;
  chart.name = chart_name(*vs, center, chart_var);
  chart.chart_vars = vs;
  chart.substitution = std::move(sigma);
  chart.exc_generator = e;
  chart.exc_var = chart_var;
  chart.exc_power = 1;
  chart.exc_mult = m;
  chart.total_transform = total;
  chart.strict_transform = total.divide_by_var_power(chart_var, m);
  chart.center_vars = center;
  std::sort(chart.center_vars.begin(), chart.center_vars.end());
  chart.chart_var = chart_var;
  return chart;
}

Chart blowup_coordinate_center(const Poly& f, const std::vector<std::string>& center,
                               const std::string& chart_var) {
  std::vector<int> cv;
  for (const auto& n : center) cv.push_back(f.vars().index_checked(n));
  return blowup_coordinate_center(f, cv, f.vars().index_checked(chart_var));
}

Chart weighted_blowup_point(const Poly& f, const std::vector<int>& weights, int chart_var) {
  if (f.is_zero()) throw ZeroPolynomial("weighted_blowup_point");
  const auto& vs = f.varset();
  if (static_cast<int>(weights.size()) != vs->arity())
    throw VarSetMismatch("weight vector length");
  for (int w : weights)
    if (w <= 0) throw UnsupportedCenter("weights must be positive");
  if (chart_var < 0 || chart_var >= vs->arity()) throw VarSetMismatch("chart variable");
  if (weights[chart_var] != 1)
    throw QuotientChartUnsupported("chart " + vs->name(chart_var) + " has weight " +
                                   std::to_string(weights[chart_var]));

  std::map<int, Poly> sigma;
  Poly e = Poly::variable(vs, chart_var);
  std::ostringstream name;
  bool first = true;
  for (int v = 0; v < vs->arity(); ++v) {
    if (v == chart_var) continue;
    sigma.emplace(v, Poly::variable(vs, v) * e.pow(weights[v]));
    if (!first) name << ", ";
    first = false;
    name << vs->name(v) << "=" << vs->name(v) << vs->name(chart_var);
    if (weights[v] > 1) name << "^" << weights[v];
  }
  int m = f.weighted_order(weights);
  Poly total = f.substitute(sigma, vs);
  if (total.is_zero()) throw DegenerateCenter("weighted center degenerate");
  if (total.order_in(chart_var) != m)
    throw MathError("weighted blow-up: order disagrees with weighted_order");
  Chart chart;
  chart.name = name.str();
  chart.chart_vars = vs;
  chart.substitution = std::move(sigma);
  chart.exc_generator = e;
  chart.exc_var = chart_var;
  chart.exc_power = 1;
  chart.exc_mult = m;
  chart.total_transform = total;
  chart.strict_transform = total.divide_by_var_power(chart_var, m);
  chart.chart_var = chart_var;
  chart.weights = weights;
  std::vector<int> all(vs->arity());
  for (int i = 0; i < vs->arity(); ++i) all[i] = i;
  chart.center_vars = all;
  return chart;
}

namespace {

// Pure variable power test: g = c * v^k.
std::optional<std::pair<int, int>> as_variable_power(const Poly& g) {
  if (g.term_count() != 1) return std::nullopt;
  const auto& [m, c] = *g.terms().begin();
  int var = -1, k = 0;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (var >= 0) return std::nullopt;
    var = static_cast<int>(i);
    k = m.e[i];
  }
  if (var < 0 || k == 0) return std::nullopt;
  return std::make_pair(var, k);
}

// v-adic slices of p: p = sum slice_j * v^j.
std::vector<Poly> v_slices(const Poly& p, int var, int upto) {
  std::vector<Poly> s;
  for (int j = 0; j < upto; ++j) s.push_back(p.coefficient_of(var, j));
  return s;
}

// One exceptional-power extraction step modulo rel = s*ge - go, in the case
// ge = unit * v^k: find A with f - A*rel divisible (as a polynomial) by
// v^k, via slice division by go's bottom slice. Returns (quotient, A) or
// nullopt when f is not divisible.
std::optional<std::pair<Poly, Poly>> peel_exc_power(const Poly& f, const Poly& rel, int v, int k,
                                                    const Poly& go) {
  const auto& vs = f.varset();
  Poly g0 = go.coefficient_of(v, 0);
  if (g0.is_zero()) return std::nullopt;
  auto fs = v_slices(f, v, k);
  auto gs = v_slices(go, v, k);
  std::vector<Poly> as;
  for (int j = 0; j < k; ++j) {
    Poly rhs = -fs[j];
    for (int i = 0; i < j; ++i) rhs -= as[i] * gs[j - i];
    if (rhs.is_zero()) {
      as.push_back(Poly::zero(vs));
      continue;
    }
    auto q = rhs.divided_by(g0);
    if (!q) return std::nullopt;
    as.push_back(*q);
  }
  Poly A(vs);
  for (int j = 0; j < k; ++j) A += as[j] * Poly::variable(vs, v, 1).pow(j);
  Poly r = f - A * rel;
  // By construction all v-slices below k vanish.
  Poly h = r.divide_by_var_power(v, k);
  return std::make_pair(h, A);
}

Chart make_two_gen_chart(const Poly& f, const Poly& ge, const Poly& go, const std::string& ratio,
                         const std::string& other_ratio) {
  const auto& src = f.varset();
  auto vs = src->extended({ratio});
  Poly fe = f.embed(vs);
  Poly gee = ge.embed(vs);
  Poly goe = go.embed(vs);
  int s = vs->index_checked(ratio);
  Poly rel = Poly::variable(vs, s) * gee - goe;

  Chart chart;
  chart.name = "chart " + ratio + " (" + ratio + "*" + ge.str() + " = " + go.str() + ")";
  (void)other_ratio;
  chart.chart_vars = vs;
  for (int v = 0; v < src->arity(); ++v)
    chart.substitution.emplace(v, Poly::variable(vs, vs->index_checked(src->name(v))));
  chart.exc_generator = gee;
  chart.ambient_relations = {rel};
  chart.total_transform = fe;

  auto ep = as_variable_power(gee);
  auto op = as_variable_power(goe);
  Poly strict = fe;
  Poly multiplier(vs);
  int m = 0;
  if (ep) {
    chart.exc_var = ep->first;
    chart.exc_power = ep->second;
    Rat lead = gee.leading_coefficient();
    while (true) {
      auto step = peel_exc_power(strict, rel, ep->first, ep->second, goe);
      if (!step) break;
      // strict_old = ge^1 * strict_new + (A/lead) * rel, lead folded in.
      Poly A = step->second;
      multiplier = multiplier * gee + A;
      strict = step->first * (Rat(1) / lead);
      ++m;
      if (m > 64) throw UnsupportedCenter("exceptional power extraction did not terminate");
    }
  } else if (op) {
    // Swap roles: go = v^k; one step writes f = B*ge + v^k*h, and modulo
    // rel (s*ge = go) this is ge*(B + s*h).
    int v = op->first, k = op->second;
    Poly g0 = gee.coefficient_of(v, 0);
    while (true) {
      if (g0.is_zero()) break;
      auto fs = v_slices(strict, v, k);
      auto gs = v_slices(gee, v, k);
      std::vector<Poly> bs;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        Poly rhs = fs[j];
        for (int i = 0; i < j; ++i) rhs -= bs[i] * gs[j - i];
        if (rhs.is_zero()) {
          bs.push_back(Poly::zero(vs));
          continue;
        }
        auto q = rhs.divided_by(g0);
        if (!q)
          ok = false;
        else
          bs.push_back(*q);
      }
      if (!ok) break;
      Poly B(vs);
      for (int j = 0; j < k; ++j) B += bs[j] * Poly::variable(vs, v, 1).pow(j);
      Poly h = (strict - B * gee).divide_by_var_power(v, k);
      // v^k * h = (s*ge - rel) * h, so f = ge*(B + s*h) - h*rel.
      Poly next = B + Poly::variable(vs, s) * h;
      multiplier = multiplier * gee - h;
      strict = next;
      ++m;
      if (m > 64) throw UnsupportedCenter("exceptional power extraction did not terminate");
    }
  } else {
    throw UnsupportedCenter("neither generator is a pure variable power");
  }
  chart.exc_mult = m;
  chart.strict_transform = strict;
  chart.rel_multiplier = multiplier;
  // Exact certificate of the factorization modulo the relation.
  if (fe != gee.pow(m) * strict + multiplier * rel)
    throw UnsupportedCenter("exceptional factorization certificate failed");
  return chart;
}

}  // namespace

std::pair<Chart, Chart> blowup_two_generator_ideal(const Poly& f, const Poly& g1, const Poly& g2,
                                                   const std::string& ratio_a,
                                                   const std::string& ratio_b) {
  if (f.is_zero()) throw ZeroPolynomial("blowup_two_generator_ideal");
  if (g1.is_zero() || g2.is_zero()) throw UnsupportedCenter("zero generator");
  if (*g1.varset() != *f.varset() || *g2.varset() != *f.varset())
    throw VarSetMismatch("two-generator ideal");
  Chart a = make_two_gen_chart(f, g1, g2, ratio_a, ratio_b);
  Chart b = make_two_gen_chart(f, g2, g1, ratio_b, ratio_a);
  return {std::move(a), std::move(b)};
}

std::vector<Ideal> decompose_radical_system(const std::vector<Poly>& gens) {
  VarSetPtr vs;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      vs = g.varset();
      break;
    }
  if (!vs) throw MathError("decompose_radical_system: zero system");

  std::vector<std::vector<Poly>> work = {{}};
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {};
    auto fac = factor_for_components(g);
    std::vector<std::vector<Poly>> next;
    for (auto& branch : work)
      for (auto& piece : fac.pieces) {
        auto nb = branch;
        nb.push_back(piece.poly);
        next.push_back(std::move(nb));
      }
    work = std::move(next);
  }
  std::vector<Ideal> ideals;
  for (auto& branch : work) {
    if (branch.empty()) continue;
    Ideal cand(vs, branch);
    bool dup = false;
    for (const auto& seen : ideals)
      if (seen.same_generators(cand)) {
        dup = true;
        break;
      }
    if (!dup) ideals.push_back(std::move(cand));
  }
  // Prune branches that contain another branch's generators (non-minimal).
  std::vector<Ideal> out;
  for (size_t i = 0; i < ideals.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < ideals.size() && !redundant; ++j) {
      if (i == j) continue;
      // ideals[j] subset of ideals[i] as generator sets => V(i) subset V(j).
      bool subset = true;
      for (const auto& g : ideals[j].generators()) {
        bool found = false;
        for (const auto& h : ideals[i].generators())
          if (h == g) {
            found = true;
            break;
          }
        if (!found) {
          subset = false;
          break;
        }
      }
      if (subset && ideals[j].size() < ideals[i].size()) redundant = true;
    }
    if (!redundant) out.push_back(ideals[i]);
  }
  return out;
}

std::vector<DivisorInChart> exceptional_divisors(const Chart& chart) {
  const auto& vs = chart.chart_vars;
  std::vector<DivisorInChart> out;
  if (chart.ambient_relations.empty()) {
    Poly restriction = chart.strict_transform.at_zero(chart.exc_var);
    if (restriction.is_zero())
      throw DegenerateCenter("strict transform vanishes on the exceptional hyperplane");
    if (restriction.is_constant()) return out;  // exceptional misses this chart
    auto fac = factor_for_components(restriction);
    for (auto& piece : fac.pieces) {
      Ideal ideal(vs, {Poly::variable(vs, chart.exc_var), piece.poly});
      out.push_back({"", std::move(ideal)});
    }
    return out;
  }
  // Two-generator chart: components of {exc = 0} on the chart system.
  if (chart.exc_var < 0) throw UnsupportedCenter("exceptional locus needs a variable-power side");
  std::vector<Poly> gens = {Poly::variable(vs, chart.exc_var)};
  for (const auto& r : chart.ambient_relations)
    gens.push_back(r.at_zero(chart.exc_var));
  gens.push_back(chart.strict_transform.at_zero(chart.exc_var));
  for (auto& ideal : decompose_radical_system(gens)) out.push_back({"", std::move(ideal)});
  return out;
}

Ideal strict_transform_of_divisor(const Ideal& D, const Chart& chart) {
  const auto& vs = chart.chart_vars;
  if (!chart.ambient_relations.empty()) {
    // Component route: V(D) on the chart system, minus exceptional-supported
    // components.
    std::vector<Poly> gens;
    for (const auto& g : D.generators()) gens.push_back(g.embed(vs));
    for (const auto& r : chart.ambient_relations) gens.push_back(r);
    gens.push_back(chart.strict_transform);
    auto comps = decompose_radical_system(gens);
    std::vector<Ideal> kept;
    Poly excvar = Poly::variable(vs, chart.exc_var);
    for (auto& c : comps) {
      bool exceptional = false;
      for (const auto& g : c.generators())
        if (g == excvar) exceptional = true;
      if (!exceptional) kept.push_back(std::move(c));
    }
    if (kept.empty()) return Ideal(vs, {Poly::constant(vs, 1)});
    if (kept.size() > 1) throw UnsupportedCenter("strict transform is not irreducible here");
    return kept[0];
  }

  std::vector<Poly> gens;
  bool unit = false;
  for (const auto& g : D.generators()) {
    Poly t = g.substitute(chart.substitution, vs);
    if (t.is_zero()) throw MathError("divisor pulls back to zero");
    t = t.divide_by_var_power(chart.exc_var, t.order_in(chart.exc_var));
    if (t.is_constant()) unit = true;
    gens.push_back(std::move(t));
  }
  if (!unit) return Ideal(vs, gens);

  // Exceptional-supported preimage.
  if (chart.center_vars.size() >= 3) return Ideal(vs, {Poly::constant(vs, 1)});

  // Divisor blown up along itself: pick the dominant component, the factor
  // of the exceptional restriction involving a ratio variable.
  Poly restriction = chart.strict_transform.at_zero(chart.exc_var);
  if (restriction.is_zero()) throw DegenerateCenter("degenerate exceptional restriction");
  auto fac = factor_for_components(restriction);
  std::vector<Poly> dominant;
  for (auto& piece : fac.pieces) {
    bool involves_ratio = false;
    for (int v : chart.center_vars)
      if (v != chart.exc_var && piece.poly.involves(v)) involves_ratio = true;
    if (involves_ratio) dominant.push_back(piece.poly);
  }
  if (dominant.empty()) return Ideal(vs, {Poly::constant(vs, 1)});
  if (dominant.size() > 1) throw UnsupportedCenter("multiple dominant components");
  return Ideal(vs, {Poly::variable(vs, chart.exc_var), dominant[0]});
}

int discrepancy_smooth_center(int ambient_codim, int mult) {
  if (ambient_codim < 2) throw MathError("discrepancy: codimension must be >= 2");
  if (mult < 0) throw MathError("discrepancy: negative multiplicity");
  return ambient_codim - 1 - mult;
}

bool charts_consistent(const Chart& a, const Chart& b) {
  if (a.center_vars != b.center_vars || a.chart_var == b.chart_var) return false;
  const auto& vs = a.chart_vars;
  if (*vs != *b.chart_vars) return false;
  if (a.exc_mult != b.exc_mult) return false;
  // The transition from chart-b to chart-a coordinates sends
  //   Z_b -> Y_b*Y_a,  Z_a -> 1/Y_b,  Z_v -> Y_v/Y_b (other center vars),
  // fixing the rest, and strict_b o tau = Y_b^{-m} * strict_a. Compare
  // Y_b^m * (strict_b o tau) with strict_a after clearing Y_b powers.
  const int va = a.chart_var, vb = b.chart_var;
  const int m = a.exc_mult;
  auto is_center = [&](int v) {
    return std::find(a.center_vars.begin(), a.center_vars.end(), v) != a.center_vars.end();
  };
  // Y_b exponent of the image of one chart-b monomial, before the Y_b^m shift.
  auto yb_exponent = [&](const Monomial& mon) {
    int e = mon.e[vb] - mon.e[va];
    for (int v : a.center_vars)
      if (v != va && v != vb) e -= mon.e[v];
    return e;
  };
  int min_yb = 0;
  for (const auto& [mon, c] : b.strict_transform.terms())
    min_yb = std::min(min_yb, m + yb_exponent(mon));
  const int offset = -min_yb;  // clears negative Laurent exponents

  std::map<Monomial, Rat, GrlexLess> image;
  for (const auto& [mon, c] : b.strict_transform.terms()) {
    Monomial img(vs->arity());
    for (int v = 0; v < vs->arity(); ++v) {
      if (mon.e[v] == 0 || v == va || v == vb) continue;
      img.e[v] = mon.e[v];
    }
    img.e[va] = mon.e[vb];
    img.e[vb] = m + yb_exponent(mon) + offset;
    auto [it, fresh] = image.emplace(img, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) image.erase(it);
    }
  }
  std::map<Monomial, Rat, GrlexLess> target;
  for (const auto& [mon, c] : a.strict_transform.terms()) {
    Monomial img = mon;
    img.e[vb] += offset;
    target.emplace(img, c);
  }
  return image == target;
}

}  // namespace duval
