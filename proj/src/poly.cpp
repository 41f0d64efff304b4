#include "duval/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace duval {

std::string rat_str(const Rat& r) {
  std::string s = r.get_str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty variable name");
    if (!seen.insert(n).second) throw ParseError("duplicate variable '" + n + "'");
  }
}

int VarSet::index(const std::string& name) const {
  for (int i = 0; i < arity(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int VarSet::index_checked(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw VarSetMismatch("unknown variable '" + name + "'");
  return i;
}

bool VarSet::contains_all(const VarSet& sub) const {
  for (const auto& n : sub.names())
    if (index(n) < 0) return false;
  return true;
}

VarSetPtr VarSet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  for (const auto& n : extra) all.push_back(n);
  return std::make_shared<VarSet>(std::move(all));
}

VarSetPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<VarSet>(std::move(names));
}

VarSetPtr make_vars(const std::string& space_separated) {
  std::vector<std::string> names;
  std::istringstream in(space_separated);
  std::string w;
  while (in >> w) names.push_back(w);
  return make_vars(std::move(names));
}

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int Monomial::degree_in(const std::vector<int>& vars) const {
  int d = 0;
  for (int v : vars) d += e.at(v);
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Poly::Poly(VarSetPtr vs, const Rat& c) : vs_(std::move(vs)) {
  if (c != 0) terms_.emplace(Monomial(vs_->arity()), c);
}

Poly Poly::variable(VarSetPtr vs, int var, int power) {
  Monomial m(vs->arity());
  m.e.at(var) = power;
  Poly p(vs);
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

Poly Poly::variable(VarSetPtr vs, const std::string& name, int power) {
  int i = vs->index_checked(name);
  return variable(std::move(vs), i, power);
}

Poly Poly::term(VarSetPtr vs, Monomial m, const Rat& c) {
  Poly p(std::move(vs));
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coefficient(Monomial(vs_->arity())); }

const Monomial& Poly::leading_monomial() const {
  if (is_zero()) throw ZeroPolynomial("leading_monomial");
  return terms_.rbegin()->first;
}

Rat Poly::leading_coefficient() const {
  if (is_zero()) throw ZeroPolynomial("leading_coefficient");
  return terms_.rbegin()->second;
}

int Poly::total_degree() const {
  if (is_zero()) return -1;
  return terms_.rbegin()->first.degree();
}

int Poly::order() const {
  if (is_zero()) throw ZeroPolynomial("order");
  return terms_.begin()->first.degree();
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e.at(var));
  return d;
}

int Poly::order_in(int var) const {
  if (is_zero()) throw ZeroPolynomial("order_in");
  int d = -1;
  for (const auto& [m, c] : terms_) d = (d < 0) ? m.e.at(var) : std::min(d, m.e.at(var));
  return d;
}

bool Poly::involves(int var) const {
  for (const auto& [m, c] : terms_)
    if (m.e.at(var) > 0) return true;
  return false;
}

void Poly::check_same_vars(const Poly& q, const char* op) const {
  if (!vs_ || !q.vs_) throw VarSetMismatch(std::string("uninitialized operand in ") + op);
  if (*vs_ != *q.vs_) throw VarSetMismatch(std::string("operands of ") + op);
}

void Poly::insert_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& q) const {
  check_same_vars(q, "+");
  Poly r = *this;
  for (const auto& [m, c] : q.terms_) r.insert_term(m, c);
  return r;
}

Poly& Poly::operator+=(const Poly& q) {
  check_same_vars(q, "+=");
  for (const auto& [m, c] : q.terms_) insert_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& q) const {
  check_same_vars(q, "-");
  Poly r = *this;
  for (const auto& [m, c] : q.terms_) r.insert_term(m, -c);
  return r;
}

Poly& Poly::operator-=(const Poly& q) {
  check_same_vars(q, "-=");
  for (const auto& [m, c] : q.terms_) insert_term(m, -c);
  return *this;
}

Poly& Poly::sub_scaled(const Poly& q, const Rat& c) {
  check_same_vars(q, "sub_scaled");
  if (c == 0) return *this;
  for (const auto& [m, k] : q.terms_) insert_term(m, -c * k);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& q) const {
  check_same_vars(q, "*");
  Poly r(vs_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : q.terms_) r.insert_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(vs_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool Poly::operator==(const Poly& q) const {
  if (!vs_ || !q.vs_) return terms_.empty() && q.terms_.empty();
  return *vs_ == *q.vs_ && terms_ == q.terms_;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw MathError("negative power");
  Poly r = Poly::constant(vs_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::translate_origin(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != vs_->arity())
    throw VarSetMismatch("translate_origin point length");
  std::map<int, Poly> images;
  for (int i = 0; i < vs_->arity(); ++i) {
    if (point[i] == 0) continue;
    images.emplace(i, Poly::variable(vs_, i) + Poly::constant(vs_, point[i]));
  }
  return substitute(images, vs_);
}

Poly Poly::derivative(int var) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    int k = m.e.at(var);
    if (k == 0) continue;
    Monomial mm = m;
    mm.e[var] -= 1;
    r.insert_term(mm, c * k);
  }
  return r;
}

Poly Poly::substitute(const std::map<int, Poly>& images, const VarSetPtr& target,
                      std::optional<int> truncate_deg) const {
  for (const auto& [v, img] : images) {
    if (v < 0 || v >= vs_->arity()) throw VarSetMismatch("substitution of unknown variable");
    if (*img.varset() != *target) throw VarSetMismatch("substitution image varset");
  }
  // Per-variable power cache.
  std::map<std::pair<int, int>, Poly> cache;
  std::function<const Poly&(int, int)> power = [&](int v, int k) -> const Poly& {
    auto key = std::make_pair(v, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Poly val(target);
    if (k == 0) {
      val = Poly::constant(target, 1);
    } else {
      const Poly& prev = power(v, k - 1);
      auto img_it = images.find(v);
      if (img_it != images.end()) {
        val = prev * img_it->second;
      } else {
        int tv = target->index_checked(vs_->name(v));
        val = prev * Poly::variable(target, tv);
      }
      if (truncate_deg) val = val.truncate(*truncate_deg);
    }
    return cache.emplace(key, std::move(val)).first->second;
  };

  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (int v = 0; v < vs_->arity(); ++v) {
      if (m.e[v] == 0) continue;
      t = t * power(v, m.e[v]);
      if (truncate_deg) t = t.truncate(*truncate_deg);
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images, const VarSetPtr& target,
                      std::optional<int> truncate_deg) const {
  std::map<int, Poly> by_index;
  for (const auto& [name, img] : images) by_index.emplace(vs_->index_checked(name), img);
  return substitute(by_index, target, truncate_deg);
}

Poly Poly::embed(const VarSetPtr& target) const {
  if (*target == *vs_) return *this;
  if (!target->contains_all(*vs_)) throw VarSetMismatch("embed target misses variables");
  std::vector<int> where(vs_->arity());
  for (int i = 0; i < vs_->arity(); ++i) where[i] = target->index_checked(vs_->name(i));
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->arity());
    for (int i = 0; i < vs_->arity(); ++i) mm.e[where[i]] = m.e[i];
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Poly Poly::truncate(int d) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::truncate_in(const std::vector<int>& vars, int d) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_)
    if (m.degree_in(vars) <= d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::homogeneous_part_in(const std::vector<int>& vars, int d) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_)
    if (m.degree_in(vars) == d) r.terms_.emplace(m, c);
  return r;
}

int Poly::weighted_order(const std::vector<int>& weights) const {
  if (is_zero()) throw ZeroPolynomial("weighted_order");
  if (static_cast<int>(weights.size()) != vs_->arity())
    throw VarSetMismatch("weight vector length");
  bool first = true;
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (int i = 0; i < vs_->arity(); ++i) w += m.e[i] * weights[i];
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

Poly Poly::at_zero(int var) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_)
    if (m.e.at(var) == 0) r.terms_.emplace(m, c);
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != vs_->arity()) throw VarSetMismatch("eval point length");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < vs_->arity(); ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::coefficient_of(int var, int k) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    if (m.e.at(var) != k) continue;
    Monomial mm = m;
    mm.e[var] = 0;
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

std::optional<Poly> Poly::divided_by(const Poly& q) const {
  check_same_vars(q, "divided_by");
  if (q.is_zero()) return std::nullopt;
  Poly rem = *this;
  Poly quot(vs_);
  const Monomial& lq = q.leading_monomial();
  const Rat cq = q.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lq.divides(lr)) return std::nullopt;
    Monomial md = lr.quotient(lq);
    Rat cd = rem.leading_coefficient() / cq;
    Poly step = Poly::term(vs_, md, cd);
    quot += step;
    rem -= step * q;
  }
  return quot;
}

int Poly::max_var_power(int var) const {
  if (is_zero()) return 0;
  return order_in(var);
}

Poly Poly::divide_by_var_power(int var, int k) const {
  if (k == 0) return *this;
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    if (m.e.at(var) < k) throw MathError("divide_by_var_power: not divisible");
    Monomial mm = m;
    mm.e[var] -= k;
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Rat Poly::unit_content() const {
  if (is_zero()) return Rat(0);
  return leading_coefficient();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading_coefficient());
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = m.degree() > 0;
    bool coeff_shown = (a != 1) || !has_vars;
    if (coeff_shown) os << rat_str(a);
    bool lead = !coeff_shown;
    for (int i = 0; i < vs_->arity(); ++i) {
      if (m.e[i] == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << vs_->name(i);
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

bool proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (*p.varset() != *q.varset()) return false;
  return p.monic() == q.monic();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
  }
  throw MathError("bad op");
}

int multiplicity_at_origin(const Poly& p) { return p.order(); }

int weighted_order(const Poly& p, const std::vector<int>& weights) {
  return p.weighted_order(weights);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace duval
