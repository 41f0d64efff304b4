#include "duval/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace duval {

Ideal::Ideal(VarSetPtr vs, std::vector<Poly> gens) : vs_(std::move(vs)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (*g.varset() != *vs_) throw VarSetMismatch("ideal generator");
    Poly m = g.monic();
    bool dup = false;
    for (const auto& h : gens_)
      if (h == m) {
        dup = true;
        break;
      }
    if (!dup) gens_.push_back(std::move(m));
  }
  if (gens_.empty()) throw MathError("ideal needs a nonzero generator");
}

bool Ideal::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

bool Ideal::same_generators(const Ideal& other) const {
  if (*vs_ != *other.vs_) return false;
  if (gens_.size() != other.gens_.size()) return false;
  std::vector<bool> used(gens_.size(), false);
  for (const auto& g : other.gens_) {
    bool found = false;
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (!used[i] && gens_[i] == g) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ")";
  return os.str();
}

ParamCurve::ParamCurve(VarSetPtr ambient, std::string param_name, std::vector<Poly> images)
    : ambient_(std::move(ambient)), pvs_(make_vars({param_name})), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != ambient_->arity())
    throw VarSetMismatch("curve image count");
  bool nonconst = false;
  for (auto& img : images_) {
    if (*img.varset() != *pvs_) throw VarSetMismatch("curve image varset");
    if (!img.is_constant()) nonconst = true;
  }
  if (!nonconst) throw MathError("curve images are all constant");
}

Poly ParamCurve::pullback(const Poly& p) const {
  if (*p.varset() != *ambient_) throw VarSetMismatch("pullback");
  std::map<int, Poly> images;
  for (int i = 0; i < ambient_->arity(); ++i) images.emplace(i, images_[i]);
  // Substitute into the one-variable ring.
  Poly r(pvs_);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(pvs_, c);
    for (int v = 0; v < ambient_->arity(); ++v)
      if (m.e[v] > 0) t = t * images_[v].pow(m.e[v]);
    r += t;
  }
  return r;
}

Ideal hypersurface_singular_ideal(const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial("hypersurface_singular_ideal");
  std::vector<Poly> gens = {f};
  for (int v = 0; v < f.vars().arity(); ++v) gens.push_back(f.derivative(v));
  return Ideal(f.varset(), std::move(gens));
}

bool curve_in_locus(const ParamCurve& curve, const Ideal& I) {
  if (*curve.ambient() != *I.varset()) throw VarSetMismatch("curve_in_locus");
  for (const auto& g : I.generators())
    if (!curve.pullback(g).is_zero()) return false;
  return true;
}

}  // namespace duval
