#pragma once

#include <string>
#include <vector>

#include "duval/poly.hpp"

namespace duval {

/// Finitely generated ideal: nonzero generators, duplicates pruned.
class Ideal {
 public:
  Ideal() = default;
  Ideal(VarSetPtr vs, std::vector<Poly> gens);

  const VarSetPtr& varset() const { return vs_; }
  const std::vector<Poly>& generators() const { return gens_; }
  int size() const { return static_cast<int>(gens_.size()); }
  bool is_unit() const;  // contains a nonzero constant

  /// Set-of-generators equality up to scalar and order.
  bool same_generators(const Ideal& other) const;

  std::string str() const;

 private:
  VarSetPtr vs_;
  std::vector<Poly> gens_;
};

/// Rational parametrized curve: one image polynomial in the parameter per
/// ambient variable. Not all images may be constant.
class ParamCurve {
 public:
  ParamCurve(VarSetPtr ambient, std::string param_name, std::vector<Poly> images);

  const VarSetPtr& ambient() const { return ambient_; }
  const VarSetPtr& param_vars() const { return pvs_; }
  const std::vector<Poly>& images() const { return images_; }

  /// Pull an ambient polynomial back along the parametrization.
  Poly pullback(const Poly& p) const;

 private:
  VarSetPtr ambient_;
  VarSetPtr pvs_;  // one-variable set {param}
  std::vector<Poly> images_;
};

/// Ideal generated by f and all its first partials.
Ideal hypersurface_singular_ideal(const Poly& f);

/// True iff every generator pulls back to zero along the curve.
bool curve_in_locus(const ParamCurve& curve, const Ideal& I);

}  // namespace duval
