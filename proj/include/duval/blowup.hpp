#pragma once

#include <optional>
#include <string>
#include <vector>

#include "duval/ideal.hpp"
#include "duval/poly.hpp"

namespace duval {

/// One affine chart of a blow-up. For coordinate and weighted charts the
/// substitution realizes the chart map and
///   total_transform = substitution(f) = exc_generator^exc_mult * strict
/// holds on the nose. For two-generator charts substitution is the identity
/// embedding into the extended ring, ambient_relations carries the P^1
/// relation, and the factorization holds modulo that relation with the
/// exact multiplier stored in rel_multiplier:
///   total = exc_generator^exc_mult * strict + rel_multiplier * relation.
struct Chart {
  std::string name;
  VarSetPtr chart_vars;
  std::map<int, Poly> substitution;     // source var -> image (chart vars)
  Poly exc_generator;                   // principal exceptional factor
  int exc_var = -1;                     // its variable when it is a pure power
  int exc_power = 1;                    // exc_generator = exc_var^exc_power
  int exc_mult = 0;                     // m
  Poly total_transform;
  Poly strict_transform;
  std::vector<Poly> ambient_relations;  // nonempty only for 2-generator charts
  Poly rel_multiplier;                  // certificate (2-generator charts)
  std::vector<int> center_vars;         // coordinate charts
  int chart_var = -1;                   // source variable labelling the chart
  std::vector<int> weights;             // weighted charts
};

struct DivisorInChart {
  std::string label;
  Ideal ideal;
};

/// Blow-up of V(f) along the coordinate subspace {center = 0}, in the chart
/// labelled by chart_var: v -> v*chart_var for the other center variables.
/// exc_mult is the multiplicity of f along the center.
Chart blowup_coordinate_center(const Poly& f, const std::vector<int>& center, int chart_var);
Chart blowup_coordinate_center(const Poly& f, const std::vector<std::string>& center,
                               const std::string& chart_var);

/// Weighted blow-up of V(f) at the origin; only weight-1 charts are smooth
/// ambient charts and supported, others raise QuotientChartUnsupported.
Chart weighted_blowup_point(const Poly& f, const std::vector<int>& weights, int chart_var);

/// Blow-up of the two-generator ideal (g1, g2). Chart A carries the ratio
/// s = g2/g1 (relation s*g1 - g2) with exceptional factor g1; chart B is
/// symmetric. One of the pair's exceptional/other generators must be a pure
/// variable power for the slice division; otherwise UnsupportedCenter.
std::pair<Chart, Chart> blowup_two_generator_ideal(const Poly& f, const Poly& g1, const Poly& g2,
                                                   const std::string& ratio_a = "u",
                                                   const std::string& ratio_b = "v");

/// Components of {exceptional = 0} on the strict transform, by factoring
/// the restriction. Labels are assigned by the caller.
std::vector<DivisorInChart> exceptional_divisors(const Chart& chart);

/// Strict transform of a divisor (or center) ideal through the chart:
/// substitute, then divide each generator by its maximal exceptional power.
/// When the preimage is exceptional-supported this degenerates: a center of
/// codimension >= 2 on the hypersurface has empty strict transform (unit
/// ideal); a divisor blown up along itself (two center variables) yields
/// the component of the exceptional locus that dominates it, i.e. whose
/// factor involves a ratio variable.
Ideal strict_transform_of_divisor(const Ideal& D, const Chart& chart);

/// a(E, X) = c - 1 - m for the blow-up of a hypersurface along a smooth
/// center of ambient codimension c along which X has multiplicity m.
int discrepancy_smooth_center(int ambient_codim, int mult);

/// Consistency of two charts of one coordinate blow-up: the strict
/// transforms agree under the chart transition (a Laurent identity).
bool charts_consistent(const Chart& a, const Chart& b);

/// Decompose the radical of a small system into component ideals by
/// recursive factoring of generators (fixture-scale).
std::vector<Ideal> decompose_radical_system(const std::vector<Poly>& gens);

}  // namespace duval
