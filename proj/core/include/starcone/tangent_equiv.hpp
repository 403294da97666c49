#pragma once

#include <string>
#include <vector>

#include "starcone/planar_set.hpp"
#include "starcone/scale_ladder.hpp"

namespace starcone {

// Sphere defect sup_{z in S_t(a) cap Z} dist(z, Y). An empty sphere slice
// contributes 0 and raises the flag so callers can tell the cases apart.
struct EpsilonValue {
  double value = 0.0;
  double error_bound = 0.0;
  bool empty_sphere = false;
};

EpsilonValue epsilon_one_sided(double t, const PlanarSet& Z, const PlanarSet& Y, Point a, int n);

// Larger of the two one-sided defects.
EpsilonValue epsilon_sym(double t, const PlanarSet& Z, const PlanarSet& Y, Point a, int n);

struct EquivRow {
  double t = 0.0;
  double eps_zy = 0.0;
  double eps_yz = 0.0;
  double eps = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  bool empty_sphere = false;
};

enum class EquivVerdict { Equivalent, NotEquivalent, Inconclusive };

std::string to_string(EquivVerdict v);

struct EquivalenceReport {
  std::vector<EquivRow> rows;
  EquivVerdict verdict = EquivVerdict::Inconclusive;
  // Least squares slope of log(eps/t) against log t over the rows whose
  // defect rises above its error bound; 0 when fewer than two qualify.
  double slope = 0.0;
};

// Probes eps(t)/t down the ladder. Verdict: equivalent when the last three
// rows have ratio < 0.05 with error bounds below 0.025*t, not equivalent
// when the last three ratios exceed 0.2, inconclusive otherwise. a must be
// the marked point of both sets; the ladder needs depth >= 4.
EquivalenceReport strong_equiv_probe(const PlanarSet& Z, const PlanarSet& Y, Point a,
                                     const ScaleLadder& ladder = ScaleLadder{}, int n = 1024);

std::string to_csv(const EquivalenceReport& report);

}  // namespace starcone
