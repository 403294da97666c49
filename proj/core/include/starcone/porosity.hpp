#pragma once

#include <string>
#include <vector>

#include "starcone/geometry.hpp"
#include "starcone/interval_set.hpp"
#include "starcone/planar_set.hpp"
#include "starcone/scale_ladder.hpp"

namespace starcone {

// Length of the longest open subinterval of (x, x + h) that misses A.
// A empty gives h. Requires h > 0.
double longest_gap(double x, double h, const IntervalSet& A);

struct PorosityRow {
  double h = 0.0;
  double gap = 0.0;
  double ratio = 0.0;
};

struct PorosityEstimate {
  std::vector<PorosityRow> rows;
  // Largest gap ratio over the finest `window` octaves whose h clears
  // h_floor; 0 when the floor removes everything.
  double estimate = 0.0;
  int window = 4;
  double h_floor = 0.0;
};

// Gap ratios lambda(x, h)/h down the ladder, 8 geometric h steps per octave.
// When h_floor cuts into the finest octaves the selection slides up to the
// finest surviving steps so the estimate always rests on `window` octaves
// worth of probes when that many exist.
PorosityEstimate porosity_estimate(const IntervalSet& A, double x, const ScaleLadder& ladder,
                                   int window = 4, double h_floor = 0.0);

std::string to_csv(const PorosityEstimate& est);

struct RadiiResult {
  IntervalSet radii;
  // Scan pitch of the radii; 0 when the set was derived exactly.
  double mesh = 0.0;
};

// Radii of the points of X inside the sector around ray l of aperture
// asin(beta) (everything when beta >= 1): {|z - a| : z in X, dist(z, l) <=
// beta |z - a|}. Exact for cones at the vertex, radial products at the
// vertex, star regions at the center, polygons anywhere, finite samples
// (radii merged across gaps below max(resolution, 2 mesh)), and the
// canonical model sets; otherwise scanned at pitch `resolution`, with
// unbounded shapes probed only out to a finite horizon. l must start at a.
RadiiResult radii_set(const PlanarSet& X, Point a, const Ray& l, double beta,
                      double resolution = 1e-3);

enum class DichotomyClass { LimitZero, LimitOne, Violation };

std::string to_string(DichotomyClass c);

struct DichotomyRow {
  double beta = 0.0;
  double estimate = 0.0;
};

struct DichotomyVerdict {
  std::vector<DichotomyRow> rows;
  DichotomyClass classification = DichotomyClass::Violation;
  // 0 or 1 for the limit classes, the finest-beta estimate otherwise.
  double value = 0.0;
};

// Porosity of the radii set at 0 as beta shrinks. Each beta row runs
// porosity_estimate on R(X, l, beta) over a ladder starting at
// beta * h_ladder.t0 / 4, with h floored at 40 times the radii mesh.
// Classification reads the last three rows: all <= 0.1 is limit-zero, all
// >= 0.9 is limit-one, anything else is a violation. Needs >= 3 betas.
DichotomyVerdict dichotomy_probe(const PlanarSet& X, Point a, const Ray& l,
                                 const std::vector<double>& betas, const ScaleLadder& h_ladder,
                                 double resolution = 1e-3);

// 2^-1 .. 2^-depth.
std::vector<double> default_beta_ladder(int depth = 10);

std::string to_csv(const DichotomyVerdict& verdict);

}  // namespace starcone
