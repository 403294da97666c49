#pragma once

#include <string>
#include <vector>

#include "starcone/geometry.hpp"
#include "starcone/planar_set.hpp"
#include "starcone/scale_ladder.hpp"

namespace starcone {

// Sample of the rescaled set (X - a)/t inside the closed disk of radius R.
// Polar lattice: rings dr apart, arc pitch dr, dr = R sqrt(W / 2n) with W
// the direction budget of the smallest enclosing cone (floored at 0.2), so
// roughly n points cover the disk and the recorded mesh is 1.12 dr <= 2R/sqrt(n).
// Always contains the origin. The mesh is a true covering bound for shapes
// whose circle slices are computed exactly and that are starlike about a
// (cones and radial products at the vertex, star regions at the center,
// polygons get boundary samples to cover slivers); for scanned shapes it is
// an estimate. Finite samples map their points instead and carry mesh
// (mesh + band)/t.
PointSample blowup_at_scale(const PlanarSet& X, Point a, double t, double R, int n);

struct ConvergenceRow {
  double t = 0.0;
  double hausdorff = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

enum class ConvergenceVerdict { Converges, Diverges, Inconclusive };

std::string to_string(ConvergenceVerdict v);

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
  double radius = 1.0;
};

// Hausdorff distance of the blow-up to the smallest enclosing cone down the
// ladder, both sampled on the same lattice. Verdict from the three finest
// rows, net of sampling bounds: converges when max(0, d - bound) <= 0.02 R
// on all three, diverges when it exceeds 0.1 R on all three.
ConvergenceReport cone_convergence_report(const PlanarSet& X, Point a,
                                          const ScaleLadder& ladder = ScaleLadder{}, double R = 1.0,
                                          int n = 4096);

std::string to_csv(const ConvergenceReport& report);

struct ClusterRow {
  int n = 0;
  double r = 0.0;
  double x = 0.0;
  double y = 0.0;
  int parity = 0;
};

struct ClusterReport {
  double theta_odd = 0.0;
  double theta_even = 0.0;
  int cluster_count = 1;
  Point odd_limit{1.0, 0.0};
  Point even_limit{1.0, 0.0};
  // Unit-circle distance 2 sin(delta/2) between the two limit directions.
  double separation = 0.0;
  std::vector<ClusterRow> rows;
};

// The sequence z_n = r_n e^{i theta_n} with radii off the ladder and angle
// alternating by parity of n (n starts at 1, odd first). Its directions
// cluster at one or two unit vectors.
ClusterReport sequence_cluster_directions(double theta_odd, double theta_even,
                                          const ScaleLadder& ladder = ScaleLadder{});

std::string to_csv(const ClusterReport& report);

}  // namespace starcone
