#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcone/cone_ops.hpp"
#include "starcone/planar_set.hpp"

namespace starcone {

// Named example set with its known local structure at the marked point.
struct Fixture {
  std::string name;
  PlanarSet set;
  bool starlike = true;
  std::optional<AngularSet> expected_con_arcs;
  std::optional<ConvexClass> expected_conv_class;
};

// Catalog, parameters after colons:
//   real-line, real-halfline, full-plane, half-plane
//   sector[:lo:hi]          cone over [lo, hi], default [0.3, 1.2]
//   ray[:angle]             single ray, default 0
//   two-rays                rays at 0 and pi/2
//   segment                 unit segment on the positive x axis
//   square-at-corner        unit square marked at (0, 0)
//   convex-polygon-at-vertex[:seed]  hull of random points in a far disk
//                                    plus the origin, marked at the origin
//   parabola-star-region    {x^2 <= y <= 1, 0 <= x <= 1} as a star grid
//   annulus                 radii {0} u [1/2, 1], not starlike
//   geometric-radial[:q:c]  radii {0} u union_k [q^{k+1}, c q^k], not starlike
// Throws std::invalid_argument for unknown names or bad parameters.
Fixture make_fixture(const std::string& spec);

std::vector<std::string> fixture_names();

// The catalog entries that are starlike about their marked point.
std::vector<std::string> starlike_fixture_names();

// Membership-filtered square grid of pitch mesh/sqrt(2) around the marked
// point of X, wrapped as a finite sample with the given mesh and band = mesh.
PlanarSet densified_sample(const PlanarSet& X, double mesh, double window_radius);

// Convex hull (counterclockwise, strict turns) of 12 seeded uniform points
// in the unit square. Reseeds until the hull has at least 3 vertices.
std::vector<Point> random_convex_polygon(std::uint64_t seed);

}  // namespace starcone
