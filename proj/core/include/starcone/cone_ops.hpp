#pragma once

#include <string>

#include "starcone/angular_set.hpp"
#include "starcone/planar_set.hpp"
#include "starcone/scale_ladder.hpp"

namespace starcone {

enum class ConvexClass { Point, Ray, Sector, Line, HalfPlane, Plane, GeneralUnion };

std::string to_string(ConvexClass c);

// Cone with apex vertex spanned by the direction set arcs, tagged with the
// classification of its shape.
struct ConeDescriptor {
  Point vertex;
  AngularSet arcs;
  ConvexClass convex_class = ConvexClass::Point;
};

// Scales probed when the direction set has to be measured by circle scans.
ScaleLadder support_window();

// Closed set of directions from a toward points of X. Exact for finite
// samples, polygons, cones, star regions viewed from the center, radial
// products viewed from the vertex, and the canonical model sets; otherwise
// assembled from circle scans over the window, each run padded by pad and
// merged across gaps below 2*pad. a is expected to lie in X. Throws
// std::invalid_argument when X = {a}, where no direction exists.
AngularSet angular_support(const PlanarSet& X, Point a,
                           const ScaleLadder& window = support_window(), double pad = 1e-9);

// Smallest closed cone with apex a containing X. X = {a} gives the point
// cone (empty arcs).
ConeDescriptor con_a(const PlanarSet& X, Point a, const ScaleLadder& window = support_window(),
                     double pad = 1e-9);

// Smallest closed convex cone with apex a containing X.
ConeDescriptor conv_a(const PlanarSet& X, Point a, const ScaleLadder& window = support_window(),
                      double pad = 1e-9);

// Shape classification of a direction set read as a cone.
ConvexClass classify_arcs(const AngularSet& arcs);

// Distance from z to the cone; 0 at the apex and on the cone.
double cone_distance(const ConeDescriptor& C, Point z);

// The cone as a planar set marked at its apex.
PlanarSet cone_as_set(const ConeDescriptor& C);

}  // namespace starcone
