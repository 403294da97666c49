#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "starcone/angular_set.hpp"
#include "starcone/geometry.hpp"
#include "starcone/interval_set.hpp"

namespace starcone {

// ---------------------------------------------------------------------------
// Shape variants
// ---------------------------------------------------------------------------

// Finite point cloud standing in for a denser set. mesh is the covering
// radius of the points over that set (0 = the cloud is the set). Sphere
// queries accept points whose radius differs from the probe radius by at
// most band.
struct FiniteSampleShape {
  std::vector<Point> points;
  double mesh = 0.0;
  double band = 0.0;
};

// Closed simple polygon region: boundary plus interior.
struct PolygonShape {
  std::vector<Point> vertices;
};

// Region starlike about center: all points center + r*e^{i theta} with
// 0 <= r <= rho(theta), theta in the angular domain [theta0, theta0 + span].
// rho is stored on a uniform grid over the domain and interpolated linearly.
// span == 2*pi wraps (rho.size() cells, last cell closing onto node 0);
// a partial domain uses rho.size() - 1 cells with hard edges at both ends,
// which lets regions end exactly at a boundary ray instead of interpolating
// into the zero region beyond it. boundary_mesh bounds the gap between the
// interpolated boundary and the chord polyline used for distance queries; it
// is re-estimated at construction.
struct StarRegionShape {
  Point center;
  double theta0 = 0.0;
  double span = kTwoPi;
  std::vector<double> rho;
  double boundary_mesh = 0.0;

  bool wraps() const { return span >= kTwoPi - kAngleWrapTol; }
};

// Union of the rays from vertex along every direction in arcs. Empty arcs
// give the degenerate set {vertex}.
struct ConeShape {
  Point vertex;
  AngularSet arcs;
};

// {vertex + r*e^{i theta} : r in radii, theta in arcs}, plus {vertex}
// whenever 0 is in radii.
struct RadialProductShape {
  Point vertex;
  IntervalSet radii;
  AngularSet arcs;
};

// Canonical model sets: closed upper half plane, whole plane, x axis,
// nonnegative x axis.
struct HalfPlaneShape {};
struct FullPlaneShape {};
struct RealLineShape {};
struct RealHalfLineShape {};

using Shape = std::variant<FiniteSampleShape, PolygonShape, StarRegionShape, ConeShape,
                           RadialProductShape, HalfPlaneShape, FullPlaneShape, RealLineShape,
                           RealHalfLineShape>;

// A planar set together with its marked basepoint. Construction validates the
// shape invariants and that the marked point belongs to the set; violations
// throw std::invalid_argument.
class PlanarSet {
 public:
  PlanarSet(Shape shape, Point marked_point);

  const Shape& shape() const { return shape_; }
  Point marked_point() const { return marked_; }

  // Covering mesh of the representation; 0 for exact analytic shapes.
  double mesh() const;

  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(shape_);
  }
  template <class T>
  const T& get() const {
    return std::get<T>(shape_);
  }

 private:
  Shape shape_;
  Point marked_;
};

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

struct NearestResult {
  double value = 0.0;
  double error_bound = 0.0;
};

struct StarlikeResult {
  bool starlike = true;
  // Witness (b, t): the segment point a + t*(b - a) fell outside the set.
  std::optional<std::pair<Point, double>> counterexample;
};

bool membership(const PlanarSet& X, Point z);

// Directions theta for which a + r*e^{i theta} lies in X. Exact for analytic
// shapes whose anchor (vertex / center / canonical axis) is compatible with a;
// otherwise a scan of `scan_resolution` probes with bisection-refined
// boundaries. Returns the empty set when the circle misses X. Not defined for
// finite samples (throws std::runtime_error; use sphere_sample).
AngularSet in_set_circle(const PlanarSet& X, Point a, double r, int scan_resolution = 512);

// Points of X at distance t from a, covering the true sphere within the
// recorded sample mesh (<= 2*pi*t/n + shape mesh). May be empty when the
// sphere itself is empty. For finite samples the band convention applies and
// an empty selection throws std::runtime_error instead. Throws
// std::invalid_argument when t <= 0 or n < 1.
PointSample sphere_sample(const PlanarSet& X, Point a, double t, int n);

// Closure of the directions along which a star region has positive radial
// extent; exact from the grid cells.
AngularSet star_support_arcs(const StarRegionShape& s);

// Largest interpolated radius over directions within circular distance
// halfwidth of center_angle; the global maximum when halfwidth >= pi.
double star_max_rho_in_window(const StarRegionShape& s, double center_angle, double halfwidth);

NearestResult nearest_distance(const PlanarSet& X, Point z);

// Samples witness points b of X and segment parameters t in {mesh, 2*mesh,
// ...} and reports the first segment point outside X, if any.
StarlikeResult starlike_check(const PlanarSet& X, Point a, double mesh);

// Rigid motion: rotation by phi about the origin followed by translation.
// Canonical shapes are rewritten as equivalent cones when the motion moves
// them off their canonical pose; everything else transforms fieldwise.
PlanarSet transformed(const PlanarSet& X, double phi, Point shift);

}  // namespace starcone
