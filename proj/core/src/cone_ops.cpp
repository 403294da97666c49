#include "starcone/cone_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace starcone {

namespace {

constexpr double kPointTol = 1e-12;
constexpr double kEdgeTol = 1e-9;

bool same_point(Point a, Point b) { return dist(a, b) <= kPointTol; }

void push_degenerate(std::vector<std::pair<double, double>>& pieces, double theta) {
  pieces.push_back({theta, theta});
}

// True exactly when the representation pins X down to the single point a.
bool is_singleton_at(const PlanarSet& X, Point a) {
  struct Visitor {
    Point a;
    bool operator()(const FiniteSampleShape& s) const {
      if (s.mesh > 0.0) return false;
      for (Point p : s.points)
        if (!same_point(p, a)) return false;
      return true;
    }
    bool operator()(const PolygonShape&) const { return false; }
    bool operator()(const StarRegionShape& s) const {
      return same_point(a, s.center) && star_support_arcs(s).empty();
    }
    bool operator()(const ConeShape& s) const {
      return same_point(a, s.vertex) && s.arcs.empty();
    }
    bool operator()(const RadialProductShape& s) const {
      return same_point(a, s.vertex) && s.radii.max() <= 0.0;
    }
    bool operator()(const HalfPlaneShape&) const { return false; }
    bool operator()(const FullPlaneShape&) const { return false; }
    bool operator()(const RealLineShape&) const { return false; }
    bool operator()(const RealHalfLineShape&) const { return false; }
  };
  return std::visit(Visitor{a}, X.shape());
}

// Directions to the mesh fattening of the cloud. mesh == 0 reads the cloud
// as the set itself.
AngularSet finite_support(const FiniteSampleShape& s, Point a) {
  std::vector<std::pair<double, double>> pieces;
  bool any = false;
  for (Point p : s.points) {
    if (same_point(p, a)) continue;
    any = true;
    const double r = dist(p, a);
    if (s.mesh >= r) return AngularSet::full_circle();
    const double theta = angle_of(p, a);
    const double w = std::asin(s.mesh / r);
    pieces.push_back({theta - w, theta + w});
  }
  // Only colocated samples left: the true set hides in a mesh ball around a.
  if (!any) return AngularSet::full_circle();
  return AngularSet::from_arcs(pieces);
}

// Union over the edges of the arcs they subtend from a. Every point of the
// region shares its direction with a boundary point, so edges suffice.
AngularSet polygon_support(const PolygonShape& s, Point a) {
  std::vector<std::pair<double, double>> pieces;
  const std::size_t n = s.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = s.vertices[i];
    const Point q = s.vertices[(i + 1) % n];
    const bool pa = same_point(p, a);
    const bool qa = same_point(q, a);
    if (pa && qa) continue;
    if (pa || qa) {
      push_degenerate(pieces, angle_of(pa ? q : p, a));
      continue;
    }
    const double tp = angle_of(p, a);
    const double tq = angle_of(q, a);
    const double d = normalize_angle(tq - tp);
    if (std::fabs(d - kPi) <= kAngleWrapTol) {
      // a sits on the open segment: the two ends point opposite ways.
      push_degenerate(pieces, tp);
      push_degenerate(pieces, tq);
    } else if (d < kPi) {
      pieces.push_back({tp, tp + d});
    } else {
      pieces.push_back({tq, tq + (kTwoPi - d)});
    }
  }
  return AngularSet::from_arcs(pieces);
}

// Exact from any viewpoint. Each ray of the cone subtends the short arc
// between its asymptotic direction and the direction of the vertex; a run of
// directions sweeps those arcs continuously, so its endpoints bound the
// union. A run holding the direction from vertex through a strictly inside
// flips the sweep across both sides and covers the circle.
AngularSet cone_support(const ConeShape& s, Point a) {
  if (same_point(a, s.vertex)) return s.arcs;
  const double to_vertex = angle_of(s.vertex, a);
  if (s.arcs.empty()) {
    std::vector<std::pair<double, double>> one;
    push_degenerate(one, to_vertex);
    return AngularSet::from_arcs(one);
  }
  const double away = normalize_angle(to_vertex + kPi);

  bool away_interior = s.arcs.contains(away, kAngleWrapTol);
  if (away_interior) {
    for (const Arc& run : s.arcs.runs())
      for (double e : {run.lo, run.hi})
        if (angular_distance(e, away) <= 2.0 * kAngleWrapTol) away_interior = false;
  }
  if (away_interior) return AngularSet::full_circle();

  std::vector<std::pair<double, double>> pieces;
  for (const Arc& run : s.arcs.runs()) {
    pieces.push_back({run.lo, run.hi});
    for (double e : {run.lo, run.hi}) {
      if (angular_distance(e, away) <= kAngleWrapTol) continue;  // collinear ray through a
      const double d = normalize_angle(to_vertex - e);
      if (d <= kPi)
        pieces.push_back({e, e + d});
      else
        pieces.push_back({to_vertex, to_vertex + (kTwoPi - d)});
    }
  }
  if (s.arcs.contains(away, kAngleWrapTol)) {
    // The ray through a contributes only its own two directions.
    push_degenerate(pieces, away);
    push_degenerate(pieces, to_vertex);
  }
  return AngularSet::from_arcs(pieces);
}

AngularSet sampled_support(const PlanarSet& X, Point a, const ScaleLadder& window, double pad,
                           std::vector<std::pair<double, double>> pieces) {
  constexpr int kScan = 1024;
  for (double t : window.scales()) {
    const AngularSet ring = in_set_circle(X, a, t, kScan);
    if (ring.empty()) continue;
    if (ring.full()) return AngularSet::full_circle();
    for (const Arc& run : ring.runs()) pieces.push_back({run.lo - pad, run.hi + pad});
  }
  return AngularSet::from_arcs(pieces, 2.0 * pad);
}

AngularSet support_impl(const PlanarSet& X, Point a, const ScaleLadder& window, double pad) {
  struct Visitor {
    const PlanarSet& X;
    Point a;
    const ScaleLadder& window;
    double pad;

    AngularSet operator()(const FiniteSampleShape& s) const { return finite_support(s, a); }
    AngularSet operator()(const PolygonShape& s) const { return polygon_support(s, a); }
    AngularSet operator()(const StarRegionShape& s) const {
      if (same_point(a, s.center)) return star_support_arcs(s);
      return sampled_support(X, a, window, pad, {});
    }
    AngularSet operator()(const ConeShape& s) const { return cone_support(s, a); }
    AngularSet operator()(const RadialProductShape& s) const {
      if (same_point(a, s.vertex))
        return s.radii.max() > 0.0 ? s.arcs : AngularSet::empty_set();
      std::vector<std::pair<double, double>> extra;
      if (std::isinf(s.radii.max()))
        for (const Arc& run : s.arcs.runs()) extra.push_back({run.lo, run.hi});
      return sampled_support(X, a, window, pad, std::move(extra));
    }
    AngularSet operator()(const HalfPlaneShape&) const {
      if (a.y > kEdgeTol) return AngularSet::full_circle();
      return AngularSet::from_arcs({{0.0, kPi}});
    }
    AngularSet operator()(const FullPlaneShape&) const { return AngularSet::full_circle(); }
    AngularSet operator()(const RealLineShape&) const {
      return AngularSet::from_arcs({{0.0, 0.0}, {kPi, kPi}});
    }
    AngularSet operator()(const RealHalfLineShape&) const {
      if (a.x > kEdgeTol) return AngularSet::from_arcs({{0.0, 0.0}, {kPi, kPi}});
      return AngularSet::from_arcs({{0.0, 0.0}});
    }
  };
  return std::visit(Visitor{X, a, window, pad}, X.shape());
}

}  // namespace

std::string to_string(ConvexClass c) {
  switch (c) {
    case ConvexClass::Point: return "point";
    case ConvexClass::Ray: return "ray";
    case ConvexClass::Sector: return "sector";
    case ConvexClass::Line: return "line";
    case ConvexClass::HalfPlane: return "half-plane";
    case ConvexClass::Plane: return "plane";
    case ConvexClass::GeneralUnion: return "general-union";
  }
  return "unknown";
}

ScaleLadder support_window() { return ScaleLadder{1.0, 0.5, 12}; }

AngularSet angular_support(const PlanarSet& X, Point a, const ScaleLadder& window, double pad) {
  if (is_singleton_at(X, a))
    throw std::invalid_argument("angular_support: X is the single point a");
  return support_impl(X, a, window, pad);
}

ConvexClass classify_arcs(const AngularSet& arcs) {
  if (arcs.empty()) return ConvexClass::Point;
  if (arcs.full()) return ConvexClass::Plane;
  const std::vector<Arc> runs = arcs.runs();
  if (runs.size() == 1) {
    const double w = runs[0].width();
    if (w <= kAngleWrapTol) return ConvexClass::Ray;
    if (std::fabs(w - kPi) <= kAngleWrapTol) return ConvexClass::HalfPlane;
    if (w < kPi) return ConvexClass::Sector;
    return ConvexClass::GeneralUnion;
  }
  if (runs.size() == 2 && runs[0].width() <= kAngleWrapTol && runs[1].width() <= kAngleWrapTol &&
      std::fabs(angular_distance(runs[0].lo, runs[1].lo) - kPi) <= kAngleWrapTol)
    return ConvexClass::Line;
  return ConvexClass::GeneralUnion;
}

ConeDescriptor con_a(const PlanarSet& X, Point a, const ScaleLadder& window, double pad) {
  if (is_singleton_at(X, a)) return {a, AngularSet::empty_set(), ConvexClass::Point};
  AngularSet s = support_impl(X, a, window, pad);
  const ConvexClass c = classify_arcs(s);
  return {a, std::move(s), c};
}

ConeDescriptor conv_a(const PlanarSet& X, Point a, const ScaleLadder& window, double pad) {
  ConeDescriptor cone = con_a(X, a, window, pad);
  switch (cone.convex_class) {
    case ConvexClass::Point:
    case ConvexClass::Ray:
    case ConvexClass::Sector:
    case ConvexClass::Line:
    case ConvexClass::HalfPlane:
    case ConvexClass::Plane:
      return cone;  // already convex, arcs reused verbatim
    case ConvexClass::GeneralUnion: break;
  }
  const std::vector<Arc> runs = cone.arcs.runs();
  if (runs.size() == 1) {
    // Single run wider than a half turn: the hull is everything.
    return {a, AngularSet::full_circle(), ConvexClass::Plane};
  }
  const auto [gap_start, gap_width] = cone.arcs.largest_gap();
  if (gap_width < kPi - kAngleWrapTol)
    return {a, AngularSet::full_circle(), ConvexClass::Plane};
  // The hull is the arc complementary to the widest gap.
  AngularSet hull = AngularSet::from_arcs({{gap_start + gap_width, gap_start + kTwoPi}});
  const ConvexClass c =
      gap_width > kPi + kAngleWrapTol ? ConvexClass::Sector : ConvexClass::HalfPlane;
  return {a, std::move(hull), c};
}

double cone_distance(const ConeDescriptor& C, Point z) {
  return nearest_distance(cone_as_set(C), z).value;
}

PlanarSet cone_as_set(const ConeDescriptor& C) {
  return PlanarSet(ConeShape{C.vertex, C.arcs}, C.vertex);
}

}  // namespace starcone
