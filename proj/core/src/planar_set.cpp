#include "starcone/planar_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace starcone {

namespace {

constexpr double kPointTol = 1e-12;
// Boundary-inclusive slack for region membership; large enough to absorb the
// rounding of rigidly moved coordinates, far below any sampling pitch.
constexpr double kRegionTol = 1e-9;

bool same_point(Point a, Point b, double tol = kPointTol) {
  return std::fabs(a.x - b.x) <= tol && std::fabs(a.y - b.y) <= tol;
}

// --- polygon helpers -------------------------------------------------------

double signed_area(const std::vector<Point>& vs) {
  double s = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % vs.size()];
    s += cross(p, q);
  }
  return 0.5 * s;
}

double dist_to_polygon_boundary(const std::vector<Point>& vs, Point z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    best = std::min(best, dist_to_segment(z, vs[i], vs[(i + 1) % vs.size()]));
  }
  return best;
}

bool point_in_polygon(const std::vector<Point>& vs, Point z) {
  if (dist_to_polygon_boundary(vs, z) <= kRegionTol) return true;
  bool inside = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % vs.size()];
    if ((p.y > z.y) != (q.y > z.y)) {
      const double xint = p.x + (z.y - p.y) * (q.x - p.x) / (q.y - p.y);
      if (z.x < xint) inside = !inside;
    }
  }
  return inside;
}

int orientation_sign(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point p, Point a, Point b) {
  return orientation_sign(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point p1, Point q1, Point p2, Point q2) {
  const int d1 = orientation_sign(p2, q2, p1);
  const int d2 = orientation_sign(p2, q2, q1);
  const int d3 = orientation_sign(p1, q1, p2);
  const int d4 = orientation_sign(p1, q1, q2);
  if (d1 != d2 && d3 != d4) return true;
  if (d1 == 0 && on_segment(p1, p2, q2)) return true;
  if (d2 == 0 && on_segment(q1, p2, q2)) return true;
  if (d3 == 0 && on_segment(p2, p1, q1)) return true;
  if (d4 == 0 && on_segment(q2, p1, q1)) return true;
  return false;
}

bool polygon_is_simple(const std::vector<Point>& vs) {
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a0 = vs[i], a1 = vs[(i + 1) % n];
    if (same_point(a0, a1)) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point b0 = vs[j], b1 = vs[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex must be the only contact: reject folded-back edges.
        const Point s = (j == i + 1) ? a1 : a0;
        const Point u = (j == i + 1) ? a0 : a1;
        const Point w = (j == i + 1) ? b1 : b0;
        if (orientation_sign(s, u, w) == 0 && dot(u - s, w - s) > 0.0) return false;
      } else if (segments_intersect(a0, a1, b0, b1)) {
        return false;
      }
    }
  }
  return true;
}

// --- star region helpers ----------------------------------------------------

std::size_t star_cell_count(const StarRegionShape& s) {
  return s.wraps() ? s.rho.size() : s.rho.size() - 1;
}

double star_cell_width(const StarRegionShape& s) {
  return s.span / static_cast<double>(star_cell_count(s));
}

double star_node_rho(const StarRegionShape& s, std::size_t i) {
  return s.rho[i % s.rho.size()];  // the wrap cell closes onto node 0
}

Point star_node(const StarRegionShape& s, std::size_t i) {
  const double theta = s.theta0 + star_cell_width(s) * static_cast<double>(i);
  return s.center + star_node_rho(s, i) * unit_vector(theta);
}

// Offset of theta into the angular domain, or nothing when theta is outside a
// partial domain.
std::optional<double> star_domain_offset(const StarRegionShape& s, double theta) {
  double off = normalize_angle(theta - s.theta0);
  if (!s.wraps() && off > s.span) {
    if (off >= kTwoPi - kAngleWrapTol) return 0.0;
    if (off > s.span + kAngleWrapTol) return std::nullopt;
    off = s.span;
  }
  return off;
}

double star_rho_at_offset(const StarRegionShape& s, double off) {
  const double width = star_cell_width(s);
  const double u = off / width;
  std::size_t i = static_cast<std::size_t>(u);
  const std::size_t cells = star_cell_count(s);
  if (i >= cells) i = cells - 1;
  const double f = u - static_cast<double>(i);
  const double r0 = star_node_rho(s, i);
  const double r1 = star_node_rho(s, i + 1);
  return r0 + f * (r1 - r0);
}

// Largest sampled gap between the interpolated boundary curve and its chord
// polyline; a 1.5x factor covers in-cell variation between probe angles.
double star_chord_gap_estimate(const StarRegionShape& s) {
  const double width = star_cell_width(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < star_cell_count(s); ++i) {
    const Point p = star_node(s, i);
    const Point q = star_node(s, i + 1);
    const double base = s.theta0 + width * static_cast<double>(i);
    const double r0 = star_node_rho(s, i);
    const double r1 = star_node_rho(s, i + 1);
    for (int k = 1; k < 16; ++k) {
      const double f = static_cast<double>(k) / 16.0;
      const Point c = s.center + (r0 + f * (r1 - r0)) * unit_vector(base + f * width);
      worst = std::max(worst, dist_to_segment(c, p, q));
    }
  }
  return 1.5 * worst;
}

bool star_contains(const StarRegionShape& s, Point z) {
  if (same_point(z, s.center)) return true;
  const auto off = star_domain_offset(s, angle_of(z, s.center));
  if (!off) return false;
  return dist(z, s.center) <= star_rho_at_offset(s, *off) + kRegionTol;
}

// --- canonical shapes as cone geometry --------------------------------------

AngularSet half_plane_arcs() { return AngularSet::from_arcs({{0.0, kPi}}); }
AngularSet line_arcs() { return AngularSet::from_arcs({{0.0, 0.0}, {kPi, kPi}}); }
AngularSet half_line_arcs() { return AngularSet::from_arcs({{0.0, 0.0}}); }

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

PlanarSet::PlanarSet(Shape shape, Point marked_point)
    : shape_(std::move(shape)), marked_(marked_point) {
  if (auto* fs = std::get_if<FiniteSampleShape>(&shape_)) {
    if (fs->points.empty()) throw std::invalid_argument("finite sample: no points");
    if (fs->mesh < 0.0 || fs->band < 0.0) {
      throw std::invalid_argument("finite sample: mesh and band must be nonnegative");
    }
    if (fs->band == 0.0) fs->band = fs->mesh;
  } else if (auto* pg = std::get_if<PolygonShape>(&shape_)) {
    if (pg->vertices.size() < 3) throw std::invalid_argument("polygon: need at least 3 vertices");
    if (!polygon_is_simple(pg->vertices)) throw std::invalid_argument("polygon: must be simple");
    if (std::fabs(signed_area(pg->vertices)) == 0.0) {
      throw std::invalid_argument("polygon: degenerate (zero area)");
    }
  } else if (auto* sr = std::get_if<StarRegionShape>(&shape_)) {
    if (sr->rho.size() < 8) throw std::invalid_argument("star region: need at least 8 grid nodes");
    if (!(sr->span > 0.0) || sr->span > kTwoPi + kAngleWrapTol) {
      throw std::invalid_argument("star region: span must lie in (0, 2*pi]");
    }
    sr->span = std::min(sr->span, kTwoPi);
    for (double r : sr->rho) {
      if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("star region: radial samples must be finite and nonnegative");
      }
    }
    sr->theta0 = normalize_angle(sr->theta0);
    sr->boundary_mesh = std::max(sr->boundary_mesh, star_chord_gap_estimate(*sr));
  }
  if (!membership(*this, marked_)) {
    throw std::invalid_argument("marked point does not belong to the set");
  }
}

double PlanarSet::mesh() const {
  if (auto* fs = std::get_if<FiniteSampleShape>(&shape_)) return fs->mesh;
  return 0.0;
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool membership(const PlanarSet& X, Point z) {
  struct Visitor {
    Point z;
    bool operator()(const FiniteSampleShape& s) const {
      for (Point p : s.points) {
        if (same_point(p, z)) return true;
      }
      return false;
    }
    bool operator()(const PolygonShape& s) const { return point_in_polygon(s.vertices, z); }
    bool operator()(const StarRegionShape& s) const { return star_contains(s, z); }
    bool operator()(const ConeShape& s) const {
      if (same_point(z, s.vertex)) return true;
      if (s.arcs.empty()) return false;
      const double r = dist(z, s.vertex);
      // Angular slack shrinks with distance so the admitted boundary layer
      // stays kRegionTol thick in the plane.
      return s.arcs.circular_distance_to(angle_of(z, s.vertex)) * r <= kRegionTol;
    }
    bool operator()(const RadialProductShape& s) const {
      if (same_point(z, s.vertex)) return s.radii.contains(0.0, kRegionTol);
      const double r = dist(z, s.vertex);
      if (!s.radii.contains(r, kRegionTol)) return false;
      return !s.arcs.empty() &&
             s.arcs.circular_distance_to(angle_of(z, s.vertex)) * r <= kRegionTol;
    }
    bool operator()(const HalfPlaneShape&) const { return z.y >= -kRegionTol; }
    bool operator()(const FullPlaneShape&) const { return true; }
    bool operator()(const RealLineShape&) const { return std::fabs(z.y) <= kRegionTol; }
    bool operator()(const RealHalfLineShape&) const {
      return std::fabs(z.y) <= kRegionTol && z.x >= -kRegionTol;
    }
  };
  return std::visit(Visitor{z}, X.shape());
}

// ---------------------------------------------------------------------------
// Circle membership intervals
// ---------------------------------------------------------------------------

namespace {

// Angles where the circle |w - a| = r crosses the segment [p, q], as seen
// from a.
void circle_segment_crossings(Point a, double r, Point p, Point q, std::vector<double>* out) {
  const Point d = q - p;
  const Point f = p - a;
  const double A = dot(d, d);
  const double B = 2.0 * dot(f, d);
  const double C = dot(f, f) - r * r;
  if (A == 0.0) return;
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  for (double u : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
    if (u >= 0.0 && u <= 1.0) {
      const Point w = p + u * d;
      if (!same_point(w, a)) out->push_back(angle_of(w, a));
    }
  }
}

AngularSet intervals_from_criticals(const PlanarSet& X, Point a, double r,
                                    std::vector<double> criticals) {
  std::sort(criticals.begin(), criticals.end());
  criticals.erase(std::unique(criticals.begin(), criticals.end()), criticals.end());
  auto member_at = [&](double theta) { return membership(X, a + r * unit_vector(theta)); };
  if (criticals.empty()) {
    return member_at(0.0) ? AngularSet::full_circle() : AngularSet::empty_set();
  }
  std::vector<std::pair<double, double>> arcs;
  const std::size_t m = criticals.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double lo = criticals[i];
    const double hi = (i + 1 < m) ? criticals[i + 1] : criticals[0] + kTwoPi;
    if (member_at(lo + 0.5 * (hi - lo))) {
      arcs.emplace_back(lo, hi);
    } else if (member_at(lo)) {
      arcs.emplace_back(lo, lo);  // isolated touch point
    }
  }
  return AngularSet::from_arcs(arcs);
}

AngularSet star_circle_intervals(const StarRegionShape& s, double r) {
  // Per cell rho is linear in theta; solve rho(theta) >= r exactly.
  const double delta = star_cell_width(s);
  std::vector<std::pair<double, double>> arcs;
  for (std::size_t i = 0; i < star_cell_count(s); ++i) {
    const double r0 = star_node_rho(s, i);
    const double r1 = star_node_rho(s, i + 1);
    const double lo = s.theta0 + delta * static_cast<double>(i);
    const double hi = lo + delta;
    const bool in0 = r0 >= r, in1 = r1 >= r;
    if (in0 && in1) {
      arcs.emplace_back(lo, hi);
    } else if (in0 != in1) {
      const double u = (r - r0) / (r1 - r0);  // crossing parameter in (0, 1)
      const double mid = lo + u * delta;
      if (in0) {
        arcs.emplace_back(lo, mid);
      } else {
        arcs.emplace_back(mid, hi);
      }
    }
  }
  return AngularSet::from_arcs(arcs);
}

AngularSet scanned_circle_intervals(const PlanarSet& X, Point a, double r, int resolution) {
  const int k = std::max(64, resolution);
  std::vector<bool> in(static_cast<std::size_t>(k));
  bool any = false, all = true;
  for (int i = 0; i < k; ++i) {
    in[static_cast<std::size_t>(i)] = membership(X, a + r * unit_vector(kTwoPi * i / k));
    any = any || in[static_cast<std::size_t>(i)];
    all = all && in[static_cast<std::size_t>(i)];
  }
  if (!any) return AngularSet::empty_set();
  if (all) return AngularSet::full_circle();

  auto refine = [&](double out_theta, double in_theta) {
    // Bisect toward the boundary, keeping out/in bracketing.
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (out_theta + in_theta);
      if (membership(X, a + r * unit_vector(mid))) {
        in_theta = mid;
      } else {
        out_theta = mid;
      }
    }
    return in_theta;
  };

  // Anchor the walk at an out-sample so runs that wrap past index 0 stay
  // whole; from_arcs renormalizes angles beyond 2*pi.
  int s0 = 0;
  while (in[static_cast<std::size_t>(s0)]) ++s0;
  const double step = kTwoPi / k;
  auto in_at = [&](int idx) { return in[static_cast<std::size_t>(((idx % k) + k) % k)]; };

  std::vector<std::pair<double, double>> arcs;
  int j = s0;
  while (j < s0 + k) {
    if (!in_at(j + 1)) {
      ++j;
      continue;
    }
    int e = j + 1;
    while (in_at(e + 1)) ++e;  // terminates: index s0 (mod k) is out
    const double start = refine(step * j, step * (j + 1));
    const double end = refine(step * (e + 1), step * e);
    arcs.emplace_back(start, end);
    j = e + 1;
  }
  return AngularSet::from_arcs(arcs);
}

bool exact_circle_anchor(const PlanarSet& X, Point a) {
  struct Visitor {
    Point a;
    bool operator()(const FiniteSampleShape&) const { return false; }
    bool operator()(const PolygonShape&) const { return true; }
    bool operator()(const StarRegionShape& s) const { return same_point(a, s.center); }
    bool operator()(const ConeShape& s) const { return same_point(a, s.vertex); }
    bool operator()(const RadialProductShape& s) const { return same_point(a, s.vertex); }
    bool operator()(const HalfPlaneShape&) const { return true; }
    bool operator()(const FullPlaneShape&) const { return true; }
    bool operator()(const RealLineShape&) const { return true; }
    bool operator()(const RealHalfLineShape&) const { return true; }
  };
  return std::visit(Visitor{a}, X.shape());
}

}  // namespace

AngularSet in_set_circle(const PlanarSet& X, Point a, double r, int scan_resolution) {
  if (!(r > 0.0)) throw std::invalid_argument("in_set_circle: radius must be positive");

  struct Visitor {
    const PlanarSet& X;
    Point a;
    double r;
    int resolution;

    AngularSet generic() const { return scanned_circle_intervals(X, a, r, resolution); }

    AngularSet operator()(const FiniteSampleShape&) const {
      throw std::runtime_error("in_set_circle: not defined for finite samples");
    }
    AngularSet operator()(const PolygonShape& s) const {
      std::vector<double> criticals;
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        circle_segment_crossings(a, r, s.vertices[i], s.vertices[(i + 1) % s.vertices.size()],
                                 &criticals);
      }
      return intervals_from_criticals(X, a, r, std::move(criticals));
    }
    AngularSet operator()(const StarRegionShape& s) const {
      if (!same_point(a, s.center)) return generic();
      return star_circle_intervals(s, r);
    }
    AngularSet operator()(const ConeShape& s) const {
      if (!same_point(a, s.vertex)) return generic();
      return s.arcs;
    }
    AngularSet operator()(const RadialProductShape& s) const {
      if (!same_point(a, s.vertex)) return generic();
      return s.radii.contains(r, kPointTol) ? s.arcs : AngularSet::empty_set();
    }
    AngularSet operator()(const HalfPlaneShape&) const {
      const double s = a.y / r;
      if (s >= 1.0) return AngularSet::full_circle();
      const double a0 = std::asin(std::max(s, -1.0));
      return AngularSet::from_arcs({{-a0, kPi + a0}});
    }
    AngularSet operator()(const FullPlaneShape&) const { return AngularSet::full_circle(); }
    AngularSet operator()(const RealLineShape&) const {
      const double s = -a.y / r;
      if (std::fabs(s) > 1.0) return AngularSet::empty_set();
      const double t1 = std::asin(s);
      const double t2 = kPi - t1;
      return AngularSet::from_arcs({{t1, t1}, {t2, t2}});
    }
    AngularSet operator()(const RealHalfLineShape&) const {
      const double s = -a.y / r;
      if (std::fabs(s) > 1.0) return AngularSet::empty_set();
      std::vector<std::pair<double, double>> arcs;
      for (double theta : {std::asin(s), kPi - std::asin(s)}) {
        if (a.x + r * std::cos(theta) >= -kRegionTol) arcs.emplace_back(theta, theta);
      }
      return AngularSet::from_arcs(arcs);
    }
  };
  return std::visit(Visitor{X, a, r, scan_resolution}, X.shape());
}

// ---------------------------------------------------------------------------
// Sphere sampling
// ---------------------------------------------------------------------------

PointSample sphere_sample(const PlanarSet& X, Point a, double t, int n) {
  if (!(t > 0.0) || n < 1) {
    throw std::invalid_argument("sphere_sample: need t > 0 and n >= 1");
  }

  if (auto* fs = std::get_if<FiniteSampleShape>(&X.shape())) {
    PointSample out;
    for (Point p : fs->points) {
      if (std::fabs(dist(p, a) - t) <= fs->band) out.points.push_back(p);
    }
    if (out.points.empty()) {
      throw std::runtime_error("sphere_sample: no finite-sample point within band of the sphere");
    }
    out.mesh = fs->mesh + fs->band;
    return out;
  }

  const int scan = std::max(512, 4 * n);
  const AngularSet intervals = in_set_circle(X, a, t, scan);
  PointSample out;
  if (intervals.empty()) return out;

  double max_step = 0.0;
  if (intervals.full()) {
    const int k = std::max(1, n);
    for (int i = 0; i < k; ++i) out.points.push_back(a + t * unit_vector(kTwoPi * i / k));
    max_step = kTwoPi / k;
  } else {
    for (const Arc& run : intervals.runs()) {
      if (run.width() <= 0.0) {
        out.points.push_back(a + t * unit_vector(run.lo));
        continue;
      }
      // Spacing kept <= 2*pi/n per run so the advertised mesh bound holds
      // regardless of how many runs there are.
      const int segs = std::max(1, static_cast<int>(std::ceil(run.width() * n / kTwoPi)));
      const double step = run.width() / segs;
      max_step = std::max(max_step, step);
      for (int i = 0; i <= segs; ++i) {
        out.points.push_back(a + t * unit_vector(run.lo + step * i));
      }
    }
  }
  out.mesh = 0.5 * t * max_step;
  if (!exact_circle_anchor(X, a)) out.mesh += t * kTwoPi / scan;
  return out;
}

// ---------------------------------------------------------------------------
// Nearest distance
// ---------------------------------------------------------------------------

NearestResult nearest_distance(const PlanarSet& X, Point z) {
  struct Visitor {
    Point z;
    NearestResult operator()(const FiniteSampleShape& s) const {
      double best = std::numeric_limits<double>::infinity();
      for (Point p : s.points) best = std::min(best, dist(p, z));
      return {best, s.mesh};
    }
    NearestResult operator()(const PolygonShape& s) const {
      if (point_in_polygon(s.vertices, z)) return {0.0, 0.0};
      return {dist_to_polygon_boundary(s.vertices, z), 0.0};
    }
    NearestResult operator()(const StarRegionShape& s) const {
      if (star_contains(s, z)) return {0.0, s.boundary_mesh};
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < star_cell_count(s); ++i) {
        best = std::min(best, dist_to_segment(z, star_node(s, i), star_node(s, i + 1)));
      }
      if (!s.wraps()) {
        // Hard domain edges: boundary includes the two radial segments.
        best = std::min(best, dist_to_segment(z, s.center, star_node(s, 0)));
        best = std::min(best, dist_to_segment(z, s.center, star_node(s, star_cell_count(s))));
      }
      return {best, s.boundary_mesh};
    }
    NearestResult operator()(const ConeShape& s) const {
      if (same_point(z, s.vertex) || s.arcs.full()) return {0.0, 0.0};
      if (s.arcs.empty()) return {dist(z, s.vertex), 0.0};
      const double theta = angle_of(z, s.vertex);
      if (s.arcs.contains(theta)) return {0.0, 0.0};
      // Off the cone the nearest point lies on a boundary ray of some run.
      double best = std::numeric_limits<double>::infinity();
      for (const Arc& run : s.arcs.runs()) {
        best = std::min(best, dist_to_ray(z, Ray(s.vertex, run.lo)));
        if (run.width() > 0.0) best = std::min(best, dist_to_ray(z, Ray(s.vertex, run.hi)));
      }
      return {best, 0.0};
    }
    NearestResult operator()(const RadialProductShape& s) const {
      const double r = dist(z, s.vertex);
      double best = std::numeric_limits<double>::infinity();
      if (s.radii.contains(0.0)) best = r;
      if (!s.arcs.empty() && r > 0.0) {
        const double theta = angle_of(z, s.vertex);
        for (const Arc& run : s.arcs.runs()) {
          double gap;
          if (run.width() >= kTwoPi) {
            gap = 0.0;
          } else if (normalize_angle(theta - run.lo) <= run.width()) {
            gap = 0.0;
          } else {
            gap = std::min(angular_distance(theta, run.lo), angular_distance(theta, run.hi));
          }
          const double c = std::cos(gap);
          for (const Interval& iv : s.radii.intervals()) {
            if (iv.hi <= 0.0 && iv.lo <= 0.0) continue;  // {0} handled above
            const double rp = std::clamp(r * c, iv.lo, iv.hi);
            if (!std::isfinite(rp)) continue;
            best = std::min(best, std::sqrt(std::max(0.0, r * r + rp * rp - 2.0 * r * rp * c)));
          }
        }
      } else if (!s.radii.intervals().empty() && r == 0.0) {
        best = std::min(best, s.radii.min());
      }
      return {best, 0.0};
    }
    NearestResult operator()(const HalfPlaneShape&) const { return {std::max(0.0, -z.y), 0.0}; }
    NearestResult operator()(const FullPlaneShape&) const { return {0.0, 0.0}; }
    NearestResult operator()(const RealLineShape&) const { return {std::fabs(z.y), 0.0}; }
    NearestResult operator()(const RealHalfLineShape&) const {
      if (z.x >= 0.0) return {std::fabs(z.y), 0.0};
      return {norm(z), 0.0};
    }
  };
  return std::visit(Visitor{z}, X.shape());
}

// ---------------------------------------------------------------------------
// Starlike scan
// ---------------------------------------------------------------------------

namespace {

std::vector<Point> starlike_witnesses(const PlanarSet& X, Point a, double mesh) {
  struct Visitor {
    Point a;
    double mesh;
    std::vector<Point> operator()(const FiniteSampleShape& s) const { return s.points; }
    std::vector<Point> operator()(const PolygonShape& s) const {
      std::vector<Point> w = s.vertices;
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        const Point p = s.vertices[i];
        const Point q = s.vertices[(i + 1) % s.vertices.size()];
        const int k = std::max(1, static_cast<int>(std::ceil(dist(p, q) / mesh)));
        for (int j = 1; j < k; ++j) w.push_back(p + (static_cast<double>(j) / k) * (q - p));
      }
      return w;
    }
    std::vector<Point> operator()(const StarRegionShape& s) const {
      std::vector<Point> w{s.center};
      const double delta = star_cell_width(s);
      for (std::size_t i = 0; i < star_cell_count(s); ++i) {
        const double base = s.theta0 + delta * static_cast<double>(i);
        const double r0 = star_node_rho(s, i);
        const double r1 = star_node_rho(s, i + 1);
        const int k = std::max(1, static_cast<int>(std::ceil(std::max(r0, r1) * delta / mesh)));
        for (int j = 0; j <= k; ++j) {
          const double f = static_cast<double>(j) / k;
          w.push_back(s.center + (r0 + f * (r1 - r0)) * unit_vector(base + f * delta));
        }
      }
      if (!s.wraps()) {
        for (std::size_t i : {std::size_t{0}, star_cell_count(s)}) {
          const Point node = star_node(s, i);
          const int k = std::max(1, static_cast<int>(std::ceil(dist(s.center, node) / mesh)));
          for (int j = 1; j < k; ++j) {
            w.push_back(s.center + (static_cast<double>(j) / k) * (node - s.center));
          }
        }
      }
      return w;
    }
    std::vector<Point> operator()(const ConeShape& s) const {
      std::vector<Point> w{s.vertex};
      const double scale = std::max(1.0, 2.0 * dist(a, s.vertex));
      for (const Arc& run : s.arcs.runs()) {
        for (double theta : {run.lo, 0.5 * (run.lo + run.hi), run.hi}) {
          for (double r : {0.5, 1.0, 2.0}) w.push_back(s.vertex + r * scale * unit_vector(theta));
        }
      }
      return w;
    }
    std::vector<Point> operator()(const RadialProductShape& s) const {
      std::vector<Point> w;
      if (s.radii.contains(0.0)) w.push_back(s.vertex);
      for (const Interval& iv : s.radii.intervals()) {
        const double hi = std::isfinite(iv.hi) ? iv.hi : 2.0 * iv.lo + 10.0;
        for (const Arc& run : s.arcs.runs()) {
          for (double theta : {run.lo, 0.5 * (run.lo + run.hi), run.hi}) {
            for (double r : {iv.lo, 0.5 * (iv.lo + hi), hi}) {
              if (r > 0.0) w.push_back(s.vertex + r * unit_vector(theta));
            }
          }
        }
      }
      return w;
    }
    std::vector<Point> operator()(const HalfPlaneShape&) const {
      return {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {2.0, 2.0}, {-2.0, 2.0}};
    }
    std::vector<Point> operator()(const FullPlaneShape&) const {
      return {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}, {2.0, 2.0}, {-2.0, -2.0}};
    }
    std::vector<Point> operator()(const RealLineShape&) const {
      return {{1.0, 0.0}, {-1.0, 0.0}, {2.0, 0.0}, {-2.0, 0.0}};
    }
    std::vector<Point> operator()(const RealHalfLineShape&) const {
      return {{1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0}};
    }
  };
  return std::visit(Visitor{a, mesh}, X.shape());
}

}  // namespace

StarlikeResult starlike_check(const PlanarSet& X, Point a, double mesh) {
  if (!(mesh > 0.0)) throw std::invalid_argument("starlike_check: mesh must be positive");
  const std::vector<Point> witnesses = starlike_witnesses(X, a, mesh);
  for (double t = mesh; t < 1.0; t += mesh) {
    for (Point b : witnesses) {
      const Point p = a + t * (b - a);
      if (same_point(p, a)) continue;
      if (!membership(X, p)) return {false, std::make_pair(b, t)};
    }
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Rigid motions
// ---------------------------------------------------------------------------

PlanarSet transformed(const PlanarSet& X, double phi, Point shift) {
  const bool identity = phi == 0.0 && shift.x == 0.0 && shift.y == 0.0;
  auto move = [&](Point p) { return rotate(p, phi) + shift; };

  struct Visitor {
    double phi;
    Point shift;
    bool identity;

    Point move(Point p) const { return rotate(p, phi) + shift; }

    Shape operator()(const FiniteSampleShape& s) const {
      FiniteSampleShape out = s;
      for (Point& p : out.points) p = move(p);
      return out;
    }
    Shape operator()(const PolygonShape& s) const {
      PolygonShape out = s;
      for (Point& p : out.vertices) p = move(p);
      return out;
    }
    Shape operator()(const StarRegionShape& s) const {
      StarRegionShape out = s;
      out.center = move(s.center);
      out.theta0 = normalize_angle(s.theta0 + phi);
      return out;
    }
    Shape operator()(const ConeShape& s) const {
      return ConeShape{move(s.vertex), s.arcs.rotated(phi)};
    }
    Shape operator()(const RadialProductShape& s) const {
      return RadialProductShape{move(s.vertex), s.radii, s.arcs.rotated(phi)};
    }
    Shape operator()(const HalfPlaneShape& s) const {
      if (identity) return s;
      return ConeShape{move({0.0, 0.0}), half_plane_arcs().rotated(phi)};
    }
    Shape operator()(const FullPlaneShape& s) const { return s; }
    Shape operator()(const RealLineShape& s) const {
      if (identity) return s;
      return ConeShape{move({0.0, 0.0}), line_arcs().rotated(phi)};
    }
    Shape operator()(const RealHalfLineShape& s) const {
      if (identity) return s;
      return ConeShape{move({0.0, 0.0}), half_line_arcs().rotated(phi)};
    }
  };

  Shape moved = std::visit(Visitor{phi, shift, identity}, X.shape());
  return PlanarSet(std::move(moved), move(X.marked_point()));
}

AngularSet star_support_arcs(const StarRegionShape& s) {
  // A cell contributes its whole closed arc when either endpoint radius is
  // positive: the limit direction with rho == 0 still meets the closure.
  std::vector<std::pair<double, double>> arcs;
  const std::size_t cells = star_cell_count(s);
  const double width = star_cell_width(s);
  for (std::size_t i = 0; i < cells; ++i) {
    if (star_node_rho(s, i) > 0.0 || star_node_rho(s, i + 1) > 0.0) {
      const double lo = s.theta0 + static_cast<double>(i) * width;
      arcs.push_back({lo, lo + width});
    }
  }
  return AngularSet::from_arcs(arcs);
}

double star_max_rho_in_window(const StarRegionShape& s, double center_angle, double halfwidth) {
  if (halfwidth < 0.0) throw std::invalid_argument("star_max_rho_in_window: halfwidth < 0");
  const std::size_t cells = star_cell_count(s);
  const double width = star_cell_width(s);
  double best = 0.0;
  if (halfwidth >= kPi - kAngleWrapTol) {
    for (std::size_t i = 0; i + 1 <= cells; ++i) best = std::max(best, star_node_rho(s, i));
    best = std::max(best, star_node_rho(s, cells));
    return best;
  }
  const double wlo = normalize_angle(center_angle - halfwidth);
  const double whi = wlo + 2.0 * halfwidth;
  for (std::size_t i = 0; i < cells; ++i) {
    const double lo = normalize_angle(s.theta0 + static_cast<double>(i) * width);
    const double r0 = star_node_rho(s, i);
    const double r1 = star_node_rho(s, i + 1);
    // Shift the cell by whole turns so every overlap with [wlo, whi] is seen.
    for (int k = -1; k <= 1; ++k) {
      const double clo = lo + 2.0 * kPi * static_cast<double>(k);
      const double chi = clo + width;
      const double olo = std::max(clo, wlo);
      const double ohi = std::min(chi, whi);
      if (olo > ohi) continue;
      // The interpolant is linear on the cell, so the maximum over the
      // overlap sits at one of its endpoints.
      for (double u : {olo, ohi}) {
        const double f = width > 0.0 ? (u - clo) / width : 0.0;
        best = std::max(best, r0 + f * (r1 - r0));
      }
    }
  }
  return best;
}

}  // namespace starcone
