#include "starcone/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace starcone {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("fixture parameter is not a number: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("fixture parameter is not a number: " + s);
  return v;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](Point a, Point b) { return a == b; }),
            pts.end());
  if (pts.size() < 3) return pts;
  // Strict turns only: collinear points are dropped so every hull vertex is
  // a corner.
  std::vector<Point> hull;
  auto turns_left = [&hull](Point p) {
    const Point u{hull.back().x - hull[hull.size() - 2].x,
                  hull.back().y - hull[hull.size() - 2].y};
    const Point v{p.x - hull[hull.size() - 2].x, p.y - hull[hull.size() - 2].y};
    return cross(u, v) > 0.0;
  };
  for (Point p : pts) {
    while (hull.size() >= 2 && !turns_left(p)) hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (hull.size() >= lower && !turns_left(pts[i])) hull.pop_back();
    hull.push_back(pts[i]);
  }
  hull.pop_back();
  return hull;
}

PlanarSet cone_at_origin(AngularSet arcs) {
  return PlanarSet(ConeShape{{0.0, 0.0}, std::move(arcs)}, {0.0, 0.0});
}

ConvexClass class_of_width(double w) {
  if (w < kPi - kAngleWrapTol) return ConvexClass::Sector;
  if (w <= kPi + kAngleWrapTol) return ConvexClass::HalfPlane;
  return ConvexClass::Plane;
}

Fixture parabola_star_region(const std::string& name) {
  constexpr int kCells = 4096;
  std::vector<double> rho;
  rho.reserve(kCells + 1);
  for (int j = 0; j <= kCells; ++j) {
    const double theta = (kPi / 2.0) * static_cast<double>(j) / kCells;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    // Region x^2 <= y <= 1, x <= 1: boundary radius is the nearest of the
    // parabola, the right wall, and the roof. IEEE infinities absorb the
    // endpoint divisions.
    const double bound = std::min({s / (c * c), 1.0 / c, 1.0 / s});
    rho.push_back(std::isfinite(bound) ? bound : 0.0);
  }
  StarRegionShape shape{{0.0, 0.0}, 0.0, kPi / 2.0, std::move(rho), 0.0};
  PlanarSet set(std::move(shape), {0.0, 0.0});
  return {name, std::move(set), true, AngularSet::from_arcs({{0.0, kPi / 2.0}}),
          ConvexClass::Sector};
}

Fixture convex_polygon_at_vertex(const std::string& name, std::uint64_t seed) {
  while (true) {
    std::mt19937_64 rng(seed);
    std::vector<Point> pts{{0.0, 0.0}};
    for (int i = 0; i < 10; ++i) {
      const double ang = kTwoPi * uniform01(rng);
      const double rad = 0.7 * std::sqrt(uniform01(rng));
      pts.push_back({1.2 + rad * std::cos(ang), 0.9 + rad * std::sin(ang)});
    }
    std::vector<Point> hull = convex_hull(std::move(pts));
    bool has_origin = false;
    bool far_enough = true;
    for (Point p : hull) {
      if (p.x == 0.0 && p.y == 0.0)
        has_origin = true;
      else
        far_enough = far_enough && norm(p) >= 0.74;
    }
    if (hull.size() >= 3 && has_origin && far_enough) {
      PlanarSet set(PolygonShape{std::move(hull)}, {0.0, 0.0});
      return {name, std::move(set), true, std::nullopt, ConvexClass::Sector};
    }
    seed += 1000003;
  }
}

Fixture geometric_radial(const std::string& name, double q, double c) {
  if (!(q > 0.0 && q < c && c < 1.0))
    throw std::invalid_argument("geometric-radial needs 0 < q < c < 1");
  std::vector<std::pair<double, double>> pieces{{0.0, 0.0}};
  double qk = 1.0;
  for (int k = 0; k <= 40; ++k, qk *= q) pieces.push_back({qk * q, c * qk});
  RadialProductShape shape{{0.0, 0.0}, IntervalSet::from_intervals(std::move(pieces)),
                           AngularSet::from_arcs({{0.0, 0.0}})};
  PlanarSet set(std::move(shape), {0.0, 0.0});
  return {name, std::move(set), false, AngularSet::from_arcs({{0.0, 0.0}}), ConvexClass::Ray};
}

}  // namespace

Fixture make_fixture(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  const std::string& base = parts[0];
  const std::size_t nargs = parts.size() - 1;
  auto arg = [&parts](std::size_t i) { return to_double(parts[i + 1]); };

  if (base == "real-line" && nargs == 0) {
    return {spec, PlanarSet(RealLineShape{}, {0.0, 0.0}), true,
            AngularSet::from_arcs({{0.0, 0.0}, {kPi, kPi}}), ConvexClass::Line};
  }
  if (base == "real-halfline" && nargs == 0) {
    return {spec, PlanarSet(RealHalfLineShape{}, {0.0, 0.0}), true,
            AngularSet::from_arcs({{0.0, 0.0}}), ConvexClass::Ray};
  }
  if (base == "full-plane" && nargs == 0) {
    return {spec, PlanarSet(FullPlaneShape{}, {0.0, 0.0}), true, AngularSet::full_circle(),
            ConvexClass::Plane};
  }
  if (base == "half-plane" && nargs == 0) {
    return {spec, PlanarSet(HalfPlaneShape{}, {0.0, 0.0}), true,
            AngularSet::from_arcs({{0.0, kPi}}), ConvexClass::HalfPlane};
  }
  if (base == "sector" && (nargs == 0 || nargs == 2)) {
    const double lo = nargs == 2 ? arg(0) : 0.3;
    const double hi = nargs == 2 ? arg(1) : 1.2;
    if (!(hi > lo) || !(hi - lo < kTwoPi))
      throw std::invalid_argument("sector needs lo < hi with width below a full turn");
    AngularSet arcs = AngularSet::from_arcs({{lo, hi}});
    Fixture f{spec, cone_at_origin(arcs), true, arcs, class_of_width(hi - lo)};
    return f;
  }
  if (base == "ray" && nargs <= 1) {
    const double angle = nargs == 1 ? arg(0) : 0.0;
    AngularSet arcs = AngularSet::from_arcs({{angle, angle}});
    return {spec, cone_at_origin(arcs), true, arcs, ConvexClass::Ray};
  }
  if (base == "two-rays" && nargs == 0) {
    AngularSet arcs = AngularSet::from_arcs({{0.0, 0.0}, {kPi / 2.0, kPi / 2.0}});
    return {spec, cone_at_origin(arcs), true, arcs, ConvexClass::Sector};
  }
  if (base == "segment" && nargs == 0) {
    RadialProductShape shape{{0.0, 0.0}, IntervalSet::from_intervals({{0.0, 1.0}}),
                             AngularSet::from_arcs({{0.0, 0.0}})};
    return {spec, PlanarSet(std::move(shape), {0.0, 0.0}), true,
            AngularSet::from_arcs({{0.0, 0.0}}), ConvexClass::Ray};
  }
  if (base == "square-at-corner" && nargs == 0) {
    PolygonShape shape{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
    return {spec, PlanarSet(std::move(shape), {0.0, 0.0}), true,
            AngularSet::from_arcs({{0.0, kPi / 2.0}}), ConvexClass::Sector};
  }
  if (base == "convex-polygon-at-vertex" && nargs <= 1) {
    const std::uint64_t seed = nargs == 1 ? static_cast<std::uint64_t>(arg(0)) : 7;
    return convex_polygon_at_vertex(spec, seed);
  }
  if (base == "parabola-star-region" && nargs == 0) return parabola_star_region(spec);
  if (base == "annulus" && nargs == 0) {
    RadialProductShape shape{{0.0, 0.0}, IntervalSet::from_intervals({{0.0, 0.0}, {0.5, 1.0}}),
                             AngularSet::full_circle()};
    return {spec, PlanarSet(std::move(shape), {0.0, 0.0}), false, AngularSet::full_circle(),
            ConvexClass::Plane};
  }
  if (base == "geometric-radial" && (nargs == 0 || nargs == 2)) {
    const double q = nargs == 2 ? arg(0) : 0.25;
    const double c = nargs == 2 ? arg(1) : 0.5;
    return geometric_radial(spec, q, c);
  }
  throw std::invalid_argument("unknown fixture: " + spec);
}

std::vector<std::string> fixture_names() {
  return {"real-line",        "real-halfline",
          "full-plane",       "half-plane",
          "sector",           "ray",
          "two-rays",         "segment",
          "square-at-corner", "convex-polygon-at-vertex",
          "parabola-star-region", "annulus",
          "geometric-radial"};
}

std::vector<std::string> starlike_fixture_names() {
  return {"real-line",        "real-halfline",
          "full-plane",       "half-plane",
          "sector",           "square-at-corner",
          "convex-polygon-at-vertex", "parabola-star-region",
          "two-rays"};
}

PlanarSet densified_sample(const PlanarSet& X, double mesh, double window_radius) {
  if (!(mesh > 0.0) || !(window_radius > 0.0))
    throw std::invalid_argument("densified_sample: mesh and window_radius must be positive");
  const Point a = X.marked_point();
  const double g = mesh / std::sqrt(2.0);
  const long steps = static_cast<long>(std::floor(window_radius / g));
  std::vector<Point> pts;
  for (long i = -steps; i <= steps; ++i) {
    for (long j = -steps; j <= steps; ++j) {
      const Point p{a.x + g * static_cast<double>(i), a.y + g * static_cast<double>(j)};
      if (dist(p, a) <= window_radius && membership(X, p)) pts.push_back(p);
    }
  }
  return PlanarSet(FiniteSampleShape{std::move(pts), mesh, mesh}, a);
}

std::vector<Point> random_convex_polygon(std::uint64_t seed) {
  while (true) {
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(12);
    for (int i = 0; i < 12; ++i) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      pts.push_back({x, y});
    }
    std::vector<Point> hull = convex_hull(std::move(pts));
    if (hull.size() >= 3) return hull;
    seed += 1000003;
  }
}

}  // namespace starcone
