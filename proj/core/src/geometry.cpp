#include "starcone/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace starcone {

double normalize_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (kTwoPi - r <= kAngleWrapTol) r = 0.0;
  return r;
}

double angular_distance(double alpha, double beta) {
  double d = std::fabs(normalize_angle(alpha) - normalize_angle(beta));
  return std::min(d, kTwoPi - d);
}

double angle_of(Point z, Point a) {
  const Point d = z - a;
  if (d.x == 0.0 && d.y == 0.0) {
    throw std::invalid_argument("angle_of: direction undefined, z coincides with a");
  }
  return normalize_angle(std::atan2(d.y, d.x));
}

double dist_to_ray(Point z, const Ray& ray) {
  const Point u = unit_vector(ray.angle);
  const Point d = z - ray.vertex;
  const double t = dot(d, u);
  if (t <= 0.0) return norm(d);
  return std::fabs(cross(u, d));
}

double dist_to_segment(Point z, Point p, Point q) {
  const Point d = q - p;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dist(z, p);
  const double t = std::clamp(dot(z - p, d) / len2, 0.0, 1.0);
  return dist(z, p + t * d);
}

double directed_hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
  // Exact sup-inf: a point whose partial min already fell below the running
  // sup cannot raise it, so its scan may stop early without changing the
  // result.
  double sup = 0.0;
  for (const Point& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : b) {
      const double dx = p.x - q.x, dy = p.y - q.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        if (best <= sup * sup) break;
      }
    }
    const double d = std::sqrt(best);
    if (d > sup) sup = d;
  }
  return sup;
}

HausdorffResult hausdorff_distance(const PointSample& a, const PointSample& b) {
  if (a.points.empty() || b.points.empty()) {
    throw std::invalid_argument("hausdorff_distance: empty point sample");
  }
  HausdorffResult r;
  r.value = std::max(directed_hausdorff(a.points, b.points),
                     directed_hausdorff(b.points, a.points));
  r.error_bound = a.mesh + b.mesh;
  return r;
}

}  // namespace starcone
