#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace starcone {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angles are kept in [0, 2*pi); values within this of 2*pi wrap to 0.
inline constexpr double kAngleWrapTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Rotation about the origin.
inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double normalize_angle(double theta);

// Circular distance between two directions, in [0, pi].
double angular_distance(double alpha, double beta);

// Direction of z as seen from a, in [0, 2*pi). Throws std::invalid_argument
// when z coincides with a (the direction is undefined there).
double angle_of(Point z, Point a);

// Half line {vertex + t * (cos angle, sin angle), t >= 0}.
struct Ray {
  Point vertex;
  double angle = 0.0;

  Ray() = default;
  Ray(Point v, double a) : vertex(v), angle(normalize_angle(a)) {}
};

// Perpendicular distance when the foot of the perpendicular lies on the ray,
// distance to the vertex otherwise.
double dist_to_ray(Point z, const Ray& ray);

double dist_to_segment(Point z, Point p, Point q);

// Finite point set standing in for a region; mesh is the covering radius of
// the points over the region they were drawn from (0 = the set is exact).
struct PointSample {
  std::vector<Point> points;
  double mesh = 0.0;
};

struct HausdorffResult {
  double value = 0.0;
  // Sampling slack: |value - true distance| <= error_bound when both samples
  // cover their regions within their recorded meshes.
  double error_bound = 0.0;
};

// Exact on the given point sets. Throws std::invalid_argument on empty input.
HausdorffResult hausdorff_distance(const PointSample& a, const PointSample& b);

// One-sided sup-inf distance from a to b, exact on the point sets.
double directed_hausdorff(const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace starcone
