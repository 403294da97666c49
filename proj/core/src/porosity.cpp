#include "starcone/porosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "starcone/csv.hpp"

namespace starcone {

namespace {

constexpr double kPointTol = 1e-12;
constexpr double kEdgeTol = 1e-9;
constexpr int kStepsPerOctave = 8;
constexpr int kScanResolution = 512;

bool same_point(Point a, Point b) { return dist(a, b) <= kPointTol; }

using Pieces = std::vector<std::pair<double, double>>;

IntervalSet ray_from_zero() { return IntervalSet::from_intervals({{0.0, std::numeric_limits<double>::infinity()}}); }

IntervalSet just_zero() { return IntervalSet::from_intervals({{0.0, 0.0}}); }

IntervalSet with_zero(const IntervalSet& radii) {
  Pieces pieces{{0.0, 0.0}};
  for (const Interval& iv : radii.intervals()) pieces.push_back({iv.lo, iv.hi});
  return IntervalSet::from_intervals(std::move(pieces));
}

bool window_meets(const AngularSet& arcs, double c, double w) {
  return arcs.intersects_window(c, w);
}

// r = 0 degenerates to the marked point itself, which is always in the
// sector.
bool circle_meets_window(const PlanarSet& X, Point a, double r, double c, double w) {
  if (r <= 0.0) return membership(X, a);
  return in_set_circle(X, a, r, kScanResolution).intersects_window(c, w);
}

RadiiResult polygon_radii(const PlanarSet& X, const PolygonShape& s, Point a, double c, double w) {
  // Membership of r in the radii set flips only where the circle meets a
  // vertex, touches an edge, or crosses an edge on a window boundary ray.
  std::vector<double> crit{0.0};
  const std::size_t n = s.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = s.vertices[i];
    const Point q = s.vertices[(i + 1) % n];
    crit.push_back(dist(a, p));
    const Point u{q.x - p.x, q.y - p.y};
    const double uu = dot(u, u);
    if (uu > 0.0) {
      const double t = dot({a.x - p.x, a.y - p.y}, u) / uu;
      if (t >= 0.0 && t <= 1.0) crit.push_back(dist(a, {p.x + t * u.x, p.y + t * u.y}));
    }
    if (w < kPi - kAngleWrapTol) {
      for (double d : {c - w, c + w}) {
        const Point e{std::cos(d), std::sin(d)};
        const double denom = cross(u, e);
        if (std::fabs(denom) <= 1e-15) continue;  // parallel, vertices cover it
        const Point ap{a.x - p.x, a.y - p.y};
        const double t = cross(ap, e) / denom;
        const double r = cross(ap, u) / denom;
        if (t >= 0.0 && t <= 1.0 && r >= 0.0) crit.push_back(r);
      }
    }
  }
  std::sort(crit.begin(), crit.end());
  std::vector<double> radii;
  for (double r : crit)
    if (radii.empty() || r - radii.back() > 1e-12 * std::max(1.0, r)) radii.push_back(r);

  Pieces pieces;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (circle_meets_window(X, a, radii[i], c, w)) pieces.push_back({radii[i], radii[i]});
    if (i + 1 < radii.size()) {
      const double mid = 0.5 * (radii[i] + radii[i + 1]);
      if (circle_meets_window(X, a, mid, c, w)) pieces.push_back({radii[i], radii[i + 1]});
    }
  }
  return {IntervalSet::from_intervals(std::move(pieces)), 0.0};
}

RadiiResult finite_radii(const FiniteSampleShape& s, Point a, const Ray& l, double beta,
                         double resolution) {
  Pieces pieces{{0.0, 0.0}};
  for (Point p : s.points) {
    if (same_point(p, a)) continue;
    if (dist_to_ray(p, l) <= beta * dist(p, a)) pieces.push_back({dist(p, a), dist(p, a)});
  }
  const double merge = std::max(resolution, 2.0 * s.mesh);
  return {IntervalSet::from_intervals(std::move(pieces), merge), s.mesh};
}

RadiiResult scanned_radii(const PlanarSet& X, Point a, double c, double w, double resolution,
                          double r_hi) {
  // Cap the probe count; a coarser pitch is recorded in the mesh.
  const double pitch = std::max(resolution, r_hi / 100000.0);
  Pieces pieces;
  if (membership(X, a)) pieces.push_back({0.0, 0.0});
  const long steps = static_cast<long>(std::ceil(r_hi / pitch));
  for (long k = 1; k <= steps; ++k) {
    const double r = static_cast<double>(k) * pitch;
    if (circle_meets_window(X, a, r, c, w)) pieces.push_back({r, r});
  }
  return {IntervalSet::from_intervals(std::move(pieces), 1.001 * pitch), pitch};
}

}  // namespace

double longest_gap(double x, double h, const IntervalSet& A) {
  if (!(h > 0.0)) throw std::invalid_argument("longest_gap: h must be positive");
  const double lo = x;
  const double hi = x + h;
  double cursor = lo;
  double best = 0.0;
  for (const Interval& iv : A.intervals()) {
    if (iv.hi <= lo) continue;
    if (iv.lo >= hi) break;
    best = std::max(best, std::min(iv.lo, hi) - cursor);
    cursor = std::max(cursor, std::min(iv.hi, hi));
    if (cursor >= hi) break;
  }
  return std::max(best, hi - cursor);
}

PorosityEstimate porosity_estimate(const IntervalSet& A, double x, const ScaleLadder& ladder,
                                   int window, double h_floor) {
  if (window < 1) throw std::invalid_argument("porosity_estimate: window must be >= 1");
  PorosityEstimate est;
  est.window = window;
  est.h_floor = h_floor;
  const double sub = std::pow(ladder.ratio, 1.0 / kStepsPerOctave);
  for (double h0 : ladder.scales()) {
    double h = h0;
    for (int j = 0; j < kStepsPerOctave; ++j, h *= sub) {
      const double gap = longest_gap(x, h, A);
      est.rows.push_back({h, gap, gap / h});
    }
  }
  std::vector<std::size_t> valid;
  for (std::size_t i = 0; i < est.rows.size(); ++i)
    if (est.rows[i].h >= h_floor) valid.push_back(i);
  const std::size_t take = std::min<std::size_t>(valid.size(),
                                                 static_cast<std::size_t>(window) * kStepsPerOctave);
  for (std::size_t k = valid.size() - take; k < valid.size(); ++k)
    est.estimate = std::max(est.estimate, est.rows[valid[k]].ratio);
  return est;
}

std::string to_csv(const PorosityEstimate& est) {
  std::ostringstream out;
  out << "h,gap,ratio\n";
  for (const PorosityRow& row : est.rows)
    out << csv::number(row.h) << ',' << csv::number(row.gap) << ',' << csv::number(row.ratio)
        << '\n';
  return out.str();
}

RadiiResult radii_set(const PlanarSet& X, Point a, const Ray& l, double beta, double resolution) {
  if (!(beta > 0.0)) throw std::invalid_argument("radii_set: beta must be positive");
  if (!(resolution > 0.0)) throw std::invalid_argument("radii_set: resolution must be positive");
  if (!same_point(l.vertex, a)) throw std::invalid_argument("radii_set: ray must start at a");
  const double c = l.angle;
  const double w = beta >= 1.0 ? kPi : std::asin(beta);

  struct Visitor {
    const PlanarSet& X;
    Point a;
    const Ray& l;
    double beta, c, w, resolution;

    RadiiResult operator()(const FiniteSampleShape& s) const {
      return finite_radii(s, a, l, beta, resolution);
    }
    RadiiResult operator()(const PolygonShape& s) const { return polygon_radii(X, s, a, c, w); }
    RadiiResult operator()(const StarRegionShape& s) const {
      if (!same_point(a, s.center)) {
        const double r_hi = dist(a, s.center) + star_max_rho_in_window(s, 0.0, kPi) + resolution;
        return scanned_radii(X, a, c, w, resolution, r_hi);
      }
      const double m = star_max_rho_in_window(s, c, w);
      return {m > 0.0 ? IntervalSet::from_intervals({{0.0, m}}) : just_zero(), 0.0};
    }
    RadiiResult operator()(const ConeShape& s) const {
      if (!same_point(a, s.vertex)) {
        const double r_hi = 64.0 * std::max(1.0, dist(a, s.vertex));
        return scanned_radii(X, a, c, w, resolution, r_hi);
      }
      if (s.arcs.empty() || !window_meets(s.arcs, c, w)) return {just_zero(), 0.0};
      return {ray_from_zero(), 0.0};
    }
    RadiiResult operator()(const RadialProductShape& s) const {
      if (!same_point(a, s.vertex)) {
        const double r_hi = std::isinf(s.radii.max())
                                ? 64.0 * std::max(1.0, dist(a, s.vertex))
                                : dist(a, s.vertex) + s.radii.max() + resolution;
        return scanned_radii(X, a, c, w, resolution, r_hi);
      }
      if (s.arcs.empty() || !window_meets(s.arcs, c, w)) return {just_zero(), 0.0};
      return {with_zero(s.radii), 0.0};
    }
    RadiiResult operator()(const HalfPlaneShape&) const {
      if (w >= kPi - kAngleWrapTol) return {ray_from_zero(), 0.0};
      const bool upward = window_meets(AngularSet::from_arcs({{0.0, kPi}}), c, w);
      if (a.y <= kEdgeTol) return {upward ? ray_from_zero() : just_zero(), 0.0};
      if (upward) return {ray_from_zero(), 0.0};
      // Window aims fully below the horizon: rays exit through y = 0.
      const double m = a.y / std::min(std::fabs(std::sin(c - w)), std::fabs(std::sin(c + w)));
      return {IntervalSet::from_intervals({{0.0, m}}), 0.0};
    }
    RadiiResult operator()(const FullPlaneShape&) const { return {ray_from_zero(), 0.0}; }
    RadiiResult operator()(const RealLineShape&) const {
      const bool hits =
          angular_distance(c, 0.0) <= w + kAngleWrapTol || angular_distance(c, kPi) <= w + kAngleWrapTol;
      return {hits ? ray_from_zero() : just_zero(), 0.0};
    }
    RadiiResult operator()(const RealHalfLineShape&) const {
      Pieces pieces{{0.0, 0.0}};
      if (angular_distance(c, 0.0) <= w + kAngleWrapTol)
        pieces.push_back({0.0, std::numeric_limits<double>::infinity()});
      if (a.x > kEdgeTol && angular_distance(c, kPi) <= w + kAngleWrapTol)
        pieces.push_back({0.0, a.x});
      return {IntervalSet::from_intervals(std::move(pieces)), 0.0};
    }
  };
  return std::visit(Visitor{X, a, l, beta, c, w, resolution}, X.shape());
}

std::string to_string(DichotomyClass c) {
  switch (c) {
    case DichotomyClass::LimitZero: return "limit-zero";
    case DichotomyClass::LimitOne: return "limit-one";
    case DichotomyClass::Violation: return "violation";
  }
  return "unknown";
}

DichotomyVerdict dichotomy_probe(const PlanarSet& X, Point a, const Ray& l,
                                 const std::vector<double>& betas, const ScaleLadder& h_ladder,
                                 double resolution) {
  if (betas.size() < 3)
    throw std::invalid_argument("dichotomy_probe: need at least 3 beta values");
  DichotomyVerdict verdict;
  for (double beta : betas) {
    if (!(beta > 0.0)) throw std::invalid_argument("dichotomy_probe: beta must be positive");
    const RadiiResult rr = radii_set(X, a, l, beta, resolution);
    // Gap windows stay inside the beta-scaled structure near 0.
    const ScaleLadder hb{h_ladder.t0 * beta / 4.0, h_ladder.ratio, h_ladder.depth};
    const PorosityEstimate est = porosity_estimate(rr.radii, 0.0, hb, 4, 40.0 * rr.mesh);
    verdict.rows.push_back({beta, est.estimate});
  }
  bool zero = true;
  bool one = true;
  for (std::size_t i = verdict.rows.size() - 3; i < verdict.rows.size(); ++i) {
    zero = zero && verdict.rows[i].estimate <= 0.1;
    one = one && verdict.rows[i].estimate >= 0.9;
  }
  if (zero) {
    verdict.classification = DichotomyClass::LimitZero;
    verdict.value = 0.0;
  } else if (one) {
    verdict.classification = DichotomyClass::LimitOne;
    verdict.value = 1.0;
  } else {
    verdict.classification = DichotomyClass::Violation;
    verdict.value = verdict.rows.back().estimate;
  }
  return verdict;
}

std::vector<double> default_beta_ladder(int depth) {
  if (depth < 1) throw std::invalid_argument("default_beta_ladder: depth must be >= 1");
  std::vector<double> betas;
  double b = 0.5;
  for (int j = 0; j < depth; ++j, b *= 0.5) betas.push_back(b);
  return betas;
}

std::string to_csv(const DichotomyVerdict& verdict) {
  std::ostringstream out;
  out << "beta,estimate\n";
  for (const DichotomyRow& row : verdict.rows)
    out << csv::number(row.beta) << ',' << csv::number(row.estimate) << '\n';
  return out.str();
}

}  // namespace starcone
