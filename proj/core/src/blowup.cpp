#include "starcone/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "starcone/cone_ops.hpp"
#include "starcone/csv.hpp"

namespace starcone {

namespace {

constexpr int kScanResolution = 1024;
constexpr double kWidthFloor = 0.2;
constexpr double kMeshFactor = 1.12;  // sqrt(1 + 1/4) plus rounding headroom

struct RingPlan {
  double dr = 0.0;
  std::vector<double> radii;
};

RingPlan plan_rings(double R, double W, int n) {
  RingPlan plan;
  plan.dr = R * std::sqrt(std::max(W, kWidthFloor) / (2.0 * static_cast<double>(n)));
  const long M = static_cast<long>(std::floor(R / plan.dr + 1e-12));
  plan.radii.reserve(static_cast<std::size_t>(M) + 1);
  for (long m = 1; m <= M; ++m) plan.radii.push_back(static_cast<double>(m) * plan.dr);
  if (R - static_cast<double>(M) * plan.dr > 1e-12) plan.radii.push_back(R);
  return plan;
}

// Points along the covered arcs of one ring, pitch <= dr, endpoints included.
void sample_ring(std::vector<Point>& out, const AngularSet& cover, double r, double dr) {
  if (cover.empty()) return;
  if (cover.full()) {
    const long steps = std::max(1L, static_cast<long>(std::ceil(kTwoPi * r / dr)));
    for (long j = 0; j < steps; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(steps);
      out.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return;
  }
  for (const Arc& run : cover.runs()) {
    const double w = run.width();
    if (w <= 0.0) {
      out.push_back({r * std::cos(run.lo), r * std::sin(run.lo)});
      continue;
    }
    const long segs = std::max(1L, static_cast<long>(std::ceil(w * r / dr)));
    for (long j = 0; j <= segs; ++j) {
      const double theta = run.lo + w * static_cast<double>(j) / static_cast<double>(segs);
      out.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
  }
}

PointSample sample_cone_lattice(const AngularSet& arcs, const RingPlan& plan) {
  PointSample sample;
  sample.points.push_back({0.0, 0.0});
  for (double r : plan.radii) sample_ring(sample.points, arcs, r, plan.dr);
  sample.mesh = kMeshFactor * plan.dr;
  return sample;
}

}  // namespace

PointSample blowup_at_scale(const PlanarSet& X, Point a, double t, double R, int n) {
  if (!(t > 0.0)) throw std::invalid_argument("blowup_at_scale: t must be positive");
  if (!(R > 0.0)) throw std::invalid_argument("blowup_at_scale: R must be positive");
  if (n < 1) throw std::invalid_argument("blowup_at_scale: n must be >= 1");

  if (X.holds<FiniteSampleShape>()) {
    const auto& fs = X.get<FiniteSampleShape>();
    PointSample sample;
    sample.points.push_back({0.0, 0.0});
    for (Point p : fs.points) {
      if (dist(p, a) > R * t + fs.band) continue;
      const Point q{(p.x - a.x) / t, (p.y - a.y) / t};
      if (norm(q) > 1e-12) sample.points.push_back(q);
    }
    sample.mesh = (fs.mesh + fs.band) / t;
    return sample;
  }

  const ConeDescriptor C = con_a(X, a);
  const RingPlan plan = plan_rings(R, C.arcs.total_width(), n);

  PointSample sample;
  sample.points.push_back({0.0, 0.0});
  for (double r : plan.radii) {
    const AngularSet cover = in_set_circle(X, a, r * t, kScanResolution);
    sample_ring(sample.points, cover, r, plan.dr);
  }

  if (X.holds<RadialProductShape>()) {
    // Radial edges of the product land between rings; pin them exactly.
    const auto& rp = X.get<RadialProductShape>();
    for (const Interval& iv : rp.radii.intervals()) {
      for (double v : {iv.lo, iv.hi}) {
        const double r = v / t;
        if (!(r > 0.0) || !std::isfinite(r) || r > R) continue;
        const AngularSet cover = in_set_circle(X, a, v, kScanResolution);
        sample_ring(sample.points, cover, r, plan.dr);
      }
    }
  }

  if (X.holds<PolygonShape>()) {
    // Boundary polylines cover slivers thinner than the ring spacing.
    const auto& poly = X.get<PolygonShape>();
    const std::size_t m = poly.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point p = poly.vertices[i];
      const Point q = poly.vertices[(i + 1) % m];
      const double len = dist(p, q) / t;
      const long segs = std::max(1L, static_cast<long>(std::ceil(len / plan.dr)));
      for (long j = 0; j <= segs; ++j) {
        const double f = static_cast<double>(j) / static_cast<double>(segs);
        const Point z{(p.x + f * (q.x - p.x) - a.x) / t, (p.y + f * (q.y - p.y) - a.y) / t};
        if (norm(z) <= R + 1e-12) sample.points.push_back(z);
      }
    }
  }

  sample.mesh = kMeshFactor * plan.dr;
  return sample;
}

std::string to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::Converges: return "converges";
    case ConvergenceVerdict::Diverges: return "diverges";
    case ConvergenceVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

ConvergenceReport cone_convergence_report(const PlanarSet& X, Point a, const ScaleLadder& ladder,
                                          double R, int n) {
  if (!(R > 0.0)) throw std::invalid_argument("cone_convergence_report: R must be positive");
  if (n < 1) throw std::invalid_argument("cone_convergence_report: n must be >= 1");

  ConvergenceReport report;
  report.radius = R;

  // One lattice serves every scale, so cone fixtures reproduce the reference
  // points exactly.
  const ConeDescriptor C = con_a(X, a);
  const RingPlan plan = plan_rings(R, C.arcs.total_width(), n);
  const PointSample reference = sample_cone_lattice(C.arcs, plan);

  for (double t : ladder.scales()) {
    const PointSample sample = blowup_at_scale(X, a, t, R, n);
    const HausdorffResult d = hausdorff_distance(sample, reference);
    report.rows.push_back({t, d.value, d.error_bound, d.value / R});
  }

  bool conv = true;
  bool div = true;
  const std::size_t m = report.rows.size();
  for (std::size_t i = m >= 3 ? m - 3 : 0; i < m; ++i) {
    const double net = std::max(0.0, report.rows[i].hausdorff - report.rows[i].bound);
    conv = conv && net <= 0.02 * R;
    div = div && net > 0.1 * R;
  }
  report.verdict = conv ? ConvergenceVerdict::Converges
                        : div ? ConvergenceVerdict::Diverges : ConvergenceVerdict::Inconclusive;
  return report;
}

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "t,hausdorff,bound,ratio\n";
  for (const ConvergenceRow& row : report.rows)
    out << csv::number(row.t) << ',' << csv::number(row.hausdorff) << ',' << csv::number(row.bound)
        << ',' << csv::number(row.ratio) << '\n';
  return out.str();
}

ClusterReport sequence_cluster_directions(double theta_odd, double theta_even,
                                          const ScaleLadder& ladder) {
  ClusterReport report;
  report.theta_odd = normalize_angle(theta_odd);
  report.theta_even = normalize_angle(theta_even);
  report.odd_limit = {std::cos(report.theta_odd), std::sin(report.theta_odd)};
  report.even_limit = {std::cos(report.theta_even), std::sin(report.theta_even)};
  report.cluster_count = angular_distance(report.theta_odd, report.theta_even) <= 1e-12 ? 1 : 2;
  report.separation = dist(report.odd_limit, report.even_limit);

  const std::vector<double> scales = ladder.scales();
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const int idx = static_cast<int>(k) + 1;
    const double theta = idx % 2 == 1 ? report.theta_odd : report.theta_even;
    report.rows.push_back({idx, scales[k], scales[k] * std::cos(theta), scales[k] * std::sin(theta),
                           idx % 2});
  }
  return report;
}

std::string to_csv(const ClusterReport& report) {
  std::ostringstream out;
  out << "n,r,x,y,parity\n";
  for (const ClusterRow& row : report.rows)
    out << row.n << ',' << csv::number(row.r) << ',' << csv::number(row.x) << ','
        << csv::number(row.y) << ',' << row.parity << '\n';
  return out.str();
}

}  // namespace starcone
