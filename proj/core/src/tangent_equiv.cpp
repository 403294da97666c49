#include "starcone/tangent_equiv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "starcone/csv.hpp"

namespace starcone {

namespace {

constexpr double kPointTol = 1e-12;
constexpr double kRatioEq = 0.05;
constexpr double kRatioNe = 0.2;

}  // namespace

EpsilonValue epsilon_one_sided(double t, const PlanarSet& Z, const PlanarSet& Y, Point a, int n) {
  PointSample sphere;
  try {
    sphere = sphere_sample(Z, a, t, n);
  } catch (const std::runtime_error&) {
    // Finite samples refuse an empty band; read it as an empty slice.
    return {0.0, 0.0, true};
  }
  if (sphere.points.empty()) return {0.0, 0.0, true};
  double sup = 0.0;
  double worst_bound = 0.0;
  for (Point z : sphere.points) {
    const NearestResult d = nearest_distance(Y, z);
    sup = std::max(sup, d.value);
    worst_bound = std::max(worst_bound, d.error_bound);
  }
  // The defect is 1-Lipschitz in the probe point, so the sphere mesh enters
  // additively.
  return {sup, sphere.mesh + worst_bound, false};
}

EpsilonValue epsilon_sym(double t, const PlanarSet& Z, const PlanarSet& Y, Point a, int n) {
  const EpsilonValue zy = epsilon_one_sided(t, Z, Y, a, n);
  const EpsilonValue yz = epsilon_one_sided(t, Y, Z, a, n);
  return {std::max(zy.value, yz.value), std::max(zy.error_bound, yz.error_bound),
          zy.empty_sphere || yz.empty_sphere};
}

std::string to_string(EquivVerdict v) {
  switch (v) {
    case EquivVerdict::Equivalent: return "equivalent";
    case EquivVerdict::NotEquivalent: return "not-equivalent";
    case EquivVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

EquivalenceReport strong_equiv_probe(const PlanarSet& Z, const PlanarSet& Y, Point a,
                                     const ScaleLadder& ladder, int n) {
  if (ladder.depth < 4)
    throw std::invalid_argument("strong_equiv_probe: ladder depth must be at least 4");
  if (dist(a, Z.marked_point()) > kPointTol || dist(a, Y.marked_point()) > kPointTol)
    throw std::invalid_argument("strong_equiv_probe: a must be the marked point of both sets");

  EquivalenceReport report;
  for (double t : ladder.scales()) {
    const EpsilonValue zy = epsilon_one_sided(t, Z, Y, a, n);
    const EpsilonValue yz = epsilon_one_sided(t, Y, Z, a, n);
    EquivRow row;
    row.t = t;
    row.eps_zy = zy.value;
    row.eps_yz = yz.value;
    row.eps = std::max(zy.value, yz.value);
    row.ratio = row.eps / t;
    row.bound = std::max(zy.error_bound, yz.error_bound);
    row.empty_sphere = zy.empty_sphere || yz.empty_sphere;
    report.rows.push_back(row);
  }

  const std::size_t m = report.rows.size();
  bool eq = true;
  bool ne = true;
  for (std::size_t i = m - 3; i < m; ++i) {
    const EquivRow& row = report.rows[i];
    eq = eq && row.ratio < kRatioEq && row.bound / row.t < kRatioEq / 2.0;
    ne = ne && row.ratio > kRatioNe;
  }
  report.verdict =
      eq ? EquivVerdict::Equivalent : ne ? EquivVerdict::NotEquivalent : EquivVerdict::Inconclusive;

  // Fit only where the signal clears its own noise floor.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int k = 0;
  for (const EquivRow& row : report.rows) {
    if (row.eps <= row.bound || row.ratio <= 0.0) continue;
    const double x = std::log(row.t);
    const double y = std::log(row.ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  const double denom = k * sxx - sx * sx;
  if (k >= 2 && std::fabs(denom) > 0.0) report.slope = (k * sxy - sx * sy) / denom;
  return report;
}

std::string to_csv(const EquivalenceReport& report) {
  std::ostringstream out;
  out << "t,eps_zy,eps_yz,eps,ratio,bound,empty_sphere\n";
  for (const EquivRow& row : report.rows) {
    out << csv::number(row.t) << ',' << csv::number(row.eps_zy) << ',' << csv::number(row.eps_yz)
        << ',' << csv::number(row.eps) << ',' << csv::number(row.ratio) << ','
        << csv::number(row.bound) << ',' << (row.empty_sphere ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace starcone
