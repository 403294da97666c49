#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "starcone/fixtures.hpp"
#include "starcone/planar_set.hpp"

using namespace starcone;

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Point polar(Point a, double r, double theta) {
  return {a.x + r * std::cos(theta), a.y + r * std::sin(theta)};
}

// Membership probed around a circle must agree with in_set_circle except
// within edge_slack of a run boundary.
void check_circle_agreement(const PlanarSet& X, Point a, double r, double edge_slack) {
  const AngularSet arcs = in_set_circle(X, a, r);
  for (int k = 0; k < 720; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / 720.0;
    const bool member = membership(X, polar(a, r, theta));
    const bool covered = arcs.contains(theta, 1e-9);
    if (member == covered) continue;
    double near = std::numeric_limits<double>::infinity();
    for (const Arc& run : arcs.runs()) {
      near = std::min(near, angular_distance(theta, run.lo));
      near = std::min(near, angular_distance(theta, run.hi));
    }
    INFO("theta ", theta, " r ", r, " member ", member, " covered ", covered);
    CHECK(near <= edge_slack);
  }
}

}  // namespace

TEST_CASE("construction validates that the marked point belongs to the set") {
  const std::vector<Point> square{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  CHECK_NOTHROW(PlanarSet(PolygonShape{square}, {0.5, 0.5}));
  CHECK_THROWS_AS(PlanarSet(PolygonShape{square}, {5.0, 5.0}), std::invalid_argument);
  const Fixture ann = make_fixture("annulus");
  CHECK_THROWS_AS(PlanarSet(ann.set.shape(), {0.3, 0.0}), std::invalid_argument);
  CHECK_NOTHROW(PlanarSet(ann.set.shape(), {0.75, 0.0}));
}

TEST_CASE("membership on the catalog shapes") {
  const Fixture sq = make_fixture("square-at-corner");
  CHECK(membership(sq.set, {0.5, 0.5}));
  CHECK(membership(sq.set, {1.0, 1.0}));
  CHECK_FALSE(membership(sq.set, {1.1, 0.5}));

  const Fixture sec = make_fixture("sector");
  CHECK(membership(sec.set, polar({0, 0}, 2.0, 0.7)));
  CHECK_FALSE(membership(sec.set, polar({0, 0}, 2.0, 2.0)));
  CHECK(membership(sec.set, {0.0, 0.0}));

  const Fixture ann = make_fixture("annulus");
  CHECK(membership(ann.set, {0.0, 0.0}));
  CHECK(membership(ann.set, polar({0, 0}, 0.75, 1.3)));
  CHECK_FALSE(membership(ann.set, polar({0, 0}, 0.3, 1.3)));

  const Fixture par = make_fixture("parabola-star-region");
  CHECK(membership(par.set, {0.5, 0.5}));
  CHECK_FALSE(membership(par.set, {0.8, 0.2}));

  const Fixture hp = make_fixture("half-plane");
  CHECK(membership(hp.set, {3.0, 0.1}));
  CHECK(membership(hp.set, {-3.0, 0.0}));
  CHECK_FALSE(membership(hp.set, {0.0, -0.1}));
}

TEST_CASE("in_set_circle agrees with membership probes on exact anchors") {
  check_circle_agreement(make_fixture("square-at-corner").set, {0, 0}, 0.4, 2e-3);
  check_circle_agreement(make_fixture("square-at-corner").set, {0, 0}, 1.2, 2e-3);
  check_circle_agreement(make_fixture("sector").set, {0, 0}, 2.0, 2e-3);
  check_circle_agreement(make_fixture("annulus").set, {0, 0}, 0.75, 2e-3);
  check_circle_agreement(make_fixture("parabola-star-region").set, {0, 0}, 0.5, 2e-3);
  check_circle_agreement(make_fixture("two-rays").set, {0, 0}, 1.0, 2e-3);
}

TEST_CASE("in_set_circle agrees with membership probes off the anchor point") {
  const Fixture sq = make_fixture("square-at-corner");
  check_circle_agreement(sq.set, {0.5, 0.5}, 0.6, 3e-2);
  const Fixture ann = make_fixture("annulus");
  check_circle_agreement(ann.set, {0.75, 0.0}, 0.4, 3e-2);
}

TEST_CASE("in_set_circle misses give the empty set and finite samples throw") {
  const Fixture ann = make_fixture("annulus");
  CHECK(in_set_circle(ann.set, {0, 0}, 0.3).empty());
  const PlanarSet fin(FiniteSampleShape{{{0.0, 0.0}, {1.0, 0.0}}, 0.0, 0.0}, {0.0, 0.0});
  CHECK_THROWS_AS(in_set_circle(fin, {0, 0}, 1.0), std::runtime_error);
}

TEST_CASE("sphere_sample points sit on the sphere within mesh") {
  const Fixture sq = make_fixture("square-at-corner");
  const PointSample s = sphere_sample(sq.set, {0, 0}, 0.5, 256);
  REQUIRE(!s.points.empty());
  for (const Point& p : s.points) {
    CHECK(std::abs(dist(p, {0.0, 0.0}) - 0.5) <= 1e-9);
    CHECK(membership(sq.set, p));
  }
  CHECK(s.mesh <= kTwoPi * 0.5 / 256.0 + 1e-12);
  CHECK_THROWS_AS(sphere_sample(sq.set, {0, 0}, -1.0, 16), std::invalid_argument);
}

TEST_CASE("sphere_sample band convention for finite samples") {
  const PlanarSet fin(FiniteSampleShape{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, 0.0, 0.05},
                      {0.0, 0.0});
  const PointSample s = sphere_sample(fin, {0, 0}, 1.02, 16);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].x == 1.0);
  CHECK_THROWS_AS(sphere_sample(fin, {0, 0}, 1.5, 16), std::runtime_error);
}

TEST_CASE("star region helpers: support arcs and windowed max radius") {
  const Fixture par = make_fixture("parabola-star-region");
  const auto* star = std::get_if<StarRegionShape>(&par.set.shape());
  REQUIRE(star != nullptr);
  const AngularSet support = star_support_arcs(*star);
  const auto runs = support.runs();
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].lo == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(runs[0].hi == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  // The radial profile peaks at the diagonal with value sqrt(2).
  CHECK(star_max_rho_in_window(*star, kPi / 4.0, 0.1) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(star_max_rho_in_window(*star, 5.0, kPi) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(star_max_rho_in_window(*star, 3.0, 0.5) == 0.0);
  CHECK_THROWS_AS(star_max_rho_in_window(*star, 0.0, -0.1), std::invalid_argument);
}

TEST_CASE("nearest_distance known values and the bound property") {
  const Fixture ann = make_fixture("annulus");
  CHECK(nearest_distance(ann.set, {0.3, 0.0}).value == doctest::Approx(0.2));
  CHECK(nearest_distance(ann.set, {0.75, 0.0}).value == 0.0);
  CHECK(nearest_distance(ann.set, {2.0, 0.0}).value == doctest::Approx(1.0));

  const Fixture sq = make_fixture("square-at-corner");
  CHECK(nearest_distance(sq.set, {2.0, 0.5}).value == doctest::Approx(1.0));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Point z{(uniform01(rng) - 0.5) * 4.0, (uniform01(rng) - 0.5) * 4.0};
    const NearestResult nr = nearest_distance(sq.set, z);
    CHECK(nr.value >= 0.0);
    if (membership(sq.set, z)) CHECK(nr.value <= nr.error_bound + 1e-12);
  }
}

TEST_CASE("starlike_check accepts stars and rejects the annulus") {
  CHECK(starlike_check(make_fixture("sector").set, {0, 0}, 0.01).starlike);
  CHECK(starlike_check(make_fixture("square-at-corner").set, {0, 0}, 0.01).starlike);
  CHECK(starlike_check(make_fixture("parabola-star-region").set, {0, 0}, 0.01).starlike);
  CHECK(starlike_check(make_fixture("two-rays").set, {0, 0}, 0.01).starlike);
  const StarlikeResult ann = starlike_check(make_fixture("annulus").set, {0, 0}, 0.01);
  CHECK_FALSE(ann.starlike);
  REQUIRE(ann.counterexample.has_value());
  const auto [b, t] = *ann.counterexample;
  const Point witness{b.x * t, b.y * t};
  CHECK_FALSE(membership(make_fixture("annulus").set, witness));
  CHECK_FALSE(starlike_check(make_fixture("geometric-radial").set, {0, 0}, 0.001).starlike);
}

TEST_CASE("transformed preserves membership under the motion") {
  const Fixture sq = make_fixture("square-at-corner");
  const double phi = 0.83;
  const Point shift{1.25, -2.5};
  const PlanarSet moved = transformed(sq.set, phi, shift);
  const Point a = moved.marked_point();
  CHECK(a.x == doctest::Approx(shift.x).epsilon(1e-12));
  CHECK(a.y == doctest::Approx(shift.y).epsilon(1e-12));
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    const Point p{uniform01(rng) * 2.0 - 0.5, uniform01(rng) * 2.0 - 0.5};
    const Point q{rotate(p, phi).x + shift.x, rotate(p, phi).y + shift.y};
    CHECK(membership(sq.set, p) == membership(moved, q));
  }
}

TEST_CASE("transformed rewrites canonical shapes into cones off their pose") {
  const Fixture line = make_fixture("real-line");
  const PlanarSet moved = transformed(line.set, kPi / 4.0, {0.0, 0.0});
  CHECK(std::holds_alternative<ConeShape>(moved.shape()));
  CHECK(membership(moved, polar({0, 0}, 3.0, kPi / 4.0)));
  CHECK(membership(moved, polar({0, 0}, 3.0, kPi / 4.0 + kPi)));
  CHECK_FALSE(membership(moved, {3.0, 0.0}));
}
