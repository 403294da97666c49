#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "starcone/fixtures.hpp"
#include "starcone/planar_set.hpp"

using namespace starcone;

TEST_CASE("every catalog entry constructs and contains its marked point") {
  for (const std::string& name : fixture_names()) {
    INFO("fixture ", name);
    const Fixture f = make_fixture(name);
    CHECK(f.name == name);
    CHECK(membership(f.set, f.set.marked_point()));
  }
}

TEST_CASE("the starlike flag matches a direct segment scan") {
  for (const std::string& name : fixture_names()) {
    INFO("fixture ", name);
    const Fixture f = make_fixture(name);
    const StarlikeResult checked = starlike_check(f.set, f.set.marked_point(), 0.005);
    CHECK(checked.starlike == f.starlike);
    if (!checked.starlike) CHECK(checked.counterexample.has_value());
  }
}

TEST_CASE("starlike names are a subcatalog") {
  const std::vector<std::string> all = fixture_names();
  for (const std::string& name : starlike_fixture_names()) {
    INFO("fixture ", name);
    CHECK(std::find(all.begin(), all.end(), name) != all.end());
    CHECK(make_fixture(name).starlike);
  }
}

TEST_CASE("the parabola region announces the quarter turn of directions") {
  const Fixture f = make_fixture("parabola-star-region");
  REQUIRE(f.expected_con_arcs.has_value());
  const auto runs = f.expected_con_arcs->runs();
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].lo == 0.0);
  CHECK(runs[0].hi == kPi / 2.0);
  CHECK(f.expected_conv_class == ConvexClass::Sector);
}

TEST_CASE("parameterized fixtures read their arguments") {
  const Fixture sec = make_fixture("sector:0.1:2.0");
  const auto runs = sec.expected_con_arcs->runs();
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].lo == 0.1);
  CHECK(runs[0].hi == 2.0);
  CHECK(sec.expected_conv_class == ConvexClass::Sector);

  // The convex tag describes the hull: a four radian sector closes to the
  // whole plane.
  const Fixture wide = make_fixture("sector:0:4.0");
  CHECK(wide.expected_conv_class == ConvexClass::Plane);

  const Fixture ray = make_fixture("ray:1.0");
  CHECK(ray.expected_con_arcs->contains(1.0, 1e-12));
  CHECK(ray.expected_con_arcs->total_width() == 0.0);

  const Fixture poly = make_fixture("convex-polygon-at-vertex:9");
  const auto& verts = poly.set.get<PolygonShape>().vertices;
  CHECK(std::any_of(verts.begin(), verts.end(),
                    [](Point p) { return p.x == 0.0 && p.y == 0.0; }));

  const Fixture geo = make_fixture("geometric-radial:0.2:0.7");
  const auto& radii = geo.set.get<RadialProductShape>().radii;
  CHECK(radii.contains(0.0));
  CHECK(radii.contains(0.7));
  CHECK_FALSE(radii.contains(0.8));
}

TEST_CASE("bad fixture requests throw") {
  CHECK_THROWS_AS(make_fixture("klein-bottle"), std::invalid_argument);
  CHECK_THROWS_AS(make_fixture("sector:2.0:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(make_fixture("sector:0:not-a-number"), std::invalid_argument);
  CHECK_THROWS_AS(make_fixture("geometric-radial:0.6:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(make_fixture("geometric-radial:0.5:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(make_fixture("annulus:1"), std::invalid_argument);
}

TEST_CASE("random_convex_polygon yields strict counterclockwise hulls") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<Point> hull = random_convex_polygon(seed);
    INFO("seed ", seed);
    REQUIRE(hull.size() >= 3);
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point u = hull[(i + 1) % n] - hull[i];
      const Point v = hull[(i + 2) % n] - hull[(i + 1) % n];
      CHECK(cross(u, v) > 0.0);
      CHECK(hull[i].x >= 0.0);
      CHECK(hull[i].x <= 1.0);
      CHECK(hull[i].y >= 0.0);
      CHECK(hull[i].y <= 1.0);
    }
  }
}

TEST_CASE("densified_sample grids the window and tags its pitch") {
  const Fixture sq = make_fixture("square-at-corner");
  const PlanarSet dense = densified_sample(sq.set, 0.01, 0.3);
  const auto* fs = std::get_if<FiniteSampleShape>(&dense.shape());
  REQUIRE(fs != nullptr);
  CHECK(fs->mesh == 0.01);
  CHECK(fs->band == 0.01);
  REQUIRE(!fs->points.empty());
  for (Point p : fs->points) {
    CHECK(membership(sq.set, p));
    CHECK(dist(p, {0.0, 0.0}) <= 0.3 + 1e-12);
  }
  CHECK(dense.marked_point() == sq.set.marked_point());
  // The grid pitch mesh/sqrt(2) really covers the window at the stated mesh:
  // no member of the window should be farther than one mesh from the cloud.
  for (double x : {0.05, 0.11, 0.217}) {
    double best = 1e9;
    for (Point p : fs->points) best = std::min(best, dist(p, {x, x / 2.0}));
    CHECK(best <= 0.01 + 1e-12);
  }
  CHECK_THROWS_AS(densified_sample(sq.set, -0.01, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(densified_sample(sq.set, 0.01, 0.0), std::invalid_argument);
}
