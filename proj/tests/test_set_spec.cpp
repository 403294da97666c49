#include <doctest.h>

#include <limits>
#include <string>

#include "starcone/fixtures.hpp"
#include "starcone/set_spec.hpp"

using namespace starcone;

TEST_CASE("every catalog shape survives a write/parse/write round trip") {
  for (const std::string& name : fixture_names()) {
    INFO("fixture ", name);
    const Fixture f = make_fixture(name);
    const std::string once = write_set_spec(f.set);
    const PlanarSet back = parse_set_spec(once);
    CHECK(write_set_spec(back) == once);
    CHECK(back.shape().index() == f.set.shape().index());
    CHECK(back.marked_point() == f.set.marked_point());
  }
}

TEST_CASE("finite samples round trip with mesh and band") {
  const PlanarSet fin(FiniteSampleShape{{{0.0, 0.0}, {1.5, -2.0}}, 0.01, 0.02}, {0.0, 0.0});
  const PlanarSet back = parse_set_spec(write_set_spec(fin));
  const auto& s = back.get<FiniteSampleShape>();
  CHECK(s.points.size() == 2);
  CHECK(s.points[1] == Point{1.5, -2.0});
  CHECK(s.mesh == 0.01);
  CHECK(s.band == 0.02);
}

TEST_CASE("parse accepts a handwritten cone document") {
  const PlanarSet X = parse_set_spec(R"({
    "variant": "cone",
    "marked_point": [0, 0],
    "vertex": [0, 0],
    "arcs": [[0.3, 1.2]]
  })");
  const auto& cone = X.get<ConeShape>();
  CHECK(cone.arcs.arcs().size() == 1);
  CHECK(cone.arcs.arcs()[0].lo == 0.3);
  CHECK(cone.arcs.arcs()[0].hi == 1.2);
}

TEST_CASE("parse rejects malformed documents with SpecError") {
  CHECK_THROWS_AS(parse_set_spec(""), SpecError);
  CHECK_THROWS_AS(parse_set_spec("not json"), SpecError);
  CHECK_THROWS_AS(parse_set_spec("{}"), SpecError);
  CHECK_THROWS_AS(parse_set_spec(R"({"variant": "moebius", "marked_point": [0, 0]})"),
                  SpecError);
  CHECK_THROWS_AS(parse_set_spec(R"({"variant": "cone", "marked_point": [0, 0]})"), SpecError);
  CHECK_THROWS_AS(
      parse_set_spec(R"({"variant": "cone", "vertex": [0, 0], "arcs": [[0, 1]]})"),
      SpecError);
  CHECK_THROWS_AS(parse_set_spec(R"({
    "variant": "polygon",
    "marked_point": [9, 9],
    "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]
  })"),
                  SpecError);
  CHECK_THROWS_AS(parse_set_spec(R"({
    "variant": "polygon",
    "marked_point": [0.5, 0.5],
    "vertices": [[0, 0], [1, 0]]
  })"),
                  SpecError);
}

TEST_CASE("marked point validation runs inside the parser") {
  // A valid document with the basepoint nudged off the set must fail the same
  // way a direct construction would.
  const std::string good = R"({
    "variant": "radial_product",
    "marked_point": [0, 0],
    "vertex": [0, 0],
    "radii": [[0, 0], [0.5, 1]],
    "arcs": [[0, 6.2831853071795865]]
  })";
  CHECK_NOTHROW(parse_set_spec(good));
  const std::string bad = R"({
    "variant": "radial_product",
    "marked_point": [0.25, 0],
    "vertex": [0, 0],
    "radii": [[0, 0], [0.5, 1]],
    "arcs": [[0, 6.2831853071795865]]
  })";
  CHECK_THROWS_AS(parse_set_spec(bad), SpecError);
}

TEST_CASE("interval documents round trip and null means unbounded") {
  const IntervalSet A = IntervalSet::from_intervals(
      {{0.0, 0.0}, {0.25, 0.5}, {2.0, std::numeric_limits<double>::infinity()}});
  const std::string once = write_interval_spec(A);
  const IntervalSet back = parse_interval_spec(once);
  CHECK(back == A);
  CHECK(write_interval_spec(back) == once);

  const IntervalSet lit = parse_interval_spec(
      R"({"variant": "interval_set", "intervals": [[1, null], [0, 0.5]]})");
  CHECK(lit.intervals().size() == 2);
  CHECK(lit.contains(1e18));
  CHECK(lit.contains(0.25));
  CHECK_FALSE(lit.contains(0.75));
}

TEST_CASE("interval parsing rejects malformed documents") {
  CHECK_THROWS_AS(parse_interval_spec("[]"), SpecError);
  CHECK_THROWS_AS(parse_interval_spec(R"({"variant": "interval_set"})"), SpecError);
  CHECK_THROWS_AS(
      parse_interval_spec(R"({"variant": "cone", "intervals": [[0, 1]]})"), SpecError);
  CHECK_THROWS_AS(
      parse_interval_spec(R"({"variant": "interval_set", "intervals": [[2, 1]]})"), SpecError);
  CHECK_THROWS_AS(
      parse_interval_spec(R"({"variant": "interval_set", "intervals": [[-1, 1]]})"), SpecError);
}

TEST_CASE("load reports missing files as SpecError") {
  CHECK_THROWS_AS(load_set_spec("/nonexistent/set.json"), SpecError);
  CHECK_THROWS_AS(load_interval_spec("/nonexistent/intervals.json"), SpecError);
}
