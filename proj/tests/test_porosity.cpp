#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "starcone/fixtures.hpp"
#include "starcone/porosity.hpp"

using namespace starcone;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Longest run of consecutive misses over a uniform scan of (x, x + h).
double scanned_gap(double x, double h, const IntervalSet& A, int samples) {
  double best = 0.0;
  double run_start = x;
  bool in_run = false;
  for (int i = 1; i < samples; ++i) {
    const double p = x + h * static_cast<double>(i) / samples;
    if (!A.contains(p)) {
      if (!in_run) {
        run_start = p;
        in_run = true;
      }
      best = std::max(best, p - run_start);
    } else {
      in_run = false;
    }
  }
  return best;
}

IntervalSet random_intervals(std::mt19937_64& rng) {
  std::vector<std::pair<double, double>> pieces;
  const int n = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < n; ++i) {
    const double lo = uniform01(rng) * 2.0;
    pieces.push_back({lo, lo + uniform01(rng) * 0.5});
  }
  return IntervalSet::from_intervals(pieces);
}

}  // namespace

TEST_CASE("longest_gap on hand-checked configurations") {
  const IntervalSet A = IntervalSet::from_intervals({{0.0, 0.0}, {0.25, 0.5}});
  // (0, 1): the far half (0.5, 1) is entirely uncovered.
  CHECK(longest_gap(0.0, 1.0, A) == doctest::Approx(0.5).epsilon(1e-12));
  // (0, 0.4): the lead-in gap (0, 0.25) wins.
  CHECK(longest_gap(0.0, 0.4, A) == doctest::Approx(0.25).epsilon(1e-12));
  // Window fully covered.
  CHECK(longest_gap(0.26, 0.2, A) == 0.0);
  // Empty set: the whole window is one gap.
  CHECK(longest_gap(0.0, 2.0, IntervalSet::from_intervals({})) == 2.0);
  CHECK_THROWS_AS(longest_gap(0.0, -1.0, A), std::invalid_argument);
}

TEST_CASE("longest_gap agrees with a dense scan on random interval sets") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalSet A = random_intervals(rng);
    const double x = uniform01(rng);
    const double h = 0.2 + uniform01(rng) * 1.5;
    const int samples = 100000;
    const double exact = longest_gap(x, h, A);
    const double scanned = scanned_gap(x, h, A, samples);
    INFO("trial ", trial, " x ", x, " h ", h);
    CHECK(std::abs(exact - scanned) <= 3.0 * h / samples);
  }
}

TEST_CASE("geometric block radii have porosity exactly one half") {
  // Blocks [4^-k/4, 4^-k/2]: at h = 4^-k the window (0, h) splits into the
  // covered top half and the uncovered run below it of the same length.
  std::vector<std::pair<double, double>> pieces{{0.0, 0.0}};
  double qk = 1.0;
  for (int k = 0; k <= 40; ++k, qk *= 0.25) pieces.push_back({qk * 0.25, qk * 0.5});
  const IntervalSet A = IntervalSet::from_intervals(pieces);
  const PorosityEstimate est = porosity_estimate(A, 0.0, ScaleLadder{1.0, 0.5, 12}, 4, 0.0);
  CHECK(est.estimate == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(!est.rows.empty());
  for (const PorosityRow& row : est.rows) {
    CHECK(row.ratio >= 0.0);
    CHECK(row.ratio <= 1.0);
    CHECK(row.gap <= row.h);
  }
}

TEST_CASE("porosity separates the full ray from the bare point") {
  const IntervalSet full_ray = IntervalSet::from_intervals({{0.0, kInf}});
  CHECK(porosity_estimate(full_ray, 0.0, ScaleLadder{1.0, 0.5, 12}).estimate == 0.0);
  const IntervalSet point = IntervalSet::from_intervals({{0.0, 0.0}});
  CHECK(porosity_estimate(point, 0.0, ScaleLadder{1.0, 0.5, 12}).estimate == 1.0);
}

TEST_CASE("the h floor hides structure below it") {
  // Uncovered only on (0, 0.001): visible to unfloored probes, invisible once
  // the floor pushes every usable h far above the hole.
  const IntervalSet A = IntervalSet::from_intervals({{0.0, 0.0}, {0.001, kInf}});
  const ScaleLadder ladder{1.0, 0.5, 14};
  const PorosityEstimate coarse = porosity_estimate(A, 0.0, ladder, 4, 0.04);
  CHECK(coarse.estimate < 0.05);
  const PorosityEstimate fine = porosity_estimate(A, 0.0, ladder, 4, 0.0);
  CHECK(fine.estimate > 0.9);
}

TEST_CASE("radii_set on the catalog") {
  // Square from its corner, wide open aperture: all radii up to the far
  // corner.
  const Fixture sq = make_fixture("square-at-corner");
  const RadiiResult r1 = radii_set(sq.set, {0.0, 0.0}, Ray({0.0, 0.0}, kPi / 4.0), 1.0);
  CHECK(r1.radii.min() == 0.0);
  CHECK(r1.radii.max() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  // The axis along its own ray: every radius appears.
  const Fixture line = make_fixture("real-line");
  const RadiiResult r2 = radii_set(line.set, {0.0, 0.0}, Ray({0.0, 0.0}, 0.0), 0.5);
  CHECK(r2.radii.contains(0.0));
  CHECK(std::isinf(r2.radii.max()));

  // The nonnegative axis probed along the opposite ray: only the basepoint
  // lands in the sector.
  const Fixture halfline = make_fixture("real-halfline");
  const RadiiResult r3 = radii_set(halfline.set, {0.0, 0.0}, Ray({0.0, 0.0}, kPi), 0.5);
  CHECK(r3.radii.contains(0.0));
  CHECK(r3.radii.max() == 0.0);
}

TEST_CASE("radii_set grows with beta") {
  std::mt19937_64 rng(43);
  for (const std::string& name :
       {std::string("square-at-corner"), std::string("sector"),
        std::string("parabola-star-region")}) {
    const Fixture f = make_fixture(name);
    const Ray l({0.0, 0.0}, 0.5);
    const RadiiResult narrow = radii_set(f.set, {0.0, 0.0}, l, 0.2);
    const RadiiResult mid = radii_set(f.set, {0.0, 0.0}, l, 0.5);
    const RadiiResult wide = radii_set(f.set, {0.0, 0.0}, l, 0.9);
    for (int i = 0; i <= 200; ++i) {
      const double r = 0.01 * i;
      INFO("fixture ", name, " radius ", r);
      if (narrow.radii.contains(r)) CHECK(mid.radii.contains(r));
      if (mid.radii.contains(r)) CHECK(wide.radii.contains(r));
    }
    (void)rng;
  }
}

TEST_CASE("dichotomy ladder spans descending powers of two") {
  const std::vector<double> betas = default_beta_ladder(10);
  REQUIRE(betas.size() == 10);
  CHECK(betas.front() == 0.5);
  CHECK(betas.back() == doctest::Approx(std::pow(2.0, -10.0)).epsilon(1e-15));
  for (std::size_t i = 1; i < betas.size(); ++i) {
    CHECK(betas[i] == doctest::Approx(betas[i - 1] * 0.5).epsilon(1e-15));
  }
}

TEST_CASE("dichotomy classes on the model sets") {
  const ScaleLadder ladder{1.0, 0.5, 12};
  // Full plane: every sector is filled solid.
  const DichotomyVerdict zero = dichotomy_probe(make_fixture("full-plane").set, {0.0, 0.0},
                                                Ray({0.0, 0.0}, 1.0), default_beta_ladder(6),
                                                ladder);
  CHECK(zero.classification == DichotomyClass::LimitZero);
  CHECK(zero.value == 0.0);

  // Two rays probed between them: narrow sectors eventually miss both, so
  // only the basepoint survives.
  const DichotomyVerdict one = dichotomy_probe(make_fixture("two-rays").set, {0.0, 0.0},
                                               Ray({0.0, 0.0}, kPi / 4.0),
                                               default_beta_ladder(6), ladder);
  CHECK(one.classification == DichotomyClass::LimitOne);
  CHECK(one.value == 1.0);

  // Geometric radial blocks along their own ray: the ratio sticks at one
  // half at every beta, violating the limit dichotomy.
  const DichotomyVerdict mid = dichotomy_probe(make_fixture("geometric-radial").set, {0.0, 0.0},
                                               Ray({0.0, 0.0}, 0.0), default_beta_ladder(6),
                                               ladder);
  CHECK(mid.classification == DichotomyClass::Violation);
  CHECK(mid.value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("dichotomy_probe needs at least three betas") {
  CHECK_THROWS_AS(dichotomy_probe(make_fixture("full-plane").set, {0.0, 0.0},
                                  Ray({0.0, 0.0}, 0.0), {0.5, 0.25}, ScaleLadder{}),
                  std::invalid_argument);
}

TEST_CASE("porosity csv carries one row per probe") {
  const IntervalSet A = IntervalSet::from_intervals({{0.0, 0.0}, {0.25, 0.5}});
  const PorosityEstimate est = porosity_estimate(A, 0.0, ScaleLadder{1.0, 0.5, 6});
  const std::string csv = to_csv(est);
  CHECK(csv.find("h,") == 0);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == est.rows.size() + 1);
}
