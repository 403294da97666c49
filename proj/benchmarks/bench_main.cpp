#include <benchmark/benchmark.h>

#include <algorithm>
#include <limits>
#include <random>
#include <variant>
#include <vector>

#include "starcone/blowup.hpp"
#include "starcone/cone_ops.hpp"
#include "starcone/fixtures.hpp"
#include "starcone/geometry.hpp"
#include "starcone/porosity.hpp"
#include "starcone/tangent_equiv.hpp"

using namespace starcone;

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Point> random_cloud(std::mt19937_64& rng, int n) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back({uniform01(rng), uniform01(rng)});
  return pts;
}

// Plain quadratic sup-inf, the shape the early-exit version must beat.
double brute_directed(const std::vector<Point>& a, const std::vector<Point>& b) {
  double sup = 0.0;
  for (Point p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (Point q : b) best = std::min(best, dist(p, q));
    sup = std::max(sup, best);
  }
  return sup;
}

}  // namespace

static void BM_DirectedHausdorff(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto a = random_cloud(rng, static_cast<int>(state.range(0)));
  const auto b = random_cloud(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(directed_hausdorff(a, b));
}
BENCHMARK(BM_DirectedHausdorff)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_DirectedHausdorffBrute(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto a = random_cloud(rng, static_cast<int>(state.range(0)));
  const auto b = random_cloud(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_directed(a, b));
}
BENCHMARK(BM_DirectedHausdorffBrute)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_BlowupSample(benchmark::State& state) {
  const Fixture f = make_fixture("parabola-star-region");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        blowup_at_scale(f.set, {0.0, 0.0}, 0.01, 1.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BlowupSample)->Arg(1024)->Arg(4096);

static void BM_ConvergenceReport(benchmark::State& state) {
  const Fixture f = make_fixture("square-at-corner");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cone_convergence_report(f.set, {0.0, 0.0}, ScaleLadder{1.0, 0.5, 8}, 1.0, 1024));
  }
}
BENCHMARK(BM_ConvergenceReport);

static void BM_PorosityEstimate(benchmark::State& state) {
  const Fixture f = make_fixture("geometric-radial");
  const auto& radii = std::get<RadialProductShape>(f.set.shape()).radii;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        porosity_estimate(radii, 0.0, ScaleLadder{1.0, 0.5, static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_PorosityEstimate)->Arg(12)->Arg(24);

static void BM_EpsilonProbe(benchmark::State& state) {
  const Fixture f = make_fixture("parabola-star-region");
  const PlanarSet cone = cone_as_set(con_a(f.set, {0.0, 0.0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_sym(0.25, f.set, cone, {0.0, 0.0},
                                         static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EpsilonProbe)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
