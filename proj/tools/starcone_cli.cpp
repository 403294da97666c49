// Command line front end: resolves a set from a spec file or the fixture
// catalog, runs one analysis, prints a short summary, and writes the CSV
// when asked. Exit codes: 0 ok, 1 verification failure, 2 usage, 3 spec.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "starcone/blowup.hpp"
#include "starcone/cone_ops.hpp"
#include "starcone/csv.hpp"
#include "starcone/fixtures.hpp"
#include "starcone/porosity.hpp"
#include "starcone/set_spec.hpp"
#include "starcone/tangent_equiv.hpp"
#include "starcone/verification.hpp"

namespace {

using namespace starcone;

std::string fmt8(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

struct Options {
  std::string spec;
  std::string fixture;
  std::string out;
  double t0 = 1.0;
  double q = 0.5;
  int depth = 12;
  int samples = 0;  // 0 = command default
  double radius = 1.0;
  int beta_depth = 10;
  double ray = 0.0;
  double theta_odd = 0.3;
  double theta_even = 0.9;
  std::uint64_t seed = 0;
  std::string equiv_z;
  std::string equiv_y;
};

void add_input_flags(CLI::App* sub, Options& o) {
  auto* spec = sub->add_option("--spec", o.spec, "Set spec JSON path");
  auto* fixture = sub->add_option("--fixture", o.fixture, "Fixture catalog name");
  spec->excludes(fixture);
}

void add_ladder_flags(CLI::App* sub, Options& o) {
  sub->add_option("--t0", o.t0, "Coarsest probe scale");
  sub->add_option("--q", o.q, "Ladder ratio, in (0, 1)");
  sub->add_option("--depth", o.depth, "Ladder depth, >= 4");
}

void add_out_flag(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "CSV output path");
}

int validate(const Options& o) {
  if (!(o.q > 0.0 && o.q < 1.0)) {
    std::cerr << "usage error: --q must lie in (0, 1)\n";
    return 2;
  }
  if (o.depth < 4) {
    std::cerr << "usage error: --depth must be >= 4\n";
    return 2;
  }
  if (o.samples != 0 && o.samples < 64) {
    std::cerr << "usage error: --samples must be >= 64\n";
    return 2;
  }
  if (!(o.t0 > 0.0) || !(o.radius > 0.0)) {
    std::cerr << "usage error: --t0 and --radius must be positive\n";
    return 2;
  }
  if (o.beta_depth < 3) {
    std::cerr << "usage error: --beta-depth must be >= 3\n";
    return 2;
  }
  return 0;
}

PlanarSet load_input(const Options& o) {
  if (!o.spec.empty()) return load_set_spec(o.spec);
  if (!o.fixture.empty()) return make_fixture(o.fixture).set;
  throw std::invalid_argument("give --spec or --fixture");
}

// Positional set argument: an existing file is a spec, anything else a
// fixture name.
PlanarSet resolve_positional(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_set_spec(arg);
  return make_fixture(arg).set;
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

void maybe_write(const Options& o, const std::string& text) {
  if (!o.out.empty()) write_text(o.out, text);
}

void print_descriptor(const ConeDescriptor& C) {
  std::cout << "vertex (" << fmt8(C.vertex.x) << ", " << fmt8(C.vertex.y) << ")\n";
  std::cout << "arcs";
  if (C.arcs.empty()) {
    std::cout << " (none)";
  } else {
    for (const Arc& run : C.arcs.runs()) {
      std::cout << " [" << fmt8(run.lo) << ", " << fmt8(run.hi) << "]";
    }
  }
  std::cout << "\nclass " << to_string(C.convex_class) << "\n";
}

std::string descriptor_csv(const ConeDescriptor& C) {
  std::string s = "run,lo,hi\n";
  const std::vector<Arc> runs = C.arcs.empty() ? std::vector<Arc>{} : C.arcs.runs();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    s += std::to_string(i) + "," + csv::number(runs[i].lo) + "," + csv::number(runs[i].hi) + "\n";
  }
  return s;
}

int run_cone(const Options& o, bool convex) {
  const PlanarSet X = load_input(o);
  const ScaleLadder window{o.t0, o.q, o.depth};
  const ConeDescriptor C =
      convex ? conv_a(X, X.marked_point(), window) : con_a(X, X.marked_point(), window);
  print_descriptor(C);
  maybe_write(o, descriptor_csv(C));
  return 0;
}

int run_blowup(const Options& o) {
  const PlanarSet X = load_input(o);
  const int n = o.samples == 0 ? 4096 : o.samples;
  const ConvergenceReport rep =
      cone_convergence_report(X, X.marked_point(), ScaleLadder{o.t0, o.q, o.depth}, o.radius, n);
  std::cout << to_string(rep.verdict) << " finest-scale distance "
            << fmt8(rep.rows.back().hausdorff) << "\n";
  maybe_write(o, to_csv(rep));
  return 0;
}

int run_equiv(const Options& o) {
  const PlanarSet Z = resolve_positional(o.equiv_z);
  const PlanarSet Y = resolve_positional(o.equiv_y);
  const int n = o.samples == 0 ? 1024 : o.samples;
  const EquivalenceReport rep =
      strong_equiv_probe(Z, Y, Z.marked_point(), ScaleLadder{o.t0, o.q, o.depth}, n);
  std::cout << to_string(rep.verdict) << " final eps/t " << fmt8(rep.rows.back().ratio)
            << " slope " << fmt8(rep.slope) << "\n";
  maybe_write(o, to_csv(rep));
  return 0;
}

int run_porosity(const Options& o) {
  IntervalSet A;
  if (!o.spec.empty()) {
    A = load_interval_spec(o.spec);
  } else if (!o.fixture.empty()) {
    const Fixture f = make_fixture(o.fixture);
    const auto* radial = std::get_if<RadialProductShape>(&f.set.shape());
    if (radial == nullptr) {
      throw std::invalid_argument("porosity needs a 1-D spec or a radial fixture");
    }
    A = radial->radii;
  } else {
    throw std::invalid_argument("give --spec or --fixture");
  }
  const PorosityEstimate est = porosity_estimate(A, 0.0, ScaleLadder{o.t0, o.q, o.depth}, 4, 0.0);
  std::cout << "estimate " << fmt8(est.estimate) << "\n";
  maybe_write(o, to_csv(est));
  return 0;
}

int run_dichotomy(const Options& o) {
  const PlanarSet X = load_input(o);
  const Point a = X.marked_point();
  const DichotomyVerdict v = dichotomy_probe(X, a, Ray(a, o.ray), default_beta_ladder(o.beta_depth),
                                             ScaleLadder{o.t0, o.q, o.depth});
  std::printf("%s %.2f\n", to_string(v.classification).c_str(), v.value);
  maybe_write(o, to_csv(v));
  return 0;
}

int run_cluster(const Options& o) {
  const ClusterReport rep =
      sequence_cluster_directions(o.theta_odd, o.theta_even, ScaleLadder{o.t0, o.q, o.depth});
  std::cout << rep.cluster_count << " clusters, separation " << fmt8(rep.separation) << "\n";
  maybe_write(o, to_csv(rep));
  return 0;
}

int run_verify(const Options& o) {
  const VerifyOutput out = run_verification(o.seed);
  for (const CriterionResult& c : out.results) {
    std::cout << c.name << (c.passed ? " PASS " : " FAIL ") << c.detail << "\n";
  }
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    for (const auto& [name, text] : out.artifacts) {
      write_text((std::filesystem::path(o.out) / name).string(), text);
    }
  }
  std::cout << (out.all_passed ? "all criteria passed" : "some criteria failed") << "\n";
  return out.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Local conical structure of planar sets at a marked point"};
  app.require_subcommand(1);

  CLI::App* cone = app.add_subcommand("cone", "Smallest closed cone at the marked point");
  add_input_flags(cone, o);
  add_ladder_flags(cone, o);
  add_out_flag(cone, o);

  CLI::App* conv = app.add_subcommand("conv", "Smallest closed convex cone at the marked point");
  add_input_flags(conv, o);
  add_ladder_flags(conv, o);
  add_out_flag(conv, o);

  CLI::App* blowup = app.add_subcommand("blowup", "Rescaling convergence toward the cone");
  add_input_flags(blowup, o);
  add_ladder_flags(blowup, o);
  add_out_flag(blowup, o);
  blowup->add_option("--samples", o.samples, "Lattice budget per scale, >= 64");
  blowup->add_option("--radius", o.radius, "Truncation radius");

  CLI::App* equiv = app.add_subcommand("equiv", "Sphere defect probe between two sets");
  equiv->add_option("Z", o.equiv_z, "First set: spec path or fixture name")->required();
  equiv->add_option("Y", o.equiv_y, "Second set: spec path or fixture name")->required();
  add_ladder_flags(equiv, o);
  add_out_flag(equiv, o);
  equiv->add_option("--samples", o.samples, "Sphere samples per scale, >= 64");

  CLI::App* porosity = app.add_subcommand("porosity", "Gap ratio estimate for a 1-D set at 0");
  add_input_flags(porosity, o);
  add_ladder_flags(porosity, o);
  add_out_flag(porosity, o);

  CLI::App* dichotomy = app.add_subcommand("dichotomy", "Porosity limit class along a ray");
  add_input_flags(dichotomy, o);
  add_ladder_flags(dichotomy, o);
  add_out_flag(dichotomy, o);
  dichotomy->add_option("--ray", o.ray, "Ray angle at the marked point");
  dichotomy->add_option("--beta-depth", o.beta_depth, "Half-width ladder depth, >= 3");

  CLI::App* cluster = app.add_subcommand("cluster", "Direction clusters of an alternating sequence");
  add_ladder_flags(cluster, o);
  add_out_flag(cluster, o);
  cluster->add_option("--theta-odd", o.theta_odd, "Angle on odd indices");
  cluster->add_option("--theta-even", o.theta_even, "Angle on even indices");

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance battery");
  verify->add_option("--seed", o.seed, "Seed for the randomized checks");
  verify->add_option("--out", o.out, "Directory for CSV artifacts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const int bad = validate(o); bad != 0) return bad;

  try {
    if (app.got_subcommand(cone)) return run_cone(o, false);
    if (app.got_subcommand(conv)) return run_cone(o, true);
    if (app.got_subcommand(blowup)) return run_blowup(o);
    if (app.got_subcommand(equiv)) return run_equiv(o);
    if (app.got_subcommand(porosity)) return run_porosity(o);
    if (app.got_subcommand(dichotomy)) return run_dichotomy(o);
    if (app.got_subcommand(cluster)) return run_cluster(o);
    if (app.got_subcommand(verify)) return run_verify(o);
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
