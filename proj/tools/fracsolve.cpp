// fracsolve: convergence sweeps and property checks for the time-fractional
// reaction-diffusion solvers.
//
// Exit codes: 0 success, 1 solver failure, 2 invalid configuration,
// 3 property-suite failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/harness.hpp"
#include "fracdiff/integral_scheme.hpp"
#include "fracdiff/l1_baselines.hpp"
#include "fracdiff/properties.hpp"

namespace {

constexpr int kExitSolver = 1;
constexpr int kExitConfig = 2;
constexpr int kExitProps = 3;

using namespace fracdiff;

void dump_meshes(const SweepConfig& config) {
  for (double alpha : config.alphas) {
    for (const Level& level : config.levels) {
      const TemporalMesh mesh =
          config.scheme == Scheme::Integral
              ? build_three_piece_mesh(alpha, config.T, level.N)
              : build_power_mesh(config.T, level.N, *grading_for(config.scheme, alpha, config.r_override));
      for (int j = 0; j <= mesh.N(); ++j) {
        std::fprintf(stderr, "mesh,%s,%.17g,%d,%d,%.17g\n", to_string(config.scheme), alpha,
                     level.N, j, mesh.t(j));
      }
    }
  }
}

// Custom single-mode problems have no exact solution on file; report the
// final-time profile for each cell instead of errors.
int run_custom(const SweepConfig& config, SineModeCoefficients coeffs) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!config.output_path.empty() && config.output_path != "-") {
    file.open(config.output_path);
    if (!file) throw InvalidArgument("cannot open output file '" + config.output_path + "'");
    out = &file;
  }
  *out << "scheme,alpha,M,N,x,u_T\n";
  for (double alpha : config.alphas) {
    coeffs.alpha = alpha;
    coeffs.T = config.T;
    const ProblemSpec spec = sine_mode_problem(coeffs);
    for (const Level& level : config.levels) {
      SolutionGrid grid;
      if (config.scheme == Scheme::Integral) {
        const DecomposedProblem decomposed(spec, build_spatial_mesh(spec.l, level.M));
        grid = solve(decomposed, build_three_piece_mesh(alpha, config.T, level.N));
      } else {
        L1Config l1;
        l1.alpha = alpha;
        l1.variant = config.scheme == Scheme::L1 ? L1Variant::Standard : L1Variant::Preprocessed;
        l1.r = *grading_for(config.scheme, alpha, config.r_override);
        l1.M = level.M;
        l1.N = level.N;
        l1.problem = spec;
        l1.evaluation = config.l1_evaluation;
        grid = l1_solve(l1);
      }
      const auto U = grid.U_level(grid.N);
      for (int i = 0; i <= grid.M; ++i) {
        char line[160];
        std::snprintf(line, sizeof line, "%s,%.17g,%d,%d,%.17g,%.17g\n", to_string(config.scheme),
                      alpha, level.M, level.N, grid.x[static_cast<std::size_t>(i)],
                      U[static_cast<std::size_t>(i)]);
        *out << line;
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence studies for time-fractional reaction-diffusion schemes"};
  app.set_config("--config", "", "Flat key = value file mirroring the flags (flags override it)");

  std::vector<double> alphas{0.2, 0.4, 0.6, 0.8};
  std::vector<int> levels{64, 128, 256, 512, 1024};
  std::string scheme = "integral";
  std::optional<double> r;
  double T = 1.0;
  std::string format = "csv";
  std::string out_path;
  int workers = 1;
  bool dump_mesh = false;
  bool props = false;
  std::uint64_t seed = 0;
  std::string l1_eval = "stable";
  std::string problem = "example";
  SineModeCoefficients custom;

  app.add_option("--alpha", alphas, "Fractional orders in (0, 1)")->delimiter(',');
  app.add_option("--levels", levels, "Mesh sizes M = N, ascending")->delimiter(',');
  app.add_option("--scheme", scheme, "integral | l1 | pl1")
      ->check(CLI::IsMember({"integral", "l1", "pl1"}));
  app.add_option("--r", r, "Grading exponent for l1/pl1 (default: optimal)");
  app.add_option("--T", T, "Final time");
  app.add_option("--format", format, "csv | md")->check(CLI::IsMember({"csv", "md"}));
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--workers", workers, "Concurrent solve cells")->check(CLI::PositiveNumber);
  app.add_flag("--dump-mesh", dump_mesh, "Print time nodes to stderr");
  app.add_flag("--props", props, "Run the property suite instead of a sweep");
  app.add_option("--seed", seed, "Seed for the property suite");
  app.add_option("--l1-eval", l1_eval, "L1 coefficient evaluation: stable | direct")
      ->check(CLI::IsMember({"stable", "direct"}));
  app.add_option("--problem", problem, "example | custom")
      ->check(CLI::IsMember({"example", "custom"}));
  app.add_option("--p", custom.p, "custom: diffusion coefficient");
  app.add_option("--c", custom.c, "custom: constant reaction coefficient (>= 0)");
  app.add_option("--length", custom.l, "custom: domain length l");
  app.add_option("--mode", custom.mode, "custom: sine mode k in sin(k pi x / l)");
  app.add_option("--amplitude", custom.amplitude, "custom: initial amplitude A");
  app.add_option("--f0", custom.f0, "custom: constant part of the source amplitude");
  app.add_option("--f1", custom.f1, "custom: coefficient of t^beta in the source amplitude");
  app.add_option("--beta", custom.beta, "custom: source time exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (props) {
    const PropertySummary summary = run_property_suite(seed);
    summary.print(std::cout);
    return summary.passed() ? 0 : kExitProps;
  }

  SweepConfig config;
  try {
    config.alphas = alphas;
    config.levels.clear();
    for (int n : levels) config.levels.push_back({n, n});
    config.scheme = parse_scheme(scheme);
    config.r_override = r;
    config.T = T;
    config.format = parse_format(format);
    config.output_path = out_path;
    config.workers = workers;
    config.seed = seed;
    config.l1_evaluation =
        l1_eval == "direct" ? CoefficientEvaluation::Direct : CoefficientEvaluation::Stable;
    config.validate();
    if (dump_mesh) dump_meshes(config);
  } catch (const std::exception& e) {
    std::cerr << "fracsolve: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (problem == "custom") return run_custom(config, custom);
    const ConvergenceReport report = run_sweep(config);
    if (config.output_path.empty()) write_report(report, config.format, "-");
    for (const auto& row : report.rows) {
      if (row.failed) std::cerr << "fracsolve: cell alpha=" << row.alpha << " M=" << row.M
                                << " failed: " << row.failure << '\n';
    }
    return report.any_failed() ? kExitSolver : 0;
  } catch (const InvalidArgument& e) {
    std::cerr << "fracsolve: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "fracsolve: " << e.what() << '\n';
    return kExitSolver;
  }
}
