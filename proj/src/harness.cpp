#include "fracdiff/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <omp.h>

#include "fracdiff/error.hpp"
#include "fracdiff/integral_scheme.hpp"

namespace fracdiff {

namespace {
std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Integral: return "integral";
    case Scheme::L1: return "l1";
    case Scheme::PL1: return "pl1";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "integral") return Scheme::Integral;
  if (name == "l1") return Scheme::L1;
  if (name == "pl1") return Scheme::PL1;
  throw InvalidArgument("unknown scheme '" + name + "' (expected integral, l1 or pl1)");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::CSV;
  if (name == "md" || name == "markdown") return OutputFormat::Markdown;
  throw InvalidArgument("unknown format '" + name + "' (expected csv or md)");
}

void SweepConfig::validate() const {
  if (alphas.empty()) throw InvalidArgument("sweep: no alpha values");
  if (levels.empty()) throw InvalidArgument("sweep: no levels");
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("sweep: alpha must lie in (0, 1)");
  }
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (levels[n].M < 2 || levels[n].N < 4) throw InvalidArgument("sweep: levels need M >= 2, N >= 4");
    if (n > 0 && (levels[n].M <= levels[n - 1].M || levels[n].N <= levels[n - 1].N)) {
      throw InvalidArgument("sweep: levels must be strictly ascending");
    }
  }
  if (scheme == Scheme::Integral && r_override) {
    throw InvalidArgument("sweep: --r applies to the l1 and pl1 schemes only");
  }
  if (r_override && !(*r_override > 0.0)) throw InvalidArgument("sweep: r must be positive");
  if (!(T > 0.0)) throw InvalidArgument("sweep: T must be positive");
  if (workers < 1) throw InvalidArgument("sweep: workers must be >= 1");
}

bool ConvergenceReport::any_failed() const {
  return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.failed; });
}

const ReportRow* ConvergenceReport::find(double alpha, int M) const {
  for (const auto& row : rows) {
    if (std::abs(row.alpha - alpha) < 1e-12 && row.M == M) return &row;
  }
  return nullptr;
}

double max_error(const SolutionGrid& grid, const ExactSolution& exact) {
  double worst = 0.0;
  if (exact.separable()) {
    std::vector<double> space(grid.width());
    for (int i = 0; i <= grid.M; ++i) space[idx(i)] = exact.space_factor(grid.x[idx(i)]);
    for (int j = 0; j <= grid.N; ++j) {
      const double time = exact.time_factor(grid.t[idx(j)]);
      const auto U = grid.U_level(j);
      for (int i = 0; i <= grid.M; ++i) {
        worst = std::max(worst, std::abs(U[idx(i)] - time * space[idx(i)]));
      }
    }
    return worst;
  }
  for (int j = 0; j <= grid.N; ++j) {
    const auto U = grid.U_level(j);
    for (int i = 0; i <= grid.M; ++i) {
      worst = std::max(worst, std::abs(U[idx(i)] - exact.u(grid.x[idx(i)], grid.t[idx(j)])));
    }
  }
  return worst;
}

double convergence_rate(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) {
    throw DomainError("convergence_rate: errors must be positive");
  }
  return std::log2(e_coarse / e_fine);
}

std::optional<double> grading_for(Scheme scheme, double alpha, std::optional<double> r_override) {
  switch (scheme) {
    case Scheme::Integral: return std::nullopt;
    case Scheme::L1: return r_override.value_or(optimal_grading(L1Variant::Standard, alpha));
    case Scheme::PL1: return r_override.value_or(optimal_grading(L1Variant::Preprocessed, alpha));
  }
  return std::nullopt;
}

SolutionGrid solve_example(Scheme scheme, double alpha, Level level, double T,
                           std::optional<double> r_override, CoefficientEvaluation evaluation) {
  auto [spec, exact] = example_problem(alpha, T);
  if (scheme == Scheme::Integral) {
    const DecomposedProblem decomposed(spec, build_spatial_mesh(spec.l, level.M));
    const TemporalMesh mesh = build_three_piece_mesh(alpha, T, level.N);
    return solve(decomposed, mesh);
  }
  L1Config config;
  config.alpha = alpha;
  config.variant = scheme == Scheme::L1 ? L1Variant::Standard : L1Variant::Preprocessed;
  config.r = *grading_for(scheme, alpha, r_override);
  config.M = level.M;
  config.N = level.N;
  config.problem = std::move(spec);
  config.evaluation = evaluation;
  return l1_solve(config);
}

ConvergenceReport run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t nlev = config.levels.size();
  const std::size_t ncells = config.alphas.size() * nlev;

  ConvergenceReport report;
  report.rows.resize(ncells);
  const auto ncells_l = static_cast<long>(ncells);

#pragma omp parallel for schedule(dynamic, 1) num_threads(config.workers) if (config.workers > 1)
  for (long c = 0; c < ncells_l; ++c) {
    const std::size_t cell = static_cast<std::size_t>(c);
    const double alpha = config.alphas[cell / nlev];
    const Level level = config.levels[cell % nlev];
    ReportRow& row = report.rows[cell];
    row.scheme = config.scheme;
    row.alpha = alpha;
    row.M = level.M;
    row.N = level.N;
    try {
      row.r = grading_for(config.scheme, alpha, config.r_override);
      const auto start = std::chrono::steady_clock::now();
      const SolutionGrid grid =
          solve_example(config.scheme, alpha, level, config.T, config.r_override, config.l1_evaluation);
      const auto [spec, exact] = example_problem(alpha, config.T);
      row.max_error = max_error(grid, exact);
      row.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::exception& e) {
      row.failed = true;
      row.failure = e.what();
      row.max_error = std::nan("");
    }
  }

  for (std::size_t cell = 0; cell + 1 < ncells; ++cell) {
    if ((cell + 1) % nlev == 0) continue;  // last level of an alpha
    ReportRow& coarse = report.rows[cell];
    const ReportRow& fine = report.rows[cell + 1];
    if (coarse.failed || fine.failed) continue;
    if (fine.M != 2 * coarse.M || fine.N != 2 * coarse.N) continue;
    if (coarse.max_error > 0.0 && fine.max_error > 0.0) {
      coarse.rate = convergence_rate(coarse.max_error, fine.max_error);
    }
  }

  if (!config.output_path.empty()) write_report(report, config.format, config.output_path);
  return report;
}

}  // namespace fracdiff
