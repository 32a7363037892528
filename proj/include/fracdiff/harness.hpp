#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracdiff/l1_baselines.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/solution.hpp"

namespace fracdiff {

enum class Scheme { Integral, L1, PL1 };
enum class OutputFormat { CSV, Markdown };

const char* to_string(Scheme scheme);
Scheme parse_scheme(const std::string& name);
OutputFormat parse_format(const std::string& name);

struct Level {
  int M = 64;
  int N = 64;
};

struct SweepConfig {
  std::vector<double> alphas{0.2, 0.4, 0.6, 0.8};
  std::vector<Level> levels{{64, 64}, {128, 128}, {256, 256}, {512, 512}, {1024, 1024}};
  Scheme scheme = Scheme::Integral;
  std::optional<double> r_override;  // baselines only
  double T = 1.0;
  OutputFormat format = OutputFormat::CSV;
  std::string output_path;  // empty: nothing written
  int workers = 1;
  std::uint64_t seed = 0;
  CoefficientEvaluation l1_evaluation = CoefficientEvaluation::Stable;

  /// Throws InvalidArgument for empty lists, alpha outside (0, 1),
  /// unsorted levels, r on the integral scheme, or workers < 1.
  void validate() const;
};

struct ReportRow {
  Scheme scheme = Scheme::Integral;
  double alpha = 0.0;
  int M = 0;
  int N = 0;
  std::optional<double> r;
  double max_error = 0.0;
  std::optional<double> rate;
  double wall_time_s = 0.0;
  bool failed = false;
  std::string failure;
};

struct ConvergenceReport {
  std::vector<ReportRow> rows;

  bool any_failed() const;
  const ReportRow* find(double alpha, int M) const;
};

/// max over the whole grid of |U_i^j - u(x_i, t_j)|.
double max_error(const SolutionGrid& grid, const ExactSolution& exact);

/// log2(e_coarse / e_fine); DomainError unless both errors are positive.
double convergence_rate(double e_coarse, double e_fine);

/// Grading exponent used by a scheme: the override, or the variant's optimum.
std::optional<double> grading_for(Scheme scheme, double alpha, std::optional<double> r_override);

/// Solves the manufactured example with one scheme on one level.
SolutionGrid solve_example(Scheme scheme, double alpha, Level level, double T,
                           std::optional<double> r_override = std::nullopt,
                           CoefficientEvaluation evaluation = CoefficientEvaluation::Stable);

/// Runs every (alpha, level) cell, using up to `workers` concurrent cells,
/// and fills rates between adjacent levels that double both M and N. Rows come
/// out alpha-major in config order regardless of scheduling. Failed cells
/// become marker rows. Writes the report when output_path is set.
ConvergenceReport run_sweep(const SweepConfig& config);

/// CSV columns: scheme,alpha,M,N,r,max_error,rate,wall_time_s. Numbers use 17
/// significant digits; absent values are empty; failed cells carry FAILED in
/// max_error.
void write_csv(std::ostream& out, const ConvergenceReport& report, bool include_wall_time = true);
ConvergenceReport read_csv(std::istream& in);

/// Human-readable table: errors as %.4e, rates as %.3f.
void write_markdown(std::ostream& out, const ConvergenceReport& report);

void write_report(const ConvergenceReport& report, OutputFormat format, const std::string& path);

}  // namespace fracdiff
