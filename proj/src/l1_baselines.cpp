#include "fracdiff/l1_baselines.hpp"

#include <cmath>
#include <string>

#include "fracdiff/error.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/tridiag.hpp"

namespace fracdiff {

namespace {
std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

const char* to_string(L1Variant variant) {
  return variant == L1Variant::Standard ? "l1" : "pl1";
}

double optimal_grading(L1Variant variant, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("optimal_grading: alpha must lie in (0, 1)");
  return variant == L1Variant::Standard ? (2.0 - alpha) / alpha : (2.0 - alpha) / (2.0 * alpha);
}

double l1_coefficient(int j, int k, const TemporalMesh& mesh, double alpha,
                      CoefficientEvaluation evaluation) {
  if (k < 1 || k > j || j > mesh.N()) {
    throw InvalidArgument("l1_coefficient: need 1 <= k <= j <= N");
  }
  const double P = mesh.t(j) - mesh.t(k - 1);
  if (!(P > 0.0)) throw DomainError("l1_coefficient: nonpositive node difference");
  const double inv = 1.0 / specfun::gamma_fn(2.0 - alpha);
  if (k == j) return std::pow(P, -alpha) * inv;
  if (evaluation == CoefficientEvaluation::Direct) {
    const double Q = mesh.t(j) - mesh.t(k);
    return (std::pow(P, 1.0 - alpha) - std::pow(Q, 1.0 - alpha)) / (mesh.step(k)) * inv;
  }
  // P^{1-alpha} (1 - (1 - rho)^{1-alpha}) / Delta t_k with rho = Delta t_k / P.
  const double rho = mesh.step(k) / P;
  const double frac = -std::expm1((1.0 - alpha) * std::log1p(-rho)) / rho;
  return std::pow(P, -alpha) * frac * inv;
}

std::vector<double> l1_coefficients(int j, const TemporalMesh& mesh, double alpha,
                                    CoefficientEvaluation evaluation) {
  std::vector<double> d(idx(j));
  for (int k = 1; k <= j; ++k) d[idx(k - 1)] = l1_coefficient(j, k, mesh, alpha, evaluation);
  return d;
}

SolutionGrid l1_solve(const L1Config& config, SolveOptions options) {
  if (config.M < 2 || config.N < 1) throw InvalidArgument("l1_solve: need M >= 2 and N >= 1");
  if (std::abs(config.alpha - config.problem.alpha) > 0.0) {
    throw InvalidArgument("l1_solve: config alpha differs from problem alpha");
  }
  const TemporalMesh mesh = build_power_mesh(config.problem.T, config.N, config.r);
  const DecomposedProblem decomposed(config.problem, build_spatial_mesh(config.problem.l, config.M));
  const DiscreteOperator op = make_discrete_operator(decomposed);
  const auto& spec = decomposed.spec();
  const auto& x = decomposed.spatial();
  const int M = config.M;
  const int N = config.N;
  const double alpha = config.alpha;
  const bool preprocessed = config.variant == L1Variant::Preprocessed;

  SolutionGrid grid(x.nodes(), mesh.nodes());
  const std::size_t width = grid.width();
  if (!preprocessed) {
    for (int i = 1; i < M; ++i) grid.V_level(0)[idx(i)] = decomposed.phi()[idx(i)];
  }

  // diffs row k-1 holds W^k - W^{k-1}, k = 1..N.
  std::vector<double> diffs(width * idx(N), 0.0);
  std::vector<double> weights;
  std::vector<double> rhs(width);
  for (int j = 1; j <= N; ++j) {
    const double tj = mesh.t(j);
    weights = l1_coefficients(j, mesh, alpha, config.evaluation);
    const double d_jj = weights.back();
    weights.pop_back();
    for (double& w : weights) w = -w;

    const auto prev = grid.V_level(j - 1);
    for (int i = 1; i < M; ++i) {
      double source = spec.f(x.x(i), tj);
      if (preprocessed) source += decomposed.g(i, tj);
      rhs[idx(i)] = d_jj * prev[idx(i)] + source;
    }
    rhs[0] = 0.0;
    rhs[idx(M)] = 0.0;
    kernels::HistoryView view{std::span<const double>(diffs).first(idx(j - 1) * width), width};
    if (options.parallel) {
      kernels::accumulate_history(weights, view, rhs);
    } else {
      kernels::accumulate_history_serial(weights, view, rhs);
    }

    const ImplicitStepSolver solver(op, d_jj, 1.0);
    auto cur = grid.V_level(j);
    solver.solve(rhs, cur);
    auto diff = std::span<double>(diffs).subspan(idx(j - 1) * width, width);
    for (std::size_t i = 0; i < width; ++i) diff[i] = cur[i] - prev[i];
  }

  for (int j = 0; j <= N; ++j) {
    const auto V = grid.V_level(j);
    auto U = grid.U_level(j);
    if (preprocessed) {
      for (int i = 0; i <= M; ++i) U[idx(i)] = decomposed.reconstruct(i, mesh.t(j), V[idx(i)]);
    } else {
      for (int i = 0; i <= M; ++i) U[idx(i)] = V[idx(i)];
    }
  }
  return grid;
}

}  // namespace fracdiff
