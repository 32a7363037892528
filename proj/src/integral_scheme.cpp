#include "fracdiff/integral_scheme.hpp"

#include <cmath>
#include <string>

#include "fracdiff/error.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/specfun.hpp"

namespace fracdiff {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Below this ratio Delta t_k / (t_j - t_{k-1}) the closed form loses more
// than about two digits to cancellation and the series is used instead.
constexpr double kSeriesCutoff = 0.25;

// S(rho) = 1 - (1 - (1 - rho)^beta) / (beta rho), beta = alpha + 1.
// For beta in (1, 2) the Taylor terms are all positive:
//   S = sum_{n>=2} (-1)^n C(beta, n) rho^{n-1} / beta.
double first_moment_defect(double alpha, double rho) {
  const double beta = alpha + 1.0;
  if (rho >= kSeriesCutoff) {
    return 1.0 + std::expm1(beta * std::log1p(-rho)) / (beta * rho);
  }
  double term = 0.5 * alpha * rho;
  double sum = term;
  for (int n = 2; n < 200; ++n) {
    term *= (n - beta) * rho / (n + 1);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

void check_indices(int j, int k, const TemporalMesh& mesh) {
  if (k < 1 || k > j || j > mesh.N()) {
    throw InvalidArgument("product weights: need 1 <= k <= j <= N, got j = " + std::to_string(j) +
                          ", k = " + std::to_string(k));
  }
}

}  // namespace

WeightPair product_weights(const TemporalMesh& mesh, double alpha, int j, int k) {
  check_indices(j, k, mesh);
  // P = t_j - t_{k-1}, Q = t_j - t_k = P (1 - rho). Q is never formed.
  const double P = mesh.t(j) - mesh.t(k - 1);
  if (!(P > 0.0)) throw DomainError("product weights: nonpositive node difference");
  const double P_alpha = std::pow(P, alpha);

  if (k == j) {
    const double inv = 1.0 / specfun::gamma_fn(alpha + 2.0);
    return {alpha * P_alpha * inv, P_alpha * inv};
  }

  const double rho = mesh.step(k) / P;
  const double inv = 1.0 / specfun::gamma_fn(alpha + 1.0);
  const double defect = first_moment_defect(alpha, rho);
  const double total = -std::expm1(alpha * std::log1p(-rho));  // 1 - (1 - rho)^alpha
  return {P_alpha * defect * inv, P_alpha * (total - defect) * inv};
}

double weight_a(int j, int k, const TemporalMesh& mesh, double alpha) {
  return product_weights(mesh, alpha, j, k).a;
}

double weight_b(int j, int k, const TemporalMesh& mesh, double alpha) {
  return product_weights(mesh, alpha, j, k).b;
}

double QuadWeights::history_weights(int j, std::vector<double>& out) const {
  out.assign(idx(j), 0.0);
  WeightPair prev = product_weights(*mesh_, alpha_, j, 1);
  out[0] = prev.a;
  for (int k = 2; k <= j; ++k) {
    const WeightPair cur = product_weights(*mesh_, alpha_, j, k);
    out[idx(k - 1)] = cur.a + prev.b;
    prev = cur;
  }
  return prev.b;
}

DiscreteOperator make_discrete_operator(const DecomposedProblem& decomposed) {
  DiscreteOperator op;
  op.p = decomposed.spec().p;
  op.c_vals.assign(decomposed.c().begin(), decomposed.c().end());
  op.h = decomposed.spatial().h();
  op.M = decomposed.spatial().M();
  return op;
}

IntegralScheme::IntegralScheme(const DecomposedProblem& decomposed, const TemporalMesh& mesh,
                               SolveOptions options)
    : decomposed_(&decomposed),
      mesh_(&mesh),
      options_(options),
      weights_(mesh, decomposed.alpha()),
      op_(make_discrete_operator(decomposed)),
      grid_(decomposed.spatial().nodes(), mesh.nodes()) {
  if (std::abs(mesh.T() - decomposed.spec().T) > 1e-12 * decomposed.spec().T) {
    throw InvalidArgument("IntegralScheme: mesh horizon does not match the problem");
  }
  const std::size_t width = grid_.width();
  history_.assign(width * (idx(mesh.N()) + 1), 0.0);
  f_level_.assign(width, 0.0);

  // Level 0: V^0 = 0, so F^0 = f(., 0).
  const auto& spec = decomposed.spec();
  const auto& x = decomposed.spatial();
  for (int i = 1; i < x.M(); ++i) history_[idx(i)] = spec.f(x.x(i), mesh.t(0));
}

std::vector<double> IntegralScheme::assemble_rhs(int j, double& implicit_weight) {
  const auto& spec = decomposed_->spec();
  const auto& x = decomposed_->spatial();
  const int M = x.M();
  const std::size_t width = grid_.width();
  const double tj = mesh_->t(j);

  implicit_weight = weights_.history_weights(j, hist_w_);

  std::vector<double> rhs(width, 0.0);
  for (int i = 1; i < M; ++i) {
    f_level_[idx(i)] = spec.f(x.x(i), tj);
    rhs[idx(i)] = grid_.V_level(0)[idx(i)] + implicit_weight * f_level_[idx(i)] +
                  decomposed_->G(i, tj);
  }
  kernels::HistoryView view{std::span<const double>(history_).first(idx(j) * width), width};
  if (options_.parallel) {
    kernels::accumulate_history(hist_w_, view, rhs);
  } else {
    kernels::accumulate_history_serial(hist_w_, view, rhs);
  }
  rhs[0] = 0.0;
  rhs[idx(M)] = 0.0;
  return rhs;
}

void IntegralScheme::step(int j) {
  if (j != done_ + 1 || j > mesh_->N()) {
    throw InvalidArgument("IntegralScheme::step: levels must be advanced in order");
  }
  double b_jj = 0.0;
  const std::vector<double> rhs = assemble_rhs(j, b_jj);

  const ImplicitStepSolver solver(op_, 1.0, b_jj);
  auto Vj = grid_.V_level(j);
  solver.solve(rhs, Vj);

  // F^j = f^j - L^M V^j for later levels.
  const std::size_t width = grid_.width();
  std::span<double> Fj = std::span<double>(history_).subspan(idx(j) * width, width);
  op_.apply(Vj, Fj);
  for (int i = 1; i < op_.M; ++i) Fj[idx(i)] = f_level_[idx(i)] - Fj[idx(i)];
  done_ = j;
}

SolutionGrid IntegralScheme::finish() {
  const double alpha = decomposed_->alpha();
  for (int j = 0; j <= done_; ++j) {
    auto V = grid_.V_level(j);
    auto U = grid_.U_level(j);
    const double ta = std::pow(mesh_->t(j), alpha);
    for (int i = 0; i <= grid_.M; ++i) {
      U[idx(i)] = decomposed_->z()[idx(i)] * ta + decomposed_->phi()[idx(i)] + V[idx(i)];
    }
  }
  return std::move(grid_);
}

SolutionGrid solve(const DecomposedProblem& decomposed, const TemporalMesh& mesh,
                   SolveOptions options) {
  IntegralScheme scheme(decomposed, mesh, options);
  for (int j = 1; j <= mesh.N(); ++j) scheme.step(j);
  return scheme.finish();
}

}  // namespace fracdiff
