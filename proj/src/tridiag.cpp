#include "fracdiff/tridiag.hpp"

#include <cmath>
#include <string>

#include "fracdiff/error.hpp"

namespace fracdiff {

namespace {
std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

void DiscreteOperator::apply(std::span<const double> row, std::span<double> out) const {
  const double k = p / (h * h);
  out[0] = 0.0;
  out[idx(M)] = 0.0;
  for (int i = 1; i < M; ++i) {
    out[idx(i)] = -k * (row[idx(i + 1)] - 2.0 * row[idx(i)] + row[idx(i - 1)]) +
                  c_vals[idx(i)] * row[idx(i)];
  }
}

std::vector<double> apply_discrete_operator(const DiscreteOperator& op,
                                            std::span<const double> row) {
  std::vector<double> out(idx(op.M) + 1);
  op.apply(row, out);
  return out;
}

void solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                       std::span<const double> sup, std::span<double> x) {
  const std::size_t n = diag.size();
  if (n == 0) return;
  std::vector<double> c(n);
  double beta = diag[0];
  if (beta == 0.0) throw SolverError("solve_tridiagonal: zero pivot at row 0");
  x[0] /= beta;
  for (std::size_t i = 1; i < n; ++i) {
    c[i] = sup[i - 1] / beta;
    beta = diag[i] - sub[i] * c[i];
    if (beta == 0.0) throw SolverError("solve_tridiagonal: zero pivot at row " + std::to_string(i));
    x[i] = (x[i] - sub[i] * x[i - 1]) / beta;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i + 1] * x[i + 1];
}

ImplicitStepSolver::ImplicitStepSolver(const DiscreteOperator& op, double scale, double weight)
    : M_(op.M) {
  if (!(scale > 0.0) || !(weight >= 0.0)) {
    throw SolverError("ImplicitStepSolver: need scale > 0 and weight >= 0");
  }
  const double k = weight * op.p / (op.h * op.h);
  off_ = -k;
  const int n = M_ - 1;
  lower_.assign(idx(n), 0.0);
  pivot_inv_.assign(idx(n), 0.0);
  double prev_pivot = 0.0;
  for (int r = 0; r < n; ++r) {
    const double diag = scale + 2.0 * k + weight * op.c_vals[idx(r + 1)];
    double pivot = diag;
    if (r > 0) {
      lower_[idx(r)] = off_ / prev_pivot;
      pivot -= lower_[idx(r)] * off_;
    }
    // Diagonal dominance keeps the pivot >= scale.
    if (!(pivot > 0.0) || !std::isfinite(pivot)) {
      throw SolverError("ImplicitStepSolver: nonpositive pivot, matrix not diagonally dominant");
    }
    pivot_inv_[idx(r)] = 1.0 / pivot;
    prev_pivot = pivot;
  }
}

void ImplicitStepSolver::solve(std::span<const double> rhs, std::span<double> out) const {
  const int n = M_ - 1;
  out[0] = 0.0;
  out[idx(M_)] = 0.0;
  // Forward: y_r = rhs_r - l_r y_{r-1}; unknown r lives at node r + 1.
  for (int r = 0; r < n; ++r) {
    double y = rhs[idx(r + 1)];
    if (r > 0) y -= lower_[idx(r)] * out[idx(r)];
    out[idx(r + 1)] = y;
  }
  for (int r = n - 1; r >= 0; --r) {
    double y = out[idx(r + 1)];
    if (r < n - 1) y -= off_ * out[idx(r + 2)];
    out[idx(r + 1)] = y * pivot_inv_[idx(r)];
  }
}

}  // namespace fracdiff
