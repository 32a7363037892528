#pragma once

#include <span>
#include <vector>

namespace fracdiff {

/// L^M V_i = -p (V_{i+1} - 2 V_i + V_{i-1}) / h^2 + c_i V_i on interior nodes.
struct DiscreteOperator {
  double p = 1.0;
  std::vector<double> c_vals;  // M + 1 entries
  double h = 1.0;
  int M = 2;

  /// Writes L^M row into out (size M + 1); out[0] = out[M] = 0.
  void apply(std::span<const double> row, std::span<double> out) const;
};

std::vector<double> apply_discrete_operator(const DiscreteOperator& op,
                                            std::span<const double> row);

/// Thomas elimination for a tridiagonal system. sub[0] and sup[n-1] are
/// ignored. Throws SolverError if a pivot vanishes.
void solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                       std::span<const double> sup, std::span<double> rhs_inout);

/// Solves (scale I + weight L^M) y = w on the interior with y_0 = y_M = 0.
/// rhs and out have M + 1 entries; the boundary entries of rhs are ignored.
/// Requires scale > 0 and weight >= 0 (strict diagonal dominance).
class ImplicitStepSolver {
 public:
  ImplicitStepSolver(const DiscreteOperator& op, double scale, double weight);

  void solve(std::span<const double> rhs, std::span<double> out) const;

 private:
  int M_;
  // LU factors of the interior (M - 1) x (M - 1) system.
  std::vector<double> lower_;     // multipliers l_i
  std::vector<double> pivot_inv_; // 1 / u_ii
  double off_;                    // constant super-diagonal
};

}  // namespace fracdiff
