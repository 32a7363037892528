#pragma once

#include <span>
#include <vector>

#include "fracdiff/mesh.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/solution.hpp"
#include "fracdiff/tridiag.hpp"

namespace fracdiff {

/// Product-integration weights for
///   (1/Gamma(alpha)) int_0^{t_j} (t_j - s)^{alpha-1} y(s) ds
/// with y replaced by its piecewise-linear interpolant:
///   a(j, k) multiplies y(t_{k-1}), b(j, k) multiplies y(t_k), 1 <= k <= j.
struct WeightPair {
  double a = 0.0;
  double b = 0.0;
};

WeightPair product_weights(const TemporalMesh& mesh, double alpha, int j, int k);
double weight_a(int j, int k, const TemporalMesh& mesh, double alpha);
double weight_b(int j, int k, const TemporalMesh& mesh, double alpha);

class QuadWeights {
 public:
  QuadWeights(const TemporalMesh& mesh, double alpha) : mesh_(&mesh), alpha_(alpha) {}

  double a(int j, int k) const { return weight_a(j, k, *mesh_, alpha_); }
  double b(int j, int k) const { return weight_b(j, k, *mesh_, alpha_); }
  double alpha() const { return alpha_; }
  const TemporalMesh& mesh() const { return *mesh_; }

  /// Coefficients of the explicit history at step j, level m = 0..j-1:
  /// w_0 = a(j,1), w_m = a(j,m+1) + b(j,m). Also returns b(j,j).
  double history_weights(int j, std::vector<double>& out) const;

 private:
  const TemporalMesh* mesh_;
  double alpha_;
};

DiscreteOperator make_discrete_operator(const DecomposedProblem& decomposed);

struct SolveOptions {
  bool parallel = true;  // OpenMP history kernel; false uses the serial reference
};

/// Time stepper for the discretized integral equation
///   V^j + b(j,j) L^M V^j = V^0 + sum_k a(j,k)(f^{k-1} - L^M V^{k-1})
///                          + sum_{k<j} b(j,k)(f^k - L^M V^k) + b(j,j) f^j + G^j.
class IntegralScheme {
 public:
  IntegralScheme(const DecomposedProblem& decomposed, const TemporalMesh& mesh,
                 SolveOptions options = {});

  /// Advances to level j; levels 1..j-1 must already be computed.
  void step(int j);
  int steps_done() const { return done_; }

  const SolutionGrid& grid() const { return grid_; }
  /// Fills U = z t^alpha + phi + V on every computed level and releases the
  /// grid.
  SolutionGrid finish();

  /// Right-hand side of the level-j system (interior entries), exposed for
  /// testing against an independent dense solve.
  std::vector<double> assemble_rhs(int j, double& implicit_weight);

 private:
  const DecomposedProblem* decomposed_;
  const TemporalMesh* mesh_;
  SolveOptions options_;
  QuadWeights weights_;
  DiscreteOperator op_;
  SolutionGrid grid_;
  std::vector<double> history_;  // F^m = f^m - L^M V^m, level-major
  std::vector<double> f_level_;
  std::vector<double> hist_w_;
  int done_ = 0;
};

/// Runs every step and reconstructs U. Cost O(N^2 M).
SolutionGrid solve(const DecomposedProblem& decomposed, const TemporalMesh& mesh,
                   SolveOptions options = {});

}  // namespace fracdiff
