#pragma once

#include <vector>

#include "fracdiff/integral_scheme.hpp"
#include "fracdiff/mesh.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/solution.hpp"

namespace fracdiff {

enum class L1Variant { Standard, Preprocessed };

/// How d(j, k) is evaluated. Stable rewrites the difference of powers with
/// expm1/log1p; Direct subtracts the two powers as written, which loses
/// digits when Delta t_k << t_j - t_{k-1} (strongly graded meshes).
enum class CoefficientEvaluation { Stable, Direct };

const char* to_string(L1Variant variant);

/// Grading exponent giving the best rate for each variant on a power mesh:
/// (2 - alpha) / alpha for Standard, (2 - alpha) / (2 alpha) for Preprocessed.
double optimal_grading(L1Variant variant, double alpha);

struct L1Config {
  double alpha = 0.5;
  double r = 1.0;
  L1Variant variant = L1Variant::Standard;
  int M = 64;
  int N = 64;
  ProblemSpec problem;
  CoefficientEvaluation evaluation = CoefficientEvaluation::Stable;
};

/// d(j, k) = [(t_j - t_{k-1})^{1-alpha} - (t_j - t_k)^{1-alpha}] / (Gamma(2-alpha) Delta t_k),
/// so that D^alpha u(t_j) ~ sum_k d(j, k) (u^k - u^{k-1}).
double l1_coefficient(int j, int k, const TemporalMesh& mesh, double alpha,
                      CoefficientEvaluation evaluation = CoefficientEvaluation::Stable);

/// d(j, 1..j) as a vector indexed from 0.
std::vector<double> l1_coefficients(int j, const TemporalMesh& mesh, double alpha,
                                    CoefficientEvaluation evaluation = CoefficientEvaluation::Stable);

/// L1 time stepping with central differences in space.
///
/// Standard: U^0 = phi and
///   (d(j,j) I + L^M) U^j = d(j,j) U^{j-1} - sum_{k<j} d(j,k)(U^k - U^{k-1}) + f^j.
/// Preprocessed: the same recursion for V with source f + g and V^0 = 0,
/// followed by U = z t^alpha + phi + V.
SolutionGrid l1_solve(const L1Config& config, SolveOptions options = {});

}  // namespace fracdiff
