#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracdiff/mesh.hpp"

namespace fracdiff {

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

/// Continuous problem D_t^alpha u - p u_xx + c(x) u = f on (0, l) x (0, T],
/// u(x, 0) = phi(x), homogeneous Dirichlet boundaries. All callables must be
/// pure: solvers evaluate them from several threads.
struct ProblemSpec {
  double alpha = 0.5;
  double p = 1.0;
  SpaceFn c;
  SpaceTimeFn f;
  SpaceFn f0;      // f(x, 0)
  SpaceFn phi;
  SpaceFn phi_dd;  // phi''
  double l = 1.0;
  double T = 1.0;
  SpaceFn z_provider;     // optional analytic z
  SpaceFn z_dd_provider;  // optional analytic z''

  /// Checks scalar ranges and corner compatibility phi(0) = phi(l) =
  /// f0(0) = f0(l) = 0 (to 1e-10). Throws InvalidArgument.
  void validate() const;
};

/// Exact solution. When both factors are set, u(x, t) = space(x) * time(t)
/// and error evaluation uses the factored form.
struct ExactSolution {
  SpaceTimeFn u;
  std::string description;
  SpaceFn space_factor;
  SpaceFn time_factor;

  bool separable() const { return static_cast<bool>(space_factor) && static_cast<bool>(time_factor); }
};

/// z(x_i) = (f0 + p phi'' - c phi)(x_i) / Gamma(alpha + 1). A z_provider, when
/// present, is used instead and cross-checked at three nodes (MismatchError
/// beyond 1e-10).
std::vector<double> compute_z(const ProblemSpec& spec, const SpatialMesh& spatial);

/// z''(x_i): analytic provider if set, else second-order finite differences
/// of z_vals (central inside, one-sided at the ends).
std::vector<double> compute_z_dd(const ProblemSpec& spec, const SpatialMesh& spatial,
                                 std::span<const double> z_vals);

/// The decomposition u = z t^alpha + phi + v sampled on a spatial mesh.
class DecomposedProblem {
 public:
  DecomposedProblem(ProblemSpec spec, SpatialMesh spatial);

  const ProblemSpec& spec() const { return spec_; }
  const SpatialMesh& spatial() const { return spatial_; }
  double alpha() const { return spec_.alpha; }

  std::span<const double> z() const { return z_; }
  std::span<const double> z_dd() const { return z_dd_; }
  std::span<const double> c() const { return c_; }
  std::span<const double> f0() const { return f0_; }
  std::span<const double> phi() const { return phi_; }

  /// Source of the v-problem: g(x_i, t) = -f0 + (p z'' - c z) t^alpha.
  double g(int i, double t) const;
  /// Fractional integral of g: G(x_i, t) = -t^alpha f0 / Gamma(alpha+1)
  ///   + t^{2 alpha} (p z'' - c z) B(alpha+1, alpha) / Gamma(alpha).
  double G(int i, double t) const;

  /// Reconstruction z(x_i) t^alpha + phi(x_i) + v.
  double reconstruct(int i, double t, double v) const;

 private:
  ProblemSpec spec_;
  SpatialMesh spatial_;
  std::vector<double> z_, z_dd_, c_, f0_, phi_;
  double inv_gamma_alpha1_;   // 1 / Gamma(alpha + 1)
  double G_coefficient_;      // B(alpha + 1, alpha) / Gamma(alpha)
};

double g_term(const DecomposedProblem& decomposed, int i, double t);
double G_term(const DecomposedProblem& decomposed, int i, double t);

/// Manufactured test case on (0, pi) x (0, 1]: p = 1, c = 0, phi = sin x,
/// u = (E_alpha(-t^alpha) + t^3) sin x, and
/// f = (6 t^{3-alpha} / Gamma(4 - alpha) + t^3) sin x.
std::pair<ProblemSpec, ExactSolution> example_problem(double alpha, double T = 1.0);

/// Single-mode family for the CLI: phi = A sin(k pi x / l),
/// f = (f0 + f1 t^beta) sin(k pi x / l), constant p and c.
struct SineModeCoefficients {
  double alpha = 0.5;
  double p = 1.0;
  double c = 0.0;
  double l = 1.0;
  double T = 1.0;
  int mode = 1;
  double amplitude = 1.0;
  double f0 = 0.0;
  double f1 = 0.0;
  double beta = 1.0;
};

ProblemSpec sine_mode_problem(const SineModeCoefficients& coeffs);

}  // namespace fracdiff
