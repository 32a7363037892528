#include "fracdiff/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fracdiff/error.hpp"
#include "fracdiff/specfun.hpp"

namespace fracdiff {

namespace {

constexpr double kCompatTol = 1e-10;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<double> sample(const SpaceFn& fn, const SpatialMesh& spatial) {
  std::vector<double> out(idx(spatial.M()) + 1);
  for (int i = 0; i <= spatial.M(); ++i) out[idx(i)] = fn(spatial.x(i));
  return out;
}

}  // namespace

void ProblemSpec::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("problem: alpha must lie in (0, 1)");
  if (!(p > 0.0)) throw InvalidArgument("problem: p must be positive");
  if (!(l > 0.0) || !(T > 0.0)) throw InvalidArgument("problem: l and T must be positive");
  if (!c || !f || !f0 || !phi || !phi_dd) {
    throw InvalidArgument("problem: c, f, f0, phi and phi_dd are required");
  }
  const double corners[] = {phi(0.0), phi(l), f0(0.0), f0(l)};
  for (double v : corners) {
    if (std::abs(v) > kCompatTol) {
      throw InvalidArgument("problem: data violate corner compatibility (phi and f(., 0) must vanish at x = 0, l)");
    }
  }
}

std::vector<double> compute_z(const ProblemSpec& spec, const SpatialMesh& spatial) {
  const double inv_gamma = 1.0 / specfun::gamma_fn(spec.alpha + 1.0);
  auto formula = [&](double x) {
    return (spec.f0(x) + spec.p * spec.phi_dd(x) - spec.c(x) * spec.phi(x)) * inv_gamma;
  };

  if (!spec.z_provider) return sample(formula, spatial);

  std::vector<double> z = sample(spec.z_provider, spatial);
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> pick(0, spatial.M());
  for (int n = 0; n < 3; ++n) {
    const int i = pick(rng);
    const double expected = formula(spatial.x(i));
    if (std::abs(z[idx(i)] - expected) > kCompatTol * std::max(1.0, std::abs(expected))) {
      throw MismatchError("compute_z: provider disagrees with the defining formula at x = " +
                          std::to_string(spatial.x(i)));
    }
  }
  return z;
}

std::vector<double> compute_z_dd(const ProblemSpec& spec, const SpatialMesh& spatial,
                                 std::span<const double> z) {
  if (spec.z_dd_provider) return sample(spec.z_dd_provider, spatial);

  const int M = spatial.M();
  const double inv_h2 = 1.0 / (spatial.h() * spatial.h());
  std::vector<double> out(idx(M) + 1);
  for (int i = 1; i < M; ++i) {
    out[idx(i)] = (z[idx(i - 1)] - 2.0 * z[idx(i)] + z[idx(i + 1)]) * inv_h2;
  }
  if (M >= 3) {
    out[0] = (2.0 * z[0] - 5.0 * z[1] + 4.0 * z[2] - z[3]) * inv_h2;
    out[idx(M)] = (2.0 * z[idx(M)] - 5.0 * z[idx(M - 1)] + 4.0 * z[idx(M - 2)] - z[idx(M - 3)]) *
                  inv_h2;
  } else {
    out[0] = out[1];
    out[2] = out[1];
  }
  return out;
}

DecomposedProblem::DecomposedProblem(ProblemSpec spec, SpatialMesh spatial)
    : spec_(std::move(spec)), spatial_(std::move(spatial)) {
  spec_.validate();
  c_ = sample(spec_.c, spatial_);
  if (std::any_of(c_.begin(), c_.end(), [](double v) { return v < 0.0; })) {
    throw InvalidArgument("problem: reaction coefficient c must be nonnegative");
  }
  f0_ = sample(spec_.f0, spatial_);
  phi_ = sample(spec_.phi, spatial_);
  z_ = compute_z(spec_, spatial_);
  z_dd_ = compute_z_dd(spec_, spatial_, z_);
  inv_gamma_alpha1_ = 1.0 / specfun::gamma_fn(spec_.alpha + 1.0);
  G_coefficient_ =
      specfun::beta_fn(spec_.alpha + 1.0, spec_.alpha) / specfun::gamma_fn(spec_.alpha);
}

double DecomposedProblem::g(int i, double t) const {
  const std::size_t k = idx(i);
  return -f0_[k] + (spec_.p * z_dd_[k] - c_[k] * z_[k]) * std::pow(t, spec_.alpha);
}

double DecomposedProblem::G(int i, double t) const {
  const std::size_t k = idx(i);
  const double ta = std::pow(t, spec_.alpha);
  return -ta * inv_gamma_alpha1_ * f0_[k] +
         ta * ta * G_coefficient_ * (spec_.p * z_dd_[k] - c_[k] * z_[k]);
}

double DecomposedProblem::reconstruct(int i, double t, double v) const {
  return z_[idx(i)] * std::pow(t, spec_.alpha) + phi_[idx(i)] + v;
}

double g_term(const DecomposedProblem& decomposed, int i, double t) { return decomposed.g(i, t); }
double G_term(const DecomposedProblem& decomposed, int i, double t) { return decomposed.G(i, t); }

std::pair<ProblemSpec, ExactSolution> example_problem(double alpha, double T) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("example: alpha must lie in (0, 1)");
  const double inv_g4 = 1.0 / specfun::gamma_fn(4.0 - alpha);
  const double inv_g1 = 1.0 / specfun::gamma_fn(alpha + 1.0);

  ProblemSpec spec;
  spec.alpha = alpha;
  spec.p = 1.0;
  spec.l = std::numbers::pi;
  spec.T = T;
  spec.c = [](double) { return 0.0; };
  spec.f = [alpha, inv_g4](double x, double t) {
    return (6.0 * std::pow(t, 3.0 - alpha) * inv_g4 + t * t * t) * std::sin(x);
  };
  spec.f0 = [](double) { return 0.0; };
  spec.phi = [](double x) { return std::sin(x); };
  spec.phi_dd = [](double x) { return -std::sin(x); };
  spec.z_provider = [inv_g1](double x) { return -std::sin(x) * inv_g1; };
  spec.z_dd_provider = [inv_g1](double x) { return std::sin(x) * inv_g1; };

  ExactSolution exact;
  exact.description = "(E_alpha(-t^alpha) + t^3) sin x";
  exact.space_factor = [](double x) { return std::sin(x); };
  exact.time_factor = [alpha](double t) {
    return specfun::mittag_leffler(alpha, -std::pow(t, alpha)) + t * t * t;
  };
  exact.u = [space = exact.space_factor, time = exact.time_factor](double x, double t) {
    return time(t) * space(x);
  };
  return {std::move(spec), std::move(exact)};
}

ProblemSpec sine_mode_problem(const SineModeCoefficients& k) {
  if (k.mode < 1) throw InvalidArgument("sine mode: mode must be >= 1");
  if (!(k.beta >= 0.0)) throw InvalidArgument("sine mode: beta must be nonnegative");
  const double kappa = k.mode * std::numbers::pi / k.l;

  ProblemSpec spec;
  spec.alpha = k.alpha;
  spec.p = k.p;
  spec.l = k.l;
  spec.T = k.T;
  spec.c = [c = k.c](double) { return c; };
  spec.f = [kappa, f0 = k.f0, f1 = k.f1, beta = k.beta](double x, double t) {
    return (f0 + f1 * std::pow(t, beta)) * std::sin(kappa * x);
  };
  spec.f0 = [kappa, f0 = k.f0, f1 = k.f1, beta = k.beta](double x) {
    return (f0 + (beta == 0.0 ? f1 : 0.0)) * std::sin(kappa * x);
  };
  spec.phi = [kappa, a = k.amplitude](double x) { return a * std::sin(kappa * x); };
  spec.phi_dd = [kappa, a = k.amplitude](double x) {
    return -a * kappa * kappa * std::sin(kappa * x);
  };
  // z is a multiple of the same sine mode, so z'' = -kappa^2 z.
  const double f_at_zero = k.f0 + (k.beta == 0.0 ? k.f1 : 0.0);
  const double z_amp = (f_at_zero - k.p * k.amplitude * kappa * kappa - k.c * k.amplitude) /
                       specfun::gamma_fn(k.alpha + 1.0);
  spec.z_dd_provider = [kappa, z_amp](double x) {
    return -kappa * kappa * z_amp * std::sin(kappa * x);
  };
  spec.validate();
  return spec;
}

}  // namespace fracdiff
