#include "fracdiff/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracdiff/error.hpp"

namespace fracdiff::specfun {

namespace {

// Relative accuracy of gamma_fn, used for the series rounding estimate.
constexpr double kGammaRelErr = 2e-15;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return std::lgamma(x);
}

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  return std::tgamma(x);
}

double beta_fn(double a, double b) {
  require_positive(a, "beta_fn");
  require_positive(b, "beta_fn");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

MLSeries mittag_leffler_series(const MLParams& params, double z) {
  const double alpha = params.alpha;
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("mittag_leffler: alpha must lie in (0, 1]");
  }
  if (!(z <= 0.0 && z >= -params.z_max)) {
    throw DomainError("mittag_leffler: z must lie in [-z_max, 0], got " + std::to_string(z));
  }
  if (!(params.tol > 0.0) || params.max_terms < 10) {
    throw InvalidArgument("mittag_leffler: need tol > 0 and max_terms >= 10");
  }

  MLSeries out;
  if (z == 0.0) {
    out.value = 1.0;
    out.terms = 1;
    return out;
  }

  const double log_abs_z = std::log(-z);
  long double sum = 0.0L;
  double abs_sum = 0.0;
  double power = 1.0;  // z^k while it stays representable
  for (int k = 0; k < params.max_terms; ++k) {
    const double arg = alpha * k + 1.0;
    double term = 0.0;
    if (arg < 170.0) {
      term = power / gamma_fn(arg);
    } else {
      const double mag = std::exp(k * log_abs_z - log_gamma(arg));
      term = (k % 2 == 0) ? mag : -mag;
    }
    sum += term;
    abs_sum += std::abs(term);
    power *= z;
    out.terms = k + 1;

    // Lookahead: stop once the next term is below tolerance.
    const double next_arg = alpha * (k + 1) + 1.0;
    const double next_mag = std::exp((k + 1) * log_abs_z - log_gamma(next_arg));
    if (next_mag < params.tol) {
      out.value = static_cast<double>(sum);
      out.error_bound = abs_sum * kGammaRelErr;
      if (out.error_bound > 1e-12) {
        throw ConvergenceError("mittag_leffler: cancellation in the series exceeds 1e-12 at z = " +
                               std::to_string(z));
      }
      return out;
    }
  }
  throw ConvergenceError("mittag_leffler: series did not converge within max_terms at z = " +
                         std::to_string(z));
}

double mittag_leffler(const MLParams& params, double z) {
  return mittag_leffler_series(params, z).value;
}

double mittag_leffler(double alpha, double z) {
  MLParams params;
  params.alpha = alpha;
  return mittag_leffler_series(params, z).value;
}

}  // namespace fracdiff::specfun
