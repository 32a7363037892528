#pragma once

namespace fracdiff::specfun {

/// log Gamma(x), x > 0 (libm).
double log_gamma(double x);

/// Gamma(x), x > 0 (libm); DomainError otherwise.
double gamma_fn(double x);

/// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), evaluated through
/// log-gamma so large arguments do not overflow.
double beta_fn(double a, double b);

struct MLParams {
  double alpha = 0.5;
  double tol = 1e-15;     // stop once the next term drops below this
  int max_terms = 200;
  double z_max = 5.0;     // supported range is [-z_max, 0]
};

struct MLSeries {
  double value = 0.0;
  int terms = 0;           // number of terms summed
  double error_bound = 0;  // rounding estimate, sum |term| * eps_gamma
};

/// One-parameter Mittag-Leffler function E_alpha(z) = sum z^k / Gamma(alpha k + 1)
/// on the negative real axis, summed as a Taylor series.
///
/// Throws DomainError outside 0 < alpha <= 1, -z_max <= z <= 0, and
/// ConvergenceError if max_terms is exhausted or cancellation in the
/// alternating series would push the rounding error past 1e-12.
MLSeries mittag_leffler_series(const MLParams& params, double z);

double mittag_leffler(const MLParams& params, double z);
double mittag_leffler(double alpha, double z);

}  // namespace fracdiff::specfun
