#include <catch_amalgamated.hpp>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "fracdiff/error.hpp"
#include "fracdiff/specfun.hpp"

using namespace fracdiff;
using namespace fracdiff::specfun;
using Catch::Approx;

TEST_CASE("gamma_fn at analytic points", "[specfun]") {
  CHECK(gamma_fn(1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == Approx(24.0).epsilon(1e-14));
  // 15 sqrt(pi) / 8
  CHECK(gamma_fn(3.5) == Approx(15.0 * std::sqrt(std::numbers::pi) / 8.0).epsilon(1e-14));
  // mpmath: Gamma(2.2) = 1.1018024908797128393
  CHECK(gamma_fn(2.2) == Approx(1.1018024908797128393).epsilon(1e-14));
  CHECK(gamma_fn(2.2) == Approx(1.2 * gamma_fn(1.2)).epsilon(1e-14));
}

TEST_CASE("gamma_fn satisfies the recurrence and matches references", "[specfun][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.1, 3.0);
  for (int n = 0; n < 20; ++n) {
    const double x = dist(rng);
    const double lhs = gamma_fn(x + 1.0);
    CHECK(std::abs(lhs - x * gamma_fn(x)) / lhs <= 1e-12);
  }
  // 20-digit references computed beforehand.
  const std::array<std::array<double, 3>, 7> ref{{{0.001, 999.4237724845954453, 6.9071788853838536617},
                                                  {0.37, 2.4035500200786532783, 0.87694681948487930234},
                                                  {1.5, 0.88622692545275801365, -0.12078223763524522235},
                                                  {7.25, 1155.3810139199896872, 7.0521854507385394449},
                                                  {33.3, 7.4875775965226323274e+35, 82.603723581654943008},
                                                  {101.7, 2.358182551604510936e+159, 366.96892100315507869},
                                                  {169.5, 3.281470451067846378e+303, 698.87157480738416584}}};
  for (const auto& [x, g, lg] : ref) {
    CHECK(gamma_fn(x) == Approx(g).epsilon(1e-13));
    CHECK(log_gamma(x) == Approx(lg).epsilon(1e-14));
  }
}

TEST_CASE("gamma_fn rejects nonpositive arguments", "[specfun]") {
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(-0.1), DomainError);
}

TEST_CASE("beta_fn", "[specfun]") {
  CHECK(beta_fn(1.0, 1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(1.5, 0.5) == Approx(std::numbers::pi / 2.0).epsilon(1e-13));
  const double a = 0.3;
  // mpmath: B(1.3, 0.3) = 3.0048118418655073671
  CHECK(beta_fn(a + 1.0, a) == Approx(3.0048118418655073671).epsilon(1e-12));
  CHECK(beta_fn(a + 1.0, a) ==
        Approx(gamma_fn(a + 1.0) * gamma_fn(a) / gamma_fn(2.0 * a + 1.0)).epsilon(1e-12));
  // Large arguments go through log-gamma without overflow.
  CHECK(std::isfinite(beta_fn(300.0, 200.0)));
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(beta_fn(1.0, -2.0), DomainError);
}

TEST_CASE("Mittag-Leffler reference values", "[specfun]") {
  for (double alpha : {0.1, 0.5, 1.0}) CHECK(mittag_leffler(alpha, 0.0) == 1.0);

  for (int n = 0; n <= 20; ++n) {
    const double z = -n / 20.0;
    CHECK(std::abs(mittag_leffler(1.0, z) - std::exp(z)) <= 1e-12);
  }
  CHECK(std::abs(mittag_leffler(1.0, -5.0) - std::exp(-5.0)) <= 1e-12);

  // e^{x^2} erfc(x), x = 0.25, 0.5, 1 (mpmath, 40 digits)
  CHECK(std::abs(mittag_leffler(0.5, -0.25) - 0.77034654773099674392) <= 1e-12);
  CHECK(std::abs(mittag_leffler(0.5, -0.5) - 0.61569034419292587487) <= 1e-12);
  CHECK(std::abs(mittag_leffler(0.5, -1.0) - 0.42758357615580700441) <= 1e-12);

  // E_alpha(-1) by 400-term mpmath summation
  CHECK(std::abs(mittag_leffler(0.2, -1.0) - 0.47110068893348294927) <= 1e-12);
  CHECK(std::abs(mittag_leffler(0.4, -1.0) - 0.44206335968522350534) <= 1e-12);
  CHECK(std::abs(mittag_leffler(0.6, -1.0) - 0.4133273409431062974) <= 1e-12);
  CHECK(std::abs(mittag_leffler(0.8, -1.0) - 0.38694857861897685146) <= 1e-12);
}

TEST_CASE("Mittag-Leffler is decreasing and bounded on [-1, 0]", "[specfun][property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alpha_dist(0.05, 1.0);
  std::uniform_real_distribution<double> z_dist(-1.0, 0.0);
  for (int n = 0; n < 200; ++n) {
    const double alpha = alpha_dist(rng);
    double z1 = z_dist(rng);
    double z2 = z_dist(rng);
    if (z1 > z2) std::swap(z1, z2);
    if (z2 - z1 < 1e-6) continue;
    const double e1 = mittag_leffler(alpha, z1);
    const double e2 = mittag_leffler(alpha, z2);
    CHECK(e1 < e2);
    CHECK(e1 > 0.0);
    CHECK(e2 <= 1.0);
  }
}

TEST_CASE("Mittag-Leffler truncation is stable", "[specfun][property]") {
  MLParams params;
  for (double alpha : {0.2, 0.5, 0.9}) {
    params.alpha = alpha;
    const auto s = mittag_leffler_series(params, -1.0);
    double extra = 0.0;
    for (int k = s.terms; k < s.terms + 10; ++k) {
      extra += std::pow(-1.0, k) / std::tgamma(alpha * k + 1.0);
    }
    CHECK(std::abs(extra) < params.tol);
  }
}

TEST_CASE("Mittag-Leffler argument checks", "[specfun]") {
  CHECK_THROWS_AS(mittag_leffler(0.0, -0.5), DomainError);
  CHECK_THROWS_AS(mittag_leffler(1.2, -0.5), DomainError);
  CHECK_THROWS_AS(mittag_leffler(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(mittag_leffler(0.5, -6.0), DomainError);

  MLParams tight;
  tight.alpha = 0.5;
  tight.max_terms = 10;
  CHECK_THROWS_AS(mittag_leffler(tight, -1.0), ConvergenceError);

  // Small alpha at the edge of the range: the alternating series would lose
  // too many digits, which is reported instead of returned.
  CHECK_THROWS_AS(mittag_leffler(0.3, -5.0), ConvergenceError);
}
