#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "fracdiff/error.hpp"
#include "fracdiff/oracle.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/specfun.hpp"

using namespace fracdiff;
using Catch::Approx;

namespace {

ProblemSpec zero_problem() {
  ProblemSpec spec;
  spec.alpha = 0.5;
  spec.l = 1.0;
  spec.c = [](double) { return 0.0; };
  spec.f = [](double, double) { return 0.0; };
  spec.f0 = [](double) { return 0.0; };
  spec.phi = [](double) { return 0.0; };
  spec.phi_dd = [](double) { return 0.0; };
  return spec;
}

// z = x^2 (l - x)^2 through f(x, 0), no analytic providers.
ProblemSpec quartic_problem(double alpha, double l) {
  ProblemSpec spec = zero_problem();
  spec.alpha = alpha;
  spec.l = l;
  const double g = std::tgamma(alpha + 1.0);
  spec.f0 = [g, l](double x) { return g * x * x * (l - x) * (l - x); };
  spec.f = [f0 = spec.f0](double x, double) { return f0(x); };
  return spec;
}

}  // namespace

TEST_CASE("compute_z for the manufactured example", "[problem]") {
  for (double alpha : {0.2, 0.5, 0.8}) {
    auto [spec, exact] = example_problem(alpha);
    const SpatialMesh x = build_spatial_mesh(spec.l, 32);
    const auto z = compute_z(spec, x);
    for (int i = 0; i <= 32; ++i) {
      CHECK(z[static_cast<std::size_t>(i)] ==
            Approx(-std::sin(x.x(i)) / std::tgamma(alpha + 1.0)).margin(1e-14));
    }
    CHECK(std::abs(z.front()) < 1e-10);
    CHECK(std::abs(z.back()) < 1e-10);

    // Formula path (providers removed) agrees with the provider path.
    spec.z_provider = nullptr;
    spec.z_dd_provider = nullptr;
    const auto z_formula = compute_z(spec, x);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z_formula[i] == Approx(z[i]).margin(1e-14));
  }
}

TEST_CASE("compute_z on zero data and provider mismatch", "[problem]") {
  const ProblemSpec spec = zero_problem();
  const SpatialMesh x = build_spatial_mesh(1.0, 8);
  for (double v : compute_z(spec, x)) CHECK(v == 0.0);

  ProblemSpec wrong = spec;
  wrong.z_provider = [](double x) { return 1e-3 * std::sin(std::numbers::pi * x) + 1.0; };
  CHECK_THROWS_AS(compute_z(wrong, x), MismatchError);
}

TEST_CASE("compute_z_dd analytic and fallback", "[problem]") {
  auto [spec, exact] = example_problem(0.4);
  const SpatialMesh x = build_spatial_mesh(spec.l, 16);
  const auto z = compute_z(spec, x);
  const auto zdd = compute_z_dd(spec, x, z);
  for (int i = 0; i <= 16; ++i) {
    CHECK(zdd[static_cast<std::size_t>(i)] ==
          Approx(std::sin(x.x(i)) / std::tgamma(1.4)).margin(1e-14));
  }

  // Linear z: every second difference vanishes.
  ProblemSpec lin = zero_problem();
  const SpatialMesh xl = build_spatial_mesh(1.0, 10);
  std::vector<double> linear(11);
  for (int i = 0; i <= 10; ++i) linear[static_cast<std::size_t>(i)] = 3.0 * xl.x(i) - 1.0;
  for (double v : compute_z_dd(lin, xl, linear)) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("compute_z_dd fallback converges at second order", "[problem]") {
  const double l = 2.0;
  const ProblemSpec spec = quartic_problem(0.6, l);
  auto exact_dd = [l](double x) { return 2.0 * (l - x) * (l - x) - 8.0 * x * (l - x) + 2.0 * x * x; };
  std::vector<double> errors;
  for (int M : {16, 32, 64, 128}) {
    const SpatialMesh x = build_spatial_mesh(l, M);
    const auto z = compute_z(spec, x);
    const auto zdd = compute_z_dd(spec, x, z);
    double worst = 0.0;
    for (int i = 0; i <= M; ++i) worst = std::max(worst, std::abs(zdd[static_cast<std::size_t>(i)] - exact_dd(x.x(i))));
    errors.push_back(worst);
  }
  for (std::size_t n = 0; n + 1 < errors.size(); ++n) {
    CHECK(std::log2(errors[n] / errors[n + 1]) == Approx(2.0).margin(0.05));
  }
}

TEST_CASE("g and G for the manufactured example", "[problem][property]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> t_dist(0.0, 1.0);
  for (double alpha : {0.2, 0.45, 0.8}) {
    auto [spec, exact] = example_problem(alpha);
    const DecomposedProblem d(spec, build_spatial_mesh(spec.l, 20));
    std::uniform_int_distribution<int> i_dist(0, 20);
    for (int n = 0; n < 10; ++n) {
      const int i = i_dist(rng);
      const double t = t_dist(rng);
      const double s = std::sin(d.spatial().x(i));
      CHECK(std::abs(g_term(d, i, t) - std::pow(t, alpha) * s / std::tgamma(alpha + 1.0)) <= 1e-12);
      CHECK(std::abs(G_term(d, i, t) - std::pow(t, 2 * alpha) * s / std::tgamma(2 * alpha + 1.0)) <= 1e-12);
    }
    for (int i = 0; i <= 20; ++i) {
      CHECK(G_term(d, i, 0.0) == 0.0);
      CHECK(g_term(d, i, 0.0) == -d.f0()[static_cast<std::size_t>(i)]);
      // v(x, 0) = 0: the reconstruction returns phi at t = 0.
      CHECK(d.reconstruct(i, 0.0, 0.0) == d.phi()[static_cast<std::size_t>(i)]);
    }
  }

  const DecomposedProblem zero(zero_problem(), build_spatial_mesh(1.0, 8));
  for (int i = 0; i <= 8; ++i) {
    CHECK(zero.g(i, 0.7) == 0.0);
    CHECK(zero.G(i, 0.7) == 0.0);
  }
}

TEST_CASE("G is the fractional integral of g", "[problem]") {
  // G(x, t) = (1/Gamma(alpha)) int_0^t (t - s)^{alpha-1} g(x, s) ds, with a
  // nonzero f(x, 0) and reaction term so every piece of G is exercised.
  ProblemSpec spec = zero_problem();
  spec.alpha = 0.35;
  spec.l = std::numbers::pi;
  spec.p = 1.3;
  spec.c = [](double x) { return 1.0 + x; };
  spec.f0 = [](double x) { return std::sin(2 * x); };
  spec.f = [](double x, double t) { return std::sin(2 * x) * (1 + t); };
  spec.phi = [](double x) { return std::sin(x); };
  spec.phi_dd = [](double x) { return -std::sin(x); };
  const DecomposedProblem d(spec, build_spatial_mesh(spec.l, 40));
  for (int i : {5, 13, 27}) {
    for (double t : {0.1, 0.6, 1.0}) {
      const double integral = oracle::integrate(
          [&](double s, double to_right) { return std::pow(to_right, spec.alpha - 1.0) * d.g(i, s); },
          0.0, t);
      CHECK(d.G(i, t) == Approx(integral / std::tgamma(spec.alpha)).epsilon(1e-10));
    }
  }
}

TEST_CASE("example problem data", "[problem]") {
  auto [spec, exact] = example_problem(0.5);
  CHECK(spec.l == std::numbers::pi);
  CHECK(spec.T == 1.0);
  // 6 / Gamma(3.5) + 1, mpmath 2.8054066673528201182
  CHECK(spec.f(std::numbers::pi / 2, 1.0) == Approx(2.8054066673528201182).epsilon(1e-13));
  for (double x : {0.3, 1.0, 2.5}) CHECK(exact.u(x, 0.0) == Approx(std::sin(x)).epsilon(1e-15));
  for (double t : {0.0, 0.2, 1.0}) {
    CHECK(std::abs(exact.u(0.0, t)) <= 1e-12);
    CHECK(std::abs(exact.u(std::numbers::pi, t)) <= 1e-12);
  }
  CHECK_THROWS_AS(example_problem(1.0), InvalidArgument);
}

TEST_CASE("manufactured source matches the Caputo derivative", "[problem][oracle]") {
  // D^alpha u + u = f because -u_xx = u. u_t is summed here term by term,
  // independently of the library's Mittag-Leffler routine.
  const double points[][3] = {{0.2, 0.3, 0.05}, {0.5, 1.1, 0.4}, {0.5, 2.0, 1.0},
                              {0.7, 0.9, 0.7}, {0.85, 1.5, 0.2}};
  for (const auto& pt : points) {
    const double alpha = pt[0];
    const double x = pt[1];
    const double t = pt[2];
    auto time_part = [alpha](double s) {
      double sum = 0.0;
      for (int k = 0; k < 200; ++k) sum += std::pow(-1.0, k) * std::pow(s, alpha * k) / std::tgamma(alpha * k + 1.0);
      return sum + s * s * s;
    };
    auto time_deriv = [alpha](double s) {
      double sum = 0.0;
      for (int k = 1; k < 200; ++k) {
        const double term = std::pow(s, alpha * k - 1.0) / std::tgamma(alpha * k);
        sum += (k % 2 == 0 ? term : -term);
        if (std::abs(term) < 1e-18 && k > 10) break;
      }
      return sum + 3.0 * s * s;
    };
    const double caputo = oracle::caputo_derivative(time_deriv, alpha, t) * std::sin(x);
    auto [spec, exact] = example_problem(alpha);
    const double u = time_part(t) * std::sin(x);
    CHECK(std::abs(caputo + u - spec.f(x, t)) <= 1e-6);
  }
}

TEST_CASE("problem validation", "[problem]") {
  ProblemSpec bad = zero_problem();
  bad.phi = [](double x) { return 1.0 + x; };
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);

  ProblemSpec neg = zero_problem();
  neg.c = [](double) { return -1.0; };
  CHECK_THROWS_AS(DecomposedProblem(neg, build_spatial_mesh(1.0, 4)), InvalidArgument);

  ProblemSpec missing = zero_problem();
  missing.f = nullptr;
  CHECK_THROWS_AS(missing.validate(), InvalidArgument);
}

TEST_CASE("sine-mode family", "[problem]") {
  SineModeCoefficients k;
  k.alpha = 0.4;
  k.l = 2.0;
  k.mode = 2;
  k.amplitude = 1.5;
  k.c = 0.5;
  k.f0 = 0.0;
  k.f1 = 2.0;
  k.beta = 1.0;
  const ProblemSpec spec = sine_mode_problem(k);
  const SpatialMesh x = build_spatial_mesh(k.l, 64);
  const auto z = compute_z(spec, x);
  // Analytic z'' provider agrees with the finite-difference fallback.
  ProblemSpec no_provider = spec;
  no_provider.z_dd_provider = nullptr;
  const auto zdd_analytic = compute_z_dd(spec, x, z);
  const auto zdd_fd = compute_z_dd(no_provider, x, z);
  double scale = 0.0;
  for (double v : zdd_analytic) scale = std::max(scale, std::abs(v));
  REQUIRE(scale > 0.0);
  for (int i = 1; i < 64; ++i) {
    CHECK(zdd_fd[static_cast<std::size_t>(i)] ==
          Approx(zdd_analytic[static_cast<std::size_t>(i)]).margin(5e-3 * scale));
  }
}
