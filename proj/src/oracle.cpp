#include "fracdiff/oracle.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <utility>

#include "fracdiff/error.hpp"

namespace fracdiff::oracle {

double integrate(const EndpointIntegrand& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double len = b - a;
  // Work on [0, 1]: the error estimate is absolute, which is meaningless on
  // the 1e-19-long cells of strongly graded meshes.
  // Boost passes xc = -s near 0 and xc = 1 - s near 1.
  auto g = [&](double s, double xc) {
    double left = s;
    double right = 1.0 - s;
    if (s < 0.5) {
      if (xc != 0.0) left = -xc;
    } else {
      if (xc != 0.0) right = xc;
    }
    return f(len * left, len * right);
  };
  double error = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(g, 0.0, 1.0, tol, &error, &l1);
  if (!(error <= 1e-9 * std::max(1.0, l1))) {
    throw ConvergenceError("oracle::integrate: quadrature did not converge");
  }
  return value * len;
}

WeightPair product_weights(const TemporalMesh& mesh, double alpha, int j, int k) {
  const double lo = mesh.t(k - 1);
  const double hi = mesh.t(k);
  const double tj = mesh.t(j);
  const double dt = hi - lo;
  const double inv = 1.0 / std::tgamma(alpha);
  // t_j - s = (t_j - t_k) + (t_k - s), exact near the singular endpoint.
  const double gap = tj - hi;
  auto kernel = [&](double to_right) { return std::pow(gap + to_right, alpha - 1.0); };
  const double a = integrate([&](double, double r) { return kernel(r) * r / dt; }, lo, hi);
  const double b = integrate([&](double l, double r) { return kernel(r) * l / dt; }, lo, hi);
  return {a * inv, b * inv};
}

double l1_coefficient(const TemporalMesh& mesh, double alpha, int j, int k) {
  const double lo = mesh.t(k - 1);
  const double hi = mesh.t(k);
  const double gap = mesh.t(j) - hi;
  const double value =
      integrate([&](double, double r) { return std::pow(gap + r, -alpha); }, lo, hi);
  return value / (hi - lo) / std::tgamma(1.0 - alpha);
}

double caputo_derivative(const std::function<double(double)>& u_prime, double alpha, double t) {
  const double value = integrate(
      [&](double s, double to_right) { return std::pow(to_right, -alpha) * u_prime(s); }, 0.0, t,
      1e-13);
  return value / std::tgamma(1.0 - alpha);
}

std::vector<double> dense_solve(std::vector<double> a, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (a[piv * n + col] == 0.0) throw SolverError("dense_solve: singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / a[col * n + col];
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

}  // namespace fracdiff::oracle
