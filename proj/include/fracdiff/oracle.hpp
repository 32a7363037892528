#pragma once

#include <functional>
#include <vector>

#include "fracdiff/integral_scheme.hpp"
#include "fracdiff/mesh.hpp"

// Independent reference computations. Nothing here calls into the solver
// code paths it is used to check: quadrature replaces closed-form weights
// and series, Gaussian elimination replaces the tridiagonal sweep.
namespace fracdiff::oracle {

/// Integrand receiving (x - a, b - x), both computed without cancellation
/// near the endpoints.
using EndpointIntegrand = std::function<double(double from_left, double to_right)>;

/// Tanh-sinh quadrature over [a, b]; tolerates integrable endpoint
/// singularities.
double integrate(const EndpointIntegrand& f, double a, double b, double tol = 1e-14);

/// Product weights by quadrature of
///   (1/Gamma(alpha)) int_{t_{k-1}}^{t_k} (t_j - s)^{alpha-1} hat(s) ds.
WeightPair product_weights(const TemporalMesh& mesh, double alpha, int j, int k);

/// L1 coefficient by quadrature of
///   (1/Gamma(1-alpha)) int_{t_{k-1}}^{t_k} (t_j - s)^{-alpha} ds / Delta t_k.
double l1_coefficient(const TemporalMesh& mesh, double alpha, int j, int k);

/// Caputo derivative (1/Gamma(1-alpha)) int_0^t (t - s)^{-alpha} u'(s) ds.
double caputo_derivative(const std::function<double(double)>& u_prime, double alpha, double t);

/// Dense Gaussian elimination with partial pivoting; `a` is row-major n x n.
std::vector<double> dense_solve(std::vector<double> a, std::vector<double> rhs);

}  // namespace fracdiff::oracle
