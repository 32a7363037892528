#include "fracdiff/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "fracdiff/harness.hpp"
#include "fracdiff/integral_scheme.hpp"
#include "fracdiff/l1_baselines.hpp"
#include "fracdiff/oracle.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/tridiag.hpp"

namespace fracdiff {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

PropertyResult make(std::string name, double worst, double limit, std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.worst = worst;
  r.limit = limit;
  r.passed = std::isfinite(worst) && worst <= limit;
  r.detail = std::move(detail);
  return r;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

DiscreteOperator random_operator(int M, std::mt19937_64& rng, bool with_reaction) {
  std::uniform_real_distribution<double> c_dist(0.0, 3.0);
  DiscreteOperator op;
  op.M = M;
  op.p = 1.0;
  op.h = std::numbers::pi / M;
  op.c_vals.assign(idx(M) + 1, 0.0);
  if (with_reaction) {
    for (double& c : op.c_vals) c = c_dist(rng);
  }
  return op;
}

// --- specfun -------------------------------------------------------------

PropertyResult gamma_recurrence(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.1, 3.0);
  double worst = 0.0;
  for (int n = 0; n < 30; ++n) {
    const double x = n < 10 ? 0.1 + 0.29 * n : dist(rng);
    const double lhs = specfun::gamma_fn(x + 1.0);
    worst = std::max(worst, std::abs(lhs - x * specfun::gamma_fn(x)) / lhs);
  }
  return make("gamma recurrence", worst, 1e-12);
}

PropertyResult beta_vs_gamma(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.05, 20.0);
  double worst = 0.0;
  for (int n = 0; n < 40; ++n) {
    const double a = dist(rng);
    const double b = dist(rng);
    const double direct = specfun::gamma_fn(a) * specfun::gamma_fn(b) / specfun::gamma_fn(a + b);
    worst = std::max(worst, rel(specfun::beta_fn(a, b), direct));
  }
  return make("beta through log-gamma vs gamma ratio", worst, 1e-12);
}

std::vector<PropertyResult> mittag_leffler_properties(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha_dist(0.1, 1.0);  // 200 terms suffice on [-1, 0]
  double mono_worst = 0.0;   // max of E(z1) - E(z2) for z1 < z2 (must be < 0)
  double bound_worst = 0.0;  // distance outside (0, 1]
  double trunc_worst = 0.0;
  for (int n = 0; n < 12; ++n) {
    specfun::MLParams params;
    params.alpha = n < 4 ? 0.2 * (n + 1) : alpha_dist(rng);
    double prev = specfun::mittag_leffler(params, 0.0);
    for (int s = 1; s <= 50; ++s) {
      const double z = -s / 50.0;
      const auto series = specfun::mittag_leffler_series(params, z);
      mono_worst = std::max(mono_worst, series.value - prev + 1e-300);
      prev = series.value;
      if (!(series.value > 0.0)) bound_worst = std::max(bound_worst, -series.value + 1e-300);
      if (series.value > 1.0) bound_worst = std::max(bound_worst, series.value - 1.0);

      // Ten more terms past the stopping point.
      double extra = 0.0;
      for (int k = series.terms; k < series.terms + 10; ++k) {
        extra += std::pow(z, k) / std::tgamma(params.alpha * k + 1.0);
      }
      trunc_worst = std::max(trunc_worst, std::abs(extra));
    }
  }
  return {make("mittag-leffler strictly decreasing on [-1,0]", mono_worst, 0.0),
          make("mittag-leffler within (0,1] on [-1,0]", bound_worst, 0.0),
          make("mittag-leffler truncation (10 extra terms)", trunc_worst, 1e-15)};
}

// --- mesh ----------------------------------------------------------------

std::vector<PropertyResult> mesh_properties(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha_dist(0.2, 0.95);
  std::uniform_int_distribution<int> n_dist(4, 1024);
  double order_worst = 0.0;
  double sum_worst = 0.0;
  double first_worst = 0.0;
  double steps_worst = 0.0;
  for (int n = 0; n < 40; ++n) {
    const double alpha = alpha_dist(rng);
    const int N = n_dist(rng);
    const double T = n % 2 == 0 ? 1.0 : 2.5;
    const TemporalMesh meshes[] = {build_three_piece_mesh(alpha, T, N),
                                   build_power_mesh(T, N, (2.0 - alpha) / alpha),
                                   build_power_mesh(T, N, 1.0)};
    for (const auto& mesh : meshes) {
      double sum = 0.0;
      for (int j = 1; j <= N; ++j) {
        if (!(mesh.step(j) > 0.0)) order_worst = 1.0;
        sum += mesh.step(j);
      }
      sum_worst = std::max(sum_worst, std::abs(sum - T) / T);
      if (mesh.t(0) != 0.0 || mesh.T() != T) order_worst = 1.0;
    }
    const auto& three = meshes[0];
    first_worst = std::max(first_worst, rel(three.t(1), T * std::pow(N, -2.0 / alpha)));
    if (!(three.step(2) > three.step(1) && three.step(1) > 0.0)) steps_worst = 1.0;
  }
  return {make("meshes strictly increasing, t_0 = 0, t_N = T", order_worst, 0.0),
          make("sum of time steps equals T", sum_worst, 1e-14),
          make("three-piece t_1 = T N^(-2/alpha)", first_worst, 1e-15),
          make("three-piece 0 < dt_1 < dt_2", steps_worst, 0.0)};
}

// --- problem -------------------------------------------------------------

std::vector<PropertyResult> problem_properties(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha_dist(0.1, 0.9);
  std::uniform_real_distribution<double> t_dist(0.0, 1.0);
  double boundary_worst = 0.0;
  double initial_worst = 0.0;
  double closed_worst = 0.0;
  for (int n = 0; n < 5; ++n) {
    const double alpha = alpha_dist(rng);
    const int M = 16 << n;
    auto [spec, exact] = example_problem(alpha);
    const DecomposedProblem d(spec, build_spatial_mesh(spec.l, M));
    boundary_worst = std::max({boundary_worst, std::abs(d.z()[0]), std::abs(d.z()[idx(M)])});
    for (int i = 0; i <= M; ++i) {
      initial_worst = std::max(initial_worst, std::abs(d.reconstruct(i, 0.0, 0.0) - d.phi()[idx(i)]));
    }
    std::uniform_int_distribution<int> i_dist(0, M);
    const double g1 = specfun::gamma_fn(alpha + 1.0);
    const double g2 = specfun::gamma_fn(2.0 * alpha + 1.0);
    for (int s = 0; s < 10; ++s) {
      const int i = i_dist(rng);
      const double t = t_dist(rng);
      const double x = d.spatial().x(i);
      const double g_closed = std::pow(t, alpha) * std::sin(x) / g1;
      const double G_closed = std::pow(t, 2.0 * alpha) * std::sin(x) / g2;
      closed_worst = std::max({closed_worst, std::abs(g_term(d, i, t) - g_closed),
                               std::abs(G_term(d, i, t) - G_closed)});
    }
  }
  return {make("z vanishes at x = 0, l", boundary_worst, 1e-10),
          make("decomposition reproduces phi at t = 0", initial_worst, 0.0),
          make("example g, G match closed forms", closed_worst, 1e-12)};
}

// --- integral scheme -----------------------------------------------------

std::vector<PropertyResult> weight_properties() {
  std::vector<PropertyResult> out;
  double positivity_worst = 0.0;
  double closed_worst = 0.0;
  PropertyResult sums = make("product weights exact for constants and linears", 0.0, 1e-12);
  for (int N : {8, 64, 512}) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const TemporalMesh mesh = build_three_piece_mesh(alpha, 1.0, N);
      const QuadWeights w(mesh, alpha);
      const auto r = check_weight_sums(mesh, alpha, [&](int j, int k) { return w.a(j, k); },
                                       [&](int j, int k) { return w.b(j, k); });
      sums.worst = std::max(sums.worst, r.worst);
      for (int j = 1; j <= N; ++j) {
        for (int k = 1; k <= j; ++k) {
          const auto ab = product_weights(mesh, alpha, j, k);
          if (!(ab.a > 0.0 && ab.b > 0.0)) positivity_worst = 1.0;
        }
        closed_worst = std::max(closed_worst, rel(w.b(j, j), std::pow(mesh.step(j), alpha) /
                                                                 std::tgamma(alpha + 2.0)));
      }
    }
  }
  sums.passed = sums.worst <= sums.limit;
  out.push_back(sums);
  out.push_back(make("product weights positive", positivity_worst, 0.0));
  out.push_back(make("b(j,j) = dt_j^alpha / Gamma(alpha+2)", closed_worst, 1e-13));

  double oracle_worst = 0.0;
  double l1_oracle_worst = 0.0;
  double l1_positive_worst = 0.0;
  for (int N = 4; N <= 8; ++N) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const TemporalMesh meshes[] = {build_three_piece_mesh(alpha, 1.0, N),
                                     build_power_mesh(1.0, N, 2.0), build_power_mesh(1.0, N, 1.0)};
      for (const auto& mesh : meshes) {
        for (int j = 1; j <= N; ++j) {
          for (int k = 1; k <= j; ++k) {
            const auto got = product_weights(mesh, alpha, j, k);
            const auto want = oracle::product_weights(mesh, alpha, j, k);
            oracle_worst = std::max({oracle_worst, std::abs(got.a - want.a), std::abs(got.b - want.b)});
            const double d = l1_coefficient(j, k, mesh, alpha);
            l1_oracle_worst = std::max(l1_oracle_worst, std::abs(d - oracle::l1_coefficient(mesh, alpha, j, k)));
            if (!(d > 0.0)) l1_positive_worst = 1.0;
          }
        }
      }
    }
  }
  out.push_back(make("product weights match quadrature oracle (N <= 8)", oracle_worst, 1e-10));
  out.push_back(make("L1 coefficients match quadrature oracle (N <= 8)", l1_oracle_worst, 1e-10));
  out.push_back(make("L1 coefficients positive", l1_positive_worst, 0.0));
  return out;
}

PropertyResult tridiagonal_vs_dense(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> b_dist(1e-6, 1.0);
  double worst = 0.0;
  for (int M = 2; M <= 16; ++M) {
    const DiscreteOperator op = random_operator(M, rng, true);
    const double weight = b_dist(rng);
    const ImplicitStepSolver solver(op, 1.0, weight);
    const int n = M - 1;
    std::vector<double> dense(idx(n * n), 0.0);
    const double k = weight * op.p / (op.h * op.h);
    for (int r = 0; r < n; ++r) {
      dense[idx(r * n + r)] = 1.0 + 2.0 * k + weight * op.c_vals[idx(r + 1)];
      if (r > 0) dense[idx(r * n + r - 1)] = -k;
      if (r + 1 < n) dense[idx(r * n + r + 1)] = -k;
    }
    std::vector<double> rhs(idx(M) + 1, 0.0), interior(idx(n));
    for (int r = 0; r < n; ++r) rhs[idx(r + 1)] = interior[idx(r)] = w_dist(rng);
    std::vector<double> got(idx(M) + 1);
    solver.solve(rhs, got);
    const auto want = oracle::dense_solve(dense, interior);
    double scale = 0.0;
    for (double v : want) scale = std::max(scale, std::abs(v));
    for (int r = 0; r < n; ++r) {
      worst = std::max(worst, std::abs(got[idx(r + 1)] - want[idx(r)]) / scale);
    }
  }
  return make("tridiagonal solve matches dense oracle (M <= 16)", worst, 1e-12);
}

std::vector<PropertyResult> rate_properties() {
  std::vector<PropertyResult> out;
  auto observed = [](Scheme scheme, double alpha, int coarse) {
    const auto [spec, exact] = example_problem(alpha);
    const double e1 = max_error(solve_example(scheme, alpha, {coarse, coarse}, 1.0), exact);
    const double e2 = max_error(solve_example(scheme, alpha, {2 * coarse, 2 * coarse}, 1.0), exact);
    return convergence_rate(e1, e2);
  };
  double worst = 0.0;
  std::string detail;
  for (double alpha : {0.2, 0.5, 0.8}) {
    const double r = observed(Scheme::Integral, alpha, 64);
    worst = std::max(worst, std::abs(r - 2.0));
    detail += "alpha=" + std::to_string(alpha).substr(0, 3) + ":" + std::to_string(r) + " ";
  }
  out.push_back(make("integral scheme rate 2 +- 0.1 (64 -> 128)", worst, 0.1, detail));

  double l1_worst = 0.0;
  detail.clear();
  for (double alpha : {0.4, 0.6, 0.8}) {
    const double rs = observed(Scheme::L1, alpha, 256);
    const double rp = observed(Scheme::PL1, alpha, 256);
    const double r_std = optimal_grading(L1Variant::Standard, alpha);
    const double r_pre = optimal_grading(L1Variant::Preprocessed, alpha);
    const double target_s = std::min(2.0 - alpha, r_std * alpha);
    const double target_p = std::min(2.0 - alpha, 2.0 * r_pre * alpha);
    l1_worst = std::max({l1_worst, std::abs(rs - target_s), std::abs(rp - target_p)});
    detail += "alpha=" + std::to_string(alpha).substr(0, 3) + ":" + std::to_string(rs) + "/" +
              std::to_string(rp) + " ";
  }
  out.push_back(make("L1/PL1 rates near min(2-alpha, r alpha) (256 -> 512)", l1_worst, 0.1, detail));
  return out;
}

// --- harness -------------------------------------------------------------

std::vector<PropertyResult> report_properties() {
  SweepConfig config;
  config.alphas = {0.3, 0.7};
  config.levels = {{8, 8}, {16, 16}, {32, 32}};
  const ConvergenceReport a = run_sweep(config);
  const ConvergenceReport b = run_sweep(config);
  std::ostringstream sa, sb;
  write_csv(sa, a, false);
  write_csv(sb, b, false);
  const double determinism = sa.str() == sb.str() ? 0.0 : 1.0;

  std::ostringstream full;
  write_csv(full, a);
  std::istringstream in(full.str());
  const ConvergenceReport back = read_csv(in);
  double roundtrip = back.rows.size() == a.rows.size() ? 0.0 : 1.0;
  for (std::size_t n = 0; roundtrip == 0.0 && n < a.rows.size(); ++n) {
    const auto& x = a.rows[n];
    const auto& y = back.rows[n];
    if (x.alpha != y.alpha || x.M != y.M || x.N != y.N || x.max_error != y.max_error ||
        x.rate != y.rate || x.wall_time_s != y.wall_time_s || x.r != y.r) {
      roundtrip = 1.0;
    }
  }
  return {make("reports identical across runs (wall time excluded)", determinism, 0.0),
          make("CSV round trip is exact", roundtrip, 0.0)};
}

}  // namespace

bool PropertySummary::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

void PropertySummary::print(std::ostream& out) const {
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-55s worst=%.3e limit=%.3e", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.worst, r.limit);
    out << line;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
  }
  out << (passed() ? "all properties hold" : "property failures detected") << '\n';
}

PropertyResult check_weight_sums(const TemporalMesh& mesh, double alpha, const WeightFn& a,
                                 const WeightFn& b) {
  const double g1 = std::tgamma(alpha + 1.0);
  const double g2 = std::tgamma(alpha + 2.0);
  double worst = 0.0;
  for (int j = 1; j <= mesh.N(); ++j) {
    double constant = 0.0;
    double linear = 0.0;
    for (int k = 1; k <= j; ++k) {
      const double ak = a(j, k);
      const double bk = b(j, k);
      constant += ak + bk;
      linear += ak * mesh.t(k - 1) + bk * mesh.t(k);
    }
    const double tj = mesh.t(j);
    worst = std::max({worst, rel(constant, std::pow(tj, alpha) / g1),
                      rel(linear, std::pow(tj, alpha + 1.0) / g2)});
  }
  return make("product weights exact for constants and linears", worst, 1e-12);
}

PropertyResult check_max_principle(int M, double weight, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w_dist(-1.0, 1.0);
  const DiscreteOperator op = random_operator(M, rng, true);
  const ImplicitStepSolver solver(op, 1.0, weight);
  std::vector<double> w(idx(M) + 1), y(idx(M) + 1);
  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    double wmax = 0.0;
    for (int i = 1; i < M; ++i) {
      w[idx(i)] = w_dist(rng) * (s % 3 == 0 ? 1e3 : 1.0);
      wmax = std::max(wmax, std::abs(w[idx(i)]));
    }
    w[0] = w[idx(M)] = 0.0;
    solver.solve(w, y);
    double ymax = 0.0;
    for (double v : y) ymax = std::max(ymax, std::abs(v));
    worst = std::max(worst, ymax - wmax);
  }
  return make("discrete maximum principle", std::max(worst, 0.0), 1e-14);
}

PropertySummary run_property_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertySummary summary;
  auto add = [&](PropertyResult r) { summary.results.push_back(std::move(r)); };
  auto add_all = [&](std::vector<PropertyResult> rs) {
    for (auto& r : rs) add(std::move(r));
  };

  add(gamma_recurrence(rng));
  add(beta_vs_gamma(rng));
  add_all(mittag_leffler_properties(rng));
  add_all(mesh_properties(rng));
  add_all(problem_properties(rng));
  add_all(weight_properties());

  PropertyResult dmp = make("discrete maximum principle", 0.0, 1e-14);
  for (int N : {16, 64, 256}) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const TemporalMesh mesh = build_three_piece_mesh(alpha, 1.0, N);
      for (int j : {1, 2, N / 2, N}) {
        const double b_jj = weight_b(j, j, mesh, alpha);
        const auto r = check_max_principle(32, b_jj, 100, rng());
        dmp.worst = std::max(dmp.worst, r.worst);
      }
    }
  }
  dmp.passed = dmp.worst <= dmp.limit;
  add(dmp);
  add(tridiagonal_vs_dense(rng));
  add_all(rate_properties());
  add_all(report_properties());
  return summary;
}

}  // namespace fracdiff
