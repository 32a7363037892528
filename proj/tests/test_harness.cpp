#include <catch_amalgamated.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fracdiff/error.hpp"
#include "fracdiff/harness.hpp"

using namespace fracdiff;
using Catch::Approx;

TEST_CASE("max_error", "[harness]") {
  auto [spec, exact] = example_problem(0.5);
  const std::vector<double> x{0.0, 1.0, 2.0, std::numbers::pi};
  const std::vector<double> t{0.0, 0.5, 1.0};
  SolutionGrid grid(x, t);
  for (int j = 0; j <= 2; ++j) {
    for (int i = 0; i <= 3; ++i) grid.U[grid.at(i, j)] = exact.u(x[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
  }
  CHECK(max_error(grid, exact) == 0.0);
  grid.U[grid.at(2, 1)] += 1e-3;
  CHECK(max_error(grid, exact) == Approx(1e-3).epsilon(1e-12));

  // The generic path (no factors) gives the same answer.
  ExactSolution plain;
  plain.u = exact.u;
  CHECK(max_error(grid, plain) == Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("convergence_rate", "[harness]") {
  CHECK(convergence_rate(4e-4, 1e-4) == Approx(2.0).epsilon(1e-15));
  CHECK(convergence_rate(1.0185e-3, 2.7198e-4) == Approx(1.905).margin(5e-4));
  CHECK(convergence_rate(3e-5, 3e-5) == 0.0);
  CHECK_THROWS_AS(convergence_rate(0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(convergence_rate(1e-3, -1.0), DomainError);
}

TEST_CASE("sweep rows, rates and ordering", "[harness]") {
  SweepConfig config;
  config.alphas = {0.6, 0.3};
  config.levels = {{16, 16}, {32, 32}, {48, 48}, {96, 96}};
  config.workers = 3;
  const auto report = run_sweep(config);
  REQUIRE(report.rows.size() == 8);
  CHECK(report.rows[0].alpha == 0.6);
  CHECK(report.rows[4].alpha == 0.3);
  for (std::size_t n = 0; n < 8; ++n) {
    const auto& row = report.rows[n];
    CHECK_FALSE(row.failed);
    CHECK(row.max_error > 0.0);
    CHECK_FALSE(row.r.has_value());
    // Rates only where the next level doubles M and N: 16->32 and 48->96.
    const bool expect_rate = n % 4 == 0 || n % 4 == 2;
    CHECK(row.rate.has_value() == expect_rate);
  }
  CHECK(*report.rows[0].rate == Approx(convergence_rate(report.rows[0].max_error, report.rows[1].max_error)));
}

TEST_CASE("single-level sweep has no rates", "[harness]") {
  SweepConfig config;
  config.alphas = {0.5};
  config.levels = {{16, 16}};
  config.scheme = Scheme::PL1;
  const auto report = run_sweep(config);
  REQUIRE(report.rows.size() == 1);
  CHECK_FALSE(report.rows[0].rate.has_value());
  CHECK(*report.rows[0].r == Approx(1.5));
}

TEST_CASE("sweep results do not depend on worker count", "[harness]") {
  SweepConfig config;
  config.alphas = {0.25, 0.75};
  config.levels = {{16, 16}, {32, 32}};
  config.scheme = Scheme::L1;
  auto one = run_sweep(config);
  config.workers = 4;
  auto four = run_sweep(config);
  std::ostringstream a, b;
  write_csv(a, one, false);
  write_csv(b, four, false);
  CHECK(a.str() == b.str());
}

TEST_CASE("sweep config validation", "[harness]") {
  SweepConfig config;
  config.levels = {{32, 32}, {16, 16}};
  CHECK_THROWS_AS(config.validate(), InvalidArgument);
  config.levels = {{16, 16}};
  config.alphas = {1.0};
  CHECK_THROWS_AS(config.validate(), InvalidArgument);
  config.alphas = {0.5};
  config.r_override = 2.0;
  CHECK_THROWS_AS(config.validate(), InvalidArgument);
  config.scheme = Scheme::L1;
  CHECK_NOTHROW(config.validate());
  config.workers = 0;
  CHECK_THROWS_AS(config.validate(), InvalidArgument);
  CHECK_THROWS_AS(parse_scheme("l2"), InvalidArgument);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("CSV output round-trips exactly", "[harness][property]") {
  SweepConfig config;
  config.alphas = {0.35};
  config.levels = {{8, 8}, {16, 16}, {32, 32}};
  config.scheme = Scheme::L1;
  const auto report = run_sweep(config);
  std::stringstream buf;
  write_csv(buf, report);
  const auto back = read_csv(buf);
  REQUIRE(back.rows.size() == report.rows.size());
  for (std::size_t n = 0; n < back.rows.size(); ++n) {
    const auto& a = report.rows[n];
    const auto& b = back.rows[n];
    CHECK(a.scheme == b.scheme);
    CHECK(a.alpha == b.alpha);
    CHECK(a.M == b.M);
    CHECK(a.N == b.N);
    CHECK(a.r == b.r);
    CHECK(a.max_error == b.max_error);
    CHECK(a.rate == b.rate);
    CHECK(a.wall_time_s == b.wall_time_s);
  }
}

TEST_CASE("CSV layout and failure markers", "[harness]") {
  ConvergenceReport report;
  ReportRow ok;
  ok.scheme = Scheme::Integral;
  ok.alpha = 0.5;
  ok.M = ok.N = 8;
  ok.max_error = 0.125;
  ok.rate = 2.0;
  ok.wall_time_s = 0.5;
  ReportRow bad = ok;
  bad.M = bad.N = 16;
  bad.failed = true;
  bad.rate.reset();
  report.rows = {ok, bad};

  std::ostringstream out;
  write_csv(out, report);
  CHECK(out.str() ==
        "scheme,alpha,M,N,r,max_error,rate,wall_time_s\n"
        "integral,0.5,8,8,,0.125,2,0.5\n"
        "integral,0.5,16,16,,FAILED,,0.5\n");

  std::istringstream in(out.str());
  const auto back = read_csv(in);
  CHECK(back.rows[1].failed);
  CHECK(back.any_failed());

  std::istringstream bad_header("a,b\n");
  CHECK_THROWS_AS(read_csv(bad_header), InvalidArgument);
}

TEST_CASE("markdown table", "[harness]") {
  ConvergenceReport report;
  ReportRow row;
  row.scheme = Scheme::PL1;
  row.alpha = 0.6;
  row.M = row.N = 64;
  row.r = 7.0 / 6.0;
  row.max_error = 2.52191234e-3;
  row.rate = 1.39957;
  report.rows = {row};
  std::ostringstream out;
  write_markdown(out, report);
  CHECK(out.str().find("| pl1 | 0.60 | 64 | 64 | 1.1667 | 2.5219e-03 | 1.400 |") != std::string::npos);
}

TEST_CASE("run_sweep writes the requested file", "[harness]") {
  const std::string path = "fracdiff_test_report.csv";
  SweepConfig config;
  config.alphas = {0.5};
  config.levels = {{8, 8}, {16, 16}};
  config.output_path = path;
  const auto report = run_sweep(config);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto back = read_csv(in);
  CHECK(back.rows.size() == 2);
  CHECK(back.rows[0].max_error == report.rows[0].max_error);
  in.close();
  std::remove(path.c_str());
}
