#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fracdiff/error.hpp"
#include "fracdiff/harness.hpp"

namespace fracdiff {

namespace {

constexpr const char* kCsvHeader = "scheme,alpha,M,N,r,max_error,rate,wall_time_s";

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed(const char* fmt, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidArgument("read_csv: malformed number '" + s + "'");
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const ConvergenceReport& report, bool include_wall_time) {
  out << kCsvHeader << '\n';
  for (const auto& row : report.rows) {
    out << to_string(row.scheme) << ',' << full(row.alpha) << ',' << row.M << ',' << row.N << ','
        << (row.r ? full(*row.r) : "") << ',' << (row.failed ? "FAILED" : full(row.max_error))
        << ',' << (row.rate ? full(*row.rate) : "") << ','
        << (include_wall_time ? full(row.wall_time_s) : "") << '\n';
  }
}

ConvergenceReport read_csv(std::istream& in) {
  ConvergenceReport report;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InvalidArgument("read_csv: missing or unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 8) throw InvalidArgument("read_csv: expected 8 fields in '" + line + "'");
    ReportRow row;
    row.scheme = parse_scheme(f[0]);
    row.alpha = parse_double(f[1]);
    row.M = std::stoi(f[2]);
    row.N = std::stoi(f[3]);
    if (!f[4].empty()) row.r = parse_double(f[4]);
    if (f[5] == "FAILED") {
      row.failed = true;
      row.max_error = std::nan("");
    } else {
      row.max_error = parse_double(f[5]);
    }
    if (!f[6].empty()) row.rate = parse_double(f[6]);
    if (!f[7].empty()) row.wall_time_s = parse_double(f[7]);
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_markdown(std::ostream& out, const ConvergenceReport& report) {
  out << "| scheme | alpha | M | N | r | max error | rate | wall time (s) |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : report.rows) {
    out << "| " << to_string(row.scheme) << " | " << fixed("%.2f", row.alpha) << " | " << row.M
        << " | " << row.N << " | " << (row.r ? fixed("%.4f", *row.r) : "-") << " | "
        << (row.failed ? "FAILED" : fixed("%.4e", row.max_error)) << " | "
        << (row.rate ? fixed("%.3f", *row.rate) : "-") << " | " << fixed("%.3f", row.wall_time_s)
        << " |\n";
  }
}

void write_report(const ConvergenceReport& report, OutputFormat format, const std::string& path) {
  auto emit = [&](std::ostream& os) {
    if (format == OutputFormat::CSV) {
      write_csv(os, report);
    } else {
      write_markdown(os, report);
    }
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot open output file '" + path + "'");
  emit(file);
}

}  // namespace fracdiff
