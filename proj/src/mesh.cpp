#include "fracdiff/mesh.hpp"

#include <cmath>
#include <string>

#include "fracdiff/error.hpp"

namespace fracdiff {

namespace {
constexpr double kMinFirstNode = 1e-300;
}

const char* to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::ThreePieceGraded: return "three-piece";
    case MeshKind::PowerGraded: return "power";
    case MeshKind::Uniform: return "uniform";
  }
  return "unknown";
}

TemporalMesh::TemporalMesh(std::vector<double> nodes, MeshKind kind, double alpha, double grading)
    : nodes_(std::move(nodes)), kind_(kind), alpha_(alpha), grading_(grading) {
  if (nodes_.size() < 2) throw InvalidArgument("TemporalMesh: need at least two nodes");
  if (nodes_.front() != 0.0) throw InvalidArgument("TemporalMesh: t_0 must be 0");
  for (std::size_t j = 1; j < nodes_.size(); ++j) {
    if (!(nodes_[j] > nodes_[j - 1])) {
      throw InvalidArgument("TemporalMesh: nodes not strictly increasing at j = " +
                            std::to_string(j));
    }
  }
}

SpatialMesh::SpatialMesh(double l, int M) : M_(M), l_(l), h_(0.0) {
  if (M < 2) throw InvalidArgument("SpatialMesh: M must be >= 2");
  if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("SpatialMesh: l must be positive");
  h_ = l / M;
  nodes_.resize(static_cast<std::size_t>(M) + 1);
  for (int i = 0; i < M; ++i) nodes_[static_cast<std::size_t>(i)] = i * h_;
  nodes_.back() = l;
}

TemporalMesh build_three_piece_mesh(double alpha, double T, int N) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("three-piece mesh: alpha must lie in (0, 1)");
  }
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("three-piece mesh: T must be positive");
  if (N < 4) throw InvalidArgument("three-piece mesh: N must be >= 4");

  const double n = static_cast<double>(N);
  const double first = std::pow(n, -2.0 / alpha);
  const double second = std::pow(n, -3.0 / (2.0 * alpha));
  if (T * first < kMinFirstNode) {
    throw InvalidArgument("three-piece mesh: t_1 underflows for alpha = " +
                          std::to_string(alpha) + ", N = " + std::to_string(N));
  }

  std::vector<double> t(static_cast<std::size_t>(N) + 1);
  t[0] = 0.0;
  t[1] = T * first;
  t[2] = t[1] + T * second;
  const double tail = T * (1.0 - first - second);
  for (int j = 3; j <= N; ++j) {
    t[static_cast<std::size_t>(j)] =
        t[2] + tail * std::pow(static_cast<double>(j - 2) / (n - 2.0), 1.0 / alpha);
  }
  t.back() = T;
  return TemporalMesh(std::move(t), MeshKind::ThreePieceGraded, alpha, 0.0);
}

TemporalMesh build_power_mesh(double T, int N, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("power mesh: r must be positive");
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("power mesh: T must be positive");
  if (N < 1) throw InvalidArgument("power mesh: N must be >= 1");

  std::vector<double> t(static_cast<std::size_t>(N) + 1);
  const double n = static_cast<double>(N);
  for (int j = 0; j < N; ++j) {
    t[static_cast<std::size_t>(j)] = T * std::pow(j / n, r);
  }
  t.back() = T;
  const MeshKind kind = (r == 1.0) ? MeshKind::Uniform : MeshKind::PowerGraded;
  return TemporalMesh(std::move(t), kind, 0.0, r);
}

SpatialMesh build_spatial_mesh(double l, int M) { return SpatialMesh(l, M); }

}  // namespace fracdiff
