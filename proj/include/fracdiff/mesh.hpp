#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

enum class MeshKind { ThreePieceGraded, PowerGraded, Uniform };

const char* to_string(MeshKind kind);

/// Time nodes 0 = t_0 < t_1 < ... < t_N = T. Immutable once built.
class TemporalMesh {
 public:
  /// Validates endpoints and strict monotonicity; throws InvalidArgument.
  TemporalMesh(std::vector<double> nodes, MeshKind kind, double alpha, double grading);

  std::span<const double> nodes() const { return nodes_; }
  double t(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
  /// Delta t_j = t_j - t_{j-1}, 1 <= j <= N.
  double step(int j) const { return t(j) - t(j - 1); }
  int N() const { return static_cast<int>(nodes_.size()) - 1; }
  double T() const { return nodes_.back(); }
  MeshKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  /// Exponent r of a power-graded mesh, 1 for uniform, 0 for three-piece.
  double grading() const { return grading_; }

 private:
  std::vector<double> nodes_;
  MeshKind kind_;
  double alpha_;
  double grading_;
};

/// Uniform nodes x_i = i h on [0, l], h = l / M.
class SpatialMesh {
 public:
  SpatialMesh(double l, int M);

  std::span<const double> nodes() const { return nodes_; }
  double x(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  int M() const { return M_; }
  double length() const { return l_; }
  double h() const { return h_; }

 private:
  std::vector<double> nodes_;
  int M_;
  double l_;
  double h_;
};

/// Three-piece graded mesh: two hand-placed nodes at T N^{-2/alpha} and
/// T (N^{-2/alpha} + N^{-3/(2 alpha)}), followed by a tail graded with
/// exponent 1/alpha. Requires alpha in (0, 1) and N >= 4.
TemporalMesh build_three_piece_mesh(double alpha, double T, int N);

/// t_j = T (j/N)^r. Any r > 0 is accepted, r = 1 gives the uniform mesh.
TemporalMesh build_power_mesh(double T, int N, double r);

SpatialMesh build_spatial_mesh(double l, int M);

}  // namespace fracdiff
