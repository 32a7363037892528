#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// Space-time values stored level by level: entry (i, j) sits at
/// j * (M + 1) + i. V holds the remainder v (or the raw unknown for schemes
/// that do not decompose), U the approximation of u.
struct SolutionGrid {
  int M = 0;
  int N = 0;
  std::vector<double> x;  // M + 1 spatial nodes
  std::vector<double> t;  // N + 1 time nodes
  std::vector<double> V;
  std::vector<double> U;

  SolutionGrid() = default;
  SolutionGrid(std::span<const double> x_nodes, std::span<const double> t_nodes)
      : M(static_cast<int>(x_nodes.size()) - 1),
        N(static_cast<int>(t_nodes.size()) - 1),
        x(x_nodes.begin(), x_nodes.end()),
        t(t_nodes.begin(), t_nodes.end()),
        V(x_nodes.size() * t_nodes.size(), 0.0),
        U(x_nodes.size() * t_nodes.size(), 0.0) {}

  std::size_t width() const { return static_cast<std::size_t>(M) + 1; }
  std::size_t at(int i, int j) const { return static_cast<std::size_t>(j) * width() + static_cast<std::size_t>(i); }

  std::span<double> V_level(int j) { return std::span<double>(V).subspan(static_cast<std::size_t>(j) * width(), width()); }
  std::span<const double> V_level(int j) const { return std::span<const double>(V).subspan(static_cast<std::size_t>(j) * width(), width()); }
  std::span<double> U_level(int j) { return std::span<double>(U).subspan(static_cast<std::size_t>(j) * width(), width()); }
  std::span<const double> U_level(int j) const { return std::span<const double>(U).subspan(static_cast<std::size_t>(j) * width(), width()); }
};

}  // namespace fracdiff
