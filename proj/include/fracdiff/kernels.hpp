#pragma once

#include <cstddef>
#include <span>

namespace fracdiff::kernels {

/// Row-major stack of history levels, each `width` values long.
struct HistoryView {
  std::span<const double> data;
  std::size_t width = 0;

  std::size_t levels() const { return width == 0 ? 0 : data.size() / width; }
  std::span<const double> row(std::size_t m) const { return data.subspan(m * width, width); }
};

/// out[i] += sum_{m < weights.size()} weights[m] * history.row(m)[i].
///
/// For every i the partial sum starts at zero and runs over m in ascending
/// order before being added to out[i]; both variants follow that order, so
/// their results are bitwise identical regardless of the thread count.
void accumulate_history_serial(std::span<const double> weights, const HistoryView& history,
                               std::span<double> out);

/// OpenMP version of accumulate_history_serial; parallel over blocks of i.
/// Falls back to one thread for small problems or inside another parallel
/// region.
void accumulate_history(std::span<const double> weights, const HistoryView& history,
                        std::span<double> out);

/// Work (weights.size() * width) below which the parallel kernel stays serial.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace fracdiff::kernels
