#include "fracdiff/kernels.hpp"

#include <algorithm>
#include <array>
#include <omp.h>

namespace fracdiff::kernels {

namespace {

constexpr std::size_t kBlock = 256;

void accumulate_block(std::span<const double> weights, const HistoryView& history,
                      std::size_t begin, std::size_t end, std::span<double> out) {
  std::array<double, kBlock> acc{};
  const std::size_t n = end - begin;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    const double w = weights[m];
    const double* row = history.data.data() + m * history.width + begin;
    for (std::size_t i = 0; i < n; ++i) acc[i] += w * row[i];
  }
  for (std::size_t i = 0; i < n; ++i) out[begin + i] += acc[i];
}

}  // namespace

void accumulate_history_serial(std::span<const double> weights, const HistoryView& history,
                               std::span<double> out) {
  const std::size_t width = history.width;
  for (std::size_t i = 0; i < width; ++i) {
    double acc = 0.0;
    for (std::size_t m = 0; m < weights.size(); ++m) {
      acc += weights[m] * history.data[m * width + i];
    }
    out[i] += acc;
  }
}

void accumulate_history(std::span<const double> weights, const HistoryView& history,
                        std::span<double> out) {
  const std::size_t width = history.width;
  const std::size_t blocks = (width + kBlock - 1) / kBlock;
  const bool parallel = weights.size() * width >= kParallelThreshold && !omp_in_parallel();
  const auto nblocks = static_cast<long>(blocks);

#pragma omp parallel for schedule(static) if (parallel)
  for (long b = 0; b < nblocks; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlock;
    const std::size_t end = std::min(width, begin + kBlock);
    accumulate_block(weights, history, begin, end, out);
  }
}

}  // namespace fracdiff::kernels
