#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fracdiff/mesh.hpp"

namespace fracdiff {

/// Outcome of one invariant: `worst` is the largest observed violation
/// measure, `limit` the bound it must stay under (for rate checks, the
/// deviation from the target).
struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double limit = 0.0;
  std::string detail;
};

struct PropertySummary {
  std::vector<PropertyResult> results;

  bool passed() const;
  void print(std::ostream& out) const;
};

using WeightFn = std::function<double(int j, int k)>;

/// Constant and linear exactness of the product weights on one mesh:
///   sum_k a + b = t_j^alpha / Gamma(alpha+1),
///   sum_k a t_{k-1} + b t_k = t_j^{alpha+1} / Gamma(alpha+2),
/// relative error <= 1e-12 for every j. Reference constants use std::tgamma.
PropertyResult check_weight_sums(const TemporalMesh& mesh, double alpha, const WeightFn& a,
                                 const WeightFn& b);

/// Draws `samples` random right-hand sides w (zero ends) and checks
/// max|(I + weight L^M)^{-1} w| <= max|w| + 1e-14.
PropertyResult check_max_principle(int M, double weight, int samples, std::uint64_t seed);

/// Every invariant of the library; the seed only moves sampled points.
PropertySummary run_property_suite(std::uint64_t seed);

}  // namespace fracdiff
