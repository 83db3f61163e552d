#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ehvi/core.hpp"
#include "ehvi/oracle.hpp"

namespace ehvi::workbench {

using SchemeFn = std::function<double(const Front&, const GaussianPredictor&)>;

struct NamedScheme {
  std::string name;
  SchemeFn fn;
};

/// Every exact scheme applicable to the front's dimension.
std::vector<NamedScheme> exact_schemes_for(std::size_t dim);

/// |a - b| / max(|a|, |b|), and 0 when both are 0.
double relative_deviation(double a, double b);

struct SchemeValue {
  std::string name;
  double value = 0.0;
};

struct VerifyReport {
  std::vector<SchemeValue> exact;
  McResult mc;
  double max_relative_deviation = 0.0;
  double z_score = 0.0;
  bool passed = false;
};

inline constexpr double kMaxExactDeviation = 1e-12;
inline constexpr double kMaxZScore = 4.0;

/// Runs every scheme plus Monte Carlo. Passes iff the exact schemes agree
/// pairwise within 1e-12 relative and the Monte Carlo estimate lies within
/// four standard errors of their mean.
VerifyReport run_verification(const Front& front, const GaussianPredictor& g, std::size_t trials,
                              std::uint64_t seed, const std::vector<NamedScheme>& schemes);

inline VerifyReport run_verification(const Front& front, const GaussianPredictor& g,
                                     std::size_t trials, std::uint64_t seed) {
  return run_verification(front, g, trials, seed, exact_schemes_for(front.dim()));
}

}  // namespace ehvi::workbench
