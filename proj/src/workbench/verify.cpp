#include "ehvi/workbench/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ehvi/ehvi2d.hpp"
#include "ehvi/ehvi3d.hpp"

namespace ehvi::workbench {

std::vector<NamedScheme> exact_schemes_for(std::size_t dim) {
  if (dim == 2) {
    return {{"2d-naive", ehvi_2d_naive}, {"2d-fast", ehvi_2d_fast}};
  }
  if (dim == 3) {
    return {{"8term", ehvi_3d_8term},
            {"5term", ehvi_3d_5term},
            {"2term", ehvi_3d_2term},
            {"slice", ehvi_3d_slice}};
  }
  throw Error(ErrorKind::DimensionMismatch, "exact schemes exist for m = 2 and 3 only");
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

VerifyReport run_verification(const Front& front, const GaussianPredictor& g, std::size_t trials,
                              std::uint64_t seed, const std::vector<NamedScheme>& schemes) {
  VerifyReport report;
  double sum = 0.0;
  for (const auto& s : schemes) {
    const double v = s.fn(front, g);
    report.exact.push_back({s.name, v});
    sum += v;
  }
  for (std::size_t i = 0; i < report.exact.size(); ++i) {
    for (std::size_t j = i + 1; j < report.exact.size(); ++j) {
      report.max_relative_deviation =
          std::max(report.max_relative_deviation,
                   relative_deviation(report.exact[i].value, report.exact[j].value));
    }
  }

  report.mc = ehvi_mc(front, g, trials, seed);
  const double exact = report.exact.empty() ? 0.0 : sum / static_cast<double>(report.exact.size());
  const double diff = report.mc.estimate - exact;
  if (report.mc.standard_error > 0.0) {
    report.z_score = diff / report.mc.standard_error;
  } else {
    report.z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  report.passed = report.max_relative_deviation <= kMaxExactDeviation &&
                  std::abs(report.z_score) <= kMaxZScore;
  return report;
}

}  // namespace ehvi::workbench
