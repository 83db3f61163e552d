#pragma once

#include <cstddef>
#include <cstdint>

#include "ehvi/core.hpp"

namespace ehvi {

struct McResult {
  double estimate = 0.0;
  std::size_t trials = 0;
  /// Sample standard deviation of the per-trial improvements / sqrt(trials).
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo EHVI: mean hypervolume improvement of `trials` samples drawn
/// from the predictor. Bit-for-bit reproducible for a given seed. m = 2 or 3.
McResult ehvi_mc(const Front& front, const GaussianPredictor& g, std::size_t trials,
                 std::uint64_t seed);

/// Deterministic tensor-product quadrature of HI(p) * pdf(p) over
/// [max(r, mu - 8 sigma), mu + 8 sigma]. Each axis is cut at the front's
/// coordinates so the integrand is smooth on every panel, and each panel uses
/// 8-point Gauss-Legendre. Panels per axis start at 4 and double until two
/// successive estimates agree to 1e-7 relative; exceeding `max_cells_per_dim`
/// throws ConvergenceFailure. Requires max_cells_per_dim >= 4; a cap below 8
/// leaves no room for a second estimate and always throws.
double ehvi_quadrature(const Front& front, const GaussianPredictor& g,
                       std::size_t max_cells_per_dim = 256);

}  // namespace ehvi
