#pragma once

#include <cstddef>

#include "ehvi/core.hpp"

namespace ehvi {

/// Bi-objective EHVI, recomputing every cell's dominated-area correction
/// from scratch. O(n^3 log n); kept as the reference for ehvi_2d_fast.
double ehvi_2d_naive(const Front& front, const GaussianPredictor& g);

/// Bi-objective EHVI in O(n^2): staircase cells are visited row by row and
/// the correction area grows by one rectangular strip per step.
double ehvi_2d_fast(const Front& front, const GaussianPredictor& g);

/// Number of grid cells whose upper corner is not weakly dominated by the
/// front, found by testing each cell against every point.
std::size_t count_nondominated_cells_2d(const Front& front);

}  // namespace ehvi
