#pragma once

#include <cstddef>
#include <cstdint>

#include "ehvi/core.hpp"

namespace ehvi::workbench {

/// n points uniform on the positive octant of the sphere of the given radius
/// (absolute values of normalised standard-normal triples), reference at the
/// origin.
Front gen_sphere_front(std::size_t n, double radius, std::uint64_t seed);

/// Points (i, n + 1 - i), i = 1..n, reference (0, 0). The seed is accepted
/// for interface symmetry; the front is fully determined by n.
Front gen_diagonal_front_2d(std::size_t n, std::uint64_t seed = 0);

/// Sphere-octant front whose x coordinates are drawn from only `levels`
/// distinct values, so several points share an x coordinate and the cell
/// grid contains zero-width cells.
Front gen_tied_sphere_front(std::size_t n, std::size_t levels, double radius, std::uint64_t seed);

/// {(1,2,3), (2,3,1), (3,1,2)} with reference (0,0,0).
Front three_point_front();

}  // namespace ehvi::workbench
