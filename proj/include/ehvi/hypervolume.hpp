#pragma once

#include <array>
#include <span>
#include <vector>

#include "ehvi/core.hpp"

namespace ehvi {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

/// Axis-aligned box [lower, upper).
struct ClippedBox {
  Point lower;
  Point upper;
};

/// Area dominated by a 2-D front above its reference point.
double hypervolume_2d(const Front& front);

/// Volume dominated by a 3-D front above its reference point.
double hypervolume_3d(const Front& front);

/// HV(P u {p}) - HV(P). Zero when p is weakly dominated by a member of P or
/// does not exceed the reference in every coordinate. Supports m = 2 and 3.
double hypervolume_improvement(const Point& p, const Front& front);

/// Area of DomSet(points) (taking box.lower as the reference) inside the box.
/// Throws InvalidArgument for a box with lower_d > upper_d.
double clipped_dominated_area_2d(std::span<const Point> points, const ClippedBox& box);

// ---------------------------------------------------------------------------
// Fixed-dimension kernels shared by the EHVI schemes and the oracles. They
// accept arbitrary point sets (dominated members and points at or below the
// reference are allowed and simply contribute nothing).

/// Incrementally maintained 2-D staircase: points sorted by ascending x with
/// strictly descending y, all strictly above the reference.
class Staircase2d {
 public:
  explicit Staircase2d(Vec2 ref = {0.0, 0.0}) : ref_(ref) {}

  void reset(Vec2 ref) {
    ref_ = ref;
    steps_.clear();
    area_ = 0.0;
  }

  /// Adds (x, y); returns the gain in dominated area.
  double insert(double x, double y);

  double area() const noexcept { return area_; }
  std::span<const Vec2> steps() const noexcept { return steps_; }

 private:
  Vec2 ref_;
  std::vector<Vec2> steps_;
  double area_ = 0.0;
};

double dominated_area_2d(std::span<const Vec2> points, Vec2 ref);
double dominated_volume_3d(std::span<const Vec3> points, Vec3 ref);

/// Area of DomSet(points) inside [ref, upper]; points sorted by descending x.
double dominated_area_2d_sorted(std::span<const Vec2> by_x_desc, Vec2 ref, Vec2 upper);

/// Volume of DomSet(points) inside [ref, upper]; points sorted by descending z.
/// `scratch` is reset and reused to avoid allocation in hot loops.
double dominated_volume_3d_sorted(std::span<const Vec3> by_z_desc, Vec3 ref, Vec3 upper,
                                  Staircase2d& scratch);

/// Repeated hypervolume-improvement queries against one front without
/// re-sorting or allocating per query. Not thread-safe (owns scratch space).
class ImprovementEvaluator {
 public:
  explicit ImprovementEvaluator(const Front& front);

  double operator()(std::span<const double> p);

  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
  Vec3 ref_{};
  std::vector<Vec2> sorted2_;
  std::vector<Vec3> sorted3_;
  Staircase2d stair_;
};

}  // namespace ehvi
