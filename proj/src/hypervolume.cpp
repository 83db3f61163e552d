#include "ehvi/hypervolume.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ehvi {

double Staircase2d::insert(double x, double y) {
  const double rx = ref_[0];
  const double ry = ref_[1];
  if (!(x > rx) || !(y > ry)) return 0.0;

  auto pos = std::lower_bound(steps_.begin(), steps_.end(), x,
                              [](const Vec2& q, double v) { return q[0] < v; });
  if (pos != steps_.end() && (*pos)[1] >= y) return 0.0;

  // Area of the box [ref, (x, y)] already covered by the staircase, walking
  // left from the first step at or right of x.
  double covered = 0.0;
  double seg_right = x;
  double seg_height = pos != steps_.end() ? (*pos)[1] : ry;
  auto first_removed = pos;
  for (;;) {
    if (first_removed == steps_.begin()) {
      covered += (seg_right - rx) * (seg_height - ry);
      break;
    }
    const Vec2& q = *(first_removed - 1);
    covered += (seg_right - q[0]) * (seg_height - ry);
    if (q[1] > y) {
      covered += (q[0] - rx) * (y - ry);
      break;
    }
    seg_right = q[0];
    seg_height = q[1];
    --first_removed;
  }

  auto last_removed = pos;
  if (last_removed != steps_.end() && (*last_removed)[0] == x) ++last_removed;

  if (first_removed == last_removed) {
    steps_.insert(first_removed, Vec2{x, y});
  } else {
    *first_removed = Vec2{x, y};
    steps_.erase(first_removed + 1, last_removed);
  }

  const double gain = (x - rx) * (y - ry) - covered;
  area_ += gain;
  return gain;
}

double dominated_area_2d(std::span<const Vec2> points, Vec2 ref) {
  std::vector<Vec2> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Vec2& a, const Vec2& b) { return a[0] > b[0]; });
  const double inf = std::numeric_limits<double>::infinity();
  return dominated_area_2d_sorted(sorted, ref, {inf, inf});
}

double dominated_area_2d_sorted(std::span<const Vec2> by_x_desc, Vec2 ref, Vec2 upper) {
  const double rx = ref[0];
  const double ry = ref[1];
  double area = 0.0;
  double max_y = ry;
  const std::size_t n = by_x_desc.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::min(by_x_desc[i][0], upper[0]);
    if (!(x > rx)) break;
    max_y = std::max(max_y, std::min(by_x_desc[i][1], upper[1]));
    const double next_x = i + 1 < n ? std::max(std::min(by_x_desc[i + 1][0], upper[0]), rx) : rx;
    area += (x - next_x) * (max_y - ry);
  }
  return area;
}

double dominated_volume_3d(std::span<const Vec3> points, Vec3 ref) {
  std::vector<Vec3> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Vec3& a, const Vec3& b) { return a[2] > b[2]; });
  const double inf = std::numeric_limits<double>::infinity();
  Staircase2d stair;
  return dominated_volume_3d_sorted(sorted, ref, {inf, inf, inf}, stair);
}

double dominated_volume_3d_sorted(std::span<const Vec3> by_z_desc, Vec3 ref, Vec3 upper,
                                  Staircase2d& scratch) {
  scratch.reset({ref[0], ref[1]});
  double volume = 0.0;
  const std::size_t n = by_z_desc.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double z = std::min(by_z_desc[i][2], upper[2]);
    if (!(z > ref[2])) break;
    scratch.insert(std::min(by_z_desc[i][0], upper[0]), std::min(by_z_desc[i][1], upper[1]));
    const double next_z =
        i + 1 < n ? std::max(std::min(by_z_desc[i + 1][2], upper[2]), ref[2]) : ref[2];
    volume += scratch.area() * (z - next_z);
  }
  return volume;
}

namespace {

std::vector<Vec2> to_vec2(std::span<const Point> points) {
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back({p[0], p[1]});
  return out;
}

std::vector<Vec3> to_vec3(std::span<const Point> points) {
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back({p[0], p[1], p[2]});
  return out;
}

}  // namespace

double hypervolume_2d(const Front& front) {
  require_dim(front, 2, "hypervolume_2d");
  const Point& r = front.reference();
  return dominated_area_2d(to_vec2(front.points()), {r[0], r[1]});
}

double hypervolume_3d(const Front& front) {
  require_dim(front, 3, "hypervolume_3d");
  const Point& r = front.reference();
  return dominated_volume_3d(to_vec3(front.points()), {r[0], r[1], r[2]});
}

double hypervolume_improvement(const Point& p, const Front& front) {
  if (p.dim() != front.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "candidate has dimension " + std::to_string(p.dim()) +
                                                  ", front has " + std::to_string(front.dim()));
  }
  ImprovementEvaluator eval(front);
  return eval(p.coords());
}

double clipped_dominated_area_2d(std::span<const Point> points, const ClippedBox& box) {
  if (box.lower.dim() != 2 || box.upper.dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "clipped_dominated_area_2d needs a 2-D box");
  }
  for (std::size_t d = 0; d < 2; ++d) {
    if (!(box.lower[d] <= box.upper[d])) {
      throw Error(ErrorKind::InvalidArgument, "malformed box: lower exceeds upper in dimension " +
                                                  std::to_string(d));
    }
  }
  for (const Point& p : points) {
    if (p.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "expected 2-D points");
  }
  std::vector<Vec2> sorted = to_vec2(points);
  std::sort(sorted.begin(), sorted.end(), [](const Vec2& a, const Vec2& b) { return a[0] > b[0]; });
  return dominated_area_2d_sorted(sorted, {box.lower[0], box.lower[1]},
                                  {box.upper[0], box.upper[1]});
}

ImprovementEvaluator::ImprovementEvaluator(const Front& front) : dim_(front.dim()) {
  const Point& r = front.reference();
  if (dim_ == 2) {
    ref_ = {r[0], r[1], 0.0};
    sorted2_ = to_vec2(front.points());
    std::sort(sorted2_.begin(), sorted2_.end(),
              [](const Vec2& a, const Vec2& b) { return a[0] > b[0]; });
  } else if (dim_ == 3) {
    ref_ = {r[0], r[1], r[2]};
    sorted3_ = to_vec3(front.points());
    std::sort(sorted3_.begin(), sorted3_.end(),
              [](const Vec3& a, const Vec3& b) { return a[2] > b[2]; });
  } else {
    throw Error(ErrorKind::DimensionMismatch, "hypervolume improvement supports m = 2 or 3, got " +
                                                  std::to_string(dim_));
  }
}

double ImprovementEvaluator::operator()(std::span<const double> p) {
  if (p.size() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "candidate has dimension " + std::to_string(p.size()));
  }
  double box = 1.0;
  for (std::size_t d = 0; d < dim_; ++d) {
    if (!(p[d] > ref_[d])) return 0.0;
    box *= p[d] - ref_[d];
  }
  double covered = 0.0;
  if (dim_ == 2) {
    for (const Vec2& q : sorted2_) {
      if (q[0] >= p[0] && q[1] >= p[1]) return 0.0;
    }
    covered = dominated_area_2d_sorted(sorted2_, {ref_[0], ref_[1]}, {p[0], p[1]});
  } else {
    for (const Vec3& q : sorted3_) {
      if (q[0] >= p[0] && q[1] >= p[1] && q[2] >= p[2]) return 0.0;
    }
    covered = dominated_volume_3d_sorted(sorted3_, ref_, {p[0], p[1], p[2]}, stair_);
  }
  const double hi = box - covered;
  return hi > 0.0 ? hi : 0.0;
}

}  // namespace ehvi
