#include "ehvi/workbench/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ehvi/random.hpp"

namespace ehvi::workbench {

namespace {

void require_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidArgument, "radius must be finite and > 0");
  }
}

}  // namespace

Front gen_sphere_front(std::size_t n, double radius, std::uint64_t seed) {
  require_radius(radius);
  NormalSampler normal(seed);
  std::vector<Point> points;
  points.reserve(n);
  while (points.size() < n) {
    const double x = std::abs(normal());
    const double y = std::abs(normal());
    const double z = std::abs(normal());
    const double norm = std::sqrt(x * x + y * y + z * z);
    Point p{radius * x / norm, radius * y / norm, radius * z / norm};
    if (p[0] > 0.0 && p[1] > 0.0 && p[2] > 0.0) points.push_back(std::move(p));
  }
  return validate_front(std::move(points), Point{0.0, 0.0, 0.0});
}

Front gen_diagonal_front_2d(std::size_t n, std::uint64_t /*seed*/) {
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    points.push_back(Point{static_cast<double>(i), static_cast<double>(n + 1 - i)});
  }
  return validate_front(std::move(points), Point{0.0, 0.0});
}

Front gen_tied_sphere_front(std::size_t n, std::size_t levels, double radius,
                            std::uint64_t seed) {
  require_radius(radius);
  if (levels == 0) throw Error(ErrorKind::InvalidArgument, "levels must be >= 1");
  std::mt19937_64 engine(seed);
  auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  std::vector<double> xs(levels);
  for (double& x : xs) x = radius * (0.1 + 0.8 * uniform());

  std::vector<Point> points;
  points.reserve(n);
  while (points.size() < n) {
    const double x = xs[static_cast<std::size_t>(engine() % levels)];
    const double rho = std::sqrt(radius * radius - x * x);
    const double angle = 0.5 * std::numbers::pi * (0.05 + 0.9 * uniform());
    Point p{x, rho * std::cos(angle), rho * std::sin(angle)};
    bool duplicate = false;
    for (const Point& q : points) duplicate = duplicate || q == p;
    if (!duplicate) points.push_back(std::move(p));
  }
  return validate_front(std::move(points), Point{0.0, 0.0, 0.0});
}

Front three_point_front() {
  return validate_front({Point{1, 2, 3}, Point{2, 3, 1}, Point{3, 1, 2}}, Point{0, 0, 0});
}

}  // namespace ehvi::workbench
