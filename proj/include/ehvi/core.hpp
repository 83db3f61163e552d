#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ehvi/error.hpp"

namespace ehvi {

/// A point in m-dimensional objective space. All objectives are maximized.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t d) const { return coords_[d]; }
  double& operator[](std::size_t d) { return coords_[d]; }

  std::span<const double> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

/// Weak Pareto dominance with one strict coordinate (maximization).
/// Identical points do not dominate each other.
bool dominates(const Point& p, const Point& q);

/// True when p_d >= q_d for every d.
bool weakly_dominates(const Point& p, const Point& q);

/// A mutually non-dominated point set together with a reference point that
/// every member strictly exceeds in all coordinates. Immutable once built;
/// obtain one through validate_front().
class Front {
 public:
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& reference() const noexcept { return reference_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t dim() const noexcept { return reference_.dim(); }

 private:
  friend Front validate_front(std::vector<Point> points, Point reference);
  Front(std::vector<Point> points, Point reference)
      : points_(std::move(points)), reference_(std::move(reference)) {}

  std::vector<Point> points_;
  Point reference_;
};

/// Checks finiteness, dimensions, pairwise non-dominance, distinctness and
/// strict domination of the reference point. Throws ehvi::Error with kind
/// DimensionMismatch, NonFiniteCoordinate, DuplicatePoint, DominatedMember
/// or ReferenceNotDominated.
Front validate_front(std::vector<Point> points, Point reference);

/// Independent Gaussian predictive distribution, one (mean, stddev) pair per
/// objective. Every standard deviation must be strictly positive.
class GaussianPredictor {
 public:
  GaussianPredictor(std::vector<double> mu, std::vector<double> sigma);

  std::size_t dim() const noexcept { return mu_.size(); }
  const std::vector<double>& mu() const noexcept { return mu_; }
  const std::vector<double>& sigma() const noexcept { return sigma_; }
  double mu(std::size_t d) const { return mu_[d]; }
  double sigma(std::size_t d) const { return sigma_[d]; }

 private:
  std::vector<double> mu_;
  std::vector<double> sigma_;
};

void require_dim(const Front& front, std::size_t dim, const char* what);
void require_compatible(const Front& front, const GaussianPredictor& g);

}  // namespace ehvi
