#include "ehvi/core.hpp"

#include <cmath>
#include <string>

namespace ehvi {

namespace {

void require_same_dim(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "points of dimension " + std::to_string(p.dim()) + " and " +
                    std::to_string(q.dim()));
  }
}

std::string describe(const Point& p) {
  std::string s = "(";
  for (std::size_t d = 0; d < p.dim(); ++d) {
    if (d) s += ",";
    s += std::to_string(p[d]);
  }
  return s + ")";
}

}  // namespace

bool dominates(const Point& p, const Point& q) {
  require_same_dim(p, q);
  bool strict = false;
  for (std::size_t d = 0; d < p.dim(); ++d) {
    if (p[d] < q[d]) return false;
    if (p[d] > q[d]) strict = true;
  }
  return strict;
}

bool weakly_dominates(const Point& p, const Point& q) {
  require_same_dim(p, q);
  for (std::size_t d = 0; d < p.dim(); ++d) {
    if (p[d] < q[d]) return false;
  }
  return true;
}

Front validate_front(std::vector<Point> points, Point reference) {
  if (reference.dim() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "reference point has no coordinates");
  }
  for (double c : reference) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::NonFiniteCoordinate, "reference " + describe(reference));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.dim() != reference.dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "point " + std::to_string(i) + " has dimension " + std::to_string(p.dim()) +
                      ", reference has " + std::to_string(reference.dim()));
    }
    for (std::size_t d = 0; d < p.dim(); ++d) {
      if (!std::isfinite(p[d])) {
        throw Error(ErrorKind::NonFiniteCoordinate, "point " + std::to_string(i) + " " + describe(p));
      }
      if (p[d] <= reference[d]) {
        throw Error(ErrorKind::ReferenceNotDominated,
                    "point " + std::to_string(i) + " " + describe(p) +
                        " does not strictly exceed reference " + describe(reference));
      }
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::DuplicatePoint,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " are both " +
                        describe(points[i]));
      }
      if (dominates(points[i], points[j]) || dominates(points[j], points[i])) {
        throw Error(ErrorKind::DominatedMember,
                    describe(points[i]) + " and " + describe(points[j]) + " are comparable");
      }
    }
  }
  return Front(std::move(points), std::move(reference));
}

GaussianPredictor::GaussianPredictor(std::vector<double> mu, std::vector<double> sigma)
    : mu_(std::move(mu)), sigma_(std::move(sigma)) {
  if (mu_.size() != sigma_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "mu has " + std::to_string(mu_.size()) +
                                                  " entries, sigma has " +
                                                  std::to_string(sigma_.size()));
  }
  if (mu_.empty()) throw Error(ErrorKind::InvalidPredictor, "empty predictor");
  for (std::size_t d = 0; d < mu_.size(); ++d) {
    if (!std::isfinite(mu_[d])) {
      throw Error(ErrorKind::InvalidPredictor, "mu[" + std::to_string(d) + "] is not finite");
    }
    if (!(sigma_[d] > 0.0) || !std::isfinite(sigma_[d])) {
      throw Error(ErrorKind::InvalidPredictor,
                  "sigma[" + std::to_string(d) + "] must be finite and > 0");
    }
  }
}

void require_dim(const Front& front, std::size_t dim, const char* what) {
  if (front.dim() != dim) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a " +
                                                  std::to_string(dim) + "-D front, got " +
                                                  std::to_string(front.dim()) + "-D");
  }
}

void require_compatible(const Front& front, const GaussianPredictor& g) {
  if (front.dim() != g.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "predictor has dimension " +
                                                  std::to_string(g.dim()) + ", front has " +
                                                  std::to_string(front.dim()));
  }
}

}  // namespace ehvi
