#include "ehvi/normal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ehvi/error.hpp"

namespace ehvi {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

void require_positive_sigma(double sigma) {
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::InvalidPredictor, "sigma must be > 0, got " + std::to_string(sigma));
  }
}

}  // namespace

double std_normal_pdf(double s) {
  if (std::isinf(s)) return 0.0;
  return kInvSqrt2Pi * std::exp(-0.5 * s * s);
}

double std_normal_cdf(double s) { return 0.5 * std::erfc(-s * kInvSqrt2); }

double std_normal_sf(double s) { return 0.5 * std::erfc(s * kInvSqrt2); }

double normal_mass(double l, double u, double mu, double sigma) {
  require_positive_sigma(sigma);
  if (!(l < u)) return 0.0;
  const double tl = (l - mu) / sigma;
  const double tu = (u - mu) / sigma;
  if (tl > 0.0) return std_normal_sf(tl) - std_normal_sf(tu);
  return std_normal_cdf(tu) - std_normal_cdf(tl);
}

double psi(double a, double b, double mu, double sigma) {
  require_positive_sigma(sigma);
  if (b == std::numeric_limits<double>::infinity()) return 0.0;
  const double t = (b - mu) / sigma;
  return sigma * std_normal_pdf(t) + (mu - a) * std_normal_sf(t);
}

double partial_ei_1d(double fbest, double l, double u, double mu, double sigma) {
  require_positive_sigma(sigma);
  if (l > u) {
    throw Error(ErrorKind::InvalidArgument,
                "interval [" + std::to_string(l) + ", " + std::to_string(u) + ") is reversed");
  }
  if (l == u) return 0.0;
  const double v = psi(fbest, l, mu, sigma) - psi(fbest, u, mu, sigma);
  return v > 0.0 ? v : 0.0;
}

}  // namespace ehvi
