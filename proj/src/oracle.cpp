#include "ehvi/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ehvi/hypervolume.hpp"
#include "ehvi/normal.hpp"
#include "ehvi/random.hpp"

namespace ehvi {

McResult ehvi_mc(const Front& front, const GaussianPredictor& g, std::size_t trials,
                 std::uint64_t seed) {
  require_compatible(front, g);
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "Monte Carlo needs at least one trial");

  ImprovementEvaluator improvement(front);
  NormalSampler normal(seed);
  const std::size_t m = front.dim();
  std::array<double, 3> sample{};
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t d = 0; d < m; ++d) sample[d] = g.mu(d) + g.sigma(d) * normal();
    const double hi = improvement(std::span<const double>(sample.data(), m));
    sum += hi;
    sum_sq += hi * hi;
  }

  McResult result;
  result.trials = trials;
  result.seed = seed;
  const double n = static_cast<double>(trials);
  result.estimate = sum / n;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - sum * result.estimate) / (n - 1.0));
    result.standard_error = std::sqrt(var / n);
  }
  return result;
}

namespace {

constexpr std::array<double, 4> kGaussNodes{0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGaussWeights{0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // quadrature weight times the normal density
};

// Composite Gauss-Legendre on [lo, hi] with breakpoints at the front's
// coordinates; `panels` is distributed over the pieces by length.
AxisRule axis_rule(double lo, double hi, std::vector<double> cuts, std::size_t panels, double mu,
                   double sigma) {
  std::vector<double> knots{lo, hi};
  for (double c : cuts) {
    if (c > lo && c < hi) knots.push_back(c);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  AxisRule rule;
  const double span = hi - lo;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double a = knots[k];
    const double b = knots[k + 1];
    const auto pieces = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(static_cast<double>(panels) * (b - a) / span)));
    const double h = (b - a) / static_cast<double>(pieces);
    for (std::size_t j = 0; j < pieces; ++j) {
      const double centre = a + (static_cast<double>(j) + 0.5) * h;
      for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
        for (double sign : {-1.0, 1.0}) {
          const double x = centre + sign * 0.5 * h * kGaussNodes[i];
          rule.nodes.push_back(x);
          rule.weights.push_back(0.5 * h * kGaussWeights[i] * std_normal_pdf((x - mu) / sigma) /
                                 sigma);
        }
      }
    }
  }
  return rule;
}

double integrate(const Front& front, const GaussianPredictor& g, std::size_t panels,
                 const std::vector<double>& lo, const std::vector<double>& hi) {
  const std::size_t m = front.dim();
  std::vector<AxisRule> rules;
  for (std::size_t d = 0; d < m; ++d) {
    std::vector<double> cuts;
    for (const Point& p : front.points()) cuts.push_back(p[d]);
    rules.push_back(axis_rule(lo[d], hi[d], std::move(cuts), panels, g.mu(d), g.sigma(d)));
  }

  ImprovementEvaluator improvement(front);
  std::array<double, 3> p{};
  const std::span<const double> view(p.data(), m);
  double total = 0.0;
  if (m == 2) {
    for (std::size_t i = 0; i < rules[0].nodes.size(); ++i) {
      p[0] = rules[0].nodes[i];
      double row = 0.0;
      for (std::size_t j = 0; j < rules[1].nodes.size(); ++j) {
        p[1] = rules[1].nodes[j];
        row += rules[1].weights[j] * improvement(view);
      }
      total += rules[0].weights[i] * row;
    }
  } else {
    for (std::size_t i = 0; i < rules[0].nodes.size(); ++i) {
      p[0] = rules[0].nodes[i];
      double plane = 0.0;
      for (std::size_t j = 0; j < rules[1].nodes.size(); ++j) {
        p[1] = rules[1].nodes[j];
        double row = 0.0;
        for (std::size_t k = 0; k < rules[2].nodes.size(); ++k) {
          p[2] = rules[2].nodes[k];
          row += rules[2].weights[k] * improvement(view);
        }
        plane += rules[1].weights[j] * row;
      }
      total += rules[0].weights[i] * plane;
    }
  }
  return total;
}

}  // namespace

double ehvi_quadrature(const Front& front, const GaussianPredictor& g,
                       std::size_t max_cells_per_dim) {
  require_compatible(front, g);
  const std::size_t m = front.dim();
  if (m != 2 && m != 3) {
    throw Error(ErrorKind::DimensionMismatch, "quadrature supports m = 2 or 3");
  }
  if (max_cells_per_dim < 4) {
    throw Error(ErrorKind::InvalidArgument, "cells_per_dim must be >= 4");
  }

  constexpr double kTruncation = 8.0;
  std::vector<double> lo(m), hi(m);
  for (std::size_t d = 0; d < m; ++d) {
    lo[d] = std::max(front.reference()[d], g.mu(d) - kTruncation * g.sigma(d));
    hi[d] = g.mu(d) + kTruncation * g.sigma(d);
    if (!(hi[d] > lo[d])) return 0.0;
  }

  std::size_t panels = 4;
  double older = integrate(front, g, panels, lo, hi);
  double newer = older;
  while (panels * 2 <= max_cells_per_dim) {
    panels *= 2;
    older = newer;
    newer = integrate(front, g, panels, lo, hi);
    if (std::abs(newer - older) <= 1e-7 * std::abs(newer)) return newer;
  }
  throw ConvergenceFailure(older, newer,
                           "no convergence within " + std::to_string(max_cells_per_dim) +
                               " cells per axis");
}

}  // namespace ehvi
