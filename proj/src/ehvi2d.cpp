#include "ehvi/ehvi2d.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "ehvi/hypervolume.hpp"
#include "ehvi/normal.hpp"

namespace ehvi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Q^x of the grid construction: P sorted by ascending x (hence descending y),
// framed by the sentinels (r_x, inf) at index 0 and (inf, r_y) at index n+1.
struct SortedStairs {
  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t n = 0;
};

SortedStairs sort_stairs(const Front& front) {
  std::vector<Vec2> pts;
  pts.reserve(front.size());
  for (const Point& p : front.points()) pts.push_back({p[0], p[1]});
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return a[0] < b[0]; });

  SortedStairs q;
  q.n = pts.size();
  const Point& r = front.reference();
  q.xs.reserve(q.n + 2);
  q.ys.reserve(q.n + 2);
  q.xs.push_back(r[0]);
  q.ys.push_back(kInf);
  for (const Vec2& p : pts) {
    q.xs.push_back(p[0]);
    q.ys.push_back(p[1]);
  }
  q.xs.push_back(kInf);
  q.ys.push_back(r[1]);
  return q;
}

// Probability mass and partial improvement about the lower bound for each
// interval [c[k], c[k+1]) of an ascending boundary list. Every boundary's
// density and tails are evaluated once and shared by its two intervals.
struct IntervalTable {
  std::vector<double> mass;
  std::vector<double> ei;
};

IntervalTable interval_table(const std::vector<double>& c, double mu, double sigma) {
  const std::size_t k = c.size();
  std::vector<double> t(k), pdf(k), lower(k), upper(k);
  for (std::size_t i = 0; i < k; ++i) {
    t[i] = (c[i] - mu) / sigma;
    pdf[i] = std_normal_pdf(t[i]);
    lower[i] = std_normal_cdf(t[i]);
    upper[i] = std_normal_sf(t[i]);
  }
  IntervalTable out;
  out.mass.assign(k - 1, 0.0);
  out.ei.assign(k - 1, 0.0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!(c[i] < c[i + 1])) continue;
    const double m = t[i] > 0.0 ? upper[i] - upper[i + 1] : lower[i + 1] - lower[i];
    const double e = sigma * (pdf[i] - pdf[i + 1]) + (mu - c[i]) * m;
    out.mass[i] = m;
    out.ei[i] = e > 0.0 ? e : 0.0;
  }
  return out;
}

void check_inputs(const Front& front, const GaussianPredictor& g, const char* what) {
  require_dim(front, 2, what);
  require_compatible(front, g);
}

}  // namespace

double ehvi_2d_naive(const Front& front, const GaussianPredictor& g) {
  check_inputs(front, g, "ehvi_2d_naive");
  const SortedStairs q = sort_stairs(front);
  const std::size_t n = q.n;
  const auto& pts = front.points();
  const Point& r = front.reference();
  const double mux = g.mu(0), muy = g.mu(1), sx = g.sigma(0), sy = g.sigma(1);

  std::vector<Vec2> subset;
  subset.reserve(n);
  double total = 0.0;
  for (std::size_t b = 0; b <= n; ++b) {
    const double ly = q.ys[n + 1 - b];
    const double uy = q.ys[n - b];
    for (std::size_t a = 0; a <= n; ++a) {
      const double lx = q.xs[a];
      const double ux = q.xs[a + 1];

      bool dominated = false;
      for (const Point& p : pts) {
        if (p[0] >= ux && p[1] >= uy) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;

      // Local reference: the part of [r, p] left of / below v is covered by
      // points above / right of the cell.
      double vx = r[0];
      double vy = r[1];
      subset.clear();
      for (const Point& p : pts) {
        if (p[1] >= uy) vx = std::max(vx, p[0]);
        if (p[0] >= ux) vy = std::max(vy, p[1]);
        if (p[0] <= lx && p[1] <= ly) subset.push_back({p[0], p[1]});
      }
      const double s_minus = dominated_area_2d(subset, {vx, vy});

      const double c1 = (psi(vx, lx, mux, sx) - psi(vx, ux, mux, sx)) *
                        (psi(vy, ly, muy, sy) - psi(vy, uy, muy, sy));
      const double c2 = normal_mass(lx, ux, mux, sx) * normal_mass(ly, uy, muy, sy);
      total += c1 - s_minus * c2;
    }
  }
  return total;
}

double ehvi_2d_fast(const Front& front, const GaussianPredictor& g) {
  check_inputs(front, g, "ehvi_2d_fast");
  const SortedStairs q = sort_stairs(front);
  const std::size_t n = q.n;
  const double mux = g.mu(0), muy = g.mu(1), sx = g.sigma(0), sy = g.sigma(1);

  // Column a spans [xs[a], xs[a+1]); row b spans [ys[n+1-b], ys[n-b]).
  const IntervalTable tx = interval_table(q.xs, mux, sx);
  const std::vector<double> ys_up(q.ys.rbegin(), q.ys.rend());
  const IntervalTable ty = interval_table(ys_up, muy, sy);
  const auto& mass_x = tx.mass;
  const auto& ei_x = tx.ei;
  const auto& mass_y = ty.mass;
  const auto& ei_y = ty.ei;

  double total = 0.0;
  for (std::size_t b = 0; b <= n; ++b) {
    // The first staircase cell of row b sits at a = n - b with S empty.
    const std::size_t first = n - b;
    const double vx = q.xs[first];
    const double ly = q.ys[n + 1 - b];
    const double psi_y_base = ei_y[b];
    double s_minus = 0.0;
    for (std::size_t a = first; a <= n; ++a) {
      if (a > first) s_minus += (q.xs[a] - vx) * (q.ys[a] - q.ys[a + 1]);
      const double vy = q.ys[a + 1];
      const double dpsi_x = ei_x[a] + mass_x[a] * (q.xs[a] - vx);
      const double dpsi_y = psi_y_base + mass_y[b] * (ly - vy);
      total += dpsi_x * dpsi_y - s_minus * (mass_x[a] * mass_y[b]);
    }
  }
  return total;
}

std::size_t count_nondominated_cells_2d(const Front& front) {
  require_dim(front, 2, "count_nondominated_cells_2d");
  const SortedStairs q = sort_stairs(front);
  const std::size_t n = q.n;
  std::size_t count = 0;
  for (std::size_t b = 0; b <= n; ++b) {
    for (std::size_t a = 0; a <= n; ++a) {
      bool dominated = false;
      for (const Point& p : front.points()) {
        if (p[0] >= q.xs[a + 1] && p[1] >= q.ys[n - b]) {
          dominated = true;
          break;
        }
      }
      if (!dominated) ++count;
    }
  }
  return count;
}

}  // namespace ehvi
