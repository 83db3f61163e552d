#include "ehvi/ehvi3d.hpp"

#include <algorithm>
#include <limits>

#include "ehvi/hypervolume.hpp"
#include "ehvi/normal.hpp"

namespace ehvi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Probability mass and partial improvement (about the lower bound) of every
// grid interval, per axis, for one predictor.
struct AxisTables {
  std::array<std::vector<double>, 3> mass;
  std::array<std::vector<double>, 3> ei;
};

AxisTables make_tables(const CellGrid3& grid, const GaussianPredictor& g) {
  AxisTables t;
  for (std::size_t d = 0; d < 3; ++d) {
    t.mass[d].resize(grid.side());
    t.ei[d].resize(grid.side());
    for (std::size_t a = 0; a <= grid.n; ++a) {
      const double l = grid.lower(d, a);
      const double u = grid.upper(d, a);
      t.mass[d][a] = normal_mass(l, u, g.mu(d), g.sigma(d));
      t.ei[d][a] = partial_ei_1d(l, l, u, g.mu(d), g.sigma(d));
    }
  }
  return t;
}

std::vector<AxisTables> make_tables(const CellGrid3& grid, std::span<const GaussianPredictor> gs) {
  std::vector<AxisTables> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(make_tables(grid, g));
  return out;
}

// Correction terms of one cell, indexed by the subset C of {x, y, z} encoded
// as a bit mask (bit 0 = x, bit 1 = y, bit 2 = z). s[C] is the measure of the
// dominated part of the projection onto the axes outside C, restricted to
// points beyond the cell's upper corner on the axes in C. s[7] is always 0
// for a non-dominated cell.
struct EightTerms {
  std::array<double, 8> s{};
};

double eight_term_contribution(const EightTerms& c, const std::array<double, 3>& len,
                               const AxisTables& t, std::size_t a1, std::size_t a2,
                               std::size_t a3) {
  const std::array<std::size_t, 3> idx{a1, a2, a3};
  double total = 0.0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    double weight = 1.0;
    double box = 1.0;
    for (std::size_t d = 0; d < 3; ++d) {
      if (mask & (1u << d)) {
        weight *= t.ei[d][idx[d]];
      } else {
        weight *= t.mass[d][idx[d]];
        box *= len[d];
      }
    }
    total += weight * (box - c.s[mask]);
  }
  return total;
}

void check_inputs(const Front& front, std::span<const GaussianPredictor> gs, const char* what) {
  require_dim(front, 3, what);
  for (const auto& g : gs) require_compatible(front, g);
}

bool cell_is_skipped(const CellGrid3& grid, const HeightArrays& h, std::size_t a1, std::size_t a2,
                     std::size_t a3) {
  if (grid.zero_width(0, a1) || grid.zero_width(1, a2) || grid.zero_width(2, a3)) return true;
  return h.z(a1, a2) >= grid.upper(2, a3);
}

// The points of the front, pre-sorted and pre-filtered for the per-cell
// clipped volume and area evaluations of the eight- and five-term schemes.
//   by_z:      all points, descending z
//   yz[a1]:    (y, z) of points with x >= s_x[a1+1], descending y
//   xz[a2]:    (x, z) of points with y >= s_y[a2+1], descending x
//   xy[a3]:    (x, y) of points with z >= s_z[a3+1], descending x
struct SortedSelections {
  std::vector<Vec3> by_z;
  std::vector<std::vector<Vec2>> yz, xz, xy;
};

SortedSelections make_selections(const Front& front, const CellGrid3& grid) {
  SortedSelections sel;
  for (const Point& p : front.points()) sel.by_z.push_back({p[0], p[1], p[2]});
  std::sort(sel.by_z.begin(), sel.by_z.end(),
            [](const Vec3& a, const Vec3& b) { return a[2] > b[2]; });

  auto select = [&](std::size_t axis, std::size_t first, std::size_t second) {
    std::vector<Vec3> order = sel.by_z;
    std::sort(order.begin(), order.end(),
              [&](const Vec3& a, const Vec3& b) { return a[first] > b[first]; });
    std::vector<std::vector<Vec2>> lists(grid.side());
    for (std::size_t a = 0; a <= grid.n; ++a) {
      const double bound = grid.upper(axis, a);
      for (const Vec3& q : order) {
        if (q[axis] >= bound) lists[a].push_back({q[first], q[second]});
      }
    }
    return lists;
  };
  sel.yz = select(0, 1, 2);
  sel.xz = select(1, 0, 2);
  sel.xy = select(2, 0, 1);
  return sel;
}

// Visits every non-dominated cell of nonzero width, handing the cell's
// geometry to `emit` exactly once; predictors are looped inside `emit`.
template <typename Emit>
void for_each_open_cell(const CellGrid3& grid, const HeightArrays& h, Emit&& emit) {
  for (std::size_t a1 = 0; a1 <= grid.n; ++a1) {
    for (std::size_t a2 = 0; a2 <= grid.n; ++a2) {
      for (std::size_t a3 = 0; a3 <= grid.n; ++a3) {
        if (cell_is_skipped(grid, h, a1, a2, a3)) continue;
        emit(a1, a2, a3);
      }
    }
  }
}

std::vector<double> batch_8term(const Front& front, std::span<const GaussianPredictor> gs) {
  const CellGrid3 grid = CellGrid3::build(front);
  const HeightArrays h = build_height_arrays(front, grid);
  const SortedSelections sel = make_selections(front, grid);
  const std::vector<AxisTables> tables = make_tables(grid, gs);
  const Point& r = front.reference();
  Staircase2d stair;

  std::vector<double> totals(gs.size(), 0.0);
  for_each_open_cell(grid, h, [&](std::size_t a1, std::size_t a2, std::size_t a3) {
    const double lx = grid.lower(0, a1), ly = grid.lower(1, a2), lz = grid.lower(2, a3);
    EightTerms c;
    c.s[0] = dominated_volume_3d_sorted(sel.by_z, {r[0], r[1], r[2]}, {lx, ly, lz}, stair);
    c.s[1] = dominated_area_2d_sorted(sel.yz[a1], {r[1], r[2]}, {ly, lz});
    c.s[2] = dominated_area_2d_sorted(sel.xz[a2], {r[0], r[2]}, {lx, lz});
    c.s[4] = dominated_area_2d_sorted(sel.xy[a3], {r[0], r[1]}, {lx, ly});
    c.s[3] = std::min(h.z(a1, a2), lz) - r[2];
    c.s[5] = std::min(h.y(a1, a3), ly) - r[1];
    c.s[6] = std::min(h.x(a2, a3), lx) - r[0];
    c.s[7] = 0.0;
    const std::array<double, 3> len{lx - r[0], ly - r[1], lz - r[2]};
    for (std::size_t k = 0; k < gs.size(); ++k) {
      totals[k] += eight_term_contribution(c, len, tables[k], a1, a2, a3);
    }
  });
  return totals;
}

std::vector<double> batch_5term(const Front& front, std::span<const GaussianPredictor> gs) {
  const CellGrid3 grid = CellGrid3::build(front);
  const HeightArrays h = build_height_arrays(front, grid);
  const SortedSelections sel = make_selections(front, grid);
  const std::vector<AxisTables> tables = make_tables(grid, gs);
  Staircase2d stair;

  std::vector<double> totals(gs.size(), 0.0);
  for_each_open_cell(grid, h, [&](std::size_t a1, std::size_t a2, std::size_t a3) {
    const double lx = grid.lower(0, a1), ly = grid.lower(1, a2), lz = grid.lower(2, a3);
    // Local reference: [r, p] \ [v, p] is covered by points beyond the cell.
    const double vx = h.x(a2, a3), vy = h.y(a1, a3), vz = h.z(a1, a2);
    const double vol = dominated_volume_3d_sorted(sel.by_z, {vx, vy, vz}, {lx, ly, lz}, stair);
    const double area_x = dominated_area_2d_sorted(sel.yz[a1], {vy, vz}, {ly, lz});
    const double area_y = dominated_area_2d_sorted(sel.xz[a2], {vx, vz}, {lx, lz});
    const double area_z = dominated_area_2d_sorted(sel.xy[a3], {vx, vy}, {lx, ly});
    for (std::size_t k = 0; k < gs.size(); ++k) {
      const AxisTables& t = tables[k];
      const double mx = t.mass[0][a1], my = t.mass[1][a2], mz = t.mass[2][a3];
      const double ex = t.ei[0][a1], ey = t.ei[1][a2], ez = t.ei[2][a3];
      const double px = ex + mx * (lx - vx);
      const double py = ey + my * (ly - vy);
      const double pz = ez + mz * (lz - vz);
      totals[k] += px * py * pz - vol * (mx * my * mz) - ex * area_x * (my * mz) -
                   ey * area_y * (mx * mz) - ez * area_z * (mx * my);
    }
  });
  return totals;
}

double single_2term(const Front& front, const CellGrid3& grid, const HeightArrays& h,
                    std::span<const Vec3> by_z, const GaussianPredictor& g, Staircase2d& stair) {
  const AxisTables t = make_tables(grid, g);
  const Point& r = front.reference();
  double total = 0.0;
  for_each_open_cell(grid, h, [&](std::size_t a1, std::size_t a2, std::size_t a3) {
    const std::array<std::size_t, 3> idx{a1, a2, a3};
    std::array<double, 3> ei_r{};
    Vec3 centre{};
    double mass = 1.0;
    double product = 1.0;
    for (std::size_t d = 0; d < 3; ++d) {
      const double m = t.mass[d][idx[d]];
      // Below double resolution: the cell carries no probability.
      if (m == 0.0) return;
      ei_r[d] = t.ei[d][idx[d]] + m * (grid.lower(d, idx[d]) - r[d]);
      centre[d] = r[d] + ei_r[d] / m;
      mass *= m;
      product *= ei_r[d];
    }
    const double s_minus = dominated_volume_3d_sorted(by_z, {r[0], r[1], r[2]}, centre, stair);
    total += product - s_minus * mass;
  });
  return total;
}

std::vector<double> batch_2term(const Front& front, std::span<const GaussianPredictor> gs) {
  const CellGrid3 grid = CellGrid3::build(front);
  const HeightArrays h = build_height_arrays(front, grid);
  std::vector<Vec3> by_z;
  for (const Point& p : front.points()) by_z.push_back({p[0], p[1], p[2]});
  std::sort(by_z.begin(), by_z.end(), [](const Vec3& a, const Vec3& b) { return a[2] > b[2]; });
  Staircase2d stair;
  std::vector<double> totals;
  totals.reserve(gs.size());
  for (const auto& g : gs) totals.push_back(single_2term(front, grid, h, by_z, g, stair));
  return totals;
}

std::vector<double> batch_slice(const Front& front, std::span<const GaussianPredictor> gs) {
  const CellGrid3 grid = CellGrid3::build(front);
  const HeightArrays h = build_height_arrays(front, grid);
  const std::vector<AxisTables> tables = make_tables(grid, gs);
  const Point& r = front.reference();
  const std::size_t n = grid.n;

  std::vector<double> totals(gs.size(), 0.0);
  for (SliceSweep sweep(grid, h); !sweep.done(); sweep.advance()) {
    const SliceLayer& layer = sweep.layer();
    const std::size_t a3 = layer.a3;
    if (grid.zero_width(2, a3)) continue;
    const double lz = grid.lower(2, a3);
    const double uz = grid.upper(2, a3);
    for (std::size_t a1 = 0; a1 <= n; ++a1) {
      if (grid.zero_width(0, a1)) continue;
      const double lx = grid.lower(0, a1);
      const double ux = grid.upper(0, a1);
      for (std::size_t a2 = 0; a2 <= n; ++a2) {
        if (grid.zero_width(1, a2)) continue;
        if (h.z(a1, a2) >= uz) continue;
        const double ly = grid.lower(1, a2);
        const double uy = grid.upper(1, a2);
        const double base = layer.svol_at(a1, a2);
        EightTerms c;
        c.s[0] = base;
        c.s[1] = a1 < n ? (layer.svol_at(a1 + 1, a2) - base) / (ux - lx) : 0.0;
        c.s[2] = a2 < n ? (layer.svol_at(a1, a2 + 1) - base) / (uy - ly) : 0.0;
        c.s[4] = layer.zsl_at(a1, a2);
        c.s[3] = h.z(a1, a2) - r[2];
        c.s[5] = h.y(a1, a3) - r[1];
        c.s[6] = h.x(a2, a3) - r[0];
        c.s[7] = 0.0;
        const std::array<double, 3> len{lx - r[0], ly - r[1], lz - r[2]};
        for (std::size_t k = 0; k < gs.size(); ++k) {
          totals[k] += eight_term_contribution(c, len, tables[k], a1, a2, a3);
        }
      }
    }
  }
  return totals;
}

// Height table for axis h over the (u, v) plane:
//   out[a * side + b] = max({ref_h} u {q_h : q_u >= s_u[a+1], q_v >= s_v[b+1]}).
// Each point lands in the last cell its (u, v) projection still covers; a
// 2-D suffix maximum then propagates it to every cell below and left.
std::vector<double> height_table(const Front& front, const CellGrid3& grid, std::size_t u,
                                 std::size_t v, std::size_t hd) {
  const std::size_t side = grid.side();
  const double ref_h = front.reference()[hd];
  std::vector<double> table(side * side, -kInf);
  for (const Point& q : front.points()) {
    const auto iu = std::upper_bound(grid.s[u].begin(), grid.s[u].end(), q[u]) - grid.s[u].begin();
    const auto iv = std::upper_bound(grid.s[v].begin(), grid.s[v].end(), q[v]) - grid.s[v].begin();
    double& cell = table[static_cast<std::size_t>(iu - 2) * side + static_cast<std::size_t>(iv - 2)];
    cell = std::max(cell, q[hd]);
  }
  for (std::size_t a = side; a-- > 0;) {
    for (std::size_t b = side; b-- > 0;) {
      double& cell = table[a * side + b];
      if (a + 1 < side) cell = std::max(cell, table[(a + 1) * side + b]);
      if (b + 1 < side) cell = std::max(cell, table[a * side + b + 1]);
    }
  }
  for (double& cell : table) cell = std::max(cell, ref_h);
  return table;
}

}  // namespace

CellGrid3 CellGrid3::build(const Front& front) {
  require_dim(front, 3, "CellGrid3");
  CellGrid3 grid;
  grid.n = front.size();
  for (std::size_t d = 0; d < 3; ++d) {
    auto& s = grid.s[d];
    s.reserve(grid.n + 2);
    s.push_back(front.reference()[d]);
    for (const Point& p : front.points()) s.push_back(p[d]);
    std::sort(s.begin() + 1, s.end());
    s.push_back(kInf);
  }
  return grid;
}

HeightArrays build_height_arrays(const Front& front, const CellGrid3& grid) {
  require_dim(front, 3, "build_height_arrays");
  HeightArrays h;
  h.side = grid.side();
  h.hz = height_table(front, grid, 0, 1, 2);
  h.hx = height_table(front, grid, 1, 2, 0);
  h.hy = height_table(front, grid, 0, 2, 1);
  return h;
}

SliceSweep::SliceSweep(const CellGrid3& grid, const HeightArrays& heights)
    : grid_(&grid), heights_(&heights) {
  layer_.a3 = 0;
  layer_.side = grid.side();
  layer_.svol.assign(layer_.side * layer_.side, 0.0);
  layer_.zsl.assign(layer_.side * layer_.side, 0.0);
  compute_zslice();
}

void SliceSweep::advance() {
  if (done()) return;
  const std::size_t a3 = layer_.a3;
  if (a3 < grid_->n) {
    const double dz = grid_->upper(2, a3) - grid_->lower(2, a3);
    for (std::size_t i = 0; i < layer_.svol.size(); ++i) layer_.svol[i] += layer_.zsl[i] * dz;
  }
  ++layer_.a3;
  if (!done()) compute_zslice();
}

void SliceSweep::compute_zslice() {
  const std::size_t side = layer_.side;
  const double uz = grid_->upper(2, layer_.a3);
  const double rx = grid_->lower(0, 0);
  const double ry = grid_->lower(1, 0);
  auto& zsl = layer_.zsl;
  for (std::size_t a1 = 0; a1 < side; ++a1) {
    for (std::size_t a2 = 0; a2 < side; ++a2) {
      double& cell = zsl[a1 * side + a2];
      if (a1 == 0 || a2 == 0) {
        cell = 0.0;
      } else if (heights_->z(a1 - 1, a2 - 1) >= uz) {
        cell = (grid_->lower(0, a1) - rx) * (grid_->lower(1, a2) - ry);
      } else {
        cell = zsl[(a1 - 1) * side + a2] + zsl[a1 * side + a2 - 1] - zsl[(a1 - 1) * side + a2 - 1];
      }
    }
  }
}

std::string_view to_string(Scheme3d scheme) {
  switch (scheme) {
    case Scheme3d::EightTerm: return "8term";
    case Scheme3d::FiveTerm: return "5term";
    case Scheme3d::TwoTerm: return "2term";
    case Scheme3d::Slice: return "slice";
  }
  return "unknown";
}

std::vector<double> ehvi_3d_batch(const Front& front, std::span<const GaussianPredictor> gs,
                                  Scheme3d scheme) {
  check_inputs(front, gs, "ehvi_3d_batch");
  if (gs.empty()) return {};
  switch (scheme) {
    case Scheme3d::EightTerm: return batch_8term(front, gs);
    case Scheme3d::FiveTerm: return batch_5term(front, gs);
    case Scheme3d::TwoTerm: return batch_2term(front, gs);
    case Scheme3d::Slice: return batch_slice(front, gs);
  }
  return {};
}

double ehvi_3d(const Front& front, const GaussianPredictor& g, Scheme3d scheme) {
  return ehvi_3d_batch(front, std::span<const GaussianPredictor>(&g, 1), scheme).front();
}

double ehvi_3d_8term(const Front& front, const GaussianPredictor& g) {
  return ehvi_3d(front, g, Scheme3d::EightTerm);
}

double ehvi_3d_5term(const Front& front, const GaussianPredictor& g) {
  return ehvi_3d(front, g, Scheme3d::FiveTerm);
}

double ehvi_3d_2term(const Front& front, const GaussianPredictor& g) {
  return ehvi_3d(front, g, Scheme3d::TwoTerm);
}

double ehvi_3d_slice(const Front& front, const GaussianPredictor& g) {
  return ehvi_3d(front, g, Scheme3d::Slice);
}

}  // namespace ehvi
