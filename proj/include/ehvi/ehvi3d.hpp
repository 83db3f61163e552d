#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ehvi/core.hpp"

namespace ehvi {

/// Cell complex of a 3-D front. s[d] holds the d-th coordinates of
/// {r} u P u {(inf, inf, inf)} in ascending order (duplicates kept, giving
/// zero-width cells). Cell C(a1, a2, a3), 0 <= a_d <= n, spans
/// [s[d][a_d], s[d][a_d + 1]) in every dimension.
struct CellGrid3 {
  std::array<std::vector<double>, 3> s;
  std::size_t n = 0;

  static CellGrid3 build(const Front& front);

  std::size_t side() const noexcept { return n + 1; }
  double lower(std::size_t d, std::size_t a) const { return s[d][a]; }
  double upper(std::size_t d, std::size_t a) const { return s[d][a + 1]; }
  bool zero_width(std::size_t d, std::size_t a) const { return s[d][a + 1] == s[d][a]; }
};

/// Per-axis height tables, each (n+1) x (n+1):
///   z(a1, a2) = max({r_z} u {q_z : q_x >= s_x[a1+1], q_y >= s_y[a2+1]})
///   x(a2, a3) = max({r_x} u {q_x : q_y >= s_y[a2+1], q_z >= s_z[a3+1]})
///   y(a1, a3) = max({r_y} u {q_y : q_x >= s_x[a1+1], q_z >= s_z[a3+1]})
/// Cell C(a1, a2, a3) is dominated iff z(a1, a2) >= s_z[a3+1].
struct HeightArrays {
  std::size_t side = 0;
  std::vector<double> hz;
  std::vector<double> hx;
  std::vector<double> hy;

  double z(std::size_t a1, std::size_t a2) const { return hz[a1 * side + a2]; }
  double x(std::size_t a2, std::size_t a3) const { return hx[a2 * side + a3]; }
  double y(std::size_t a1, std::size_t a3) const { return hy[a1 * side + a3]; }
};

HeightArrays build_height_arrays(const Front& front, const CellGrid3& grid);

/// One z-layer of the slice-update sweep.
///   svol(a1, a2): volume of DomSet(P) inside [r, lower corner of C(a1, a2, a3)]
///   zsl(a1, a2):  area of the xy-projection of {q : q_z >= s_z[a3+1]}
///                 inside [r_xy, lower corner_xy]
struct SliceLayer {
  std::size_t a3 = 0;
  std::size_t side = 0;
  std::vector<double> svol;
  std::vector<double> zsl;

  double svol_at(std::size_t a1, std::size_t a2) const { return svol[a1 * side + a2]; }
  double zsl_at(std::size_t a1, std::size_t a2) const { return zsl[a1 * side + a2]; }
};

/// Walks the layers a3 = 0..n in order, keeping only the current layer.
class SliceSweep {
 public:
  SliceSweep(const CellGrid3& grid, const HeightArrays& heights);

  const SliceLayer& layer() const noexcept { return layer_; }
  bool done() const noexcept { return layer_.a3 > grid_->n; }
  void advance();

 private:
  void compute_zslice();

  const CellGrid3* grid_;
  const HeightArrays* heights_;
  SliceLayer layer_;
};

enum class Scheme3d { EightTerm, FiveTerm, TwoTerm, Slice };

std::string_view to_string(Scheme3d scheme);

/// Eight-term decomposition against the global reference r, with the
/// dominated volume and the three slice areas recomputed per cell.
double ehvi_3d_8term(const Front& front, const GaussianPredictor& g);

/// Five-term form using the per-cell local reference v, which makes the
/// three one-dimensional corrections vanish.
double ehvi_3d_5term(const Front& front, const GaussianPredictor& g);

/// Two-term form: a single dominated-volume evaluation per cell at the
/// cell's conditional centre of mass.
double ehvi_3d_2term(const Front& front, const GaussianPredictor& g);

/// O(n^3) slice-update scheme with O(n^2) extra memory.
double ehvi_3d_slice(const Front& front, const GaussianPredictor& g);

double ehvi_3d(const Front& front, const GaussianPredictor& g, Scheme3d scheme);

/// EHVI of many predictors against one front. For the eight-term, five-term
/// and slice schemes, geometry is derived once per cell and shared by all
/// predictors; the two-term scheme is evaluated per predictor.
std::vector<double> ehvi_3d_batch(const Front& front, std::span<const GaussianPredictor> gs,
                                  Scheme3d scheme);

}  // namespace ehvi
