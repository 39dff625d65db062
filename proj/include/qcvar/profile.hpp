#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace qcvar::planar {

using cplx = std::complex<double>;

/// Cells of the Lipschitz building block g on one period.
///
/// Diamond1 = {|x−3| + |y| ≤ 1} with g = i(z−2), Diamond2 = {|x−5| + |y| ≤ 1} with
/// g = i(6−z). The rest of the square [2,6]×[−2,2] is covered by twelve affine
/// triangles: T1..T6 above the real axis, T7..T12 their mirror images. Outside the
/// 8-periodic copies of the square g vanishes.
enum class Cell : std::uint8_t {
  Outside,
  Diamond1,
  Diamond2,
  T1, T2, T3, T4, T5, T6,
  T7, T8, T9, T10, T11, T12,
};

std::string_view cell_name(Cell cell);

/// Constant derivative of g on a cell: g_x and g_y as complex numbers.
struct CellGradient {
  cplx gx;
  cplx gy;

  cplx dz() const { return 0.5 * (gx - cplx(0, 1) * gy); }
  cplx dzbar() const { return 0.5 * (gx + cplx(0, 1) * gy); }
  /// Real 2×2 Jacobian with columns ∂g/∂x, ∂g/∂y.
  Eigen::Matrix2d jacobian() const;
  /// Operator norm |g_z| + |g_z̄|.
  double op_norm() const { return std::abs(dz()) + std::abs(dzbar()); }
};

/// Result of evaluating g. Points within kBoundaryTol of a cell edge report no gradient.
struct GSample {
  cplx value;
  Cell cell;
  std::optional<CellGradient> gradient;
  double boundary_margin;  // distance to the nearest edge of the containing cell

  bool on_boundary() const { return !gradient.has_value(); }
};

inline constexpr double kBoundaryTol = 1e-12;

/// Piecewise-affine g on the fixed 2 + 12 cell triangulation.
class TriangulatedProfile {
 public:
  struct Polygon {
    Cell cell;
    std::vector<cplx> vertices;  // counter-clockwise
    std::vector<cplx> values;    // g at each vertex
    CellGradient gradient;
  };

  static const TriangulatedProfile& standard();

  GSample eval(cplx z) const;
  double lipschitz() const;
  std::span<const Polygon> cells() const { return cells_; }

  /// g from the cell's affine formula, regardless of which cell contains z.
  cplx affine_value(const Polygon& cell, cplx z) const;

 private:
  TriangulatedProfile();
  std::vector<Polygon> cells_;  // diamonds first, then T1..T12
};

GSample g_eval(cplx z);
double g_lipschitz();

/// Real trace −i g(x): 8-periodic tent, x−2 on [2,4], 6−x on [4,6], 0 elsewhere.
double tent_eval(double x);

/// s_m(x) = sign sin(2^{m+1} π x), exactly 0 on the lattice zeros.
int rademacher_eval(int m, double x);

/// z ∈ B: inside an 8-periodic copy of the open square (2,6)×(−2,2) and outside both
/// closed diamonds.
bool in_bad_set(cplx z);

/// All m ≤ m_max with 4^m z ∈ B.
std::vector<int> scale_hits(cplx z, int m_max);

}  // namespace qcvar::planar
