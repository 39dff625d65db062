#include "qcvar/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcvar::planar {

namespace {

constexpr cplx kI{0.0, 1.0};

double cross(cplx u, cplx v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool in_diamond(cplx p, double cx) { return std::abs(p.real() - cx) + std::abs(p.imag()) <= 1.0; }

// Values on the diamond closures and zero on the boundary of the square.
cplx vertex_value(cplx p) {
  if (in_diamond(p, 3.0)) return kI * (p - 2.0);
  if (in_diamond(p, 5.0)) return kI * (6.0 - p);
  return 0.0;
}

CellGradient solve_affine(const std::vector<cplx>& v, const std::vector<cplx>& val) {
  const cplx d1 = v[1] - v[0];
  const cplx d2 = v[2] - v[0];
  const cplx r1 = val[1] - val[0];
  const cplx r2 = val[2] - val[0];
  const double det = d1.real() * d2.imag() - d1.imag() * d2.real();
  return {(r1 * d2.imag() - r2 * d1.imag()) / det, (d1.real() * r2 - d2.real() * r1) / det};
}

TriangulatedProfile::Polygon make_triangle(Cell cell, cplx a, cplx b, cplx c) {
  std::vector<cplx> v{a, b, c};
  if (cross(b - a, c - a) < 0) std::swap(v[1], v[2]);
  std::vector<cplx> val{vertex_value(v[0]), vertex_value(v[1]), vertex_value(v[2])};
  auto grad = solve_affine(v, val);
  return {cell, std::move(v), std::move(val), grad};
}

// Signed distance to the nearest edge; positive strictly inside a convex CCW polygon.
double inner_margin(const std::vector<cplx>& v, cplx p) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const cplx a = v[k];
    const cplx b = v[(k + 1) % v.size()];
    m = std::min(m, cross(b - a, p - a) / std::abs(b - a));
  }
  return m;
}

double reduce_period(double x) { return x - 8.0 * std::floor(x / 8.0); }

}  // namespace

std::string_view cell_name(Cell cell) {
  static constexpr std::array<std::string_view, 15> names{
      "outside", "Q1", "Q2", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12"};
  return names[static_cast<std::size_t>(cell)];
}

Eigen::Matrix2d CellGradient::jacobian() const {
  Eigen::Matrix2d j;
  j << gx.real(), gy.real(), gx.imag(), gy.imag();
  return j;
}

TriangulatedProfile::TriangulatedProfile() {
  cells_.push_back({Cell::Diamond1, {{2, 0}, {3, -1}, {4, 0}, {3, 1}}, {}, {kI, -1.0}});
  cells_.push_back({Cell::Diamond2, {{4, 0}, {5, -1}, {6, 0}, {5, 1}}, {}, {-kI, 1.0}});
  for (auto& d : cells_)
    for (auto v : d.vertices) d.values.push_back(vertex_value(v));

  struct Tri {
    Cell cell;
    cplx a, b, c;
  };
  static constexpr Tri upper[] = {
      {Cell::T1, {2, 0}, {3, 1}, {2, 2}}, {Cell::T2, {3, 1}, {4, 2}, {2, 2}},
      {Cell::T3, {3, 1}, {4, 0}, {4, 2}}, {Cell::T4, {4, 0}, {5, 1}, {4, 2}},
      {Cell::T5, {5, 1}, {6, 2}, {4, 2}}, {Cell::T6, {5, 1}, {6, 0}, {6, 2}},
  };
  for (const auto& t : upper) cells_.push_back(make_triangle(t.cell, t.a, t.b, t.c));
  for (const auto& t : upper) {
    const auto mirrored = static_cast<Cell>(static_cast<int>(t.cell) + 6);
    cells_.push_back(make_triangle(mirrored, std::conj(t.a), std::conj(t.b), std::conj(t.c)));
  }
}

const TriangulatedProfile& TriangulatedProfile::standard() {
  static const TriangulatedProfile profile;
  return profile;
}

cplx TriangulatedProfile::affine_value(const Polygon& cell, cplx z) const {
  if (cell.cell == Cell::Diamond1) return kI * (z - 2.0);
  if (cell.cell == Cell::Diamond2) return kI * (6.0 - z);
  const cplx d = z - cell.vertices[0];
  return cell.values[0] + cell.gradient.gx * d.real() + cell.gradient.gy * d.imag();
}

GSample TriangulatedProfile::eval(cplx z) const {
  const double xr = reduce_period(z.real());
  const double y = z.imag();
  const cplx local{xr, y};

  if (xr < 2.0 || xr > 6.0 || std::abs(y) > 2.0) {
    const double dx = std::max({2.0 - xr, xr - 6.0, 0.0});
    const double dy = std::max(std::abs(y) - 2.0, 0.0);
    const double margin = std::hypot(dx, dy);
    GSample s{0.0, Cell::Outside, std::nullopt, margin};
    if (margin >= kBoundaryTol) s.gradient = CellGradient{0.0, 0.0};
    return s;
  }

  const Polygon* best = nullptr;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (const auto& c : cells_) {
    const double m = inner_margin(c.vertices, local);
    if (m > best_margin) {
      best_margin = m;
      best = &c;
    }
  }
  GSample s{affine_value(*best, local), best->cell, std::nullopt, best_margin};
  if (best_margin >= kBoundaryTol) s.gradient = best->gradient;
  return s;
}

double TriangulatedProfile::lipschitz() const {
  double l = 0.0;
  for (const auto& c : cells_) l = std::max(l, c.gradient.op_norm());
  return l;
}

GSample g_eval(cplx z) { return TriangulatedProfile::standard().eval(z); }

double g_lipschitz() { return TriangulatedProfile::standard().lipschitz(); }

double tent_eval(double x) {
  const double r = reduce_period(x);
  if (r >= 2.0 && r <= 4.0) return r - 2.0;
  if (r > 4.0 && r <= 6.0) return 6.0 - r;
  return 0.0;
}

int rademacher_eval(int m, double x) {
  const double u = std::ldexp(x, m + 1);
  const double frac = u - 2.0 * std::floor(u / 2.0);
  if (frac == 0.0 || frac == 1.0) return 0;
  return frac < 1.0 ? 1 : -1;
}

bool in_bad_set(cplx z) {
  const double xr = reduce_period(z.real());
  const double ay = std::abs(z.imag());
  if (!(xr > 2.0 && xr < 6.0 && ay < 2.0)) return false;
  return std::abs(xr - 3.0) + ay > 1.0 && std::abs(xr - 5.0) + ay > 1.0;
}

std::vector<int> scale_hits(cplx z, int m_max) {
  std::vector<int> hits;
  for (int m = 0; m <= m_max; ++m) {
    const cplx w{std::ldexp(z.real(), 2 * m), std::ldexp(z.imag(), 2 * m)};
    if (in_bad_set(w)) hits.push_back(m);
  }
  return hits;
}

}  // namespace qcvar::planar
