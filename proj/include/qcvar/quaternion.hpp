#pragma once

#include <array>

#include <Eigen/Dense>

#include "qcvar/cone.hpp"

namespace qcvar::monotone {

/// α + βi + γj + ζk as the 4×4 real matrix of left multiplication:
///
///   | α  −β  −γ  −ζ |
///   | β   α  −ζ   γ |
///   | γ   ζ   α  −β |
///   | ζ  −γ   β   α |
struct QuatMatrix {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double zeta = 0.0;

  Eigen::Matrix4d matrix() const;
  /// Operator norm, equal to the quaternion's absolute value.
  double norm() const;
  bool is_imaginary() const { return alpha == 0.0; }

  friend QuatMatrix operator*(const QuatMatrix& p, const QuatMatrix& q);
  friend QuatMatrix operator+(const QuatMatrix& p, const QuatMatrix& q) {
    return {p.alpha + q.alpha, p.beta + q.beta, p.gamma + q.gamma, p.zeta + q.zeta};
  }
  friend bool operator==(const QuatMatrix&, const QuatMatrix&) = default;
};

QuatMatrix quat_embed(double alpha, double beta, double gamma, double zeta);

/// Basis matrices M_i, M_j, M_k of the purely imaginary quaternions.
const Eigen::Matrix4d& basis_i();
const Eigen::Matrix4d& basis_j();
const Eigen::Matrix4d& basis_k();

/// Frobenius-orthogonal projection onto the imaginary quaternions; each basis matrix has
/// squared Frobenius norm 4.
QuatMatrix project_im_quat(const Eigen::Matrix4d& a);

struct Reduced4dMembership {
  bool member;
  double margin;
  bool degenerate;            // A − im ℍ(A) = 0
  Eigen::Matrix4d reduced;    // A − im ℍ(A)
};

/// A − im ℍ(A) ∈ M_4(δ), with a zero reduced part counted as a non-member.
Reduced4dMembership reduced4d_membership(const Eigen::Matrix4d& a, double delta,
                                         const SphereSearchOptions& opts = {});

/// √(2(1+s)²/(1−s)³) with s = √(1−δ²): bound on ‖A‖‖A^{−1}‖ when A − im ℍ(A) ∈ M_4(δ).
double reduced4d_distortion_bound(double delta);

struct QuatMinimizer {
  double delta_val;                 // Δ_f(a,b) = α |a − b|
  QuatMatrix q;                     // −βi − γj − ζk
  std::array<double, 4> coeffs;     // (α, β, γ, ζ) of f(a) − f(b) in {v, iv, jv, kv}
  double tilted_gap;                // |(f(a) + Qa) − (f(b) + Qb)|
};

/// Minimizing imaginary quaternion for min_Q |f^Q(a) − f^Q(b)|, f^Q(x) = f(x) + Qx.
QuatMinimizer quat_minimizer(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                             const Eigen::Vector4d& fa, const Eigen::Vector4d& fb);

}  // namespace qcvar::monotone
