#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qcvar::monotone {

using cplx = std::complex<double>;

/// M_n(δ) = {A : ⟨Av, v⟩ ≥ δ |Av| |v| for all v}.
struct ConeParams {
  std::size_t n;
  double delta;

  /// n ∈ {2, 3, 4}, δ ∈ (0, 1].
  static ConeParams make(std::size_t n, double delta);
};

/// x ↦ Ax written as z ↦ α⁺ z + α⁻ z̄.
struct ConformalSplit {
  cplx alpha_plus;
  cplx alpha_minus;

  cplx apply(cplx z) const { return alpha_plus * z + alpha_minus * std::conj(z); }
  Eigen::Matrix2d matrix() const;
};

ConformalSplit conf_split(const Eigen::Matrix2d& a);

struct ConeMembership {
  bool member;
  /// n = 2: √(1−δ²) re α⁺ − |α⁻| − δ|im α⁺| (closed form).
  /// n ≥ 3: min over unit v of ⟨Av, v⟩ − δ|Av| (sphere search).
  /// Nonnegative exactly for members in both cases.
  double margin;
  Eigen::VectorXd witness;  // unit vector minimizing ⟨Av, v⟩ − δ|Av|
  bool degenerate;          // A = 0: vacuously a member
};

struct SphereSearchOptions {
  std::size_t grid_points = 10000;
  std::size_t refine_starts = 8;
  std::size_t refine_steps = 50;
};

struct SphereMinimum {
  double value;
  Eigen::VectorXd argmin;
};

/// min over the unit sphere of ⟨Av, v⟩ − δ|Av|: deterministic low-discrepancy grid
/// followed by projected-gradient refinement of the best grid points.
SphereMinimum cone_objective_min(const Eigen::MatrixXd& a, double delta, const SphereSearchOptions& opts = {});

/// Deterministic point set on S^{n−1}, n ∈ {2, 3, 4}.
std::vector<Eigen::VectorXd> sphere_grid(std::size_t n, std::size_t count);

ConeMembership cone_membership(const Eigen::MatrixXd& a, const ConeParams& cone,
                               const SphereSearchOptions& opts = {});

/// H(δ) = (1 + √(1−δ²)) / (1 − √(1−δ²)); limits ∞ at δ = 0 and 1 at δ = 1.
double h_delta(double delta);

/// ‖A‖ ‖A^{−1}‖ from the singular values. Throws DomainError for singular A.
double cond_ratio(const Eigen::MatrixXd& a);

}  // namespace qcvar::monotone
