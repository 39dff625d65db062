#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include <Eigen/Dense>

namespace qcvar::monotone {

struct MapSample {
  Eigen::VectorXd x;
  Eigen::VectorXd fx;
};

/// Sampled estimate of the best δ with Δ_f(a,b) ≥ δ|f(a) − f(b)|. Only the sampled
/// pairs are seen, so delta_hat is an upper bound for the map's true δ.
struct MonotonicityProbe {
  double delta_hat;
  std::pair<std::size_t, std::size_t> worst_pair;
  std::size_t pairs;
  std::size_t skipped;  // pairs with f(a) = f(b)
};

MonotonicityProbe monotonicity_probe(std::span<const MapSample> samples);

/// |x|^{α−1} x, with 0 ↦ 0.
Eigen::VectorXd radial_stretch(double alpha, const Eigen::VectorXd& x);

/// Derivative of the radial stretch at x ≠ 0: |x|^{α−1} (I + (α−1) x̂ x̂ᵀ).
Eigen::MatrixXd radial_stretch_jacobian(double alpha, const Eigen::VectorXd& x);

}  // namespace qcvar::monotone
