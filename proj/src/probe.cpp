#include "qcvar/probe.hpp"

#include <cmath>
#include <limits>

#include "qcvar/errors.hpp"

namespace qcvar::monotone {

MonotonicityProbe monotonicity_probe(std::span<const MapSample> samples) {
  if (samples.size() < 2) throw DomainError("monotonicity probe needs at least two samples");
  const auto d = samples.front().x.size();
  for (const auto& s : samples)
    if (s.x.size() != d || s.fx.size() != d) throw DomainError("monotonicity probe: dimension mismatch");

  MonotonicityProbe out{std::numeric_limits<double>::infinity(), {0, 0}, 0, 0};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const Eigen::VectorXd v = samples[i].x - samples[j].x;
      const Eigen::VectorXd w = samples[i].fx - samples[j].fx;
      const double nv = v.norm();
      const double nw = w.norm();
      if (nw == 0.0 || nv == 0.0) {
        ++out.skipped;
        continue;
      }
      ++out.pairs;
      const double ratio = w.dot(v) / nv / nw;
      if (ratio < out.delta_hat) {
        out.delta_hat = ratio;
        out.worst_pair = {i, j};
      }
    }
  }
  if (out.pairs == 0) throw DomainError("monotonicity probe: every pair is degenerate");
  return out;
}

Eigen::VectorXd radial_stretch(double alpha, const Eigen::VectorXd& x) {
  if (!(alpha > 0.0)) throw DomainError("radial stretch needs alpha > 0");
  const double r = x.norm();
  if (r == 0.0) return Eigen::VectorXd::Zero(x.size());
  if (alpha == 1.0) return x;
  return std::pow(r, alpha - 1.0) * x;
}

Eigen::MatrixXd radial_stretch_jacobian(double alpha, const Eigen::VectorXd& x) {
  if (!(alpha > 0.0)) throw DomainError("radial stretch needs alpha > 0");
  const double r = x.norm();
  if (r == 0.0) throw DomainError("radial stretch is not differentiable at 0 unless alpha = 1");
  const Eigen::VectorXd u = x / r;
  const auto n = x.size();
  return std::pow(r, alpha - 1.0) *
         (Eigen::MatrixXd::Identity(n, n) + (alpha - 1.0) * u * u.transpose());
}

}  // namespace qcvar::monotone
