#include "qcvar/quaternion.hpp"

#include <cmath>

#include "qcvar/errors.hpp"

namespace qcvar::monotone {

Eigen::Matrix4d QuatMatrix::matrix() const {
  Eigen::Matrix4d m;
  m << alpha, -beta, -gamma, -zeta,
       beta, alpha, -zeta, gamma,
       gamma, zeta, alpha, -beta,
       zeta, -gamma, beta, alpha;
  return m;
}

double QuatMatrix::norm() const {
  return std::sqrt(alpha * alpha + beta * beta + gamma * gamma + zeta * zeta);
}

QuatMatrix operator*(const QuatMatrix& p, const QuatMatrix& q) {
  return {p.alpha * q.alpha - p.beta * q.beta - p.gamma * q.gamma - p.zeta * q.zeta,
          p.alpha * q.beta + p.beta * q.alpha + p.gamma * q.zeta - p.zeta * q.gamma,
          p.alpha * q.gamma - p.beta * q.zeta + p.gamma * q.alpha + p.zeta * q.beta,
          p.alpha * q.zeta + p.beta * q.gamma - p.gamma * q.beta + p.zeta * q.alpha};
}

QuatMatrix quat_embed(double alpha, double beta, double gamma, double zeta) {
  return {alpha, beta, gamma, zeta};
}

const Eigen::Matrix4d& basis_i() {
  static const Eigen::Matrix4d m = quat_embed(0, 1, 0, 0).matrix();
  return m;
}

const Eigen::Matrix4d& basis_j() {
  static const Eigen::Matrix4d m = quat_embed(0, 0, 1, 0).matrix();
  return m;
}

const Eigen::Matrix4d& basis_k() {
  static const Eigen::Matrix4d m = quat_embed(0, 0, 0, 1).matrix();
  return m;
}

QuatMatrix project_im_quat(const Eigen::Matrix4d& a) {
  auto coeff = [&](const Eigen::Matrix4d& u) { return a.cwiseProduct(u).sum() / 4.0; };
  return {0.0, coeff(basis_i()), coeff(basis_j()), coeff(basis_k())};
}

Reduced4dMembership reduced4d_membership(const Eigen::Matrix4d& a, double delta, const SphereSearchOptions& opts) {
  const Eigen::Matrix4d reduced = a - project_im_quat(a).matrix();
  const ConeMembership cone = cone_membership(reduced, ConeParams::make(4, delta), opts);
  return {cone.member && !cone.degenerate, cone.margin, cone.degenerate, reduced};
}

double reduced4d_distortion_bound(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("distortion bound needs delta in (0, 1]");
  const double s = std::sqrt(1.0 - delta * delta);
  return std::sqrt(2.0 * (1.0 + s) * (1.0 + s) / ((1.0 - s) * (1.0 - s) * (1.0 - s)));
}

QuatMinimizer quat_minimizer(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                             const Eigen::Vector4d& fa, const Eigen::Vector4d& fb) {
  const Eigen::Vector4d v = a - b;
  const double v2 = v.squaredNorm();
  if (v2 == 0.0) throw DomainError("quat_minimizer needs distinct points");
  const Eigen::Vector4d w = fa - fb;
  const double alpha = w.dot(v) / v2;
  const double beta = w.dot(basis_i() * v) / v2;
  const double gamma = w.dot(basis_j() * v) / v2;
  const double zeta = w.dot(basis_k() * v) / v2;
  const QuatMatrix q{0.0, -beta, -gamma, -zeta};
  const Eigen::Matrix4d qm = q.matrix();
  const double gap = ((fa + qm * a) - (fb + qm * b)).norm();
  return {alpha * std::sqrt(v2), q, {alpha, beta, gamma, zeta}, gap};
}

}  // namespace qcvar::monotone
