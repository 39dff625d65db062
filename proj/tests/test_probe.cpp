#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcvar/errors.hpp"
#include "qcvar/probe.hpp"

using namespace qcvar::monotone;

namespace {

std::vector<MapSample> grid_samples(std::size_t n, auto&& f) {
  std::vector<MapSample> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::VectorXd x(2);
      x << -1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1);
      out.push_back({x, f(x)});
    }
  return out;
}

}  // namespace

TEST_SUITE("probe") {

TEST_CASE("identity and rotation") {
  const auto id = monotonicity_probe(grid_samples(5, [](const Eigen::VectorXd& x) { return x; }));
  CHECK(id.delta_hat == doctest::Approx(1.0));
  CHECK(id.skipped == 0);
  const auto rot = monotonicity_probe(grid_samples(5, [](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(2);
    y << -x[1], x[0];
    return y;
  }));
  CHECK(std::abs(rot.delta_hat) < 1e-15);
}

TEST_CASE("radial stretch grid estimate is stable") {
  // sampling reference: 0.8682, 0.8665, 0.8662 on 9, 17, 33 points per side; limit √3/2
  for (std::size_t n : {9u, 17u, 33u}) {
    const auto p = monotonicity_probe(grid_samples(n, [](const Eigen::VectorXd& x) { return radial_stretch(3, x); }));
    CAPTURE(n);
    CHECK(p.delta_hat >= 0.866);
    CHECK(p.delta_hat <= 0.869);
    CHECK(p.delta_hat >= std::sqrt(3.0) / 2 - 1e-12);
  }
}

TEST_CASE("radial stretch values") {
  Eigen::VectorXd x(2);
  x << 1, 0;
  CHECK(radial_stretch(2, x) == x);
  x << 2, 0;
  CHECK(radial_stretch(2, x)[0] == 4.0);
  x << 0.3, -0.4;
  CHECK(radial_stretch(1, x) == x);
  CHECK(radial_stretch(0.5, Eigen::VectorXd::Zero(4)) == Eigen::VectorXd::Zero(4));
  CHECK_THROWS_AS(radial_stretch(0.0, x), qcvar::DomainError);
}

TEST_CASE("jacobian matches finite differences") {
  for (double alpha : {0.5, 2.0, 3.0}) {
    Eigen::VectorXd x(4);
    x << 0.3, -0.7, 0.2, 0.9;
    const Eigen::MatrixXd j = radial_stretch_jacobian(alpha, x);
    const double h = 1e-6;
    for (int c = 0; c < 4; ++c) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
      e[c] = h;
      const Eigen::VectorXd fd = (radial_stretch(alpha, x + e) - radial_stretch(alpha, x - e)) / (2 * h);
      CHECK((fd - j.col(c)).norm() < 1e-8);
    }
  }
}

TEST_CASE("degenerate input") {
  Eigen::VectorXd x(2);
  x << 0, 0;
  CHECK_THROWS_AS(monotonicity_probe(std::vector<MapSample>{{x, x}}), qcvar::DomainError);
  Eigen::VectorXd y(2);
  y << 1, 0;
  CHECK_THROWS_AS(monotonicity_probe(std::vector<MapSample>{{x, x}, {y, x}}), qcvar::DomainError);
}

}
