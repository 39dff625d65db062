#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcvar/cone.hpp"
#include "qcvar/errors.hpp"

using namespace qcvar::monotone;

namespace {

// min over 2000 angles of <Av,v> - δ|Av|, refined by golden section
double angular_min(const Eigen::Matrix2d& a, double delta) {
  auto f = [&](double t) {
    const Eigen::Vector2d v(std::cos(t), std::sin(t));
    return (a * v).dot(v) - delta * (a * v).norm();
  };
  const double step = std::numbers::pi / 2000;
  double best = f(0), bt = 0;
  for (int i = 1; i < 2000; ++i)
    if (f(i * step) < best) best = f(bt = i * step);
  double lo = bt - step, hi = bt + step;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (f(m1) < f(m2)) hi = m2;
    else lo = m1;
  }
  return std::min(best, f(0.5 * (lo + hi)));
}

Eigen::Matrix2d rot90() {
  Eigen::Matrix2d r;
  r << 0, -1, 1, 0;
  return r;
}

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("conformal split") {
  auto s = conf_split(Eigen::Matrix2d::Identity());
  CHECK(s.alpha_plus == cplx(1, 0));
  CHECK(s.alpha_minus == cplx(0, 0));
  s = conf_split(rot90());
  CHECK(s.alpha_plus == cplx(0, 1));
  CHECK(s.alpha_minus == cplx(0, 0));
  Eigen::Matrix2d d;
  d << 1, 0, 0, 0.5;
  s = conf_split(d);
  CHECK(s.alpha_plus == cplx(0.75, 0));
  CHECK(s.alpha_minus == cplx(0.25, 0));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Matrix2d a = Eigen::Matrix2d::NullaryExpr([&] { return u(rng); });
    const auto sp = conf_split(a);
    CHECK((sp.matrix() - a).norm() <= 1e-15 * (1 + a.norm()));
    const cplx z{u(rng), u(rng)};
    const Eigen::Vector2d az = a * Eigen::Vector2d(z.real(), z.imag());
    CHECK(std::abs(sp.apply(z) - cplx(az[0], az[1])) < 1e-14);
  }
}

TEST_CASE("planar membership examples") {
  CHECK(cone_membership(Eigen::Matrix2d::Identity(), ConeParams::make(2, 0.99)).member);
  CHECK_FALSE(cone_membership(rot90(), ConeParams::make(2, 0.1)).member);
  Eigen::Matrix2d d;
  d << 1, 0, 0, 0.5;
  CHECK(cone_membership(d, ConeParams::make(2, 0.9428)).member);
  CHECK_FALSE(cone_membership(d, ConeParams::make(2, 0.9429)).member);
  CHECK(angular_min(d, 0.9428) > 0);
  CHECK(angular_min(d, 0.9429) < 0);
  const auto zero = cone_membership(Eigen::Matrix2d::Zero(), ConeParams::make(2, 0.5));
  CHECK(zero.member);
  CHECK(zero.degenerate);
  CHECK_THROWS_AS(ConeParams::make(5, 0.5), qcvar::DomainError);
  CHECK_THROWS_AS(ConeParams::make(2, 0.0), qcvar::DomainError);
  CHECK_THROWS_AS(cone_membership(Eigen::Matrix3d::Identity(), ConeParams::make(2, 0.5)), qcvar::DomainError);
}

TEST_CASE("closed form agrees with angular brute force") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1), ud(1e-3, 1);
  int outside_band = 0;
  for (int t = 0; t < 2000; ++t) {
    Eigen::Matrix2d a = Eigen::Matrix2d::NullaryExpr([&] { return u(rng); });
    a += (1 + u(rng)) * Eigen::Matrix2d::Identity();
    const double delta = ud(rng);
    const auto m = cone_membership(a, ConeParams::make(2, delta));
    const double brute = angular_min(a, delta);
    if (m.member != (brute >= -1e-12) && std::abs(m.margin) > 1e-9 && std::abs(brute) > 1e-9) ++outside_band;
  }
  CHECK(outside_band == 0);
}

TEST_CASE("sphere search in three and four dimensions") {
  CHECK(cone_membership(Eigen::Matrix3d::Identity(), ConeParams::make(3, 0.99)).member);
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r.topLeftCorner<2, 2>() = rot90();
  CHECK_FALSE(cone_membership(r, ConeParams::make(3, 0.1)).member);
  const Eigen::Matrix4d d = Eigen::Vector4d(1, 1, 0.5, 0.75).asDiagonal();
  CHECK(cone_membership(d, ConeParams::make(4, 0.94)).member);
  const auto out = cone_membership(d, ConeParams::make(4, 0.945));
  CHECK_FALSE(out.member);
  CHECK(out.witness.norm() == doctest::Approx(1.0));
  // 2√(λ1λ2)/(λ1+λ2) is the exact threshold for a positive diagonal matrix
  const auto m = cone_objective_min(d, 0.0);
  CHECK(m.value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("sphere grids") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto g = sphere_grid(n, 500);
    CHECK(g.size() == 500);
    for (const auto& v : g) CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(sphere_grid(3, 100) == sphere_grid(3, 100));
}

TEST_CASE("H and condition ratio") {
  CHECK(h_delta(0.6) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(h_delta(0.8) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(h_delta(1.0) == 1.0);
  CHECK(std::isinf(h_delta(0.0)));
  CHECK(cond_ratio(Eigen::Matrix3d::Identity()) == doctest::Approx(1.0));
  CHECK(cond_ratio(Eigen::Vector2d(2, 1).asDiagonal().toDenseMatrix()) == doctest::Approx(2.0));
  CHECK_THROWS_AS(cond_ratio(Eigen::Matrix2d::Zero()), qcvar::DomainError);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  int members = 0;
  for (int t = 0; t < 3000 && members < 300; ++t) {
    const Eigen::Matrix2d a = Eigen::Matrix2d::Identity() + Eigen::Matrix2d::NullaryExpr([&] { return u(rng); });
    if (!cone_membership(a, ConeParams::make(2, 0.5)).member) continue;
    ++members;
    CHECK(cond_ratio(a) <= h_delta(0.5) + 1e-9);
  }
  CHECK(members == 300);
}

}
