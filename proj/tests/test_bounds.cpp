#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qcvar/dyadic.hpp"
#include "qcvar/errors.hpp"
#include "qcvar/bounds.hpp"
#include "qcvar/probe.hpp"
#include "qcvar/variation.hpp"

using qcvar::SampledPath;
using qcvar::variation::PhiSpec;
namespace var = qcvar::variation;

TEST_SUITE("bounds") {

TEST_CASE("union bound examples") {
  const auto path = SampledPath::from_values({0, 1, 0, 1, 0});
  const std::vector<std::size_t> mid{0, 2, 4};
  const auto r = var::union_bound_report(PhiSpec::power(1), path, mid);
  CHECK(r.lhs == 4.0);
  CHECK(r.rhs == 5.0);
  CHECK(r.rhs_literal == 5.0);
  CHECK(r.pieces == 2);
  CHECK(r.holds);

  const std::vector<std::size_t> whole{0, 4};
  const auto one = var::union_bound_report(PhiSpec::power(2), path, whole);
  CHECK(one.lhs == one.rhs);
  CHECK(one.holds);

  CHECK_THROWS_AS(var::union_bound_report(PhiSpec::power(1), path, std::vector<std::size_t>{0, 3}), qcvar::DomainError);
  CHECK_THROWS_AS(var::union_bound_report(PhiSpec::power(1), path, std::vector<std::size_t>{0, 2, 2, 4}),
                  qcvar::DomainError);
}

TEST_CASE("linear oscillation term is too weak for p > 1") {
  // one jump of 10 split in two: var = 100, pieces 25 + 25
  const auto path = SampledPath::from_values({0, 5, 10});
  const auto r = var::union_bound_report(PhiSpec::power(2), path, std::vector<std::size_t>{0, 1, 2});
  CHECK(r.lhs == 100.0);
  CHECK(r.rhs == 150.0);
  CHECK(r.rhs_literal == 60.0);
  CHECK(r.holds);
}

TEST_CASE("union bound on random paths") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(20);
    for (auto& x : v) x = u(rng);
    const auto path = SampledPath::from_values(v);
    std::vector<std::size_t> cuts{0, 1 + static_cast<std::size_t>(trial % 9), 10 + static_cast<std::size_t>(trial % 8), 19};
    for (const auto& phi : {PhiSpec::power(2), PhiSpec::power(1), PhiSpec::log_damped(1.5)})
      CHECK(var::union_bound_report(phi, path, cuts).holds);
  }
}

TEST_CASE("growth bound for the identity") {
  for (unsigned m : {0u, 1u, 3u, 6u}) {
    std::vector<double> v((1u << m) + 1);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = static_cast<double>(j) / static_cast<double>(v.size() - 1);
    const auto r = var::growth_bound_report(SampledPath::from_values(v), 1.0, {1.0, {}});
    CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.rhs == doctest::Approx(1.0 + 2.0 * m).epsilon(1e-15));
    CHECK(r.levels == m);
    CHECK(r.chain.size() == m + 1);
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(var::growth_bound_report(SampledPath::from_values({0, 1, 2, 3}), 1.0, {1.0, {}}),
                  qcvar::DomainError);
}

TEST_CASE("growth bound on the planar trace with empirical eta") {
  const auto params = qcvar::planar::LacunaryParams::make();
  const auto path = qcvar::planar::f_trace({0, 0}, {8, 0}, 4, params);  // 2^8 + 1 samples
  const std::vector<double> a{0, 0}, b{8, 0};
  const auto eta = var::estimate_eta(path, a, b);
  CHECK(eta.modulus.eta1 > 0);
  for (std::size_t k = 1; k < eta.modulus.table.size(); ++k)
    CHECK(eta.modulus.table[k].second >= eta.modulus.table[k - 1].second);
  const double dab = var::delta_modulus(a, b, path.point(0), path.point(path.last()));
  CHECK(dab == 8.0);
  const auto r = var::growth_bound_report(path, dab, eta.modulus);
  CHECK(r.levels == 8);
  CHECK(r.holds);
  for (std::size_t k = 1; k < r.chain.size(); ++k) CHECK(r.chain[k] >= r.chain[k - 1]);
}

TEST_CASE("growth bound on a radial stretch trace") {
  constexpr unsigned m = 6;
  std::vector<std::vector<double>> pts;
  for (std::size_t j = 0; j <= (1u << m); ++j) {
    Eigen::VectorXd x(2);
    x << 1.0 + std::ldexp(static_cast<double>(j), -static_cast<int>(m)), 0.0;
    const auto y = qcvar::monotone::radial_stretch(0.5, x);
    pts.push_back({y[0], y[1]});
  }
  const auto path = SampledPath::from_points(pts);
  const std::vector<double> a{1, 0}, b{2, 0};
  const auto eta = var::estimate_eta(path, a, b);
  const double dab = var::delta_modulus(a, b, path.point(0), path.point(path.last()));
  const auto r = var::growth_bound_report(path, dab, eta.modulus);
  CHECK(r.holds);
  CHECK(r.lhs == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-13));
}

}
