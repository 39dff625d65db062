#include <doctest.h>

#include <cmath>

#include "qcvar/errors.hpp"
#include "qcvar/phi.hpp"

using qcvar::variation::PhiSpec;

TEST_SUITE("phi") {

TEST_CASE("power and log-damped values") {
  CHECK(PhiSpec::power(2)(3.0) == 9.0);
  CHECK(PhiSpec::log_damped(1.5)(0.0) == 0.0);
  CHECK(PhiSpec::power(1)(0.0) == 0.0);
  // 1 / log(e + 1), 20-digit reference
  CHECK(PhiSpec::log_damped(1)(1.0) == doctest::Approx(0.76146285961465999797).epsilon(1e-15));
  CHECK(PhiSpec::log_damped(0)(0.37) == 0.37);
  CHECK(qcvar::variation::phi_eval(PhiSpec::power(3), 2.0) == 8.0);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(PhiSpec::power(2)(-1e-300), qcvar::DomainError);
  CHECK_THROWS_AS(PhiSpec::power(0.5), qcvar::DomainError);
  CHECK_THROWS_AS(PhiSpec::log_damped(-0.1), qcvar::DomainError);
  CHECK_THROWS_AS(PhiSpec::parse("exp:2"), qcvar::DomainError);
  CHECK_THROWS_AS(PhiSpec::parse("pow:"), qcvar::DomainError);
  CHECK_THROWS_AS(PhiSpec::parse("pow:2x"), qcvar::DomainError);
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"pow:1", "pow:2", "pow:1.5", "log:0", "log:1.5", "log:0.25", "log:0.1"}) {
    const auto phi = PhiSpec::parse(text);
    CHECK(phi.to_string() == text);
    CHECK(PhiSpec::parse(phi.to_string()) == phi);
  }
  CHECK(PhiSpec::parse("pow:2").is_power());
  CHECK(PhiSpec::parse("log:2").is_log_damped());
  CHECK(PhiSpec::parse("log:2").parameter() == 2.0);
}

TEST_CASE("strictly increasing on a log grid") {
  for (const auto& phi : {PhiSpec::power(1), PhiSpec::power(2.5), PhiSpec::log_damped(0.25), PhiSpec::log_damped(3)}) {
    double prev = phi(0.0);
    for (int k = -90; k <= 30; ++k) {
      const double v = phi(std::pow(10.0, k / 10.0));
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("midpoint convexity") {
  for (double q : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const auto r = qcvar::variation::check_midpoint_convexity(PhiSpec::log_damped(q));
    CAPTURE(q);
    CHECK(r.convex);
    CHECK(r.grid_points == 2001);
  }
  for (double p : {1.0, 1.5, 2.0, 4.0}) CHECK(qcvar::variation::check_midpoint_convexity(PhiSpec::power(p)).convex);
}

}
