#include <doctest.h>

#include <chrono>
#include <cmath>

#include "qcvar/dyadic.hpp"
#include "qcvar/errors.hpp"

using namespace qcvar::planar;

TEST_SUITE("dyadic") {

TEST_CASE("small tables agree exactly") {
  // exact rational enumeration: 4, 6, 15/2, 35/4, 315/32, 693/64, 3003/256, 6435/512
  const double expect[] = {4, 6, 7.5, 8.75, 9.84375, 10.828125, 11.73046875, 12.568359375};
  const auto a = vn_table(8, VnMethod::PartitionSum);
  const auto b = vn_table(8, VnMethod::DerivativeIntegral);
  REQUIRE(a.size() == 8);
  for (int n = 0; n < 8; ++n) {
    CHECK(a[n].depth == n + 1);
    CHECK(a[n].value == expect[n]);
    CHECK(b[n].value == expect[n]);
  }
}

TEST_CASE("depth ten") {
  CHECK(vn_partition_sum(9) == 13.3538818359375);
  CHECK(vn_derivative_integral(9) == 13.3538818359375);
  CHECK(vn_partition_sum(10) == 14.09576416015625);
  CHECK(vn_derivative_integral(10) == 14.09576416015625);
}

TEST_CASE("growth window") {
  const auto t = vn_table(10, VnMethod::DerivativeIntegral);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i].value >= t[i - 1].value);
  for (const auto& r : t) {
    const double w = r.value / std::sqrt(static_cast<double>(r.depth));
    CHECK(w >= 4.0);
    CHECK(w <= 4.46);
    CHECK(w <= 4 * std::sqrt(2.0));
  }
  CHECK(t[9].value >= 2 * t[1].value);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(vn_table(kMaxDyadicDepth + 1, VnMethod::PartitionSum), qcvar::ResourceError);
  CHECK_THROWS_AS(vn_partition_sum(-1), qcvar::DomainError);
  CHECK_THROWS_AS(h_trace(13), qcvar::ResourceError);
}

TEST_CASE("traces") {
  const auto h = h_trace(1);
  REQUIRE(h.size() == 5);
  const double vals[] = {0, 0, 2, 0, 0};
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(h.point(j)[0] == vals[j]);
    CHECK(h.param(j) == j / 4.0);
  }
  const auto f = f_trace({0, 0}, {8, 0}, 1, LacunaryParams::make());
  REQUIRE(f.size() == 5);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(f.point(j)[0] == 2.0 * j);
    CHECK(f.point(j)[1] == 0.25 * vals[j]);
  }
  const auto g = h_graph(0, 8, 0);
  CHECK(g.size() == 2);
  CHECK(g.point(1)[0] == 8.0);
}

}
