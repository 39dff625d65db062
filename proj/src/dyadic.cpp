#include "qcvar/dyadic.hpp"

#include <cmath>
#include <string>

#include "qcvar/errors.hpp"
#include "qcvar/lacunary.hpp"
#include "qcvar/profile.hpp"

namespace qcvar::planar {

namespace {

void check_depth(int depth) {
  if (depth < 0) throw DomainError("dyadic depth must be nonnegative");
  if (depth > kMaxDyadicDepth)
    throw ResourceError("dyadic depth limited to " + std::to_string(kMaxDyadicDepth));
}

}  // namespace

double vn_partition_sum(int depth) {
  check_depth(depth);
  const std::size_t intervals = std::size_t{1} << (2 * depth);
  double prev = h_eval(0.0);
  double total = 0.0;
  for (std::size_t j = 1; j <= intervals; ++j) {
    const double cur = h_eval(std::ldexp(8.0 * static_cast<double>(j), -2 * depth));
    total += std::abs(cur - prev);
    prev = cur;
  }
  return total;
}

// h_N' = ½ Σ_{m<N} (s_{2m}(x/8) − s_{2m+1}(x/8)) is constant on each dyadic interval;
// evaluate it at the midpoint u = (j + ½)/4^N of x/8.
double vn_derivative_integral(int depth) {
  check_depth(depth);
  const std::size_t intervals = std::size_t{1} << (2 * depth);
  double abs_sum = 0.0;  // Σ_j |2 h_N'|, an exact integer
  for (std::size_t j = 0; j < intervals; ++j) {
    const double u = std::ldexp(2.0 * static_cast<double>(j) + 1.0, -2 * depth - 1);
    int twice = 0;
    for (int m = 0; m < depth; ++m) twice += rademacher_eval(2 * m, u) - rademacher_eval(2 * m + 1, u);
    abs_sum += std::abs(twice);
  }
  // ∫ = Σ |h_N'| · 8/4^N = abs_sum · ½ · 8 / 4^N
  return std::ldexp(abs_sum, 2 - 2 * depth);
}

std::vector<VnRow> vn_table(int n_max, VnMethod method) {
  check_depth(n_max);
  std::vector<VnRow> rows;
  for (int n = 1; n <= n_max; ++n)
    rows.push_back({n, method == VnMethod::PartitionSum ? vn_partition_sum(n) : vn_derivative_integral(n)});
  return rows;
}

SampledPath h_trace(int depth, double x0) {
  check_depth(depth);
  const std::size_t intervals = std::size_t{1} << (2 * depth);
  std::vector<double> t(intervals + 1);
  std::vector<double> v(intervals + 1);
  for (std::size_t j = 0; j <= intervals; ++j) {
    t[j] = std::ldexp(static_cast<double>(j), -2 * depth);
    v[j] = h_eval(x0 + 8.0 * t[j]);
  }
  return SampledPath(std::move(t), std::move(v), 1);
}

SampledPath f_trace(cplx a, cplx b, int depth, const LacunaryParams& params) {
  check_depth(depth);
  const std::size_t intervals = std::size_t{1} << (2 * depth);
  std::vector<double> t(intervals + 1);
  std::vector<double> xy;
  xy.reserve(2 * (intervals + 1));
  for (std::size_t j = 0; j <= intervals; ++j) {
    t[j] = std::ldexp(static_cast<double>(j), -2 * depth);
    const cplx w = f_eval(a + t[j] * (b - a), params);
    xy.push_back(w.real());
    xy.push_back(w.imag());
  }
  return SampledPath(std::move(t), std::move(xy), 2);
}

SampledPath h_graph(double a, double b, int depth) {
  check_depth(depth);
  const std::size_t intervals = std::size_t{1} << (2 * depth);
  std::vector<double> t(intervals + 1);
  std::vector<double> xy;
  xy.reserve(2 * (intervals + 1));
  for (std::size_t j = 0; j <= intervals; ++j) {
    t[j] = std::ldexp(static_cast<double>(j), -2 * depth);
    const double x = a + t[j] * (b - a);
    xy.push_back(x);
    xy.push_back(h_eval(x));
  }
  return SampledPath(std::move(t), std::move(xy), 2);
}

}  // namespace qcvar::planar
