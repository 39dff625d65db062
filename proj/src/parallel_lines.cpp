#include "qcvar/parallel_lines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qcvar/errors.hpp"

namespace qcvar::planar {

namespace {

double log_gap(double gap) { return std::log(std::numbers::e + 1.0 / gap); }

double pow2(std::size_t i) { return std::ldexp(1.0, -static_cast<int>(i + 1)); }  // 2^{−m}, m = i + 1

}  // namespace

double SumConstruction::height_margin(std::size_t i) const {
  return pow2(i) - coefficients[i] * std::abs(heights[i]);
}

double SumConstruction::gap_margin(std::size_t i) const {
  return pow2(i) - coefficients[i] * log_gap(min_gaps[i]);
}

ParallelLinesMap::ParallelLinesMap(SumConstruction construction, LacunaryParams params)
    : construction_(std::move(construction)), params_(params) {}

cplx ParallelLinesMap::operator()(cplx z) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < construction_.m_trunc; ++i)
    s += construction_.coefficients[i] * f_eval(z - cplx(0.0, construction_.heights[i]), params_);
  return s;
}

double ParallelLinesMap::tail_bound(cplx z) const {
  const double big_m = params_.eps * kProfileMax * 4.0 / 3.0;
  double t = 0.0;
  for (std::size_t i = construction_.m_trunc; i < construction_.heights.size(); ++i)
    t += construction_.coefficients[i] * (std::abs(z) + std::abs(construction_.heights[i]) + big_m);
  return t;
}

cplx ParallelLinesMap::remainder(std::size_t j, cplx z) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < construction_.m_trunc; ++i) {
    if (i == j) continue;
    s += construction_.coefficients[i] * f_eval(z - cplx(0.0, construction_.heights[i]), params_);
  }
  return s;
}

double ParallelLinesMap::remainder_lipschitz_bound(std::size_t j) const {
  const double c = log_derivative_constant(params_);
  double b = 0.0;
  for (std::size_t i = 0; i < construction_.m_trunc; ++i) {
    if (i == j) continue;
    b += construction_.coefficients[i] * c * log_gap(std::abs(construction_.heights[i] - construction_.heights[j]));
  }
  return b;
}

RemainderCheck ParallelLinesMap::check_remainder(std::size_t j, std::size_t pairs, std::uint64_t seed,
                                                 double half_width) const {
  if (j >= construction_.heights.size()) throw DomainError("no such line");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(-half_width, half_width);
  const double bj = construction_.heights[j];
  RemainderCheck out{j, pairs, 0.0, remainder_lipschitz_bound(j), true};
  for (std::size_t p = 0; p < pairs; ++p) {
    const double x1 = xs(rng);
    double x2 = xs(rng);
    if (std::abs(x1 - x2) < 1e-6) x2 = x1 + 1e-3;
    const cplx r1 = remainder(j, {x1, bj});
    const cplx r2 = remainder(j, {x2, bj});
    out.empirical_lipschitz = std::max(out.empirical_lipschitz, std::abs(r1 - r2) / std::abs(x1 - x2));
  }
  out.pass = out.empirical_lipschitz <= out.bound * (1.0 + 1e-9) + 1e-12;
  return out;
}

ParallelLinesMap build_parallel_map(std::vector<double> heights, std::size_t m_trunc,
                                    const LacunaryParams& params) {
  if (heights.empty()) throw DomainError("need at least one line");
  for (double b : heights)
    if (!std::isfinite(b)) throw DomainError("line heights must be finite");
  SumConstruction sc;
  sc.m_trunc = std::min(m_trunc, heights.size());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < heights.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const double d = std::abs(heights[i] - heights[k]);
      if (d == 0.0) throw DomainError("line heights must be distinct");
      gap = std::min(gap, d);
    }
    sc.min_gaps.push_back(gap);
    sc.coefficients.push_back(pow2(i) / 2.0 / (1.0 + std::abs(heights[i]) + log_gap(gap)));
  }
  sc.heights = std::move(heights);
  return ParallelLinesMap(std::move(sc), params);
}

}  // namespace qcvar::planar
