#include "qcvar/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

#include "qcvar/errors.hpp"
#include "qcvar/variation.hpp"

namespace qcvar::variation {

namespace {

constexpr double kTol = 1e-12;

bool within(double lhs, double rhs) {
  return lhs <= rhs + kTol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Ratio bins of the empirical modulus table: 2^-6 .. 2^6.
constexpr std::array<double, 13> kRatioEdges{1.0 / 64, 1.0 / 32, 1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0,
                                             2.0,      4.0,      8.0,      16.0,     32.0,    64.0};
constexpr std::size_t kUnitEdge = 6;

}  // namespace

UnionBoundReport union_bound_report(const PhiSpec& phi, const SampledPath& path,
                                    std::span<const std::size_t> breakpoints) {
  if (path.size() < 2) throw DomainError("union bound needs at least two samples");
  if (breakpoints.size() < 2 || breakpoints.front() != 0 || breakpoints.back() != path.last())
    throw DomainError("breakpoints must start at 0 and end at N");
  for (std::size_t k = 1; k < breakpoints.size(); ++k)
    if (breakpoints[k] <= breakpoints[k - 1]) throw DomainError("breakpoints must be strictly increasing");

  const std::size_t pieces = breakpoints.size() - 1;
  double sum_pieces = 0.0;
  for (std::size_t k = 0; k < pieces; ++k)
    sum_pieces += sup_variation(phi, path.slice(breakpoints[k], breakpoints[k + 1])).dp_supremum;

  const double osc = oscillation(path);
  const double crossings = static_cast<double>(pieces - 1);
  UnionBoundReport out{};
  out.lhs = sup_variation(phi, path).dp_supremum;
  out.rhs = sum_pieces + crossings * phi(osc);
  out.rhs_literal = sum_pieces + crossings * osc;
  out.pieces = pieces;
  out.holds = within(out.lhs, out.rhs);
  return out;
}

EtaEstimate estimate_eta(const SampledPath& path, std::span<const double> seg_a,
                         std::span<const double> seg_b) {
  const std::size_t n = path.size();
  const std::size_t d = path.dim();
  if (n < 3) throw DomainError("eta estimate needs at least three samples");
  if (n > kMaxEtaPoints) throw ResourceError("eta estimate is cubic; too many samples");
  if (seg_a.size() != d || seg_b.size() != d) throw DomainError("segment endpoints must match path dimension");

  std::vector<double> dir(d);
  double len = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    dir[k] = seg_b[k] - seg_a[k];
    len += dir[k] * dir[k];
  }
  len = std::sqrt(len);
  if (len == 0.0) throw DomainError("degenerate source segment");
  for (double& c : dir) c /= len;

  // Δ_f(a_i, a_j) for collinear sources: projection of f_i − f_j on ±dir.
  auto delta = [&](std::size_t i, std::size_t j) {
    auto fi = path.point(i);
    auto fj = path.point(j);
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += (fi[k] - fj[k]) * dir[k];
    return path.param(i) > path.param(j) ? s : -s;
  };

  std::array<double, kRatioEdges.size()> bound{};
  bound.fill(-std::numeric_limits<double>::infinity());
  EtaEstimate out{};
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      if (ib == ia) continue;
      const double dab = delta(ia, ib);
      if (!(dab > 0.0)) {
        ++out.skipped_pairs;
        continue;
      }
      const double sab = std::abs(path.param(ib) - path.param(ia));
      const double fab = path.distance(ia, ib);
      for (std::size_t ic = 0; ic < n; ++ic) {
        if (ic == ia || ic == ib) continue;
        const double r = std::abs(path.param(ic) - path.param(ia)) / sab;
        const double need = (path.distance(ia, ic) - r * fab) / dab;
        auto edge = std::lower_bound(kRatioEdges.begin(), kRatioEdges.end(), r);
        if (edge == kRatioEdges.end()) continue;
        auto& slot = bound[static_cast<std::size_t>(edge - kRatioEdges.begin())];
        slot = std::max(slot, need);
        ++out.triples;
      }
    }
  }

  // η is a modulus: nondecreasing, positive.
  double running = std::numeric_limits<double>::epsilon();
  for (std::size_t k = 0; k < kRatioEdges.size(); ++k) {
    running = std::max(running, bound[k]);
    out.modulus.table.emplace_back(kRatioEdges[k], running);
  }
  out.modulus.eta1 = out.modulus.table[kUnitEdge].second;
  return out;
}

GrowthBoundReport growth_bound_report(const SampledPath& path, double delta_ab,
                                      const QuasisymmetryModulus& eta) {
  const std::size_t intervals = path.size() - 1;
  if (path.size() < 2 || !std::has_single_bit(intervals))
    throw DomainError("growth bound needs 2^m + 1 samples");
  if (!(delta_ab >= 0.0)) throw DomainError("growth bound needs delta_ab >= 0");
  if (!(eta.eta1 > 0.0)) throw DomainError("eta(1) must be positive");

  const auto m = static_cast<unsigned>(std::countr_zero(intervals));
  GrowthBoundReport out{};
  out.levels = m;
  out.chain.assign(m + 1, 0.0);
  for (unsigned k = 0; k <= m; ++k) {
    const std::size_t stride = intervals >> k;
    double s = 0.0;
    for (std::size_t j = stride; j <= intervals; j += stride) s += path.distance(j - stride, j);
    out.chain[k] = s;
  }
  out.lhs = out.chain[m];
  out.rhs = path.distance(0, intervals) + 2.0 * m * eta.eta1 * delta_ab;
  out.holds = within(out.lhs, out.rhs);
  return out;
}

}  // namespace qcvar::variation
