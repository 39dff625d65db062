#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qcvar/phi.hpp"
#include "qcvar/sampled_path.hpp"

namespace qcvar::variation {

/// Concatenation bound: var_I ≤ Σ_m var_{I_m} + (M−1)·φ(osc_I).
struct UnionBoundReport {
  double lhs;
  double rhs;
  /// Same sum with (M−1)·osc_I in place of (M−1)·φ(osc_I); equals rhs for Power(1).
  double rhs_literal;
  std::size_t pieces;
  bool holds;
};

/// breakpoints: increasing sample indices containing 0 and N.
UnionBoundReport union_bound_report(const PhiSpec& phi, const SampledPath& path,
                                    std::span<const std::size_t> breakpoints);

/// η(1) and an optional empirical (ratio, bound) table.
struct QuasisymmetryModulus {
  double eta1;
  std::vector<std::pair<double, double>> table;
};

/// Empirical modulus for the three-point inequality
///   |f(c) − f(a)| ≤ r |f(b) − f(a)| + η(r) Δ_f(a,b),   r = |c − a| / |b − a|,
/// over all sample triples of a path on the source segment [a, b].
/// Bounds are cumulative maxima, so the table is nondecreasing in r.
struct EtaEstimate {
  QuasisymmetryModulus modulus;
  std::size_t triples;
  std::size_t skipped_pairs;  // pairs with Δ_f ≤ 0
};

inline constexpr std::size_t kMaxEtaPoints = 1025;

EtaEstimate estimate_eta(const SampledPath& path, std::span<const double> seg_a,
                         std::span<const double> seg_b);

/// Dyadic rarefaction bound Σ|Δf| ≤ |f(b) − f(a)| + 2m η(1) Δ_f(a,b) on 2^m + 1 samples.
struct GrowthBoundReport {
  double lhs;
  double rhs;
  unsigned levels;  // m
  /// chain[k] = consecutive sum on the sub-grid of 2^k + 1 points; chain[m] = lhs,
  /// chain[0] = |f(b) − f(a)|.
  std::vector<double> chain;
  bool holds;
};

GrowthBoundReport growth_bound_report(const SampledPath& path, double delta_ab,
                                      const QuasisymmetryModulus& eta);

}  // namespace qcvar::variation
