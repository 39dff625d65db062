#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcvar/phi.hpp"
#include "qcvar/sampled_path.hpp"

namespace qcvar::variation {

/// Largest path accepted by the quadratic sub-partition DP.
inline constexpr std::size_t kMaxDpPoints = 20000;

/// φ-variation of a sampled path.
///
/// The supremum is taken over sub-partitions of the supplied samples only, so
/// dp_supremum is a lower bound for the variation over all partitions of the
/// segment; it is exact for piecewise-affine traces sampled at their breakpoints.
struct VariationReport {
  PhiSpec phi;
  double consecutive_sum;
  double dp_supremum;
  /// Lexicographically smallest index set attaining dp_supremum; contains 0 and N.
  std::vector<std::size_t> argmax_indices;
};

/// Σ_j φ(|f(a_j) − f(a_{j−1})|) over consecutive samples.
double phi_sum(const PhiSpec& phi, const SampledPath& path);

/// φ-sum over the sub-partition given by increasing sample indices, summed left to right.
double phi_sum_over(const PhiSpec& phi, const SampledPath& path, std::span<const std::size_t> indices);

VariationReport sup_variation(const PhiSpec& phi, const SampledPath& path);

/// max_{i,j} |f(a_i) − f(a_j)|.
double oscillation(const SampledPath& path);

/// N φ(V/N): lower bound for any φ-sum of N nonnegative increments totalling V (φ convex).
double jensen_floor(const PhiSpec& phi, double total, std::size_t increments);

/// Σ_{j≤N} φ(d_j) with d_j = C (log(j+1) − log j) and φ = LogDamped(q).
double extremal_series_sum(double c, double q, std::size_t n);

/// Δ_f(a,b) = ⟨f(a) − f(b), (a − b)/|a − b|⟩, and 0 when a = b.
///
/// δ-monotonicity is Δ_f(a,b) ≥ δ|f(a) − f(b)| throughout this library.
double delta_modulus(std::span<const double> a, std::span<const double> b,
                     std::span<const double> fa, std::span<const double> fb);

}  // namespace qcvar::variation
