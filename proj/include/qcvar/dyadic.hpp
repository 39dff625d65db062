#pragma once

#include <cstddef>
#include <vector>

#include "qcvar/lacunary.hpp"
#include "qcvar/sampled_path.hpp"

namespace qcvar::planar {

/// 4^12 ≈ 1.7·10^7 intervals; deeper tables are refused.
inline constexpr int kMaxDyadicDepth = 12;

enum class VnMethod {
  PartitionSum,        // Σ_j |h(x_j) − h(x_{j−1})| on x_j = 8j / 4^N
  DerivativeIntegral,  // ∫_0^8 |h_N'| from the Rademacher expansion of h_N'
};

struct VnRow {
  int depth;
  double value;
};

double vn_partition_sum(int depth);
double vn_derivative_integral(int depth);

/// V_N for N = 1 .. n_max. Both methods are exact in double precision and agree bit for bit.
std::vector<VnRow> vn_table(int n_max, VnMethod method);

/// Samples (x_j, h(x_j)) of the trace on [x0, x0 + 8] at 4^depth + 1 dyadic points,
/// as a scalar path over t_j = j / 4^depth.
SampledPath h_trace(int depth, double x0 = 0.0);

/// (re f, im f) at z_j = a + t_j (b − a), t_j = j / 4^depth.
SampledPath f_trace(cplx a, cplx b, int depth, const LacunaryParams& params);

/// Graph points (x_j, h(x_j)) at x_j = a + t_j (b − a), t_j = j / 4^depth.
SampledPath h_graph(double a, double b, int depth);

}  // namespace qcvar::planar
