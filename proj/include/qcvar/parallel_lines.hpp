#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcvar/lacunary.hpp"

namespace qcvar::planar {

/// F(z) = Σ_m c_m f(z − i b_m) over lines L_m = {im z = b_m}, m = 1, 2, ...
/// Vectors are indexed from 0; entry i belongs to m = i + 1.
struct SumConstruction {
  std::vector<double> heights;       // b_m
  std::vector<double> min_gaps;      // ε_m = min pairwise gap among b_1..b_m (+∞ for m = 1)
  std::vector<double> coefficients;  // c_m = 2^{−m−1} / (1 + |b_m| + log(e + 1/ε_m))
  std::size_t m_trunc;               // terms m ≤ m_trunc are summed

  /// 2^{−m} − c_m |b_m|; strictly positive.
  double height_margin(std::size_t i) const;
  /// 2^{−m} − c_m log(e + 1/ε_m); strictly positive.
  double gap_margin(std::size_t i) const;
};

struct RemainderCheck {
  std::size_t line;          // 0-based index j
  std::size_t pairs;
  double empirical_lipschitz;
  double bound;              // Σ_{m≠j} c_m · C · log(e + 1/|b_m − b_j|)
  bool pass;
};

class ParallelLinesMap {
 public:
  ParallelLinesMap(SumConstruction construction, LacunaryParams params);

  const SumConstruction& construction() const { return construction_; }
  const LacunaryParams& params() const { return params_; }

  cplx operator()(cplx z) const;
  /// Bound on the omitted terms m > m_trunc, from |f(z)| ≤ |z| + M with M = 8ε/3.
  double tail_bound(cplx z) const;

  /// R_j(z) = Σ_{m≠j, m≤m_trunc} c_m f(z − i b_m).
  cplx remainder(std::size_t j, cplx z) const;
  double remainder_lipschitz_bound(std::size_t j) const;

  /// Largest |R_j(x1 + i b_j) − R_j(x2 + i b_j)| / |x1 − x2| over random pairs in
  /// [−half_width, half_width].
  RemainderCheck check_remainder(std::size_t j, std::size_t pairs, std::uint64_t seed,
                                 double half_width = 10.0) const;

 private:
  SumConstruction construction_;
  LacunaryParams params_;
};

ParallelLinesMap build_parallel_map(std::vector<double> heights, std::size_t m_trunc,
                                    const LacunaryParams& params);

}  // namespace qcvar::planar
