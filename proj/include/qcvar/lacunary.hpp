#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcvar/profile.hpp"

namespace qcvar::planar {

/// Parameters of f(z) = z + ε Σ_{m≥0} 4^{−m} g(4^m z).
struct LacunaryParams {
  double eps;
  double lipschitz;  // L, Lipschitz constant of g
  double tail_tol;   // truncation tolerance when no exact cutoff applies

  /// Validates 0 < ε < 1/(2L) with L from the standard profile.
  static LacunaryParams make(double eps = 0.25, double tail_tol = 1e-12);

  /// k = εL / (1 − εL).
  double k() const { return eps * lipschitz / (1.0 - eps * lipschitz); }
};

/// max |g| over the plane.
inline constexpr double kProfileMax = 2.0;

enum class Truncation { ExactDyadic, TailBound };

std::string_view truncation_name(Truncation t);

struct SeriesValue {
  cplx value;
  int terms;           // levels summed, m = 0 .. terms−1
  Truncation mode;
  double tail_bound;   // 0 when exact
};

SeriesValue f_series(cplx z, const LacunaryParams& params);
cplx f_eval(cplx z, const LacunaryParams& params);

/// h(x) = Σ 4^{−m} T(4^m x) = ε^{−1} im f(x); finite on dyadic rationals.
SeriesValue h_series(double x, double tail_tol = 1e-12);
double h_eval(double x);

/// Exact derivative of the finitely-truncated series at a point off every cell edge.
struct CellDerivative {
  cplx z;
  std::optional<int> bad_level;  // the unique m with 4^m z ∈ B, if any
  cplx g_z;                      // g_z(4^m z) at bad_level (0 when none)
  cplx g_zbar;
  cplx f_z;
  cplx f_zbar;
  int levels;                    // number of levels with |im 4^m z| ≤ 2
  int active_levels;             // levels with re g_z ≠ 0 or g_z̄ ≠ 0
  int bad_hits;                  // levels with 4^m z ∈ B

  /// Operator norm |f_z| + |f_z̄|.
  double df_norm() const { return std::abs(f_z) + std::abs(f_zbar); }
};

/// nullopt when im z = 0 or some level lands within kBoundaryTol of a cell edge.
std::optional<CellDerivative> cell_derivative(cplx z, const LacunaryParams& params);

/// sup over y > 0 of max|Df| on {|im z| = y} / log(e + 1/y), from the per-level bound
/// |Df| ≤ 1 + εL·#{m : 4^m |y| ≤ 2}.
double log_derivative_constant(const LacunaryParams& params);

struct BeltramiReport {
  std::size_t n_samples = 0;
  std::size_t n_evaluated = 0;
  std::size_t n_skipped_real = 0;   // im z = 0: derivative defined a.e. only
  std::size_t n_perturbed = 0;      // moved off a cell edge by kPerturbation
  std::size_t n_unresolved = 0;     // still on an edge after all perturbation attempts
  std::size_t violations_reduced = 0;  // |f_z̄| > k re f_z
  std::size_t violations_band = 0;     // re f_z ∉ [1−εL, 1+εL] or |f_z̄| > εL
  std::size_t violations_unique = 0;   // more than one level in B or active
  std::size_t violations_log = 0;      // |Df| > C log(e + 1/|im z|)
  double worst_reduced_margin;         // min of k re f_z − |f_z̄|
  double worst_band_margin;            // min distance inside the band
  double fitted_log_constant = 0.0;    // max |Df| / log(e + 1/|im z|)
  double log_constant_bound;           // log_derivative_constant(params)
  std::vector<std::string> notes;

  bool pass() const {
    return violations_reduced == 0 && violations_band == 0 && violations_unique == 0 &&
           violations_log == 0 && n_unresolved == 0;
  }
};

inline constexpr double kPerturbation = 1e-9;

BeltramiReport beltrami_report(std::span<const cplx> samples, const LacunaryParams& params,
                               double tol = 1e-12);

/// f^λ(z) = f(z) + iλz with λ = −im((f(b) − f(a))/(b − a)); |f^λ(b) − f^λ(a)| = |Δ_f(a,b)|.
struct TiltResult {
  double lambda;
  double tilted_gap;
};

TiltResult tilt_planar(cplx a, cplx b, cplx fa, cplx fb);

}  // namespace qcvar::planar
