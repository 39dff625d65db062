#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace qcvar::variation {

/// t ↦ t^p, p ≥ 1.
struct Power {
  double p;
};

/// t ↦ t / log(e + 1/t)^q with value 0 at t = 0, q ≥ 0.
struct LogDamped {
  double q;
};

/// Convex gauge φ with φ(0) = 0 used by the φ-variation functionals.
class PhiSpec {
 public:
  static PhiSpec power(double p);
  static PhiSpec log_damped(double q);

  /// Parses the command-line form "pow:<p>" or "log:<q>".
  static PhiSpec parse(std::string_view text);

  double operator()(double t) const;

  bool is_power() const noexcept { return std::holds_alternative<Power>(family_); }
  bool is_log_damped() const noexcept { return std::holds_alternative<LogDamped>(family_); }
  double parameter() const noexcept;

  /// Inverse of parse(); round-trips the parameter exactly.
  std::string to_string() const;

  friend bool operator==(const PhiSpec& a, const PhiSpec& b) {
    return a.is_power() == b.is_power() && a.parameter() == b.parameter();
  }

 private:
  explicit PhiSpec(std::variant<Power, LogDamped> family) : family_(family) {}
  std::variant<Power, LogDamped> family_;
};

double phi_eval(const PhiSpec& phi, double t);

struct ConvexityCheck {
  bool convex;
  double worst_excess;  // max of (φ(mid) − mean)/mean over the grid; ≤ tol when convex
  double worst_at;      // left grid point of the worst pair
  std::size_t grid_points;
};

/// Midpoint convexity on a logarithmic grid of [t_lo, t_hi].
ConvexityCheck check_midpoint_convexity(const PhiSpec& phi, double t_lo = 1e-9, double t_hi = 1e3,
                                        std::size_t grid_points = 2001, double rel_tol = 1e-12);

}  // namespace qcvar::variation
