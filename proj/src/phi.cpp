#include "qcvar/phi.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <type_traits>
#include <numbers>
#include <system_error>

#include "qcvar/errors.hpp"

namespace qcvar::variation {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

PhiSpec PhiSpec::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("power gauge needs finite p >= 1");
  return PhiSpec(Power{p});
}

PhiSpec PhiSpec::log_damped(double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("log-damped gauge needs finite q >= 0");
  return PhiSpec(LogDamped{q});
}

PhiSpec PhiSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("gauge must look like pow:<p> or log:<q>");
  auto kind = text.substr(0, colon);
  auto num = text.substr(colon + 1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
    throw DomainError("bad gauge parameter '" + std::string(num) + "'");
  if (kind == "pow") return power(value);
  if (kind == "log") return log_damped(value);
  throw DomainError("unknown gauge family '" + std::string(kind) + "'");
}

double PhiSpec::parameter() const noexcept {
  return std::visit([](auto f) {
    if constexpr (std::is_same_v<decltype(f), Power>) return f.p;
    else return f.q;
  }, family_);
}

std::string PhiSpec::to_string() const {
  return (is_power() ? "pow:" : "log:") + shortest(parameter());
}

double PhiSpec::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("gauge evaluated at negative argument");
  if (t == 0.0) return 0.0;
  if (auto* pw = std::get_if<Power>(&family_)) {
    if (pw->p == 1.0) return t;
    if (pw->p == 2.0) return t * t;
    return std::pow(t, pw->p);
  }
  const double q = std::get<LogDamped>(family_).q;
  if (q == 0.0) return t;
  return t / std::pow(std::log(std::numbers::e + 1.0 / t), q);
}

double phi_eval(const PhiSpec& phi, double t) { return phi(t); }

ConvexityCheck check_midpoint_convexity(const PhiSpec& phi, double t_lo, double t_hi,
                                        std::size_t grid_points, double rel_tol) {
  if (!(t_lo > 0.0 && t_hi > t_lo) || grid_points < 2) throw DomainError("bad convexity grid");
  ConvexityCheck out{true, -std::numeric_limits<double>::infinity(), t_lo, grid_points};
  const double step = std::log(t_hi / t_lo) / static_cast<double>(grid_points - 1);
  double a = t_lo;
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double b = t_lo * std::exp(step * static_cast<double>(i));
    const double mean = 0.5 * (phi(a) + phi(b));
    const double excess = (phi(0.5 * (a + b)) - mean) / mean;
    if (excess > out.worst_excess) {
      out.worst_excess = excess;
      out.worst_at = a;
    }
    a = b;
  }
  out.convex = out.worst_excess <= rel_tol;
  return out;
}

}  // namespace qcvar::variation
