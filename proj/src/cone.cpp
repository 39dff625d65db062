#include "qcvar/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "qcvar/errors.hpp"

namespace qcvar::monotone {

namespace {

constexpr double kMembershipTol = 1e-12;

double radical_inverse(std::size_t i, std::size_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

const std::vector<Eigen::VectorXd>& cached_grid(std::size_t n, std::size_t count) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Eigen::VectorXd>> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({n, count});
  if (inserted) it->second = sphere_grid(n, count);
  return it->second;
}

template <int N>
struct Search {
  using Mat = Eigen::Matrix<double, N, N>;
  using Vec = Eigen::Matrix<double, N, 1>;

  const Mat a;
  const Mat sym;
  const double delta;

  double value(const Vec& v) const { return v.dot(a * v) - delta * (a * v).norm(); }

  Vec gradient(const Vec& v) const {
    const Vec av = a * v;
    const double nav = av.norm();
    Vec g = sym * v;
    if (nav > 0.0) g -= delta * (a.transpose() * av) / nav;
    return g - g.dot(v) * v;
  }

  void refine(Vec& v, double& f, std::size_t steps) const {
    const double scale = std::max(a.norm(), 1e-300);
    double step = 0.5 / scale;
    for (std::size_t s = 0; s < steps; ++s) {
      const Vec g = gradient(v);
      if (g.norm() == 0.0) return;
      bool moved = false;
      for (int tries = 0; tries < 40; ++tries) {
        Vec trial = (v - step * g).normalized();
        const double ft = value(trial);
        if (ft < f) {
          v = trial;
          f = ft;
          step *= 2.0;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) return;
    }
  }

  SphereMinimum run(const SphereSearchOptions& opts) const {
    const auto& grid = cached_grid(N, opts.grid_points);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = value(Vec(grid[i]));
    std::vector<std::size_t> order(grid.size());
    std::iota(order.begin(), order.end(), 0);
    const std::size_t starts = std::min(opts.refine_starts, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts), order.end(),
                      [&](std::size_t x, std::size_t y) { return vals[x] < vals[y] || (vals[x] == vals[y] && x < y); });
    SphereMinimum best{std::numeric_limits<double>::infinity(), Eigen::VectorXd()};
    for (std::size_t s = 0; s < starts; ++s) {
      Vec v = grid[order[s]];
      double f = vals[order[s]];
      refine(v, f, opts.refine_steps);
      if (f < best.value) best = {f, Eigen::VectorXd(v)};
    }
    return best;
  }
};

template <int N>
SphereMinimum search(const Eigen::MatrixXd& a, double delta, const SphereSearchOptions& opts) {
  const typename Search<N>::Mat m = a;
  return Search<N>{m, m + m.transpose(), delta}.run(opts);
}

}  // namespace

ConeParams ConeParams::make(std::size_t n, double delta) {
  if (n < 2 || n > 4) throw DomainError("cone dimension must be 2, 3 or 4");
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("cone parameter delta must lie in (0, 1]");
  return {n, delta};
}

Eigen::Matrix2d ConformalSplit::matrix() const {
  Eigen::Matrix2d m;
  m << alpha_plus.real() + alpha_minus.real(), -alpha_plus.imag() + alpha_minus.imag(),
      alpha_plus.imag() + alpha_minus.imag(), alpha_plus.real() - alpha_minus.real();
  return m;
}

ConformalSplit conf_split(const Eigen::Matrix2d& a) {
  return {cplx((a(0, 0) + a(1, 1)) / 2, (a(1, 0) - a(0, 1)) / 2),
          cplx((a(0, 0) - a(1, 1)) / 2, (a(1, 0) + a(0, 1)) / 2)};
}

std::vector<Eigen::VectorXd> sphere_grid(std::size_t n, std::size_t count) {
  if (count == 0) throw DomainError("empty sphere grid");
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(count);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < count; ++k) {
    const double kk = static_cast<double>(k);
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    switch (n) {
      case 2: {
        const double th = two_pi * (kk + 0.5) / static_cast<double>(count);
        v << std::cos(th), std::sin(th);
        break;
      }
      case 3: {  // Fibonacci lattice
        const double z = 1.0 - (2.0 * kk + 1.0) / static_cast<double>(count);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double ph = kk * std::numbers::pi * (3.0 - std::sqrt(5.0));
        v << r * std::cos(ph), r * std::sin(ph), z;
        break;
      }
      case 4: {  // Halton (2,3,5) pushed through the uniform S^3 parametrization
        const double u1 = radical_inverse(k + 1, 2);
        const double u2 = radical_inverse(k + 1, 3);
        const double u3 = radical_inverse(k + 1, 5);
        const double r1 = std::sqrt(1.0 - u1);
        const double r2 = std::sqrt(u1);
        v << r1 * std::sin(two_pi * u2), r1 * std::cos(two_pi * u2), r2 * std::sin(two_pi * u3),
            r2 * std::cos(two_pi * u3);
        break;
      }
      default:
        throw DomainError("sphere grid supports n = 2, 3, 4");
    }
    pts.push_back(v.normalized());
  }
  return pts;
}

SphereMinimum cone_objective_min(const Eigen::MatrixXd& a, double delta, const SphereSearchOptions& opts) {
  if (a.rows() != a.cols()) throw DomainError("cone search needs a square matrix");
  switch (a.rows()) {
    case 2: return search<2>(a, delta, opts);
    case 3: return search<3>(a, delta, opts);
    case 4: return search<4>(a, delta, opts);
    default: throw DomainError("cone search supports n = 2, 3, 4");
  }
}

ConeMembership cone_membership(const Eigen::MatrixXd& a, const ConeParams& cone, const SphereSearchOptions& opts) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != cone.n)
    throw DomainError("matrix dimension does not match cone");
  const auto n = static_cast<Eigen::Index>(cone.n);
  if (a.isZero(0.0)) return {true, 0.0, Eigen::VectorXd::Unit(n, 0), true};

  const SphereMinimum min = cone_objective_min(a, cone.delta, opts);
  if (cone.n == 2) {
    const ConformalSplit s = conf_split(a);
    const double margin = std::sqrt(1.0 - cone.delta * cone.delta) * s.alpha_plus.real() -
                          std::abs(s.alpha_minus) - cone.delta * std::abs(s.alpha_plus.imag());
    const double scale = std::abs(s.alpha_plus) + std::abs(s.alpha_minus);
    return {margin >= -kMembershipTol * scale, margin, min.argmin, false};
  }
  return {min.value >= -kMembershipTol * a.norm(), min.value, min.argmin, false};
}

double h_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("H(delta) needs delta in [0, 1]");
  if (delta == 0.0) return std::numeric_limits<double>::infinity();
  const double s = std::sqrt(1.0 - delta * delta);
  return (1.0 + s) / (1.0 - s);
}

double cond_ratio(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("cond_ratio needs a square matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > std::numeric_limits<double>::epsilon() * smax * static_cast<double>(a.rows())))
    throw DomainError("cond_ratio of a singular matrix");
  return smax / smin;
}

}  // namespace qcvar::monotone
