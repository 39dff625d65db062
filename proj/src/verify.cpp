#include "qcvar/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qcvar/cone.hpp"
#include "qcvar/errors.hpp"
#include "qcvar/lacunary.hpp"
#include "qcvar/parallel_lines.hpp"
#include "qcvar/phi.hpp"
#include "qcvar/probe.hpp"
#include "qcvar/profile.hpp"
#include "qcvar/quaternion.hpp"
#include "qcvar/sampled_path.hpp"
#include "qcvar/variation.hpp"

namespace qcvar::verify {

namespace {

using planar::cplx;
using Rng = std::mt19937_64;

constexpr std::array<std::string_view, 8> kSuites = {
    "beltrami", "scales", "rademacher", "variation-dp", "cone", "quaternion", "reduced4d", "parallel-lines"};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Eigen::MatrixXd random_matrix(Rng& rng, std::size_t n, double lo, double hi) {
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = uniform(rng, lo, hi);
  return a;
}

monotone::QuatMatrix random_quat(Rng& rng, bool imaginary) {
  return {imaginary ? 0.0 : uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
}

// x ↦ x·w as a 4×4 matrix; orthogonal to the left-multiplication span when w is imaginary.
Eigen::Matrix4d right_mult(const monotone::QuatMatrix& w) {
  Eigen::Matrix4d r;
  for (int c = 0; c < 4; ++c) {
    monotone::QuatMatrix e;
    (c == 0 ? e.alpha : c == 1 ? e.beta : c == 2 ? e.gamma : e.zeta) = 1.0;
    const auto p = e * w;
    r.col(c) << p.alpha, p.beta, p.gamma, p.zeta;
  }
  return r;
}

SuiteReport beltrami(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(10000);
  Rng rng(opts.seed);
  std::vector<cplx> zs(n);
  for (auto& z : zs) z = {uniform(rng, -10, 10), uniform(rng, 0.01, 2)};
  const auto params = planar::LacunaryParams::make(opts.eps);
  const auto r = planar::beltrami_report(zs, params, opts.tol);
  SuiteReport out{"beltrami", n, std::min(r.worst_reduced_margin, r.worst_band_margin), r.pass(), {}};
  out.details = {{"eps", params.eps},
                 {"lipschitz", params.lipschitz},
                 {"k", params.k()},
                 {"evaluated", r.n_evaluated},
                 {"perturbed", r.n_perturbed},
                 {"unresolved", r.n_unresolved},
                 {"violations_reduced", r.violations_reduced},
                 {"violations_band", r.violations_band},
                 {"violations_unique", r.violations_unique},
                 {"violations_log", r.violations_log},
                 {"worst_reduced_margin", r.worst_reduced_margin},
                 {"worst_band_margin", r.worst_band_margin},
                 {"fitted_log_constant", r.fitted_log_constant},
                 {"log_constant_bound", r.log_constant_bound}};
  return out;
}

SuiteReport scales(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(100000);
  constexpr int kLevels = 12;
  Rng rng(opts.seed);
  std::size_t max_hits = 0;
  std::size_t with_hit = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const auto hits = planar::scale_hits({uniform(rng, -10, 10), uniform(rng, -10, 10)}, kLevels);
    max_hits = std::max(max_hits, hits.size());
    with_hit += hits.empty() ? 0 : 1;
  }
  const std::size_t n_real = std::max<std::size_t>(1, n / 10);
  std::size_t real_hits = 0;
  for (std::size_t s = 0; s < n_real; ++s)
    real_hits += planar::scale_hits({uniform(rng, -10, 10), 0.0}, kLevels).size();
  const double margin = 1.0 - static_cast<double>(max_hits) - static_cast<double>(real_hits);
  SuiteReport out{"scales", n, margin, max_hits <= 1 && real_hits == 0, {}};
  out.details = {{"levels", kLevels},
                 {"max_hits", max_hits},
                 {"samples_with_a_hit", with_hit},
                 {"real_samples", n_real},
                 {"real_hits", real_hits}};
  return out;
}

SuiteReport rademacher(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(10000);
  Rng rng(opts.seed);
  std::size_t checked = 0, skipped = 0, mismatches = 0;
  double worst = 0.0;
  while (checked < n) {
    const double x = uniform(rng, 0, 8);
    const int s0 = planar::rademacher_eval(0, x / 8);
    const int s1 = planar::rademacher_eval(1, x / 8);
    const auto g = planar::g_eval({x, 0.0});
    if (s0 == 0 || s1 == 0 || g.on_boundary()) {
      ++skipped;
      continue;
    }
    const cplx lhs = -cplx(0, 1) * g.gradient->gx;
    const double rhs = 0.5 * (s0 - s1);
    const double diff = std::abs(lhs - rhs);
    if (lhs != cplx(rhs, 0.0)) ++mismatches;
    worst = std::max(worst, diff);
    ++checked;
  }
  SuiteReport out{"rademacher", n, worst > 0 ? -worst : 0.0, mismatches == 0, {}};
  out.details = {{"mismatches", mismatches}, {"skipped_lattice_or_edge", skipped}};
  return out;
}

variation::PhiSpec phi_from_grid(std::size_t i) {
  static const std::array<variation::PhiSpec, 8> grid = {
      variation::PhiSpec::power(1),        variation::PhiSpec::power(1.5),
      variation::PhiSpec::power(2),        variation::PhiSpec::power(3),
      variation::PhiSpec::log_damped(0),   variation::PhiSpec::log_damped(0.5),
      variation::PhiSpec::log_damped(1.5), variation::PhiSpec::log_damped(3)};
  return grid[i % grid.size()];
}

SuiteReport variation_dp(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(200);
  Rng rng(opts.seed);
  std::size_t dp_mismatch = 0, argmax_mismatch = 0, reeval_mismatch = 0, collapse_fail = 0;
  double worst = 0.0;
  constexpr std::array<std::size_t, 3> dims = {1, 2, 4};
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t increments = pick(rng, 1, 12);
    const std::size_t dim = dims[pick(rng, 0, dims.size() - 1)];
    std::vector<double> params(increments + 1), coords((increments + 1) * dim);
    for (std::size_t i = 0; i <= increments; ++i) params[i] = static_cast<double>(i) / static_cast<double>(increments);
    for (auto& c : coords) c = uniform(rng, -1, 1);
    const SampledPath path(params, coords, dim);
    const auto phi = phi_from_grid(pick(rng, 0, 7));

    // Exhaustive enumeration over interior subsets, lexicographically smallest maximizer kept.
    double best = -1.0;
    std::vector<std::size_t> best_set;
    const std::size_t interior = increments - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
      std::vector<std::size_t> set{0};
      for (std::size_t b = 0; b < interior; ++b)
        if (mask & (std::size_t{1} << b)) set.push_back(b + 1);
      set.push_back(increments);
      double sum = 0.0;
      for (std::size_t k = 1; k < set.size(); ++k) sum += phi(path.distance(set[k - 1], set[k]));
      if (sum > best || (sum == best && std::lexicographical_compare(set.begin(), set.end(), best_set.begin(),
                                                                     best_set.end()))) {
        best = sum;
        best_set = set;
      }
    }
    const auto report = variation::sup_variation(phi, path);
    worst = std::max(worst, std::abs(report.dp_supremum - best));
    if (report.dp_supremum != best) ++dp_mismatch;
    if (report.argmax_indices != best_set) ++argmax_mismatch;
    if (variation::phi_sum_over(phi, path, report.argmax_indices) != report.dp_supremum) ++reeval_mismatch;

    const auto linear = variation::sup_variation(variation::PhiSpec::power(1), path);
    if (std::abs(linear.dp_supremum - linear.consecutive_sum) > 1e-12 * std::max(1.0, linear.dp_supremum))
      ++collapse_fail;
  }
  const bool pass = dp_mismatch == 0 && argmax_mismatch == 0 && reeval_mismatch == 0 && collapse_fail == 0;
  SuiteReport out{"variation-dp", n, worst > 0 ? -worst : 0.0, pass, {}};
  out.details = {{"dp_mismatch", dp_mismatch},
                 {"argmax_mismatch", argmax_mismatch},
                 {"reeval_mismatch", reeval_mismatch},
                 {"power1_collapse_fail", collapse_fail}};
  return out;
}

// min over θ of ⟨Av,v⟩ − δ|Av|, v = (cos θ, sin θ): angle grid plus golden-section refinement.
double angular_min(const Eigen::Matrix2d& a, double delta, std::size_t angles) {
  const auto objective = [&](double t) {
    const Eigen::Vector2d v(std::cos(t), std::sin(t));
    const Eigen::Vector2d av = a * v;
    return av.dot(v) - delta * av.norm();
  };
  const double step = std::numbers::pi / static_cast<double>(angles);
  double best = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (std::size_t i = 0; i < angles; ++i) {
    const double t = step * static_cast<double>(i);
    const double v = objective(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double lo = best_t - step, hi = best_t + step;
  for (int it = 0; it < 80; ++it) {
    const double m1 = hi - phi * (hi - lo), m2 = lo + phi * (hi - lo);
    if (objective(m1) < objective(m2)) hi = m2;
    else lo = m1;
  }
  return std::min(best, objective(0.5 * (lo + hi)));
}

SuiteReport cone(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(10000);
  constexpr double kBand = 1e-9;
  Rng rng(opts.seed);
  std::size_t disagree = 0, disagree_in_band = 0, members2 = 0;
  for (std::size_t s = 0; s < n; ++s) {
    Eigen::Matrix2d a = random_matrix(rng, 2, -1, 1);
    a += uniform(rng, 0, 2) * Eigen::Matrix2d::Identity();
    const double delta = uniform(rng, 1e-3, 1);
    const auto closed = monotone::cone_membership(a, monotone::ConeParams::make(2, delta));
    const double brute = angular_min(a, delta, 2000);
    const double scale = std::max(1.0, a.norm());
    const bool brute_member = brute >= -opts.tol * scale;
    members2 += closed.member ? 1 : 0;
    if (closed.member != brute_member) {
      if (std::abs(closed.margin) <= kBand * scale || std::abs(brute) <= kBand * scale) ++disagree_in_band;
      else ++disagree;
    }
  }

  const std::size_t per_dim = std::max<std::size_t>(1, n / 10);
  double worst = std::numeric_limits<double>::infinity();
  nlohmann::json by_dim = nlohmann::json::object();
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    std::size_t accepted = 0, attempts = 0;
    double dim_worst = std::numeric_limits<double>::infinity();
    while (accepted < per_dim && attempts < 50 * per_dim) {
      ++attempts;
      Eigen::MatrixXd a = Eigen::MatrixXd::Identity(dim, dim) + random_matrix(rng, dim, -0.6, 0.6);
      const double delta = uniform(rng, 0.05, 0.95);
      const auto m = monotone::cone_membership(a, monotone::ConeParams::make(dim, delta));
      // search-based membership for n ≥ 3 is only trusted with a visible margin
      if (!m.member || m.degenerate || (dim > 2 && m.margin <= 1e-9 * a.norm())) continue;
      ++accepted;
      dim_worst = std::min(dim_worst, monotone::h_delta(delta) + kBand - monotone::cond_ratio(a));
    }
    worst = std::min(worst, dim_worst);
    by_dim[std::to_string(dim)] = {{"members", accepted}, {"attempts", attempts}, {"worst_h_margin", dim_worst}};
  }
  SuiteReport out{"cone", n, worst, disagree == 0 && worst >= 0.0, {}};
  out.details = {{"closed_form_members", members2},
                 {"disagreements", disagree},
                 {"disagreements_in_band", disagree_in_band},
                 {"h_bound", by_dim}};
  return out;
}

SuiteReport quaternion(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(10000);
  Rng rng(opts.seed);
  double worst_identity = 0.0;  // largest residual of the algebraic identities
  for (std::size_t s = 0; s < n; ++s) {
    const auto q = random_quat(rng, false);
    const Eigen::Matrix4d m = q.matrix();
    const double n2 = q.norm() * q.norm();
    worst_identity = std::max(worst_identity, (m.transpose() * m - n2 * Eigen::Matrix4d::Identity()).norm());
    Eigen::Vector4d v;
    for (int k = 0; k < 4; ++k) v[k] = uniform(rng, -1, 1);
    worst_identity = std::max(worst_identity, std::abs((m * v).norm() - q.norm() * v.norm()));
    if (s < n / 10 + 1) {
      const auto p = random_quat(rng, false);
      worst_identity = std::max(worst_identity, (p.matrix() * m - (p * q).matrix()).norm());
    }
  }
  worst_identity = std::max(worst_identity, (monotone::basis_i() * monotone::basis_j() - monotone::basis_k()).norm());

  // Δ minimization: closed-form Q against random imaginary tilts.
  const std::size_t instances = std::max<std::size_t>(1, n / 100);
  const std::size_t tilts = std::max<std::size_t>(1, n / instances);
  double worst_min = std::numeric_limits<double>::infinity();
  double worst_gap = 0.0, worst_norm = std::numeric_limits<double>::infinity();
  double worst_contract = 0.0;
  for (std::size_t s = 0; s < instances; ++s) {
    Eigen::Vector4d a, b, fa, fb;
    for (int k = 0; k < 4; ++k) {
      a[k] = uniform(rng, -1, 1);
      b[k] = uniform(rng, -1, 1);
      fa[k] = uniform(rng, -2, 2);
      fb[k] = uniform(rng, -2, 2);
    }
    const auto qm = monotone::quat_minimizer(a, b, fa, fb);
    const double dmod = variation::delta_modulus(std::span<const double>(a.data(), 4), std::span<const double>(b.data(), 4),
                                                 std::span<const double>(fa.data(), 4), std::span<const double>(fb.data(), 4));
    worst_gap = std::max({worst_gap, std::abs(qm.delta_val - dmod), std::abs(qm.tilted_gap - std::abs(dmod))});
    worst_norm = std::min(worst_norm, (fa - fb).norm() / (a - b).norm() + opts.tol - qm.q.norm());
    for (std::size_t t = 0; t < tilts; ++t) {
      const Eigen::Matrix4d qp = random_quat(rng, true).matrix() * uniform(rng, 0, 3);
      const double gap = ((fa + qp * a) - (fb + qp * b)).norm();
      worst_min = std::min(worst_min, gap - qm.tilted_gap + 1e-9);
    }
    // projection contraction: ‖A − im ℍ(A)‖_F ≤ ‖A‖_F ≤ 2‖A‖
    const Eigen::Matrix4d am = random_matrix(rng, 4, -1, 1);
    const Eigen::Matrix4d bm = am - monotone::project_im_quat(am).matrix();
    const double op = Eigen::JacobiSVD<Eigen::Matrix4d>(am).singularValues()(0);
    const double opb = Eigen::JacobiSVD<Eigen::Matrix4d>(bm).singularValues()(0);
    worst_contract = std::max({worst_contract, bm.norm() - am.norm(), am.norm() - 2 * op, opb - bm.norm()});
  }
  const double margin = std::min({opts.tol - worst_identity, worst_min, opts.tol - worst_gap, worst_norm,
                                  opts.tol - worst_contract});
  SuiteReport out{"quaternion", n, margin, margin >= 0.0, {}};
  out.details = {{"identity_residual", worst_identity},
                 {"minimizer_instances", instances},
                 {"tilts_per_instance", tilts},
                 {"worst_tilt_margin", worst_min},
                 {"delta_gap_residual", worst_gap},
                 {"worst_norm_margin", worst_norm},
                 {"projection_chain_excess", worst_contract}};
  return out;
}

SuiteReport reduced4d(const SuiteOptions& opts) {
  const std::size_t n = opts.n_samples.value_or(10000);
  Rng rng(opts.seed);
  // A = B + Q: B = S + R_w with S symmetric positive definite and R_w right multiplication
  // by an imaginary quaternion, so im ℍ(B) = 0 and B ∈ M_4(λ_min / (λ_max + |w|)).
  double worst_bound = std::numeric_limits<double>::infinity();
  double worst_member = std::numeric_limits<double>::infinity();
  std::size_t non_members = 0;
  monotone::SphereSearchOptions fast;
  fast.grid_points = 2000;
  fast.refine_starts = 4;
  fast.refine_steps = 30;
  for (std::size_t s = 0; s < n; ++s) {
    const Eigen::Matrix4d g = random_matrix(rng, 4, -1, 1);
    const Eigen::Matrix4d sym = g * g.transpose() + uniform(rng, 0.05, 1) * Eigen::Matrix4d::Identity();
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(sym);
    const auto w = random_quat(rng, true);
    const double wscale = uniform(rng, 0, 1);
    const monotone::QuatMatrix ws{0, wscale * w.beta, wscale * w.gamma, wscale * w.zeta};
    const Eigen::Matrix4d b = sym + right_mult(ws);
    const double delta = eig.eigenvalues()(0) / (eig.eigenvalues()(3) + ws.norm());
    const auto q = random_quat(rng, true);
    const double qscale = uniform(rng, 0, 5);
    const Eigen::Matrix4d a = b + qscale * q.matrix();

    const double ratio = monotone::cond_ratio(a);
    worst_bound = std::min(worst_bound, monotone::reduced4d_distortion_bound(delta) * (1 + 1e-12) - ratio);
    if (s < n / 10 + 1) {
      const auto r = monotone::reduced4d_membership(a, delta, fast);
      worst_member = std::min(worst_member, r.margin + opts.tol * std::max(1.0, r.reduced.norm()));
      if (!r.member && r.margin < -opts.tol * std::max(1.0, r.reduced.norm())) ++non_members;
    }
  }

  // δ-monotone differentials: radial stretch Jacobians, slightly rotated, against δ/(2H(δ)).
  const std::size_t n_diff = std::max<std::size_t>(1, n / 50);
  std::size_t implication_fail = 0, tested = 0;
  double worst_implication = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < n_diff; ++s) {
    Eigen::VectorXd x(4);
    for (int k = 0; k < 4; ++k) x[k] = uniform(rng, -1, 1);
    if (x.norm() < 1e-3) continue;
    const double alpha = uniform(rng, 0.2, 5);
    Eigen::Matrix4d k = random_matrix(rng, 4, -1, 1);
    k = 0.5 * (k - k.transpose()).eval();
    const Eigen::Matrix4d half = 0.5 * uniform(rng, 0, 0.3) * k;
    const Eigen::Matrix4d rot = (Eigen::Matrix4d::Identity() - half).inverse() * (Eigen::Matrix4d::Identity() + half);
    const Eigen::Matrix4d d = monotone::radial_stretch_jacobian(alpha, x) * rot;
    const auto dmin = monotone::cone_objective_min(d, 0.0);
    const double delta = dmin.value / Eigen::JacobiSVD<Eigen::Matrix4d>(d).singularValues()(0);
    if (delta <= 0.01) continue;
    ++tested;
    const double target = delta / (2 * monotone::h_delta(delta));
    const auto r = monotone::reduced4d_membership(d, target);
    worst_implication = std::min(worst_implication, r.margin);
    if (!r.member) ++implication_fail;
  }
  const double margin = std::min({worst_bound, worst_member, worst_implication});
  SuiteReport out{"reduced4d", n, margin, worst_bound >= 0 && non_members == 0 && implication_fail == 0, {}};
  out.details = {{"worst_distortion_margin", worst_bound},
                 {"membership_checked", n / 10 + 1},
                 {"worst_membership_margin", worst_member},
                 {"non_members", non_members},
                 {"differentials_tested", tested},
                 {"implication_failures", implication_fail},
                 {"worst_implication_margin", worst_implication}};
  return out;
}

SuiteReport parallel_lines(const SuiteOptions& opts) {
  const std::size_t sets = opts.n_samples.value_or(10);
  constexpr std::size_t kPairs = 1000;
  Rng rng(opts.seed);
  const auto params = planar::LacunaryParams::make(opts.eps);
  double worst = std::numeric_limits<double>::infinity();
  std::size_t inequalities = 0, failures = 0, lines = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t s = 0; s < sets; ++s) {
    const std::size_t count = pick(rng, 1, 10);
    std::vector<double> heights;
    while (heights.size() < count) {
      const double b = uniform(rng, -5, 5);
      if (std::find(heights.begin(), heights.end(), b) == heights.end()) heights.push_back(b);
    }
    const auto map = planar::build_parallel_map(heights, count, params);
    const auto& c = map.construction();
    for (std::size_t i = 0; i < count; ++i) {
      inequalities += 2;
      const double hm = c.height_margin(i), gm = c.gap_margin(i);
      worst = std::min({worst, hm, gm});
      failures += (hm > 0 ? 0 : 1) + (gm > 0 ? 0 : 1);
      const auto rc = map.check_remainder(i, kPairs, opts.seed + 7919 * s + i);
      ++lines;
      if (!rc.pass) ++failures;
      if (count > 1) worst = std::min(worst, rc.bound - rc.empirical_lipschitz);
      rows.push_back({{"set", s}, {"line", i}, {"empirical", rc.empirical_lipschitz}, {"bound", rc.bound}});
    }
  }
  SuiteReport out{"parallel-lines", sets, worst, failures == 0, {}};
  out.details = {{"inequalities", inequalities}, {"lines", lines}, {"failures", failures}, {"remainders", rows}};
  return out;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "beltrami") return beltrami(opts);
  if (name == "scales") return scales(opts);
  if (name == "rademacher") return rademacher(opts);
  if (name == "variation-dp") return variation_dp(opts);
  if (name == "cone") return cone(opts);
  if (name == "quaternion") return quaternion(opts);
  if (name == "reduced4d") return reduced4d(opts);
  if (name == "parallel-lines") return parallel_lines(opts);
  throw DomainError("unknown verification suite: " + std::string(name));
}

nlohmann::json to_json(const SuiteReport& report) {
  return {{"check", report.check},
          {"n_samples", report.n_samples},
          {"worst_margin", report.worst_margin},
          {"pass", report.pass},
          {"details", report.details}};
}

}  // namespace qcvar::verify
