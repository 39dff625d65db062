#include "qcvar/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcvar/errors.hpp"

namespace qcvar::planar {

namespace {

constexpr int kMaxLevels = 480;  // 4^m z stays finite for |z| < 2^60

cplx scale4(cplx z, int m) { return {std::ldexp(z.real(), 2 * m), std::ldexp(z.imag(), 2 * m)}; }

double reduce_period(double x) { return x - 8.0 * std::floor(x / 8.0); }

// Smallest M with amplitude · 2 · 4^{−M} / 3 < tol: the terms beyond level M are below tol.
int tail_level(double amplitude, double tol) {
  int m = 0;
  while (amplitude * kProfileMax * std::ldexp(1.0, -2 * m) / 3.0 >= tol && m < kMaxLevels) ++m;
  return m;
}

// Shared driver for f and h. term(w) is the level-m profile value at w = 4^m z.
template <class Term>
SeriesValue lacunary_sum(cplx z, double amplitude, double tol, Term term) {
  const int last = tail_level(amplitude, tol);
  cplx s = 0.0;
  for (int m = 0;; ++m) {
    const cplx w = scale4(z, m);
    if (std::abs(w.imag()) > kProfileMax)
      return {s, m, Truncation::ExactDyadic, 0.0};  // g vanishes for |im| > 2, at every later level too
    if (w.imag() == 0.0 && reduce_period(w.real()) == 0.0)
      return {s, m, Truncation::ExactDyadic, 0.0};  // 4^m x ∈ 8ℤ stays there
    if (m > last)
      return {s, m, Truncation::TailBound, amplitude * kProfileMax * std::ldexp(1.0, -2 * last) / 3.0};
    const cplx t = term(w);
    s += cplx(std::ldexp(t.real(), -2 * m), std::ldexp(t.imag(), -2 * m));
  }
}

}  // namespace

std::string_view truncation_name(Truncation t) {
  return t == Truncation::ExactDyadic ? "exact" : "tail_bound";
}

LacunaryParams LacunaryParams::make(double eps, double tail_tol) {
  const double l = g_lipschitz();
  if (!(eps > 0.0 && eps < 1.0 / (2.0 * l)))
    throw DomainError("eps must satisfy 0 < eps < 1/(2L) = " + std::to_string(1.0 / (2.0 * l)));
  if (!(tail_tol > 0.0)) throw DomainError("tail tolerance must be positive");
  return {eps, l, tail_tol};
}

SeriesValue f_series(cplx z, const LacunaryParams& params) {
  auto sum = lacunary_sum(z, params.eps, params.tail_tol, [](cplx w) { return g_eval(w).value; });
  sum.value = z + params.eps * sum.value;
  return sum;
}

cplx f_eval(cplx z, const LacunaryParams& params) { return f_series(z, params).value; }

SeriesValue h_series(double x, double tail_tol) {
  return lacunary_sum(cplx(x, 0.0), 1.0, tail_tol, [](cplx w) { return cplx(tent_eval(w.real()), 0.0); });
}

double h_eval(double x) { return h_series(x).value.real(); }

std::optional<CellDerivative> cell_derivative(cplx z, const LacunaryParams& params) {
  if (z.imag() == 0.0) return std::nullopt;
  CellDerivative d{z, std::nullopt, 0.0, 0.0, 1.0, 0.0, 0, 0, 0};
  cplx sum_dz = 0.0;
  cplx sum_dzbar = 0.0;
  for (int m = 0;; ++m) {
    if (m >= kMaxLevels) return std::nullopt;
    const cplx w = scale4(z, m);
    if (std::abs(w.imag()) > kProfileMax) break;
    const GSample s = g_eval(w);
    if (s.on_boundary()) return std::nullopt;
    const cplx dz = s.gradient->dz();
    const cplx dzbar = s.gradient->dzbar();
    sum_dz += dz;
    sum_dzbar += dzbar;
    ++d.levels;
    if (dz.real() != 0.0 || dzbar != 0.0) ++d.active_levels;
    if (in_bad_set(w)) {
      ++d.bad_hits;
      d.bad_level = m;
      d.g_z = dz;
      d.g_zbar = dzbar;
    }
  }
  d.f_z = 1.0 + params.eps * sum_dz;
  d.f_zbar = params.eps * sum_dzbar;
  return d;
}

double log_derivative_constant(const LacunaryParams& params) {
  // On (2·4^{−k−1}, 2·4^{−k}] exactly k+1 levels can be nonzero and the ratio is
  // largest at the right end; above height 2, Df = I.
  double c = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double levels = k + 1.0;
    const double inv_y = std::ldexp(1.0, 2 * k) / 2.0;
    c = std::max(c, (1.0 + params.eps * params.lipschitz * levels) / std::log(std::numbers::e + inv_y));
  }
  return c;
}

BeltramiReport beltrami_report(std::span<const cplx> samples, const LacunaryParams& params, double tol) {
  BeltramiReport r;
  r.n_samples = samples.size();
  r.worst_reduced_margin = std::numeric_limits<double>::infinity();
  r.worst_band_margin = std::numeric_limits<double>::infinity();
  r.log_constant_bound = log_derivative_constant(params);
  const double el = params.eps * params.lipschitz;
  const double k = params.k();
  constexpr std::size_t kMaxNotes = 16;
  auto note = [&](std::string s) {
    if (r.notes.size() < kMaxNotes) r.notes.push_back(std::move(s));
  };

  for (const cplx z0 : samples) {
    if (z0.imag() == 0.0) {
      ++r.n_skipped_real;
      continue;
    }
    auto d = cell_derivative(z0, params);
    for (int attempt = 1; !d && attempt <= 8; ++attempt) {
      const cplx shift = std::polar(kPerturbation * attempt, 0.37 + 1.13 * attempt);
      cplx z = z0 + shift;
      if (z.imag() == 0.0 || (z.imag() > 0) != (z0.imag() > 0)) z = z0 - shift;
      d = cell_derivative(z, params);
      if (d) {
        ++r.n_perturbed;
        note("perturbed off a cell edge: (" + std::to_string(z0.real()) + ", " + std::to_string(z0.imag()) + ")");
      }
    }
    if (!d) {
      ++r.n_unresolved;
      continue;
    }
    ++r.n_evaluated;

    const double re = d->f_z.real();
    const double anti = std::abs(d->f_zbar);
    const double reduced = k * re - anti;
    const double band = std::min({re - (1.0 - el), (1.0 + el) - re, el - anti});
    r.worst_reduced_margin = std::min(r.worst_reduced_margin, reduced);
    r.worst_band_margin = std::min(r.worst_band_margin, band);
    if (reduced < -tol) ++r.violations_reduced;
    if (band < -tol) ++r.violations_band;
    if (d->bad_hits > 1 || d->active_levels > 1) ++r.violations_unique;

    const double logy = std::log(std::numbers::e + 1.0 / std::abs(d->z.imag()));
    const double ratio = d->df_norm() / logy;
    r.fitted_log_constant = std::max(r.fitted_log_constant, ratio);
    if (d->df_norm() > r.log_constant_bound * logy * (1.0 + tol)) ++r.violations_log;
  }
  if (r.n_perturbed > 0) note(std::to_string(r.n_perturbed) + " sample(s) perturbed by 1e-9 off cell edges");
  if (r.n_skipped_real > 0) note(std::to_string(r.n_skipped_real) + " real sample(s) skipped");
  return r;
}

TiltResult tilt_planar(cplx a, cplx b, cplx fa, cplx fb) {
  if (a == b) throw DomainError("tilt needs distinct points");
  const double lambda = -((fb - fa) / (b - a)).imag();
  const cplx il{0.0, lambda};
  return {lambda, std::abs((fb + il * b) - (fa + il * a))};
}

}  // namespace qcvar::planar
