#include "qcvar/variation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <limits>
#include <string>

#include "qcvar/errors.hpp"

namespace qcvar::variation {

namespace {

std::int64_t ordered_key(double x) {
  const auto b = std::bit_cast<std::int64_t>(x);
  return b >= 0 ? b : std::numeric_limits<std::int64_t>::min() - b;
}

double from_key(std::int64_t k) {
  return std::bit_cast<double>(k >= 0 ? k : std::numeric_limits<std::int64_t>::min() - k);
}

// Smallest double p with fl(p + c) >= target, for finite c >= 0 and target.
double least_addend(double c, double target) {
  const auto ok = [&](double p) { return p + c >= target; };
  const double unit = std::max({std::abs(target), std::abs(c), std::numeric_limits<double>::min()}) *
                      std::numeric_limits<double>::epsilon();
  double hi = target - c;
  for (double w = unit; !ok(hi); w *= 2) hi += w;
  double lo = target - c;
  for (double w = unit; ok(lo); w *= 2) lo -= w;
  std::int64_t klo = ordered_key(lo), khi = ordered_key(hi);
  while (khi - klo > 1) {
    const std::int64_t mid = klo + (khi - klo) / 2;
    (ok(from_key(mid)) ? khi : klo) = mid;
  }
  return from_key(khi);
}

void require_increments(const SampledPath& path) {
  if (path.size() < 2) throw DomainError("variation needs at least two samples");
}

}  // namespace

double phi_sum(const PhiSpec& phi, const SampledPath& path) {
  require_increments(path);
  double s = 0.0;
  for (std::size_t j = 1; j < path.size(); ++j) s += phi(path.distance(j - 1, j));
  return s;
}

double phi_sum_over(const PhiSpec& phi, const SampledPath& path, std::span<const std::size_t> indices) {
  if (indices.size() < 2) throw DomainError("sub-partition needs at least two indices");
  double s = 0.0;
  for (std::size_t k = 1; k < indices.size(); ++k) {
    if (indices[k] <= indices[k - 1] || indices[k] >= path.size())
      throw DomainError("sub-partition indices must increase within the path");
    s += phi(path.distance(indices[k - 1], indices[k]));
  }
  return s;
}

// best[j] is the largest left-to-right floating-point φ-sum over chains 0 = s_0 < ... < s_k = j.
// Floating-point addition is monotone, so the recurrence is exact for that quantity: it equals
// the maximum of the same sums enumerated by brute force, bit for bit.
VariationReport sup_variation(const PhiSpec& phi, const SampledPath& path) {
  require_increments(path);
  const std::size_t n = path.size();
  if (n > kMaxDpPoints)
    throw ResourceError("sub-partition DP limited to " + std::to_string(kMaxDpPoints) + " points");

  std::vector<double> best(n, -std::numeric_limits<double>::infinity());
  best[0] = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    double v = best[j];
    for (std::size_t i = 0; i < j; ++i) v = std::max(v, best[i] + phi(path.distance(i, j)));
    best[j] = v;
  }

  // theta[i]: least prefix value P such that some chain from i, summed left to right from P,
  // still lands exactly on best[N]. Prefix sums never exceed best[i], and rounded addition
  // is monotone, so the feasible prefixes at i form the interval [theta[i], best[i]].
  const double target = best[n - 1];
  std::vector<double> theta(n, std::numeric_limits<double>::infinity());
  theta[n - 1] = target;
  for (std::size_t i = n - 1; i-- > 0;) {
    double t = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < n; ++j)
      if (theta[j] <= best[j]) {
        const double c = phi(path.distance(i, j));
        if (best[i] + c >= theta[j]) t = std::min(t, least_addend(c, theta[j]));
      }
    if (t <= best[i]) theta[i] = t;
  }

  // Greedy smallest feasible next index gives the lexicographically smallest maximizer.
  std::vector<std::size_t> chain{0};
  double prefix = 0.0;
  for (std::size_t cur = 0; cur != n - 1;) {
    std::size_t next = cur + 1;
    double step = prefix + phi(path.distance(cur, next));
    while (!(theta[next] <= best[next] && step >= theta[next])) {
      ++next;
      step = prefix + phi(path.distance(cur, next));
    }
    chain.push_back(next);
    prefix = step;
    cur = next;
  }

  return VariationReport{phi, phi_sum(phi, path), best[n - 1], std::move(chain)};
}

double oscillation(const SampledPath& path) {
  if (path.size() == 0) throw DomainError("oscillation of an empty path");
  double osc = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j) osc = std::max(osc, path.distance(i, j));
  return osc;
}

double jensen_floor(const PhiSpec& phi, double total, std::size_t increments) {
  if (increments == 0) throw DomainError("jensen floor needs at least one increment");
  if (!(total >= 0.0)) throw DomainError("jensen floor needs a nonnegative total");
  const double n = static_cast<double>(increments);
  return n * phi(total / n);
}

double extremal_series_sum(double c, double q, std::size_t n) {
  if (!(c > 0.0)) throw DomainError("extremal series needs C > 0");
  if (n < 1) throw DomainError("extremal series needs N >= 1");
  const PhiSpec phi = PhiSpec::log_damped(q);
  double s = 0.0;
  for (std::size_t j = 1; j <= n; ++j) s += phi(c * std::log1p(1.0 / static_cast<double>(j)));
  return s;
}

double delta_modulus(std::span<const double> a, std::span<const double> b,
                     std::span<const double> fa, std::span<const double> fb) {
  const std::size_t d = a.size();
  if (d == 0 || b.size() != d || fa.size() != d || fb.size() != d)
    throw DomainError("delta_modulus: dimension mismatch");
  double dot = 0.0;
  double norm2 = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double v = a[k] - b[k];
    dot += (fa[k] - fb[k]) * v;
    norm2 += v * v;
  }
  if (norm2 == 0.0) return 0.0;
  return dot / std::sqrt(norm2);
}

}  // namespace qcvar::variation
