#include "qcvar/sampled_path.hpp"

#include <cmath>
#include <utility>

#include "qcvar/errors.hpp"

namespace qcvar {

namespace {

std::vector<double> uniform_params(std::size_t n) {
  std::vector<double> t(n, 0.0);
  if (n == 1) return t;
  for (std::size_t j = 0; j < n; ++j) t[j] = static_cast<double>(j) / static_cast<double>(n - 1);
  t.back() = 1.0;
  return t;
}

}  // namespace

SampledPath::SampledPath(std::vector<double> params, std::vector<double> coords, std::size_t dim)
    : params_(std::move(params)), coords_(std::move(coords)), dim_(dim) {
  if (dim_ == 0) throw DomainError("path dimension must be positive");
  if (params_.empty()) throw DomainError("path has no samples");
  if (coords_.size() != params_.size() * dim_)
    throw DomainError("point count does not match parameter count");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (!(params_[i] >= 0.0 && params_[i] <= 1.0)) throw DomainError("path parameter outside [0,1]");
    if (i > 0 && !(params_[i] > params_[i - 1]))
      throw DomainError("path parameters must be strictly increasing");
  }
  for (double c : coords_)
    if (!std::isfinite(c)) throw DomainError("path coordinates must be finite");
}

SampledPath SampledPath::from_values(std::vector<double> values) {
  auto n = values.size();
  return SampledPath(uniform_params(n), std::move(values), 1);
}

SampledPath SampledPath::from_points(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw DomainError("path has no samples");
  const std::size_t d = points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * d);
  for (const auto& p : points) {
    if (p.size() != d) throw DomainError("inconsistent point dimension");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return SampledPath(uniform_params(points.size()), std::move(coords), d);
}

double SampledPath::distance(std::size_t i, std::size_t j) const {
  const double* a = coords_.data() + i * dim_;
  const double* b = coords_.data() + j * dim_;
  if (dim_ == 1) return std::abs(a[0] - b[0]);
  if (dim_ == 2) return std::hypot(a[0] - b[0], a[1] - b[1]);
  double s = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

SampledPath SampledPath::slice(std::size_t i0, std::size_t i1) const {
  if (i0 > i1 || i1 >= size()) throw DomainError("bad path slice");
  std::vector<double> t(params_.begin() + static_cast<std::ptrdiff_t>(i0),
                        params_.begin() + static_cast<std::ptrdiff_t>(i1 + 1));
  std::vector<double> c(coords_.begin() + static_cast<std::ptrdiff_t>(i0 * dim_),
                        coords_.begin() + static_cast<std::ptrdiff_t>((i1 + 1) * dim_));
  return SampledPath(std::move(t), std::move(c), dim_);
}

}  // namespace qcvar
