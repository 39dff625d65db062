#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qcvar {

/// Samples f(a_j), a_j = a + t_j (b − a), of a map restricted to a segment.
/// Parameters are strictly increasing in [0, 1]; points are stored row-major.
class SampledPath {
 public:
  SampledPath(std::vector<double> params, std::vector<double> coords, std::size_t dim);

  /// Scalar path with parameters j/N.
  static SampledPath from_values(std::vector<double> values);
  /// dim-dimensional points with parameters j/N.
  static SampledPath from_points(const std::vector<std::vector<double>>& points);

  std::size_t size() const noexcept { return params_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  /// Index of the last sample (N); the path has N increments.
  std::size_t last() const noexcept { return params_.size() - 1; }

  double param(std::size_t i) const { return params_[i]; }
  std::span<const double> params() const noexcept { return params_; }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  std::span<const double> coords() const noexcept { return coords_; }

  /// Euclidean distance |f(a_i) − f(a_j)|.
  double distance(std::size_t i, std::size_t j) const;

  /// Samples i0..i1 inclusive, parameters kept as-is.
  SampledPath slice(std::size_t i0, std::size_t i1) const;

  friend bool operator==(const SampledPath&, const SampledPath&) = default;

 private:
  std::vector<double> params_;
  std::vector<double> coords_;
  std::size_t dim_;
};

}  // namespace qcvar
