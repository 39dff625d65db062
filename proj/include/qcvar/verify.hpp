#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

namespace qcvar::verify {

/// Shared report schema {check, n_samples, worst_margin, pass}. A negative
/// worst_margin means some sample violated its inequality.
struct SuiteReport {
  std::string check;
  std::size_t n_samples = 0;
  double worst_margin = 0.0;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> n_samples;  // suite default when empty
  double eps = 0.25;
  double tol = 1e-12;
};

/// beltrami, scales, rademacher, variation-dp, cone, quaternion, reduced4d, parallel-lines
std::span<const std::string_view> suite_names();

/// Throws DomainError for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

nlohmann::json to_json(const SuiteReport& report);

}  // namespace qcvar::verify
