#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcvar/sampled_path.hpp"
#include "qcvar/variation.hpp"

namespace qcvar::io {

/// %.{significant}g; 17 digits round-trips every double.
std::string format_real(double v, int significant = 17);

/// Header `t,<names...>` (default x1..xd), then one row per sample at 17 digits.
void write_path_csv(std::ostream& out, const SampledPath& path, const std::vector<std::string>& names = {});

/// Reads the format above. Throws ParseError carrying the 1-based line number.
SampledPath read_path_csv(std::istream& in);

/// {phi, consecutive_sum, dp_supremum, argmax_indices, supremum_scope}
nlohmann::json to_json(const variation::VariationReport& report);

struct SvgOptions {
  double width = 800.0;
  double height = 400.0;
  std::string stroke = "black";
  double stroke_width = 1.0;
};

using Polyline = std::vector<std::pair<double, double>>;

/// One <polyline> per input line, scaled into the canvas with y pointing up.
/// Coordinates carry 12 significant digits.
std::string render_svg(const std::vector<Polyline>& lines, const SvgOptions& opts);

}  // namespace qcvar::io
