#include "qcvar/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "qcvar/errors.hpp"

namespace qcvar::io {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_real(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

void write_path_csv(std::ostream& out, const SampledPath& path, const std::vector<std::string>& names) {
  if (!names.empty() && names.size() != path.dim()) throw DomainError("column names do not match path dimension");
  out << 't';
  for (std::size_t k = 0; k < path.dim(); ++k) out << ',' << (names.empty() ? "x" + std::to_string(k + 1) : names[k]);
  out << '\n';
  for (std::size_t i = 0; i < path.size(); ++i) {
    out << format_real(path.param(i));
    for (double c : path.point(i)) out << ',' << format_real(c);
    out << '\n';
  }
}

SampledPath read_path_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) break;
  }
  const auto header = split_commas(trim(line));
  if (lineno == 0 || trim(line).empty()) throw ParseError(lineno, "missing CSV header");
  if (trim(header.front()) != "t" || header.size() < 2)
    throw ParseError(lineno, "CSV header must be t,x1,...,xd");
  columns = header.size();

  std::vector<double> params;
  std::vector<double> coords;
  while (std::getline(in, line)) {
    ++lineno;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto cells = split_commas(row);
    if (cells.size() != columns)
      throw ParseError(lineno, "expected " + std::to_string(columns) + " fields, found " + std::to_string(cells.size()));
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto cell = trim(cells[k]);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty())
        throw ParseError(lineno, "not a number: '" + std::string(cell) + "'");
      if (k == 0 && !(v >= 0.0 && v <= 1.0)) throw ParseError(lineno, "parameter t must lie in [0, 1]");
      (k == 0 ? params : coords).push_back(v);
    }
    if (params.size() >= 2 && !(params.back() > params[params.size() - 2]))
      throw ParseError(lineno, "parameter t must be strictly increasing");
  }
  if (params.empty()) throw ParseError(lineno, "CSV has no data rows");
  try {
    return SampledPath(std::move(params), std::move(coords), columns - 1);
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

nlohmann::json to_json(const variation::VariationReport& report) {
  return nlohmann::json{{"phi", report.phi.to_string()},
                        {"consecutive_sum", report.consecutive_sum},
                        {"dp_supremum", report.dp_supremum},
                        {"argmax_indices", report.argmax_indices},
                        {"supremum_scope", "sub-partitions of the supplied samples"}};
}

std::string render_svg(const std::vector<Polyline>& lines, const SvgOptions& opts) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& l : lines)
    for (auto [x, y] : l) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmax >= xmin)) xmin = xmax = ymin = ymax = 0.0;
  const double pad = 0.05;
  const double sx = (xmax > xmin) ? opts.width * (1 - 2 * pad) / (xmax - xmin) : 1.0;
  const double sy = (ymax > ymin) ? opts.height * (1 - 2 * pad) / (ymax - ymin) : 1.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_real(opts.width, 12) << "\" height=\""
      << format_real(opts.height, 12) << "\" viewBox=\"0 0 " << format_real(opts.width, 12) << ' '
      << format_real(opts.height, 12) << "\">\n";
  for (const auto& l : lines) {
    out << "  <polyline fill=\"none\" stroke=\"" << opts.stroke << "\" stroke-width=\""
        << format_real(opts.stroke_width, 12) << "\" points=\"";
    for (std::size_t i = 0; i < l.size(); ++i) {
      const double px = opts.width * pad + (l[i].first - xmin) * sx;
      const double py = opts.height * (1 - pad) - (l[i].second - ymin) * sy;
      out << (i ? " " : "") << format_real(px, 12) << ',' << format_real(py, 12);
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qcvar::io
