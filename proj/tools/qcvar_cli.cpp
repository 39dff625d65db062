// qcvar: curves, variation reports, counterexample tables, verification suites and
// the parallel-lines construction.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcvar/dyadic.hpp"
#include "qcvar/errors.hpp"
#include "qcvar/io.hpp"
#include "qcvar/lacunary.hpp"
#include "qcvar/parallel_lines.hpp"
#include "qcvar/phi.hpp"
#include "qcvar/variation.hpp"
#include "qcvar/verify.hpp"

namespace {

using qcvar::planar::cplx;
using nlohmann::json;

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kResource = 3 };

double parse_real(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw qcvar::DomainError("not a number: '" + std::string(s) + "'");
  return v;
}

// "x" or "x,y"
cplx parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_real(s), 0.0};
  return {parse_real(std::string_view(s).substr(0, comma)), parse_real(std::string_view(s).substr(comma + 1))};
}

std::vector<double> parse_list(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      if (tok.front() == '#') break;
      try {
        out.push_back(parse_real(tok));
      } catch (const qcvar::DomainError& e) {
        throw qcvar::ParseError(lineno, e.what());
      }
    }
  }
  return out;
}

// Writes to --out, "-" meaning standard output.
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<qcvar::io::Polyline> polylines(const qcvar::SampledPath& path) {
  qcvar::io::Polyline line;
  line.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) line.emplace_back(path.point(i)[0], path.point(i)[1]);
  return {line};
}

struct Common {
  std::string out = "-";
  std::string format;
  double eps = 0.25;
  std::uint64_t seed = 1;
  double tol = 1e-12;
  double width = 800, height = 400, stroke_width = 1.0;
  std::string stroke = "black";

  qcvar::io::SvgOptions svg() const { return {width, height, stroke, stroke_width}; }
};

int cmd_curve(const Common& c, const std::string& a, const std::string& b, int depth, const std::string& kind) {
  const auto params = qcvar::planar::LacunaryParams::make(c.eps, c.tol);
  const cplx za = parse_point(a), zb = parse_point(b);
  qcvar::SampledPath path = [&] {
    if (kind == "f") return qcvar::planar::f_trace(za, zb, depth, params);
    if (za.imag() != 0.0 || zb.imag() != 0.0) throw qcvar::DomainError("--kind h needs real endpoints");
    return qcvar::planar::h_graph(za.real(), zb.real(), depth);
  }();
  const std::string format = c.format.empty() ? "csv" : c.format;
  if (format == "csv") {
    std::ostringstream os;
    qcvar::io::write_path_csv(os, path, {"x", "y"});
    emit(c.out, os.str());
  } else if (format == "svg") {
    emit(c.out, qcvar::io::render_svg(polylines(path), c.svg()));
  } else {
    throw qcvar::DomainError("curve supports --format csv|svg");
  }
  return kOk;
}

int cmd_variation(const Common& c, const std::string& input, const std::string& phi_text) {
  const auto phi = qcvar::variation::PhiSpec::parse(phi_text);
  if (!c.format.empty() && c.format != "json") throw qcvar::DomainError("variation supports --format json");
  qcvar::SampledPath path = [&] {
    if (input == "-") return qcvar::io::read_path_csv(std::cin);
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open " + input);
    return qcvar::io::read_path_csv(in);
  }();
  emit(c.out, dump(qcvar::io::to_json(qcvar::variation::sup_variation(phi, path))));
  return kOk;
}

int cmd_counterexample(const Common& c, int n_max) {
  if (!c.format.empty() && c.format != "json") throw qcvar::DomainError("counterexample supports --format json");
  if (n_max < 1) throw qcvar::DomainError("--nmax must be at least 1");
  const auto params = qcvar::planar::LacunaryParams::make(c.eps, c.tol);
  const auto parts = qcvar::planar::vn_table(n_max, qcvar::planar::VnMethod::PartitionSum);
  const auto integ = qcvar::planar::vn_table(n_max, qcvar::planar::VnMethod::DerivativeIntegral);
  const auto low = qcvar::variation::PhiSpec::log_damped(0.25);
  const auto high = qcvar::variation::PhiSpec::log_damped(1.5);
  json rows = json::array();
  bool all_agree = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const double v = parts[i].value;
    const bool agree = v == integ[i].value;
    all_agree = all_agree && agree;
    const auto intervals = std::size_t{1} << (2 * parts[i].depth);
    rows.push_back({{"N", parts[i].depth},
                    {"V_N", v},
                    {"V_N_over_sqrt_N", v / std::sqrt(static_cast<double>(parts[i].depth))},
                    {"partition_sum", v},
                    {"derivative_integral", integ[i].value},
                    {"methods_agree", agree},
                    {"image_variation", params.eps * v},
                    {"jensen_floor_q0.25", qcvar::variation::jensen_floor(low, v, intervals)},
                    {"jensen_floor_q1.5", qcvar::variation::jensen_floor(high, v, intervals)}});
  }
  emit(c.out, dump({{"eps", params.eps}, {"methods_agree", all_agree}, {"rows", rows}}));
  return all_agree ? kOk : kCheckFailed;
}

int cmd_verify(const Common& c, std::vector<std::string> suites, std::size_t n) {
  if (!c.format.empty() && c.format != "json") throw qcvar::DomainError("verify supports --format json");
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites.clear();
    for (auto s : qcvar::verify::suite_names()) suites.emplace_back(s);
  }
  qcvar::verify::SuiteOptions opts;
  opts.seed = c.seed;
  opts.eps = c.eps;
  opts.tol = c.tol;
  if (n > 0) opts.n_samples = n;
  json reports = json::array();
  bool pass = true;
  for (const auto& s : suites) {
    const auto r = qcvar::verify::run_suite(s, opts);
    pass = pass && r.pass;
    reports.push_back(qcvar::verify::to_json(r));
  }
  emit(c.out, dump(reports.size() == 1 ? reports[0] : reports));
  return pass ? kOk : kCheckFailed;
}

int cmd_construct(const Common& c, const std::string& heights_file, const std::string& heights_inline,
                  std::size_t m_trunc, std::size_t pairs, int depth, double half_width) {
  std::vector<double> heights;
  if (!heights_inline.empty()) {
    std::istringstream in(heights_inline);
    heights = parse_list(in);
  } else if (heights_file == "-") {
    heights = parse_list(std::cin);
  } else {
    std::ifstream in(heights_file);
    if (!in) throw std::runtime_error("cannot open " + heights_file);
    heights = parse_list(in);
  }
  if (heights.empty()) throw qcvar::DomainError("no heights given");
  if (m_trunc == 0) m_trunc = heights.size();
  const auto params = qcvar::planar::LacunaryParams::make(c.eps, c.tol);
  const auto map = qcvar::planar::build_parallel_map(heights, m_trunc, params);
  const auto& sc = map.construction();

  if (c.format == "svg") {
    std::vector<qcvar::io::Polyline> lines;
    const std::size_t intervals = std::size_t{1} << (2 * depth);
    for (double b : sc.heights) {
      qcvar::io::Polyline line;
      for (std::size_t j = 0; j <= intervals; ++j) {
        const double x = -half_width + 2 * half_width * std::ldexp(static_cast<double>(j), -2 * depth);
        const cplx w = map(cplx(x, b));
        line.emplace_back(w.real(), w.imag());
      }
      lines.push_back(std::move(line));
    }
    emit(c.out, qcvar::io::render_svg(lines, c.svg()));
    return kOk;
  }
  if (!c.format.empty() && c.format != "json") throw qcvar::DomainError("construct supports --format json|svg");

  bool pass = true;
  json terms = json::array();
  for (std::size_t i = 0; i < sc.heights.size(); ++i) {
    const double hm = sc.height_margin(i), gm = sc.gap_margin(i);
    pass = pass && hm > 0 && gm > 0;
    const auto rc = map.check_remainder(i, pairs, c.seed + i, half_width);
    pass = pass && rc.pass;
    json samples = json::array();
    for (int k = -4; k <= 4; ++k) {
      const cplx w = map(cplx(0.25 * half_width * k, sc.heights[i]));
      samples.push_back({0.25 * half_width * k, w.real(), w.imag()});
    }
    terms.push_back({{"m", i + 1},
                     {"height", sc.heights[i]},
                     {"min_gap", std::isinf(sc.min_gaps[i]) ? json(nullptr) : json(sc.min_gaps[i])},
                     {"coefficient", sc.coefficients[i]},
                     {"height_margin", hm},
                     {"gap_margin", gm},
                     {"remainder_pairs", rc.pairs},
                     {"remainder_lipschitz", rc.empirical_lipschitz},
                     {"remainder_bound", rc.bound},
                     {"remainder_pass", rc.pass},
                     {"samples_x_re_im", samples}});
  }
  emit(c.out, dump({{"eps", params.eps},
                    {"m_trunc", sc.m_trunc},
                    {"log_derivative_constant", qcvar::planar::log_derivative_constant(params)},
                    {"all_strict", pass},
                    {"terms", terms}}));
  return pass ? kOk : kCheckFailed;
}

void error_record(const std::string& kind, const std::string& message, std::size_t line = 0) {
  json j{{"error", kind}, {"message", message}};
  if (line > 0) j["line"] = line;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcvar: generalized variation of quasiconformal maps on lines"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output path, - for stdout")->capture_default_str();
    sub->add_option("--format", c.format, "csv|json|svg");
    sub->add_option("--eps", c.eps, "Lacunary parameter, 0 < eps < 1/(2L)")->capture_default_str();
    sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    sub->add_option("--tol", c.tol, "Tolerance")->capture_default_str();
  };
  auto add_svg = [&c](CLI::App* sub) {
    sub->add_option("--width", c.width)->capture_default_str();
    sub->add_option("--height", c.height)->capture_default_str();
    sub->add_option("--stroke", c.stroke)->capture_default_str();
    sub->add_option("--stroke-width", c.stroke_width)->capture_default_str();
  };

  std::string a = "0", b = "8", kind = "f";
  int depth = 3;
  auto* curve = app.add_subcommand("curve", "Sample f (or the graph of h) at 4^N + 1 dyadic points");
  add_common(curve);
  add_svg(curve);
  curve->add_option("--a", a, "Segment start, x or x,y")->capture_default_str();
  curve->add_option("--b", b, "Segment end, x or x,y")->capture_default_str();
  curve->add_option("--depth", depth, "Dyadic depth N")->capture_default_str();
  curve->add_option("--kind", kind, "f or h")->check(CLI::IsMember({"f", "h"}))->capture_default_str();

  std::string input = "-", phi = "pow:1";
  auto* variation = app.add_subcommand("variation", "phi-variation report of a CSV path");
  add_common(variation);
  variation->add_option("--in,input", input, "CSV path with header t,x1,...,xd; - for stdin")->capture_default_str();
  variation->add_option("--phi", phi, "pow:p or log:q")->capture_default_str();

  int n_max = 8;
  auto* counter = app.add_subcommand("counterexample", "V_N table with both methods and Jensen floors");
  add_common(counter);
  counter->add_option("--nmax,--depth", n_max, "Largest N")->capture_default_str();

  std::vector<std::string> suites;
  std::size_t n_samples = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  verify->add_option("suite", suites, "Suite names or all");
  verify->add_option("--n", n_samples, "Samples (suite default when 0)");

  std::string heights_file = "-", heights_inline;
  std::size_t m_trunc = 0, pairs = 1000;
  double half_width = 10.0;
  int construct_depth = 3;
  auto* construct = app.add_subcommand("construct", "Coefficients of F = sum c_m f(z - i b_m)");
  add_common(construct);
  add_svg(construct);
  construct->add_option("--heights", heights_file, "File of line heights; - for stdin")->capture_default_str();
  construct->add_option("--b", heights_inline, "Inline heights, comma separated");
  construct->add_option("--mtrunc", m_trunc, "Truncation level (default: all heights)");
  construct->add_option("--pairs", pairs, "Random pairs per remainder check")->capture_default_str();
  construct->add_option("--half-width", half_width, "Sampled window on each line")->capture_default_str();
  construct->add_option("--depth", construct_depth, "SVG sampling depth")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*curve) return cmd_curve(c, a, b, depth, kind);
    if (*variation) return cmd_variation(c, input, phi);
    if (*counter) return cmd_counterexample(c, n_max);
    if (*verify) return cmd_verify(c, suites, n_samples);
    if (*construct) return cmd_construct(c, heights_file, heights_inline, m_trunc, pairs, construct_depth, half_width);
  } catch (const qcvar::ParseError& e) {
    error_record("parse", e.what(), e.line());
    return kBadInput;
  } catch (const qcvar::ResourceError& e) {
    error_record("resource", e.what());
    return kResource;
  } catch (const qcvar::DomainError& e) {
    error_record("domain", e.what());
    return kBadInput;
  } catch (const std::exception& e) {
    error_record("io", e.what());
    return kBadInput;
  }
  return kOk;
}
