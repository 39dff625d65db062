#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "qcvar/errors.hpp"
#include "qcvar/io.hpp"

using qcvar::SampledPath;
namespace io = qcvar::io;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
  return n;
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    io::read_path_csv(in);
  } catch (const qcvar::ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("real formatting") {
  CHECK(io::format_real(0.1) == "0.10000000000000001");
  CHECK(io::format_real(4.0) == "4");
  CHECK(io::format_real(0.1, 12) == "0.1");
  for (double v : {1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.1 + 0.2})
    CHECK(std::stod(io::format_real(v)) == v);
}

TEST_CASE("csv round trip is lossless") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::vector<double> t{0.0, 1.0 / 3.0, 0.7, 1.0}, xy;
  for (int k = 0; k < 8; ++k) xy.push_back(u(rng) / 7.0);
  const SampledPath p(t, xy, 2);
  std::ostringstream out;
  io::write_path_csv(out, p);
  CHECK(out.str().rfind("t,x1,x2\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(io::read_path_csv(in) == p);

  std::ostringstream named;
  io::write_path_csv(named, p, {"x", "y"});
  CHECK(named.str().rfind("t,x,y\n", 0) == 0);
  CHECK_THROWS_AS(io::write_path_csv(named, p, {"x"}), qcvar::DomainError);
}

TEST_CASE("csv reader tolerates blank lines and CRLF") {
  std::istringstream in("t,x\r\n0,0\r\n\r\n0.5,1\r\n1,3\r\n");
  const auto p = io::read_path_csv(in);
  CHECK(p.size() == 3);
  CHECK(p.point(2)[0] == 3.0);
}

TEST_CASE("csv errors carry line numbers") {
  CHECK(parse_error_line("t,x\n0,0\n0.5\n1,3\n") == 3);
  CHECK(parse_error_line("t,x\n0,0\n0.5,abc\n") == 3);
  CHECK(parse_error_line("t,x\n0,0\n\n0,1\n") == 4);
  CHECK(parse_error_line("t,x\n0,0\n1.5,1\n") == 3);
  CHECK(parse_error_line("x,y\n0,0\n") == 1);
  CHECK(parse_error_line("t,x\n") == 1);
  CHECK(parse_error_line("") == 0);
  try {
    std::istringstream in("t,x\n0,0\n0.5\n");
    io::read_path_csv(in);
  } catch (const qcvar::ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
  }
}

TEST_CASE("variation report json") {
  const auto r = qcvar::variation::sup_variation(qcvar::variation::PhiSpec::power(2), SampledPath::from_values({0, 1, 3}));
  const auto j = io::to_json(r);
  CHECK(j["phi"] == "pow:2");
  CHECK(j["dp_supremum"] == 9.0);
  CHECK(j["consecutive_sum"] == 5.0);
  CHECK(j["argmax_indices"] == nlohmann::json::array({0, 2}));
  CHECK(j.contains("supremum_scope"));
}

TEST_CASE("svg") {
  const std::vector<io::Polyline> lines{{{0, 0}, {1, 2}, {2, 0}}};
  io::SvgOptions opts;
  opts.width = 200;
  opts.height = 100;
  opts.stroke = "red";
  const auto svg = io::render_svg(lines, opts);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<polyline") == 1);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("width=\"200\"") != std::string::npos);
  CHECK(svg.find("points=\"10,95 100,5 190,95\"") != std::string::npos);
  CHECK(count(io::render_svg({lines[0], lines[0]}, opts), "<polyline") == 2);
  CHECK(io::render_svg(lines, opts) == svg);
}

}
