#include "tmdim/meshgen.hpp"
#include "tmdim/report.hpp"
#include "tmdim/svg.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <regex>
#include <sstream>

using namespace tmdim;

namespace {

std::vector<AnalysisResult> sample_results() {
  std::vector<AnalysisResult> out;
  const SplineSpaceSpec s(3, 3, 2, 2);
  out.push_back({s, dim_general(pinwheel_counterexample(), s, {true, 3, 7})});
  out.push_back({s, dim_general(four_ledge_example(), s)});
  out.push_back({s, dim_general(vanished_ledge_example(), s)});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SplineSpaceSpec t(2, 2, 1, 1);
    out.push_back({t, dim_general(random_tmesh(10, seed), t, {seed % 2 == 0, static_cast<int>(seed % 3), seed})});
  }
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

std::vector<long long> numbers(const std::string& text) {
  std::vector<long long> out;
  // skip digits that belong to identifiers such as "d1"
  static const std::regex num("(^|[^A-Za-z_0-9])(-?[0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it)
    out.push_back(std::stoll((*it)[2].str()));
  return out;
}

}  // namespace

TEST_CASE("JSON report parses back losslessly") {
  for (const auto& a : sample_results()) {
    const std::string text = report_json(a).dump(2);
    CHECK(parse_report_json(text) == a);
  }
}

TEST_CASE("text report parses back losslessly") {
  for (const auto& a : sample_results()) {
    const std::string text = report_text(a);
    CHECK(parse_report_text(text) == a);
  }
}

TEST_CASE("JSON and text reports carry the same numbers") {
  for (const auto& a : sample_results()) {
    CHECK(parse_report_json(report_json(a).dump()) == parse_report_text(report_text(a)));
    auto j = numbers(report_json(a).dump());
    auto t = numbers(report_text(a));
    std::sort(j.begin(), j.end());
    std::sort(t.begin(), t.end());
    CHECK(j == t);
  }
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(parse_report_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_report_json("nope"), ParseError);
  CHECK_THROWS_AS(parse_report_text("spec (3,3,2,2)\n"), ParseError);
  auto text = report_text(sample_results()[0]);
  CHECK_THROWS_AS(parse_report_text(std::regex_replace(text, std::regex("rank +15"), "rank 15x")), ParseError);
}

TEST_CASE("text report is aligned") {
  auto text = report_text(sample_results()[0]);
  CHECK(text.find("dimension          49\n") != std::string::npos);
  CHECK(text.find("stability          unstable\n") != std::string::npos);
  CHECK(text.find("generic_rank       16\n") != std::string::npos);
}

TEST_CASE("SVG of a single face") {
  TMesh one(integer_knots(0, 1), integer_knots(0, 1), {{0, 1, 0, 1}});
  auto svg = render_svg(one);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<rect x=") == 1);
  CHECK(count(svg, "<line") == 0);
}

TEST_CASE("SVG of the pinwheel highlights four interior l-edges") {
  auto svg = render_svg(pinwheel_counterexample());
  CHECK(count(svg, "class=\"interior\"") == 4);
  CHECK(count(svg, "class=\"cross-cut\"") == 4);
  // two inner mono-vertices per l-edge plus the end of each on a frame cross-cut
  CHECK(count(svg, "class=\"mono\"") == 12);
  CHECK(count(svg, "class=\"free\"") == 16);
  CHECK(svg == render_svg(pinwheel_counterexample()));
  CHECK(svg == render_svg(parse_tmesh(serialize_tmesh(pinwheel_counterexample()))));
}

TEST_CASE("SVG of the pinwheel matches the stored drawing") {
  std::ifstream in(std::string(TMDIM_TEST_DATA) + "/pinwheel.svg");
  REQUIRE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(render_svg(pinwheel_counterexample()) == golden.str());
}
