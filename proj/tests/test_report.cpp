#include <doctest.h>

#include "helpers.hpp"
#include "wdr/parse.hpp"
#include "wdr/report.hpp"

TEST_CASE("edge-list parsing") {
  CHECK(wdr::parse_input("n 3\n0 1\n1 2\n2 0") == testutil::triangle());
  CHECK(wdr::parse_input("# comment\n n 3 \n0 1 # chord\n1 2\n2 0\n\n") ==
        testutil::triangle());
  CHECK_THROWS_AS(wdr::parse_input("n 2\n0 1\n1 0"), wdr::input_error);
  CHECK_NOTHROW(wdr::parse_input("n 2\n0 1\n1 0", false));
  CHECK_THROWS_WITH_AS(wdr::parse_input("n 3\n0 1\nbogus\n"),
                       doctest::Contains("line 3"), wdr::input_error);
  CHECK_THROWS_WITH_AS(wdr::parse_input("0 1\n1 0"), doctest::Contains("header"),
                       wdr::input_error);
  CHECK_THROWS_AS(wdr::parse_input(""), wdr::input_error);
  CHECK_THROWS_AS(wdr::parse_input("n 3\n0 1 2\n"), wdr::input_error);
}

TEST_CASE("cayley spec parsing") {
  CHECK(wdr::parse_input("cay:zn:6:1,3,4") == wdr::cayley_cyclic(6, {1, 3, 4}));
  CHECK(wdr::parse_input("cay:prod:3x2:1.0,1.1") ==
        wdr::cayley_product(3, 2, {{1, 0}, {1, 1}}));
  CHECK_THROWS_AS(wdr::parse_input("cay:zn:6"), wdr::input_error);
  CHECK_THROWS_AS(wdr::parse_input("cay:zn:6:0,1"), wdr::input_error);
  CHECK_THROWS_AS(wdr::parse_input("cay:what:6:1"), wdr::input_error);
  CHECK_THROWS_AS(wdr::parse_input("cay:prod:3:1.0"), wdr::input_error);
  // undirected Cayley digraphs honor the same flag as edge lists
  CHECK_THROWS_AS(wdr::parse_input("cay:zn:5:1,4"), wdr::input_error);
  CHECK_NOTHROW(wdr::parse_input("cay:zn:5:1,4", false));
}

TEST_CASE("text rendering carries the headline flags") {
  const auto report = wdr::analyze(wdr::cayley_cyclic(3, {1}));
  const auto text = wdr::render_report(report, wdr::ReportFormat::text);
  CHECK(text.find("wdr: true") != std::string::npos);
  CHECK(text.find("regular: true") != std::string::npos);
  CHECK(text.find("diameter: 2") != std::string::npos);
  CHECK(text.find("commutative: true") != std::string::npos);
}

TEST_CASE("mixed witnesses render with per-arc types") {
  const auto report = wdr::analyze(wdr::cayley_cyclic(6, {1, 2, 3, 5}));
  const auto text = wdr::render_report(report, wdr::ReportFormat::text);
  CHECK(text.find("witness (0,2,1) types (1,2),(1,1),(1,1)") != std::string::npos);
}

TEST_CASE("structured analysis reports round-trip") {
  for (const auto& g :
       {wdr::cayley_cyclic(3, {1}), wdr::cayley_cyclic(8, {1, 2, 5, 6}),
        wdr::cayley_cyclic(6, {1, 2, 3, 5}), wdr::cayley_cyclic(9, {1, 4, 7}),
        testutil::chorded_five_cycle(),
        wdr::build_digraph(3, {{0, 1}, {1, 2}}, false)}) {
    const auto report = wdr::analyze(g);
    const auto text = wdr::render_report(report, wdr::ReportFormat::structured);
    CHECK(wdr::parse_analysis_report(text) == report);
  }
}

TEST_CASE("structured classification results round-trip") {
  const auto result = wdr::search_circulants(3, 6, 2);
  const auto text = wdr::render_report(result, wdr::ReportFormat::structured);
  CHECK(wdr::parse_classification_result(text) == result);
}

TEST_CASE("structured corpus aggregates round-trip") {
  const auto agg = wdr::corpus_verify(wdr::corpus_from_catalog());
  const auto text = wdr::render_report(agg, wdr::ReportFormat::structured);
  CHECK(wdr::parse_corpus_aggregate(text) == agg);
}

TEST_CASE("classification text ends with the survivor summary") {
  const auto result = wdr::search_circulants(3, 5, 2);
  const auto text = wdr::render_report(result, wdr::ReportFormat::text);
  const auto last = text.rfind("survivors: ");
  REQUIRE(last != std::string::npos);
  CHECK(text.substr(last) == "survivors: 2 / catalog matched: 2 / unmatched: 0\n");
}
