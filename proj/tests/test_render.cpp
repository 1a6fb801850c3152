#include <catch2/catch_amalgamated.hpp>

#include "ordspec/render.hpp"

using namespace ordspec;

TEST_CASE("json payloads round-trip byte-identically", "[render]") {
  auto roundtrip = [](const Json& j) {
    std::string s1 = dump_json(j);
    std::string s2 = dump_json(Json::parse(s1));
    CHECK(s1 == s2);
  };
  roundtrip(spectrum_to_json(spectrum(alt(7))));
  roundtrip(graph_to_json(alt_prime_graph(8)));
  roundtrip(checks_to_json(verify_table1()));
  roundtrip(case_report_to_json(replay_theorem(8)));
  roundtrip(m1_to_json(alt(24), max_order(alt(24))));
}

TEST_CASE("rendering is deterministic across calls", "[render]") {
  CHECK(graph_to_dot(alt_prime_graph(13), "A_13") == graph_to_dot(alt_prime_graph(13), "A_13"));
  CHECK(dump_json(checks_to_json(verify_reference_data())) ==
        dump_json(checks_to_json(verify_reference_data())));
}

TEST_CASE("dot output lists vertices ascending and skips absent edges", "[render]") {
  std::string dot = graph_to_dot(alt_prime_graph(8), "A_8");
  CHECK(dot.find("graph \"A_8\"") != std::string::npos);
  CHECK(dot.find("  2;\n") != std::string::npos);
  CHECK(dot.find("  7;\n") != std::string::npos);
  CHECK(dot.find("2 -- 3") != std::string::npos);
  CHECK(dot.find("3 -- 5") != std::string::npos);
  CHECK(dot.find("5 -- 7") == std::string::npos);
}

TEST_CASE("graph json is an adjacency object", "[render]") {
  Json j = graph_to_json(alt_prime_graph(8));
  REQUIRE(j.contains("5"));
  CHECK(j["5"] == Json::array({3}));
  CHECK(j["7"] == Json::array());
  CHECK(j["2"] == Json::array({3}));
  CHECK(j["3"] == Json::array({2, 5}));
}

TEST_CASE("spectrum json is a plain integer array", "[render]") {
  Json j = spectrum_to_json(spectrum(sym(5)));
  CHECK(j == Json::array({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("m1 json carries the value as a decimal string", "[render]") {
  Json j = m1_to_json(alt(24), max_order(alt(24)));
  CHECK(j["m1"] == "420");
  CHECK(j["degree"] == 24);
  CHECK(j["family"] == "alternating");
}

TEST_CASE("check lines state pass or fail first", "[render]") {
  CheckResult c{"demo.id", "a statement", true, Evidence::object()};
  CHECK(check_line(c) == "PASS  demo.id  a statement");
  c.passed = false;
  CHECK(check_line(c) == "FAIL  demo.id  a statement");
}
