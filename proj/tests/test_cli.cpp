#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::pair<int, std::string> run_cli(const std::string& args) {
  const char* bin = std::getenv("ORDSPEC_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("spectrum command", "[cli]") {
  auto [code, out] = run_cli("spectrum alt 7");
  CHECK(code == 0);
  CHECK(out == "1 2 3 4 5 6 7\n");

  auto [code2, out2] = run_cli("spectrum alt 2");
  CHECK(code2 == 0);
  CHECK(out2 == "1\n");

  auto [code3, out3] = run_cli("spectrum sym 5 --format json");
  CHECK(code3 == 0);
  CHECK(nlohmann::json::parse(out3) == nlohmann::json::parse("[1,2,3,4,5,6]"));

  auto [code4, out4] = run_cli("spectrum alt 100");
  CHECK(code4 == 2);  // exceeds the default enumeration cap
  CHECK(out4.find("cap") != std::string::npos);

  auto [code5, out5] = run_cli("spectrum alt 100 --cap 100");
  CHECK(code5 == 0);
}

TEST_CASE("m1 command", "[cli]") {
  auto [code, out] = run_cli("m1 alt 24");
  CHECK(code == 0);
  CHECK(out == "420 = 2^2 * 3 * 5 * 7\n");

  auto [code2, out2] = run_cli("m1 alt 1");
  CHECK(code2 == 0);
  CHECK(out2 == "1\n");

  auto [code3, out3] = run_cli("m1 sym 21");
  CHECK(code3 == 0);
  CHECK(out3 == "420 = 2^2 * 3 * 5 * 7\n");

  auto [code4, out4] = run_cli("m1 sym 905 --format json");
  CHECK(code4 == 0);
  auto j = nlohmann::json::parse(out4);
  CHECK(j["degree"] == 905);
  CHECK(j["m1"].is_string());
}

TEST_CASE("graph command", "[cli]") {
  auto [code, out] = run_cli("graph 8 --format dot");
  CHECK(code == 0);
  CHECK(out.find("3 -- 5") != std::string::npos);
  CHECK(out.find("5 -- 7") == std::string::npos);

  auto [code2, out2] = run_cli("graph 3");
  CHECK(code2 == 0);
  CHECK(out2.find("vertices: 3") != std::string::npos);

  auto [code3, out3] = run_cli("graph 2");
  CHECK(code3 == 2);

  auto [code4, out4] = run_cli("graph 5 --format json");
  CHECK(code4 == 0);
  auto j = nlohmann::json::parse(out4);
  CHECK(j["2"].empty());  // edgeless graph at degree 5
}

TEST_CASE("verify command exit codes", "[cli]") {
  CHECK(run_cli("verify table1").first == 0);
  CHECK(run_cli("verify theorem --n 8").first == 0);
  CHECK(run_cli("verify theorem").first == 0);
  CHECK(run_cli("verify lemma41 --n-max 60").first == 0);
  CHECK(run_cli("verify lemma41 --n-max 60 --jobs 3").first == 0);
  CHECK(run_cli("verify lemma41 --n-max 10").first == 2);
  CHECK(run_cli("verify theorem --n 21").first == 2);
  CHECK(run_cli("verify bogus").first == 2);
}

TEST_CASE("verify json report schema", "[cli]") {
  auto [code, out] = run_cli("verify table1 --format json");
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["target"] == "table1");
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() == 96);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("check_id"));
    CHECK(c.contains("statement"));
    CHECK(c.contains("passed"));
    CHECK(c.contains("evidence"));
  }
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run_cli("").first == 2);
  CHECK(run_cli("spectrum cow 5").first == 2);
  CHECK(run_cli("m1 alt 24 --format dot").first == 2);
  CHECK(run_cli("--definitely-not-a-flag").first == 2);
}

TEST_CASE("version reports the data checksum", "[cli]") {
  auto [code, out] = run_cli("--version");
  CHECK(code == 0);
  CHECK(out.find("ordspec 1.0.0") != std::string::npos);
  CHECK(out.find("checksum 0x") != std::string::npos);
}
