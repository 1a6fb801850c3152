// Command-line surface: spectra, largest element orders, prime graphs, and
// the verification pipeline.  Exit status: 0 success / all checks passed,
// 1 verification failure, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ordspec/groupdata.hpp"
#include "ordspec/render.hpp"
#include "ordspec/verifier.hpp"
#include "ordspec/version.hpp"

namespace {

using namespace ordspec;

std::string version_string() {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64, data_checksum(reference_data()));
  return std::string("ordspec ") + kVersion + " (reference data checksum " + buf + ")";
}

Family parse_family(const std::string& s) {
  if (s == "alt" || s == "alternating") return Family::Alternating;
  if (s == "sym" || s == "symmetric") return Family::Symmetric;
  throw CLI::ValidationError("family must be 'alt' or 'sym'");
}

int run_spectrum(const std::string& family, uint32_t n, const std::string& format,
                 uint32_t cap) {
  OrderSet s = spectrum({parse_family(family), n}, cap);
  if (format == "json") {
    std::cout << dump_json(spectrum_to_json(s));
  } else {
    for (size_t i = 0; i < s.orders.size(); ++i)
      std::cout << (i ? " " : "") << s.orders[i];
    std::cout << "\n";
  }
  return 0;
}

int run_m1(const std::string& family, uint32_t n, const std::string& format) {
  GroupFamilyPoint pt{parse_family(family), n};
  Factorization m1 = max_order(pt);
  if (format == "json") {
    std::cout << dump_json(m1_to_json(pt, m1));
  } else {
    std::cout << to_decimal_string(m1);
    if (!m1.is_one()) std::cout << " = " << format_factorization(m1);
    std::cout << "\n";
  }
  return 0;
}

int run_graph(uint32_t n, const std::string& format) {
  if (n < 3) throw std::invalid_argument("graph: degree must be >= 3");
  PrimeGraph g = alt_prime_graph(n);
  std::string name = "A_" + std::to_string(n);
  if (format == "dot") {
    std::cout << graph_to_dot(g, name);
  } else if (format == "json") {
    std::cout << dump_json(graph_to_json(g));
  } else {
    std::cout << graph_to_text(g);
  }
  return 0;
}

int emit_checks(const std::vector<CheckResult>& checks, const std::string& format,
                const std::string& target) {
  if (format == "json") {
    Json j;
    j["target"] = target;
    j["passed"] = all_passed(checks);
    j["checks"] = checks_to_json(checks);
    std::cout << dump_json(j);
  } else {
    std::cout << render_checks_text(checks);
  }
  return all_passed(checks) ? 0 : 1;
}

int run_verify(const std::string& which, int case_n, uint32_t n_max, unsigned jobs,
               const std::string& format) {
  if (which == "table1") {
    return emit_checks(verify_table1(), format, "table1");
  }
  if (which == "lemma41") {
    return emit_checks(verify_lemma41(n_max, jobs), format, "lemma41");
  }
  if (which == "theorem") {
    std::vector<CaseReport> reports;
    if (case_n >= 0) {
      reports.push_back(replay_theorem(static_cast<uint32_t>(case_n)));
    } else {
      for (const auto& row : reference_data().rows) reports.push_back(replay_theorem(row.n));
    }
    bool pass = true;
    for (const auto& rep : reports) pass = pass && rep.verdict();
    if (format == "json") {
      Json j;
      j["target"] = "theorem";
      j["passed"] = pass;
      Json cases = Json::array();
      for (const auto& rep : reports) cases.push_back(case_report_to_json(rep));
      j["cases"] = std::move(cases);
      std::cout << dump_json(j);
    } else {
      for (const auto& rep : reports) std::cout << render_case_text(rep);
      std::cout << (pass ? "all cases pass" : "some cases fail") << "\n";
    }
    return pass ? 0 : 1;
  }
  if (which == "all") {
    std::vector<CheckResult> checks = verify_reference_data();
    auto t1 = verify_table1();
    checks.insert(checks.end(), t1.begin(), t1.end());
    auto l41 = verify_lemma41(n_max, jobs);
    checks.insert(checks.end(), l41.begin(), l41.end());
    for (const auto& row : reference_data().rows) {
      CaseReport rep = replay_theorem(row.n);
      checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
    }
    for (uint64_t n : {906ull, 10000ull, 1000000ull}) checks.push_back(check_analytic_bound(n));
    return emit_checks(checks, format, "all");
  }
  throw CLI::ValidationError("verify target must be one of table1, lemma41, theorem, all");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"element-order spectra, prime graphs, and recognition checks for A_n and S_n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string);

  std::string family, format = "text", which;
  uint32_t degree = 0;
  uint32_t cap = kDefaultSpectrumCap;
  uint32_t n_max = 905;
  unsigned jobs = 1;
  int case_n = -1;

  auto* sc_spectrum = app.add_subcommand("spectrum", "list the element orders of A_n or S_n");
  sc_spectrum->add_option("family", family, "alt or sym")->required();
  sc_spectrum->add_option("n", degree, "degree")->required();
  sc_spectrum->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sc_spectrum->add_option("--cap", cap, "enumeration cap on the degree (default 60)");

  auto* sc_m1 = app.add_subcommand("m1", "largest element order of A_n or S_n");
  sc_m1->add_option("family", family, "alt or sym")->required();
  sc_m1->add_option("n", degree, "degree")->required();
  sc_m1->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* sc_graph = app.add_subcommand("graph", "prime graph of A_n");
  sc_graph->add_option("n", degree, "degree (>= 3)")->required();
  sc_graph->add_option("--format", format, "text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* sc_verify = app.add_subcommand("verify", "run verification checks");
  sc_verify->add_option("which", which, "table1, lemma41, theorem, or all")->required();
  sc_verify->add_option("--n", case_n, "single theorem case to replay");
  sc_verify->add_option("--n-max", n_max, "upper degree for the range check (default 905)");
  sc_verify->add_option("--jobs", jobs, "worker threads for range checks (default 1)");
  sc_verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_spectrum->parsed()) return run_spectrum(family, degree, format, cap);
    if (sc_m1->parsed()) return run_m1(family, degree, format);
    if (sc_graph->parsed()) return run_graph(degree, format);
    if (sc_verify->parsed()) return run_verify(which, case_n, n_max, jobs, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
