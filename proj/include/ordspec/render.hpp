#pragma once

// Deterministic text / JSON / DOT rendering.  All collections are emitted
// in sorted order and payloads carry no timestamps, so repeated runs are
// byte-identical.

#include <sstream>
#include <string>

#include <json.hpp>

#include "ordspec/arith.hpp"
#include "ordspec/primegraph.hpp"
#include "ordspec/spectrum.hpp"
#include "ordspec/verifier.hpp"

namespace ordspec {

using Json = nlohmann::ordered_json;

inline Json check_to_json(const CheckResult& c) {
  Json j;
  j["check_id"] = c.check_id;
  j["statement"] = c.statement;
  j["passed"] = c.passed;
  j["evidence"] = c.evidence;
  return j;
}

inline Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(check_to_json(c));
  return arr;
}

inline Json case_report_to_json(const CaseReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["verdict"] = rep.verdict() ? "pass" : "fail";
  j["checks"] = checks_to_json(rep.checks);
  return j;
}

inline std::string check_line(const CheckResult& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + "  " + c.check_id + "  " + c.statement;
}

inline std::string render_checks_text(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  size_t failed = 0;
  for (const auto& c : checks) {
    os << check_line(c) << '\n';
    if (!c.passed) ++failed;
  }
  os << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return os.str();
}

inline std::string render_case_text(const CaseReport& rep) {
  std::ostringstream os;
  os << "case n=" << rep.n << ": " << (rep.verdict() ? "pass" : "fail") << '\n';
  for (const auto& c : rep.checks) os << "  " << check_line(c) << '\n';
  return os.str();
}

inline Json spectrum_to_json(const OrderSet& s) {
  Json arr = Json::array();
  for (uint64_t m : s.orders) arr.push_back(m);
  return arr;
}

inline Json graph_to_json(const PrimeGraph& g) {
  Json adj = Json::object();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    Json nbrs = Json::array();
    for (size_t j = 0; j < g.vertices.size(); ++j)
      if (g.adj[i][j]) nbrs.push_back(g.vertices[j]);
    adj[std::to_string(g.vertices[i])] = std::move(nbrs);
  }
  return adj;
}

inline std::string graph_to_dot(const PrimeGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (uint64_t v : g.vertices) os << "  " << v << ";\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (g.adj[i][j]) os << "  " << g.vertices[i] << " -- " << g.vertices[j] << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string graph_to_text(const PrimeGraph& g) {
  std::ostringstream os;
  os << "vertices:";
  for (uint64_t v : g.vertices) os << ' ' << v;
  os << "\nedges:";
  bool any = false;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (g.adj[i][j]) {
        os << ' ' << g.vertices[i] << '-' << g.vertices[j];
        any = true;
      }
  if (!any) os << " (none)";
  os << '\n';
  return os.str();
}

inline Json m1_to_json(GroupFamilyPoint pt, const Factorization& m1) {
  Json j;
  j["family"] = pt.family == Family::Symmetric ? "symmetric" : "alternating";
  j["degree"] = pt.degree;
  j["m1"] = to_decimal_string(m1);  // a string: values exceed 64 bits
  Json factors = Json::array();
  for (const auto& pp : m1.factors) factors.push_back({pp.prime, pp.exponent});
  j["factorization"] = factors;
  return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ordspec
