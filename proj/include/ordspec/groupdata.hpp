#pragma once

// Embedded reference data: the degree table driving the recognition
// pipeline, plus fixed constants (order, spectrum, outer automorphism
// group order) for the three non-alternating candidates L3(4), J2, M22.
// The data lives in data/groups.dat, embedded at configure time; the
// parser accepts any text in the same format so tests can exercise
// mutated copies.

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordspec/arith.hpp"
#include "ordspec/embedded_data.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table1Row {
  uint32_t n = 0;
  Factorization order;                  // |A_n|
  uint64_t m1 = 0;                      // largest element order of A_n
  std::vector<uint64_t> rho;            // independent prime set, ascending
  std::vector<std::string> candidates;  // simple groups S, as listed
  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

struct NamedGroup {
  std::string name;
  Factorization order;
  OrderSet spectrum;
  uint32_t out_order = 1;  // |Out(S)|
  friend bool operator==(const NamedGroup&, const NamedGroup&) = default;
};

struct ReferenceData {
  std::vector<Table1Row> rows;     // file order (ascending n in the shipped data)
  std::vector<NamedGroup> groups;  // exceptional candidates, file order

  const Table1Row* find_row(uint32_t n) const {
    for (const auto& r : rows)
      if (r.n == n) return &r;
    return nullptr;
  }
  const NamedGroup* find_group(std::string_view name) const {
    for (const auto& g : groups)
      if (g.name == name) return &g;
    return nullptr;
  }
};

namespace detail {

inline uint64_t parse_u64(std::string_view s, std::string_view what) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("reference data: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    if (end > start) parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

// "2^6,3^2,5,7" -> validated factorization
inline Factorization parse_factorization(std::string_view s) {
  std::vector<PrimePower> fs;
  for (auto term : split(s, ',')) {
    size_t caret = term.find('^');
    uint64_t p;
    uint64_t e = 1;
    if (caret == std::string_view::npos) {
      p = parse_u64(term, "prime");
    } else {
      p = parse_u64(term.substr(0, caret), "prime");
      e = parse_u64(term.substr(caret + 1), "exponent");
    }
    if (e == 0 || e > UINT32_MAX) throw ParseError("reference data: bad exponent in factorization");
    fs.push_back({p, static_cast<uint32_t>(e)});
  }
  try {
    return Factorization::checked(std::move(fs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("reference data: ") + e.what());
  }
}

}  // namespace detail

inline ReferenceData parse_reference_data(std::string_view text) {
  ReferenceData data;
  size_t lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;

    auto field = [&](std::string_view key) -> std::string_view {
      for (size_t t = 1; t < tokens.size(); ++t) {
        if (tokens[t].size() > key.size() && tokens[t].substr(0, key.size()) == key &&
            tokens[t][key.size()] == '=')
          return tokens[t].substr(key.size() + 1);
      }
      throw ParseError("reference data line " + std::to_string(lineno) + ": missing field '" +
                       std::string(key) + "'");
    };

    if (tokens[0] == "row") {
      Table1Row row;
      row.n = static_cast<uint32_t>(detail::parse_u64(field("n"), "degree"));
      row.order = detail::parse_factorization(field("order"));
      row.m1 = detail::parse_u64(field("m1"), "m1");
      for (auto t : detail::split(field("rho"), ','))
        row.rho.push_back(detail::parse_u64(t, "rho prime"));
      for (auto t : detail::split(field("candidates"), ','))
        row.candidates.emplace_back(t);
      if (row.candidates.empty())
        throw ParseError("reference data line " + std::to_string(lineno) + ": empty candidates");
      data.rows.push_back(std::move(row));
    } else if (tokens[0] == "group") {
      NamedGroup g;
      g.name = std::string(field("name"));
      g.order = detail::parse_factorization(field("order"));
      for (auto t : detail::split(field("spectrum"), ','))
        g.spectrum.orders.push_back(detail::parse_u64(t, "spectrum member"));
      std::sort(g.spectrum.orders.begin(), g.spectrum.orders.end());
      uint64_t out = detail::parse_u64(field("out"), "out order");
      if (out == 0 || out > UINT32_MAX)
        throw ParseError("reference data line " + std::to_string(lineno) + ": bad out order");
      g.out_order = static_cast<uint32_t>(out);
      data.groups.push_back(std::move(g));
    } else {
      throw ParseError("reference data line " + std::to_string(lineno) + ": unknown record '" +
                       std::string(tokens[0]) + "'");
    }
  }
  return data;
}

inline std::string_view embedded_reference_text() { return detail::kEmbeddedReferenceData; }

inline const ReferenceData& reference_data() {
  static const ReferenceData data = parse_reference_data(embedded_reference_text());
  return data;
}

// The sixteen classification rows (degrees 7..20, 23, 24).
inline const std::vector<Table1Row>& table1() { return reference_data().rows; }

// Canonical re-serialization; comments and spacing of the source file do
// not contribute, parsed values and their order do.
inline std::string canonical_serialization(const ReferenceData& data) {
  std::ostringstream os;
  auto fact = [&](const Factorization& f) {
    bool first = true;
    for (const auto& pp : f.factors) {
      if (!first) os << ',';
      first = false;
      os << pp.prime;
      if (pp.exponent > 1) os << '^' << pp.exponent;
    }
  };
  for (const auto& r : data.rows) {
    os << "row n=" << r.n << " order=";
    fact(r.order);
    os << " m1=" << r.m1 << " rho=";
    for (size_t i = 0; i < r.rho.size(); ++i) os << (i ? "," : "") << r.rho[i];
    os << " candidates=";
    for (size_t i = 0; i < r.candidates.size(); ++i) os << (i ? "," : "") << r.candidates[i];
    os << '\n';
  }
  for (const auto& g : data.groups) {
    os << "group name=" << g.name << " order=";
    fact(g.order);
    os << " spectrum=";
    for (size_t i = 0; i < g.spectrum.orders.size(); ++i)
      os << (i ? "," : "") << g.spectrum.orders[i];
    os << " out=" << g.out_order << '\n';
  }
  return os.str();
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t data_checksum(const ReferenceData& data) {
  return fnv1a64(canonical_serialization(data));
}

// Frozen checksum of the canonical form of the shipped data; verification
// reports are traceable to exactly this data set.
inline constexpr uint64_t kReferenceChecksum = 0xce60f386d9a89bb0ull;

// True iff name is "A<k>"; k returned.
inline bool alternating_degree(std::string_view name, uint32_t& k) {
  if (name.size() < 2 || name[0] != 'A') return false;
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
  if (ec != std::errc() || p != name.data() + name.size()) return false;
  k = static_cast<uint32_t>(v);
  return true;
}

// Resolve a candidate name: alternating groups are computed live, the
// exceptional candidates come from the data file.
inline NamedGroup named_group(std::string_view name,
                              const ReferenceData& data = reference_data()) {
  uint32_t k = 0;
  if (alternating_degree(name, k)) {
    if (k < 5 || k > 24)
      throw std::invalid_argument("named_group: alternating degree out of range: " +
                                  std::string(name));
    NamedGroup g;
    g.name = std::string(name);
    g.order = alt_order(k);
    g.spectrum = spectrum(alt(k));
    g.out_order = (k == 6) ? 4 : 2;
    return g;
  }
  if (const NamedGroup* g = data.find_group(name)) return *g;
  throw std::invalid_argument("named_group: unknown group '" + std::string(name) + "'");
}

}  // namespace ordspec
