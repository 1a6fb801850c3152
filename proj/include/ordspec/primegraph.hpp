#pragma once

// Prime graphs: vertices are the primes dividing a group order, p and q
// adjacent iff the group has an element of order pq.  Graphs are built
// from a membership predicate so only the O(|pi|^2) pairwise products are
// ever tested; no spectrum enumeration is involved.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordspec/arith.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

struct PrimeGraph {
  std::vector<uint64_t> vertices;       // ascending primes
  std::vector<std::vector<bool>> adj;   // symmetric, irreflexive

  size_t index_of(uint64_t p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p)
      throw std::invalid_argument("prime graph: " + std::to_string(p) + " is not a vertex");
    return static_cast<size_t>(it - vertices.begin());
  }

  bool has_vertex(uint64_t p) const {
    return std::binary_search(vertices.begin(), vertices.end(), p);
  }

  bool adjacent(uint64_t p, uint64_t q) const { return adj[index_of(p)][index_of(q)]; }

  size_t edge_count() const {
    size_t e = 0;
    for (size_t i = 0; i < vertices.size(); ++i)
      for (size_t j = i + 1; j < vertices.size(); ++j)
        if (adj[i][j]) ++e;
    return e;
  }
};

template <class HasOrder>
PrimeGraph build_graph(const Factorization& order, HasOrder&& has_order) {
  PrimeGraph g;
  for (const auto& pp : order.factors) g.vertices.push_back(pp.prime);
  const size_t v = g.vertices.size();
  g.adj.assign(v, std::vector<bool>(v, false));
  for (size_t i = 0; i < v; ++i)
    for (size_t j = i + 1; j < v; ++j)
      if (has_order(g.vertices[i] * g.vertices[j])) g.adj[i][j] = g.adj[j][i] = true;
  return g;
}

// Prime graph of A_n (n >= 3).
inline PrimeGraph alt_prime_graph(uint32_t n) {
  return build_graph(alt_order(n), [n](uint64_t m) { return in_spectrum_alt(m, n); });
}

inline bool is_independent(const PrimeGraph& g, std::span<const uint64_t> s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_independent(const PrimeGraph& g, const std::vector<uint64_t>& s) {
  return is_independent(g, std::span<const uint64_t>(s));
}

inline bool is_complete(const PrimeGraph& g) {
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (!g.adj[i][j]) return false;
  return true;
}

// All inclusion-maximal independent sets, size-descending then
// lexicographic.  Independent sets are cliques of the complement, found by
// Bron-Kerbosch with pivoting over bitmasks.
inline std::vector<std::vector<uint64_t>> maximal_independent_sets(const PrimeGraph& g) {
  const size_t v = g.vertices.size();
  if (v > 32)
    throw ResourceError("maximal_independent_sets: more than 32 vertices (" +
                        std::to_string(v) + ")");
  if (v == 0) return {};
  const uint64_t all = (v == 64) ? ~0ull : ((1ull << v) - 1);
  std::vector<uint64_t> conbr(v, 0);  // complement-graph neighborhoods
  for (size_t i = 0; i < v; ++i)
    for (size_t j = 0; j < v; ++j)
      if (i != j && !g.adj[i][j]) conbr[i] |= 1ull << j;

  std::vector<uint64_t> found;
  auto expand = [&](auto&& self, uint64_t r, uint64_t p, uint64_t x) -> void {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    uint64_t px = p | x;
    int pivot = -1;
    int best = -1;
    for (uint64_t m = px; m;) {
      int u = __builtin_ctzll(m);
      m &= m - 1;
      int deg = __builtin_popcountll(p & conbr[u]);
      if (deg > best) best = deg, pivot = u;
    }
    uint64_t cand = p & ~conbr[pivot];
    while (cand) {
      int u = __builtin_ctzll(cand);
      uint64_t bit = 1ull << u;
      cand &= cand - 1;
      self(self, r | bit, p & conbr[u], x & conbr[u]);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(expand, 0, all, 0);

  std::vector<std::vector<uint64_t>> out;
  out.reserve(found.size());
  for (uint64_t mask : found) {
    std::vector<uint64_t> s;
    for (size_t i = 0; i < v; ++i)
      if (mask & (1ull << i)) s.push_back(g.vertices[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

}  // namespace ordspec
