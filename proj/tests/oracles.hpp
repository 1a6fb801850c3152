#pragma once

// Brute-force reference computations for the test suite.  Everything here
// is deliberately independent of the library's production paths: spectra
// come from explicit cycle types (partitions), costs from a separate
// trial-division factorizer, maxima from exhaustive scans.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracles {

template <class Emit>
void partitions_rec(uint32_t n, uint32_t max_part, std::vector<uint32_t>& cur, Emit&& emit) {
  if (n == 0) {
    emit(cur);
    return;
  }
  for (uint32_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, emit);
    cur.pop_back();
  }
}

template <class Emit>
void for_each_partition(uint32_t n, Emit&& emit) {
  std::vector<uint32_t> cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, emit);
}

inline uint64_t lcm_of_parts(const std::vector<uint32_t>& parts) {
  uint64_t l = 1;
  for (uint32_t p : parts) l = std::lcm(l, static_cast<uint64_t>(p));
  return l;
}

// A cycle type is an even permutation iff the total number of
// transpositions, sum of (part - 1), is even.
inline bool even_cycle_type(const std::vector<uint32_t>& parts) {
  uint32_t t = 0;
  for (uint32_t p : parts) t += p - 1;
  return t % 2 == 0;
}

// Element orders of S_n (all cycle types) or A_n (even cycle types only).
inline std::set<uint64_t> cycle_type_spectrum(uint32_t n, bool alternating) {
  std::set<uint64_t> out;
  for_each_partition(n, [&](const std::vector<uint32_t>& parts) {
    if (!alternating || even_cycle_type(parts)) out.insert(lcm_of_parts(parts));
  });
  return out;
}

// Largest element order of S_n by exhausting cycle types.
inline uint64_t brute_landau(uint32_t n) {
  uint64_t best = 1;
  for_each_partition(n, [&](const std::vector<uint32_t>& parts) {
    best = std::max(best, lcm_of_parts(parts));
  });
  return best;
}

// Independent trial-division cost: sum of the prime-power components.
inline uint64_t trial_cost(uint64_t m) {
  uint64_t total = 0;
  for (uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    uint64_t pe = 1;
    while (m % d == 0) {
      m /= d;
      pe *= d;
    }
    total += pe;
  }
  if (m > 1) total += m;
  return total;
}

// The scan semantics: walk 1..Landau(n) and keep everything whose cost
// fits (n for odd orders, n - 2 for even); the maximum is m1(A_n).
inline uint64_t scan_max_alt(uint32_t n) {
  uint64_t bound = brute_landau(n);
  uint64_t best = 1;
  for (uint64_t m = 1; m <= bound; ++m) {
    uint64_t c = trial_cost(m);
    bool member = (m % 2 == 1) ? c <= n : (n >= 2 && c <= static_cast<uint64_t>(n) - 2);
    if (member) best = std::max(best, m);
  }
  return best;
}

}  // namespace oracles
