#pragma once

// Element-order spectra of symmetric and alternating groups.
//
// An order m = p1^a1 * ... * ps^as occurs in S_n iff its cost
// p1^a1 + ... + ps^as fits in n points; in A_n odd orders need cost <= n
// and even orders cost <= n - 2 (two points are reserved to repair the
// parity of the underlying cycle type).  The largest order is computed by
// an exact knapsack over prime powers, compared through GMP values; the
// full spectrum by recursive search over one prime power per prime.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordspec/arith.hpp"

namespace ordspec {

enum class Family { Symmetric, Alternating };

struct GroupFamilyPoint {
  Family family = Family::Alternating;
  uint32_t degree = 1;  // >= 1
  friend bool operator==(const GroupFamilyPoint&, const GroupFamilyPoint&) = default;
};

inline GroupFamilyPoint sym(uint32_t n) { return {Family::Symmetric, n}; }
inline GroupFamilyPoint alt(uint32_t n) { return {Family::Alternating, n}; }

// Sum of the prime-power components of m; cost(1) = 0.  Saturates instead
// of wrapping, so membership tests stay correct for oversized inputs.
inline uint64_t cost(const Factorization& f) {
  uint64_t total = 0;
  for (const auto& pp : f.factors) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < pp.exponent; ++i) {
      if (q > UINT64_MAX / pp.prime) return UINT64_MAX;
      q *= pp.prime;
    }
    if (total > UINT64_MAX - q) return UINT64_MAX;
    total += q;
  }
  return total;
}

inline uint64_t cost(uint64_t m) {
  if (m == 0) throw std::invalid_argument("cost: m must be >= 1");
  return cost(factor(m));
}

inline bool in_spectrum_sym(uint64_t m, uint32_t n) { return cost(m) <= n; }

inline bool in_spectrum_alt(uint64_t m, uint32_t n) {
  uint64_t c = cost(m);
  if (m % 2 == 1) return c <= n;
  return n >= 2 && c <= static_cast<uint64_t>(n) - 2;
}

inline bool in_spectrum(uint64_t m, GroupFamilyPoint pt) {
  return pt.family == Family::Symmetric ? in_spectrum_sym(m, pt.degree)
                                        : in_spectrum_alt(m, pt.degree);
}

// A finite set of element orders, ascending.
struct OrderSet {
  std::vector<uint64_t> orders;

  bool contains(uint64_t m) const {
    return std::binary_search(orders.begin(), orders.end(), m);
  }
  size_t size() const { return orders.size(); }
  uint64_t max() const {
    if (orders.empty()) throw std::logic_error("OrderSet: empty");
    return orders.back();
  }
  friend bool operator==(const OrderSet&, const OrderSet&) = default;
};

inline constexpr uint32_t kDefaultSpectrumCap = 60;
// Above this degree enumerated orders would no longer fit in 64 bits.
inline constexpr uint32_t kMaxSpectrumDegree = 300;

// Full spectrum by recursive search: one prime power per prime within the
// remaining cost budget.  Never scans 1..Landau(n).
inline OrderSet spectrum(GroupFamilyPoint pt, uint32_t cap = kDefaultSpectrumCap) {
  if (pt.degree < 1) throw std::invalid_argument("spectrum: degree must be >= 1");
  if (pt.degree > cap)
    throw ResourceError("spectrum: degree " + std::to_string(pt.degree) +
                        " exceeds enumeration cap " + std::to_string(cap));
  if (pt.degree > kMaxSpectrumDegree)
    throw ResourceError("spectrum: degree " + std::to_string(pt.degree) +
                        " exceeds the 64-bit enumeration limit " +
                        std::to_string(kMaxSpectrumDegree));
  const uint32_t n = pt.degree;
  const bool alternating = pt.family == Family::Alternating;
  const auto primes = sieve_primes(n);
  std::vector<uint64_t> out;

  auto rec = [&](auto&& self, size_t from, uint64_t product, uint64_t used) -> void {
    if (!alternating || product % 2 == 1 ||
        (n >= 2 && used <= static_cast<uint64_t>(n) - 2)) {
      out.push_back(product);
    }
    for (size_t j = from; j < primes.size(); ++j) {
      for (uint64_t pw = primes[j]; used + pw <= n; pw *= primes[j]) {
        self(self, j + 1, product * pw, used + pw);
        if (pw > n / primes[j]) break;
      }
    }
  };
  rec(rec, 0, 1, 0);
  std::sort(out.begin(), out.end());
  return OrderSet{std::move(out)};
}

namespace detail {

// best[b] = the largest product of prime powers with total cost <= b,
// together with its exact value.  Processing primes one at a time keeps the
// "one power per prime" constraint (budgets walked downwards).
struct MaxOrderTable {
  std::vector<Factorization> best;
  std::vector<mpz_class> value;
};

inline MaxOrderTable max_product_table(uint32_t budget, bool include_two) {
  MaxOrderTable t;
  t.best.assign(budget + 1, Factorization::one());
  t.value.assign(budget + 1, mpz_class(1));
  for (uint64_t p : sieve_primes(budget)) {
    if (!include_two && p == 2) continue;
    for (uint32_t b = budget; b >= p; --b) {
      uint32_t e = 1;
      for (uint64_t pw = p; pw <= b; pw *= p, ++e) {
        mpz_class cand = t.value[b - pw] * static_cast<unsigned long>(pw);
        if (cand > t.value[b]) {
          Factorization f = t.best[b - pw];
          f.factors.push_back({p, e});  // p exceeds every prime already chosen
          t.best[b] = std::move(f);
          t.value[b] = std::move(cand);
        }
        if (pw > b / p) break;
      }
    }
  }
  return t;
}

}  // namespace detail

// Landau's function: the largest element order of S_n, exactly.
inline Factorization landau(uint32_t n) {
  return detail::max_product_table(n, true).best[n];
}

// Largest element order of the family member.  For A_n the maximum is
// taken over odd products of cost <= n and arbitrary products of cost
// <= n - 2 (odd products of the smaller budget are dominated by the
// former, so the two-way max is exact).
inline Factorization max_order(GroupFamilyPoint pt) {
  if (pt.degree < 1) throw std::invalid_argument("max_order: degree must be >= 1");
  const uint32_t n = pt.degree;
  if (pt.family == Family::Symmetric) return landau(n);
  auto odd = detail::max_product_table(n, false);
  if (n < 2) return odd.best[n];
  auto any = detail::max_product_table(n - 2, true);
  if (any.value[n - 2] > odd.value[n]) return any.best[n - 2];
  return odd.best[n];
}

// i-th largest element order (1-indexed), via full enumeration.
inline uint64_t m_i(GroupFamilyPoint pt, uint32_t i, uint32_t cap = kDefaultSpectrumCap) {
  if (i < 1) throw std::out_of_range("m_i: index must be >= 1");
  OrderSet s = spectrum(pt, cap);
  if (i > s.size())
    throw std::out_of_range("m_i: index " + std::to_string(i) + " exceeds spectrum size " +
                            std::to_string(s.size()));
  return s.orders[s.size() - i];
}

}  // namespace ordspec
