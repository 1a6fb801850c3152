#pragma once

// Exact arithmetic substrate: prime sieving, trial-division factorization,
// factored naturals with exact comparison, and factorial valuations.
// Quantities such as Landau-type maxima overflow machine words, so the
// factored form is the canonical representation throughout and every
// comparison multiplies out exactly (GMP), never through floating point.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ordspec {

// Thrown when an operation would exceed a configured resource limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<uint64_t> sieve_primes(uint64_t limit) {
  std::vector<uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  uint64_t prime = 0;
  uint32_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A natural number >= 1 as its canonical factorization: primes strictly
// increasing, exponents >= 1, the empty list standing for 1.
struct Factorization {
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;

  static Factorization one() { return {}; }

  // Validating constructor for externally supplied factor lists.
  static Factorization checked(std::vector<PrimePower> fs) {
    uint64_t prev = 0;
    for (const auto& pp : fs) {
      if (pp.exponent < 1) throw std::invalid_argument("factorization: exponent must be >= 1");
      if (pp.prime <= prev)
        throw std::invalid_argument("factorization: primes must be strictly increasing");
      if (!is_prime(pp.prime))
        throw std::invalid_argument("factorization: " + std::to_string(pp.prime) + " is not prime");
      prev = pp.prime;
    }
    return Factorization{std::move(fs)};
  }

  uint32_t exponent_of(uint64_t p) const {
    for (const auto& pp : factors)
      if (pp.prime == p) return pp.exponent;
    return 0;
  }

  bool is_one() const { return factors.empty(); }
};

inline Factorization factor(uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor: 0 has no factorization");
  Factorization f;
  uint64_t rest = n;
  // Trial division by sieved primes; inputs here are small enough that a
  // sqrt(n) sieve is never a bottleneck.
  uint64_t bound = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (bound > 0 && bound * bound > n) --bound;
  while (bound < UINT32_MAX && (bound + 1) * (bound + 1) <= n) ++bound;
  for (uint64_t p : sieve_primes(bound)) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

// Exponent of the prime p in n! (Legendre's formula).
inline uint64_t factorial_valuation(uint64_t n, uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("factorial_valuation: p must be prime");
  uint64_t total = 0;
  for (uint64_t q = p; q <= n; ) {
    total += n / q;
    if (q > n / p) break;  // next q would overflow / exceed n
    q *= p;
  }
  return total;
}

// Factorization of |A_n| = n!/2 for n >= 3.
inline Factorization alt_order(uint64_t n) {
  if (n < 3) throw std::invalid_argument("alt_order: degree must be >= 3");
  Factorization f;
  for (uint64_t p : sieve_primes(n)) {
    uint64_t e = factorial_valuation(n, p);
    if (p == 2) --e;
    if (e > 0) f.factors.push_back({p, static_cast<uint32_t>(e)});
  }
  return f;
}

inline mpz_class to_mpz(const Factorization& f) {
  mpz_class r = 1;
  for (const auto& pp : f.factors) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(pp.prime), pp.exponent);
    r *= q;
  }
  return r;
}

inline std::string to_decimal_string(const Factorization& f) { return to_mpz(f).get_str(); }

inline std::optional<uint64_t> value_u64(const Factorization& f) {
  mpz_class v = to_mpz(f);
  if (!v.fits_ulong_p()) return std::nullopt;
  return static_cast<uint64_t>(v.get_ui());
}

// "2^3 * 3^2 * 5 * 7"; "1" for the empty factorization.
inline std::string format_factorization(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& pp : f.factors) {
    if (!first) os << " * ";
    first = false;
    os << pp.prime;
    if (pp.exponent > 1) os << '^' << pp.exponent;
  }
  return os.str();
}

// Order comparison of the represented integers.  Shared prime powers are
// cancelled first, the residues multiplied out exactly.
inline std::strong_ordering compare_factored(const Factorization& a, const Factorization& b) {
  Factorization ra, rb;
  size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].prime < b.factors[j].prime)) {
      ra.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].prime < a.factors[i].prime) {
      rb.factors.push_back(b.factors[j++]);
    } else {
      uint32_t ea = a.factors[i].exponent, eb = b.factors[j].exponent;
      if (ea > eb) ra.factors.push_back({a.factors[i].prime, ea - eb});
      if (eb > ea) rb.factors.push_back({b.factors[j].prime, eb - ea});
      ++i, ++j;
    }
  }
  int c = cmp(to_mpz(ra), to_mpz(rb));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Pointwise max of exponents.
inline Factorization lcm_factored(const Factorization& a, const Factorization& b) {
  Factorization r;
  size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].prime < b.factors[j].prime)) {
      r.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].prime < a.factors[i].prime) {
      r.factors.push_back(b.factors[j++]);
    } else {
      r.factors.push_back({a.factors[i].prime,
                           std::max(a.factors[i].exponent, b.factors[j].exponent)});
      ++i, ++j;
    }
  }
  return r;
}

inline Factorization multiply_factored(const Factorization& a, const Factorization& b) {
  Factorization r;
  size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].prime < b.factors[j].prime)) {
      r.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].prime < a.factors[i].prime) {
      r.factors.push_back(b.factors[j++]);
    } else {
      r.factors.push_back({a.factors[i].prime,
                           a.factors[i].exponent + b.factors[j].exponent});
      ++i, ++j;
    }
  }
  return r;
}

// True iff a divides b (pointwise exponent comparison).
inline bool divides_factored(const Factorization& a, const Factorization& b) {
  for (const auto& pp : a.factors)
    if (b.exponent_of(pp.prime) < pp.exponent) return false;
  return true;
}

// (base^exp) mod m, m >= 1.
inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 0) throw std::invalid_argument("pow_mod: zero modulus");
  unsigned __int128 r = 1, b = base % m;
  while (exp > 0) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<uint64_t>(r);
}

}  // namespace ordspec
