#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordspec/arith.hpp"

using namespace ordspec;

namespace {
Factorization fz(std::vector<PrimePower> fs) { return Factorization::checked(std::move(fs)); }
}  // namespace

TEST_CASE("sieve_primes basics", "[arith]") {
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(0).empty());
  CHECK(sieve_primes(10) == std::vector<uint64_t>{2, 3, 5, 7});
  auto p23 = sieve_primes(23);
  REQUIRE(p23.size() == 9);
  CHECK(p23.back() == 23);
  CHECK(p23 == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23});
}

TEST_CASE("factor canonical examples", "[arith]") {
  CHECK(factor(1) == Factorization::one());
  CHECK(factor(420) == fz({{2, 2}, {3, 1}, {5, 1}, {7, 1}}));
  CHECK(factor(604800) == fz({{2, 7}, {3, 3}, {5, 2}, {7, 1}}));
  CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor round-trips on a randomized sample", "[arith][property]") {
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<uint64_t> dist(1, 1000000);
  for (int trial = 0; trial < 500; ++trial) {
    uint64_t n = dist(rng);
    Factorization f = factor(n);
    uint64_t back = 1;
    uint64_t prev = 0;
    for (const auto& pp : f.factors) {
      CHECK(pp.prime > prev);
      CHECK(pp.exponent >= 1);
      CHECK(is_prime(pp.prime));
      prev = pp.prime;
      for (uint32_t i = 0; i < pp.exponent; ++i) back *= pp.prime;
    }
    CHECK(back == n);
  }
}

TEST_CASE("factorial_valuation matches Legendre examples", "[arith]") {
  CHECK(factorial_valuation(8, 2) == 7);
  CHECK(factorial_valuation(6, 7) == 0);
  CHECK(factorial_valuation(20, 3) == 8);
  CHECK_THROWS_AS(factorial_valuation(10, 4), std::invalid_argument);
}

TEST_CASE("factorial_valuation equals brute-force multiple counting", "[arith][property]") {
  for (uint64_t n = 0; n <= 200; n += 7) {
    for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
      uint64_t expected = 0;
      for (uint64_t i = 1; i <= n; ++i) {
        uint64_t v = i;
        while (v % p == 0) {
          ++expected;
          v /= p;
        }
      }
      CHECK(factorial_valuation(n, p) == expected);
    }
  }
}

TEST_CASE("alt_order reproduces known factorizations", "[arith]") {
  CHECK(alt_order(7) == fz({{2, 3}, {3, 2}, {5, 1}, {7, 1}}));
  CHECK(alt_order(13) == fz({{2, 9}, {3, 5}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}));
  // 24!/2 has 3-exponent 10: floor(24/3) + floor(24/9) = 8 + 2.
  CHECK(alt_order(24) == fz({{2, 21}, {3, 10}, {5, 4}, {7, 3}, {11, 2},
                             {13, 1}, {17, 1}, {19, 1}, {23, 1}}));
  CHECK(alt_order(3) == fz({{3, 1}}));
  CHECK_THROWS_AS(alt_order(2), std::invalid_argument);
}

TEST_CASE("compare_factored basic ordering", "[arith]") {
  CHECK(compare_factored(Factorization::one(), Factorization::one()) ==
        std::strong_ordering::equal);
  CHECK(compare_factored(fz({{2, 2}, {3, 1}, {5, 1}, {7, 1}}),
                         fz({{3, 1}, {5, 1}, {7, 1}, {11, 1}})) == std::strong_ordering::less);
  CHECK(compare_factored(factor(1155), factor(420)) == std::strong_ordering::greater);
}

TEST_CASE("compare_factored agrees with native comparison", "[arith][property]") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<uint64_t> dist(1, 1u << 30);
  for (int trial = 0; trial < 300; ++trial) {
    uint64_t a = dist(rng), b = dist(rng);
    auto expected = a <=> b;
    CHECK(compare_factored(factor(a), factor(b)) == expected);
  }
}

TEST_CASE("lcm_factored examples and algebra", "[arith]") {
  Factorization x = factor(12345);
  CHECK(lcm_factored(Factorization::one(), x) == x);
  CHECK(lcm_factored(fz({{3, 1}}), fz({{5, 1}, {7, 1}, {11, 1}})) ==
        fz({{3, 1}, {5, 1}, {7, 1}, {11, 1}}));
  CHECK(lcm_factored(fz({{2, 2}, {5, 1}}), fz({{2, 1}, {7, 1}})) ==
        fz({{2, 2}, {5, 1}, {7, 1}}));

  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<uint64_t> dist(1, 100000);
  for (int trial = 0; trial < 200; ++trial) {
    Factorization a = factor(dist(rng)), b = factor(dist(rng)), c = factor(dist(rng));
    CHECK(lcm_factored(a, b) == lcm_factored(b, a));
    CHECK(lcm_factored(a, a) == a);
    CHECK(lcm_factored(a, Factorization::one()) == a);
    CHECK(lcm_factored(lcm_factored(a, b), c) == lcm_factored(a, lcm_factored(b, c)));
  }
}

TEST_CASE("multiply and divides", "[arith]") {
  CHECK(multiply_factored(factor(12), factor(35)) == factor(420));
  CHECK(divides_factored(factor(604800), alt_order(10)));
  CHECK(!divides_factored(alt_order(10), factor(604800)));
  CHECK(divides_factored(Factorization::one(), factor(7)));
}

TEST_CASE("value formatting", "[arith]") {
  CHECK(format_factorization(Factorization::one()) == "1");
  CHECK(format_factorization(factor(420)) == "2^2 * 3 * 5 * 7");
  CHECK(to_decimal_string(factor(420)) == "420");
  CHECK(value_u64(factor(420)) == 420);
}

TEST_CASE("checked factorization rejects invalid input", "[arith]") {
  CHECK_THROWS_AS(Factorization::checked({{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization::checked({{3, 1}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization::checked({{5, 1}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization::checked({{3, 0}}), std::invalid_argument);
}

TEST_CASE("pow_mod", "[arith]") {
  CHECK(pow_mod(3, 2, 7) == 2);
  CHECK(pow_mod(2, 3, 7) == 1);  // 7 | 2^3 - 1
  CHECK(pow_mod(10, 0, 13) == 1);
}
