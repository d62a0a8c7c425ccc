#include <doctest.h>

#include <numeric>
#include <random>

#include "eqsing/errors.hpp"
#include "eqsing/primes.hpp"

using namespace eqsing;

namespace {
bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
std::uint64_t product(const std::vector<std::uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{1}, std::multiplies<>());
}
}  // namespace

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_prime(n));
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(3215031751ull));           // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(4294967297ull));           // 641 * 6700417
}

TEST_CASE("factorization round-trips") {
  for (std::uint64_t n = 1; n <= 1000000; n += (n < 2000 ? 1 : 997)) {
    const Factorization f = factorize(n);
    CHECK(product(f.primes) == n);
    CHECK(std::is_sorted(f.primes.begin(), f.primes.end()));
    for (auto p : f.primes) CHECK(is_prime(p));
  }
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const std::uint64_t n = rng() | 1;
    const Factorization f = factorize(n);
    CHECK(product(f.primes) == n);
    for (auto p : f.primes) CHECK(is_prime(p));
  }
  CHECK(factorize(4294967297ull).primes == std::vector<std::uint64_t>{641, 6700417});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("omega") {
  CHECK(omega(96) == 2);
  CHECK(big_omega(96) == 6);
  CHECK(omega(2 * 3 * 5 * 7 * 11) == 5);
  CHECK(big_omega(2) == 1);
  CHECK_THROWS_AS(omega(1), std::invalid_argument);
}

TEST_CASE("grouping prime factors") {
  CHECK(group_factors(factorize(96)) == std::vector<std::uint64_t>{2, 2, 2, 2, 6});
  CHECK(group_factors(factorize(12)) == std::vector<std::uint64_t>{2, 2, 3});
  CHECK(group_factors(factorize(4)) == std::vector<std::uint64_t>{4});
  CHECK(group_factors(factorize(96), 3) == std::vector<std::uint64_t>{2, 2, 24});
  CHECK(group_factors(factorize(7)) == std::vector<std::uint64_t>{7});
  for (std::uint64_t n = 2; n < 5000; ++n) {
    const auto g = group_factors(factorize(n));
    CHECK(g.size() % 2 == 1);
    CHECK(product(g) == n);
    for (auto d : g) CHECK(d >= 2);
  }
  CHECK_THROWS_AS(group_factors(factorize(1)), std::invalid_argument);
}

TEST_CASE("hunt") {
  const auto hits = hunt(100, 5);
  REQUIRE_FALSE(hits.empty());
  CHECK(hits.back() == HuntHit{97, {2, 2, 2, 2, 6}});
  for (const auto& h : hits) CHECK(h.d.size() >= 5);
  const auto small = hunt(20, 3);
  CHECK(std::find(small.begin(), small.end(), HuntHit{13, {2, 2, 3}}) != small.end());
  CHECK_THROWS_AS(hunt(1000, 3, 100), ResourceLimit);
}

TEST_CASE("Erdos statistic") {
  const auto s = erdos_statistic(100000, 0.5);
  CHECK(s.prime_count == 9592);
  CHECK(s.fraction >= 0.8);
  CHECK(s.above_big_omega >= s.above);
  double prev = 0;
  for (double eps = 0.1; eps < 0.95; eps += 0.1) {
    const double f = erdos_statistic(100000, eps).fraction;
    CHECK(f >= prev);
    prev = f;
  }
  CHECK_THROWS_AS(erdos_statistic(100, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(erdos_statistic(1000, 0.5, 100), ResourceLimit);
}
