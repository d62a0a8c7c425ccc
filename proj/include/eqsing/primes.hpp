#ifndef EQSING_PRIMES_HPP
#define EQSING_PRIMES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace eqsing {

/// Deterministic Miller-Rabin, exact on the full 64-bit range.
bool is_prime(std::uint64_t n);

struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> primes;  ///< ascending, with multiplicity
};

/// Trial division by small primes, then Pollard's rho (Brent variant).
/// Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

/// Number of distinct prime divisors. Throws std::invalid_argument for n < 2.
std::size_t omega(std::uint64_t n);
/// Number of prime divisors counted with multiplicity. Throws for n < 2.
std::size_t big_omega(std::uint64_t n);

/// Groups the prime factors of f.n into an odd number of factors, each >= 2,
/// with product f.n. The length is the largest odd number not exceeding
/// min(Omega(n), max_length); the two largest factors are merged until it is
/// reached. Output is ascending. Throws std::invalid_argument for n == 1 or
/// max_length == 0.
std::vector<std::uint64_t> group_factors(const Factorization& f, std::size_t max_length = SIZE_MAX);

struct HuntHit {
  std::uint64_t p;
  std::vector<std::uint64_t> d;  ///< grouped factorization of p - 1

  friend bool operator==(const HuntHit&, const HuntHit&) = default;
};

inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000'000;

/// All primes p <= max_p whose p - 1 groups into at least min_factors odd-many
/// factors, ascending by p. Throws ResourceLimit when max_p exceeds sieve_limit.
std::vector<HuntHit> hunt(std::uint64_t max_p, std::size_t min_factors,
                          std::uint64_t sieve_limit = kDefaultSieveLimit);

struct ErdosStatistic {
  double threshold = 0;                ///< (1 - epsilon) ln ln N
  std::uint64_t prime_count = 0;       ///< pi(N)
  std::uint64_t above = 0;             ///< primes p <= N with omega(p-1) > threshold
  double fraction = 0;                 ///< above / prime_count
  std::uint64_t above_big_omega = 0;   ///< same count using Omega(p-1)
  double fraction_big_omega = 0;
};

inline constexpr std::uint64_t kDefaultErdosLimit = 200'000'000;

/// Fraction of primes p <= N for which p - 1 has more than (1 - epsilon) ln ln N
/// distinct prime divisors. Throws std::invalid_argument unless N >= 10 and
/// 0 < epsilon < 1; ResourceLimit when N exceeds limit.
ErdosStatistic erdos_statistic(std::uint64_t max_n, double epsilon, std::uint64_t limit = kDefaultErdosLimit);

}  // namespace eqsing

#endif  // EQSING_PRIMES_HPP
