#include "eqsing/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eqsing/errors.hpp"

namespace eqsing {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Brent's cycle-finding variant of Pollard's rho; n odd composite.
u64 rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 batch = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = rho(n);
  split(d, out);
  split(n / d, out);
}

std::vector<bool> sieve(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  return composite;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kSmallPrimes) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s && witness; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  Factorization f{n, {}};
  for (u64 p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      f.primes.push_back(p);
      n /= p;
    }
  }
  split(n, f.primes);
  std::sort(f.primes.begin(), f.primes.end());
  return f;
}

std::size_t omega(u64 n) {
  if (n < 2) throw std::invalid_argument("omega needs n >= 2");
  auto f = factorize(n);
  return static_cast<std::size_t>(std::unique(f.primes.begin(), f.primes.end()) - f.primes.begin());
}

std::size_t big_omega(u64 n) {
  if (n < 2) throw std::invalid_argument("Omega needs n >= 2");
  return factorize(n).primes.size();
}

std::vector<u64> group_factors(const Factorization& f, std::size_t max_length) {
  if (f.primes.empty()) throw std::invalid_argument("nothing to group: n = 1");
  if (max_length == 0) throw std::invalid_argument("grouped length must be positive");
  std::size_t target = std::min(f.primes.size(), max_length);
  if (target % 2 == 0) --target;
  std::vector<u64> d = f.primes;
  std::sort(d.begin(), d.end());
  while (d.size() > target) {
    const u64 merged = d[d.size() - 1] * d[d.size() - 2];
    d.pop_back();
    d.back() = merged;
    std::sort(d.begin(), d.end());
  }
  return d;
}

std::vector<HuntHit> hunt(u64 max_p, std::size_t min_factors, u64 sieve_limit) {
  if (max_p > sieve_limit)
    throw ResourceLimit("hunt bound " + std::to_string(max_p) + " exceeds sieve limit " + std::to_string(sieve_limit));
  std::vector<HuntHit> hits;
  if (max_p < 3) return hits;
  const auto composite = sieve(max_p);
  for (u64 p = 3; p <= max_p; p += 2) {
    if (composite[p]) continue;
    // A cheap upper bound on the grouped length rules out most p before factoring.
    if (static_cast<std::size_t>(std::bit_width(p - 1) - 1) < min_factors) continue;
    auto d = group_factors(factorize(p - 1));
    if (d.size() >= min_factors) hits.push_back({p, std::move(d)});
  }
  return hits;
}

ErdosStatistic erdos_statistic(u64 max_n, double epsilon, u64 limit) {
  if (max_n < 10) throw std::invalid_argument("erdos statistic needs N >= 10");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (max_n > limit)
    throw ResourceLimit("erdos bound " + std::to_string(max_n) + " exceeds limit " + std::to_string(limit));

  // Additive sieve: distinct[k] = omega(k), total[k] = Omega(k) for k <= N.
  std::vector<std::uint8_t> distinct(max_n + 1, 0), total(max_n + 1, 0);
  for (u64 q = 2; q <= max_n; ++q) {
    if (distinct[q] != 0) continue;  // composite: already hit by a smaller prime
    for (u64 k = q; k <= max_n; k += q) ++distinct[k];
    for (u64 pw = q; pw <= max_n; pw = (pw > max_n / q) ? max_n + 1 : pw * q)
      for (u64 k = pw; k <= max_n; k += pw) ++total[k];
  }

  ErdosStatistic s;
  s.threshold = (1.0 - epsilon) * std::log(std::log(static_cast<double>(max_n)));
  for (u64 p = 2; p <= max_n; ++p) {
    if (!(distinct[p] == 1 && total[p] == 1)) continue;  // p prime iff Omega(p) == 1
    ++s.prime_count;
    const double w = p == 2 ? 0.0 : distinct[p - 1];
    const double big = p == 2 ? 0.0 : total[p - 1];
    if (w > s.threshold) ++s.above;
    if (big > s.threshold) ++s.above_big_omega;
  }
  s.fraction = static_cast<double>(s.above) / static_cast<double>(s.prime_count);
  s.fraction_big_omega = static_cast<double>(s.above_big_omega) / static_cast<double>(s.prime_count);
  return s;
}

}  // namespace eqsing
