#include "eqsing/construct.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "eqsing/errors.hpp"
#include "eqsing/primes.hpp"

namespace eqsing {

void LoopSpec::validate() const {
  if (d.empty() || d.size() % 2 == 0)
    throw std::invalid_argument("loop needs an odd number of exponents, got " + std::to_string(d.size()));
  for (const auto di : d) {
    if (di < 2) throw std::invalid_argument("loop exponents must be >= 2, got " + std::to_string(di));
    if (di > std::numeric_limits<Exponent::value_type>::max() - 1)
      throw ResourceLimit("loop exponent " + std::to_string(di) + " too large");
  }
  (void)modulus();
}

std::uint64_t LoopSpec::modulus() const {
  std::uint64_t prod = 1;
  for (const auto di : d) {
    if (prod > (std::numeric_limits<std::uint64_t>::max() - 1) / di)
      throw ResourceLimit("product of loop exponents overflows 64 bits");
    prod *= di;
  }
  return prod + 1;
}

LoopGerm loop_polynomial(const LoopSpec& spec) {
  spec.validate();
  const std::size_t n = spec.d.size();
  const std::uint64_t m = spec.modulus();

  Polynomial f(n);
  for (std::size_t k = 0; k < n; ++k) {
    Exponent e(n);
    e[k] += static_cast<Exponent::value_type>(spec.d[k]);
    e[(k + 1) % n] += 1;
    f += Polynomial::monomial(std::move(e));
  }

  // w_1 = 1, w_{k+1} = -d_k w_k.
  std::vector<std::int64_t> weights(n);
  std::uint64_t w = 1;
  for (std::size_t k = 0; k < n; ++k) {
    weights[k] = static_cast<std::int64_t>(w);
    w = static_cast<std::uint64_t>((static_cast<unsigned __int128>(m - w) * (spec.d[k] % m)) % m);
  }
  LoopGerm germ{std::move(f), DiagonalAction(m, weights)};
  if (auto bad = non_invariant_monomial(germ.f, germ.action))
    throw ClaimViolation("loop monomial " + to_string(*bad) + " is not invariant");
  return germ;
}

LoopReport verify_loop(const LoopSpec& spec, std::uint64_t mu_cap) {
  spec.validate();
  const std::uint64_t expected_mu = spec.modulus() - 1;
  if (expected_mu > mu_cap)
    throw ResourceLimit("loop Milnor number " + std::to_string(expected_mu) + " exceeds cap " +
                        std::to_string(mu_cap));
  const LoopGerm germ = loop_polynomial(spec);

  const StabilityReport s = analyze(germ.f, germ.action);
  LoopReport r;
  r.m = germ.action.modulus();
  r.m_prime = is_prime(r.m);
  r.mu = s.mu;
  r.nu = s.nu;
  r.repclass = s.repclass;
  r.rk = s.rk;
  r.bound_ok = s.corank_bound_ok;
  r.corank = germ.f.nvars() - two_jet_rank(germ.f);

  if (r.mu != expected_mu)
    throw ClaimViolation("loop Milnor number " + std::to_string(r.mu) + " != " + std::to_string(expected_mu));
  if (r.nu != 1) throw ClaimViolation("loop germ has nu = " + std::to_string(r.nu));
  if (!germ.f.jet(2).is_zero()) throw ClaimViolation("loop germ has a nonzero 2-jet");
  return r;
}

}  // namespace eqsing
