#ifndef EQSING_CONSTRUCT_HPP
#define EQSING_CONSTRUCT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eqsing/action.hpp"
#include "eqsing/classify.hpp"
#include "eqsing/poly.hpp"

namespace eqsing {

/// Exponents (d_1, ..., d_n) of a loop polynomial; n odd, every d_i >= 2.
struct LoopSpec {
  std::vector<std::uint64_t> d;

  /// Throws std::invalid_argument when n is even or zero or some d_i < 2,
  /// ResourceLimit when d_1 * ... * d_n + 1 overflows 64 bits.
  void validate() const;
  /// d_1 * ... * d_n + 1.
  std::uint64_t modulus() const;
};

struct LoopGerm {
  Polynomial f;
  DiagonalAction action;
};

/// f = x1^d1 x2 + x2^d2 x3 + ... + xn^dn x1 (x^(d+1) when n = 1) with the
/// action of Z/m, m = d1...dn + 1, of weights w_k = (-1)^(k-1) d1...d(k-1).
/// Every monomial of f has weight 0 mod m; a failure raises ClaimViolation.
LoopGerm loop_polynomial(const LoopSpec& spec);

struct LoopReport {
  std::uint64_t m = 0;
  bool m_prime = false;
  std::uint64_t mu = 0;
  std::uint64_t nu = 0;
  std::optional<RepClass> repclass;  ///< unset ("skipped") for composite m
  std::size_t corank = 0;
  std::size_t rk = 0;
  std::optional<bool> bound_ok;      ///< unset for composite m
};

inline constexpr std::uint64_t kDefaultMuCap = 512;

/// Builds the loop germ and analyzes it. Checks mu = d1...dn, nu = 1 and a
/// vanishing 2-jet, raising ClaimViolation otherwise. Throws ResourceLimit
/// before any standard basis work when d1...dn exceeds mu_cap.
LoopReport verify_loop(const LoopSpec& spec, std::uint64_t mu_cap = kDefaultMuCap);

}  // namespace eqsing

#endif  // EQSING_CONSTRUCT_HPP
