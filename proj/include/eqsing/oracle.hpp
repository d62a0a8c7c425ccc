#ifndef EQSING_ORACLE_HPP
#define EQSING_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <random>

#include "eqsing/action.hpp"
#include "eqsing/poly.hpp"

// Brute-force reference computations. Nothing here touches standard bases or
// the closed-form rank formula; they exist to cross-check those routes.
namespace eqsing::oracle {

/// dim Q[x]/(J_f + m^K), the Jacobian ideal truncated at order K, by exact
/// sparse linear algebra over the span of x^b * df/dx_i.
std::size_t truncated_jacobian_quotient_dim(const Polynomial& f, std::size_t order);

/// Milnor number as the stable value of truncated_jacobian_quotient_dim.
///
/// Equal values at orders K and K+1 imply m^K is contained in J_f + m^(K+1),
/// hence in J_f by Nakayama, so the value is exact. Returns nullopt if the
/// sequence has not stabilized by max_order (non-isolated or too large).
std::optional<std::size_t> jet_space_milnor(const Polynomial& f, std::size_t max_order = 40);

/// Largest rank seen over `tries` random integer combinations of the
/// invariant monomials x_i x_j.
std::size_t sampled_invariant_quadratic_rank(const DiagonalAction& action, std::mt19937_64& rng, int tries = 3);

}  // namespace eqsing::oracle

#endif  // EQSING_ORACLE_HPP
