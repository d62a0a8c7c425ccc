#ifndef EQSING_LOCALSTD_HPP
#define EQSING_LOCALSTD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eqsing/poly.hpp"

namespace eqsing {

/// Standard basis of an ideal of the local ring Q[x]_(x) for the ds order.
struct StandardBasis {
  std::vector<Polynomial> generators;  ///< monic, no leading exponent divides another
  LocalOrder order;
  std::vector<Exponent> staircase;     ///< leading exponents of `generators`, same order
  /// When set, every monomial of degree >= *degree_cut lies in the ideal, and
  /// terms of that degree are dropped during reduction.
  std::optional<std::uint64_t> degree_cut;
};

struct StandardMonomials {
  /// Exponents outside the leading ideal, by degree and then in local order.
  /// Empty when `finite` is false.
  std::vector<Exponent> monomials;
  bool finite = true;
  /// When infinite: 0-based index of a variable with no pure power in the leading ideal.
  std::optional<std::size_t> missing_variable;
};

struct StandardBasisOptions {
  /// Skip S-pairs whose leading exponents are coprime.
  bool product_criterion = true;
  /// Compute a standard basis of <gens> + m^k instead of <gens>.
  std::optional<std::uint64_t> truncation_degree;
  /// Once the leading ideal contains all monomials of some degree D, the ideal
  /// contains m^D (Nakayama); from then on terms of degree >= D are dropped.
  bool highest_corner = true;
  /// Abort with ResourceLimit once reductions have touched this many terms
  /// in total; 0 means no limit.
  std::uint64_t work_limit = 0;
};

/// Weak normal form of p with respect to G (Mora's algorithm with the ecart rule).
///
/// The result r is zero, or its leading exponent is divisible by no leading
/// exponent of G; u*p - r lies in <G> for some unit u of the local ring.
Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> reducers, const LocalOrder& ord);

/// Completes gens to a standard basis by S-pair completion with Mora reduction.
/// Pairs are processed by ascending lcm degree, then local order, then index,
/// so the output is a deterministic function of the input sequence.
/// Throws std::invalid_argument if every generator is zero.
StandardBasis standard_basis(std::span<const Polynomial> gens, const LocalOrder& ord,
                             const StandardBasisOptions& options = {});

inline constexpr std::size_t kDefaultMonomialLimit = std::size_t{1} << 22;
inline constexpr std::uint64_t kDefaultWorkLimit = 200'000'000;

/// Enumerates monomials outside the leading ideal of B. Infinitude is decided
/// up front from the pure powers in the staircase. Throws ResourceLimit if the
/// finite set would exceed `limit` elements.
StandardMonomials standard_monomials(const StandardBasis& basis, std::size_t limit = kDefaultMonomialLimit);

/// true iff h reduces to zero against B, i.e. h lies in the ideal B generates locally.
bool ideal_membership(const Polynomial& h, const StandardBasis& basis);

/// Milnor algebra data of a germ: standard basis of the Jacobian ideal and a
/// monomial basis of the quotient.
struct MilnorAlgebra {
  StandardBasis jacobian_basis;
  std::vector<Exponent> monomials;
};

/// Works with J + m^K for K = 8, 16, ...: the germ is isolated once no standard
/// monomial of degree K-1 survives (then m^(K-1) lies in J), and non-isolated
/// once dim Q/(J + m^K) exceeds the Bezout bound prod_i deg(df/dx_i), which
/// bounds the local multiplicity of an isolated zero.
///
/// Throws NotACriticalPoint if f has a linear term, NonIsolated if the quotient
/// is infinite dimensional, ResourceLimit past either limit. The constant term
/// of f is ignored.
MilnorAlgebra milnor_algebra(const Polynomial& f, std::size_t limit = kDefaultMonomialLimit,
                             std::uint64_t work_limit = kDefaultWorkLimit);

/// Dimension of the Milnor algebra; same error behavior as milnor_algebra.
std::size_t milnor_number(const Polynomial& f);

}  // namespace eqsing

#endif  // EQSING_LOCALSTD_HPP
