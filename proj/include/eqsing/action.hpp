#ifndef EQSING_ACTION_HPP
#define EQSING_ACTION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqsing/localstd.hpp"
#include "eqsing/poly.hpp"

namespace eqsing {

/// Linear diagonal action of Z/m: the generator scales x_i by eps^{w_i} for a
/// fixed primitive m-th root of unity eps. Only the residues are stored.
class DiagonalAction {
 public:
  /// Weights may be given as any integers; they are reduced into [0, m).
  /// Throws std::invalid_argument for m < 2 or an empty weight vector.
  DiagonalAction(std::uint64_t modulus, std::span<const std::int64_t> weights);
  DiagonalAction(std::uint64_t modulus, std::initializer_list<std::int64_t> weights)
      : DiagonalAction(modulus, std::span<const std::int64_t>(weights.begin(), weights.size())) {}

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t nvars() const noexcept { return weights_.size(); }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }
  std::uint64_t weight(std::size_t i) const { return weights_[i]; }

  friend bool operator==(const DiagonalAction&, const DiagonalAction&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> weights_;
};

/// How a group element acts on functions.
///
/// Contragredient: (g.h)(x) = h(g^{-1} x), so x^a spans the character -<w,a>.
/// Direct: (g.h)(x) = h(g x), giving +<w,a>. Direct exists for convention
/// checks; everything else assumes Contragredient.
enum class CharacterConvention { Contragredient, Direct };

/// Multiplicities of the characters 0..m-1 of Z/m in a representation.
struct CharacterMultiset {
  std::vector<std::uint64_t> mult;

  static CharacterMultiset zero(std::uint64_t modulus) { return {std::vector<std::uint64_t>(modulus, 0)}; }

  std::uint64_t modulus() const noexcept { return mult.size(); }
  std::uint64_t dim() const noexcept;
  /// Multiset of the dual representation: c -> -c.
  CharacterMultiset dual() const;

  friend bool operator==(const CharacterMultiset&, const CharacterMultiset&) = default;
};

std::string to_string(const CharacterMultiset& ms);

/// <w, a> mod m.
std::uint64_t weight_of(const Exponent& a, const DiagonalAction& action);

/// Residue c such that the generator acts on x^a by the c-th power of the
/// primitive character.
std::uint64_t monomial_character(const Exponent& a, const DiagonalAction& action,
                                 CharacterConvention convention = CharacterConvention::Contragredient);

/// First monomial of f (in local order) that the action does not fix.
std::optional<Exponent> non_invariant_monomial(const Polynomial& f, const DiagonalAction& action);
bool is_invariant(const Polynomial& f, const DiagonalAction& action);

/// true iff every generator of the basis is an eigenvector of the action,
/// i.e. all monomials of a generator have the same weight.
bool is_graded(const StandardBasis& basis, const DiagonalAction& action);

struct EquivariantAlgebra {
  MilnorAlgebra algebra;
  CharacterMultiset characters;
};

/// Milnor algebra of f together with its character decomposition.
/// Throws NotInvariant, NotACriticalPoint, NonIsolated; throws ClaimViolation
/// if the computed standard basis is not graded by the action.
EquivariantAlgebra equivariant_algebra(const Polynomial& f, const DiagonalAction& action,
                                       CharacterConvention convention = CharacterConvention::Contragredient);

CharacterMultiset equivariant_milnor(const Polynomial& f, const DiagonalAction& action,
                                     CharacterConvention convention = CharacterConvention::Contragredient);

/// Multiplicity of the trivial character in the Milnor algebra.
std::uint64_t nu(const Polynomial& f, const DiagonalAction& action);

/// Residue of the determinant character, sum of weights mod m. Residue 0 is det = 1.
std::uint64_t det_character(const DiagonalAction& action);

/// Maximal rank of an invariant quadratic form.
///
/// Invariant quadrics are spanned by x_i x_j with w_i + w_j = 0 mod m. With
/// n_c = #{i : w_i = c}, classes with 2c = 0 give a full-rank sum of squares
/// and each pair {c, -c} gives 2 min(n_c, n_{-c}) via hyperbolic pairs.
std::size_t max_invariant_quadratic_rank(const DiagonalAction& action);

/// The action admits an invariant quadratic form of full rank.
bool is_real_action(const DiagonalAction& action);

}  // namespace eqsing

#endif  // EQSING_ACTION_HPP
