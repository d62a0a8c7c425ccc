#ifndef EQSING_CLASSIFY_HPP
#define EQSING_CLASSIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "eqsing/action.hpp"
#include "eqsing/poly.hpp"

namespace eqsing {

/// The admissible isomorphism classes of the Milnor algebra of a stable
/// Z/p-invariant germ, plus Other. With d the determinant character and W the
/// regular representation minus the trivial one:
///   TrivialOnly      C                  det = 1, dimension 1
///   DetTensorW       d (x) W            det != 1, dimension p - 1
///   TwoDetPlusDetW   2d + d (x) W       det != 1, dimension p + 1
///   TrivialPlus2W    C + 2W             det = 1, dimension 2p - 1
enum class RepClass { TrivialOnly, DetTensorW, TwoDetPlusDetW, TrivialPlus2W, Other };

std::string_view to_string(RepClass c) noexcept;
std::optional<RepClass> rep_class_from_string(std::string_view s) noexcept;

/// Character multiset of class c under the given action. Throws NotPrime if
/// the modulus is composite and std::invalid_argument for RepClass::Other.
CharacterMultiset expected_multiset(RepClass c, const DiagonalAction& action);

struct ClassifyOptions {
  /// Also accept the dual (c -> -c) of each expected multiset.
  bool accept_mirrored = false;
};

/// Matches ms against the admissible classes allowed by the determinant
/// character: TrivialOnly/TrivialPlus2W when det = 1, the other two otherwise.
/// Throws NotPrime for a composite modulus.
RepClass classify(const CharacterMultiset& ms, const DiagonalAction& action, const ClassifyOptions& options = {});

/// A germ is equivariantly stable iff the trivial character occurs once.
bool is_stable(const Polynomial& f, const DiagonalAction& action);

/// (det != 1 and 2^(n - rk) <= p + 1) or rk == n, all in integers.
bool check_corank_bound(std::size_t n, std::size_t rk, std::uint64_t p, std::uint64_t det_char);

/// false iff ms is exactly C + 2W with nu = 1, a multiset no stable germ can have.
/// Throws NotPrime for a composite modulus.
bool excludes_trivial_plus_2w(const CharacterMultiset& ms, const DiagonalAction& action);

struct StabilityReport {
  std::uint64_t mu = 0;
  std::uint64_t nu = 0;
  bool stable = false;
  std::optional<RepClass> repclass;      ///< unset for a composite modulus
  std::uint64_t det_char = 0;
  std::size_t rk = 0;
  std::optional<bool> corank_bound_ok;  ///< unset for a composite modulus
  bool real_action = false;
};

struct AnalyzeOptions {
  CharacterConvention convention = CharacterConvention::Contragredient;
  ClassifyOptions classify;
  /// The Hessian non-membership assertion is skipped above this many variables.
  std::size_t hessian_limit = kDefaultHessianLimit;
};

/// Full analysis of an invariant germ.
///
/// Besides the report fields this asserts two facts that hold for every
/// isolated germ, raising ClaimViolation if either fails: the Hessian
/// determinant is not in the Jacobian ideal, and mu >= 2^(n - rank of the 2-jet).
StabilityReport analyze(const Polynomial& f, const DiagonalAction& action, const AnalyzeOptions& options = {});

struct Analysis {
  StabilityReport report;
  CharacterMultiset characters;
};

/// analyze() that also returns the character multiset it classified.
Analysis analyze_with_characters(const Polynomial& f, const DiagonalAction& action,
                                 const AnalyzeOptions& options = {});

}  // namespace eqsing

#endif  // EQSING_CLASSIFY_HPP
