#include "eqsing/classify.hpp"

#include <stdexcept>
#include <string>

#include "eqsing/errors.hpp"
#include "eqsing/localstd.hpp"
#include "eqsing/primes.hpp"

namespace eqsing {

namespace {

void require_prime(const DiagonalAction& action) {
  if (!is_prime(action.modulus()))
    throw NotPrime("classification needs a prime modulus, got " + std::to_string(action.modulus()));
}

constexpr RepClass kClasses[] = {RepClass::TrivialOnly, RepClass::DetTensorW, RepClass::TwoDetPlusDetW,
                                 RepClass::TrivialPlus2W};

bool allowed(RepClass c, std::uint64_t det) {
  const bool trivial_det = det == 0;
  return (c == RepClass::TrivialOnly || c == RepClass::TrivialPlus2W) == trivial_det;
}

}  // namespace

std::string_view to_string(RepClass c) noexcept {
  switch (c) {
    case RepClass::TrivialOnly: return "TrivialOnly";
    case RepClass::DetTensorW: return "DetTensorW";
    case RepClass::TwoDetPlusDetW: return "TwoDetPlusDetW";
    case RepClass::TrivialPlus2W: return "TrivialPlus2W";
    case RepClass::Other: return "Other";
  }
  return "Other";
}

std::optional<RepClass> rep_class_from_string(std::string_view s) noexcept {
  for (RepClass c : {RepClass::TrivialOnly, RepClass::DetTensorW, RepClass::TwoDetPlusDetW,
                     RepClass::TrivialPlus2W, RepClass::Other})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

CharacterMultiset expected_multiset(RepClass c, const DiagonalAction& action) {
  require_prime(action);
  const std::uint64_t p = action.modulus();
  const std::uint64_t d = det_character(action);
  CharacterMultiset ms = CharacterMultiset::zero(p);
  switch (c) {
    case RepClass::TrivialOnly:
      ms.mult[0] = 1;
      break;
    case RepClass::TwoDetPlusDetW:
      ms.mult[d] += 2;
      [[fallthrough]];
    case RepClass::DetTensorW:
      for (std::uint64_t r = 1; r < p; ++r) ++ms.mult[(d + r) % p];
      break;
    case RepClass::TrivialPlus2W:
      ms.mult[0] = 1;
      for (std::uint64_t r = 1; r < p; ++r) ms.mult[r] += 2;
      break;
    case RepClass::Other:
      throw std::invalid_argument("no expected multiset for RepClass::Other");
  }
  return ms;
}

RepClass classify(const CharacterMultiset& ms, const DiagonalAction& action, const ClassifyOptions& options) {
  require_prime(action);
  if (ms.modulus() != action.modulus()) return RepClass::Other;
  const std::uint64_t d = det_character(action);
  for (RepClass c : kClasses) {
    if (!allowed(c, d)) continue;
    const CharacterMultiset want = expected_multiset(c, action);
    if (ms == want || (options.accept_mirrored && ms == want.dual())) return c;
  }
  return RepClass::Other;
}

bool is_stable(const Polynomial& f, const DiagonalAction& action) { return nu(f, action) == 1; }

bool check_corank_bound(std::size_t n, std::size_t rk, std::uint64_t p, std::uint64_t det_char) {
  if (rk >= n) return true;
  if (det_char == 0) return false;
  const std::size_t corank = n - rk;
  if (corank >= 64) return false;
  return (std::uint64_t{1} << corank) <= p + 1;
}

bool excludes_trivial_plus_2w(const CharacterMultiset& ms, const DiagonalAction& action) {
  require_prime(action);
  if (ms.mult.empty() || ms.mult[0] != 1) return true;
  return ms != expected_multiset(RepClass::TrivialPlus2W, action);
}

Analysis analyze_with_characters(const Polynomial& f, const DiagonalAction& action,
                                 const AnalyzeOptions& options) {
  if (f.nvars() != action.nvars())
    throw DimensionError("germ in " + std::to_string(f.nvars()) + " variables, action on " +
                         std::to_string(action.nvars()));
  const EquivariantAlgebra eq = equivariant_algebra(f, action, options.convention);

  StabilityReport r;
  r.mu = eq.algebra.monomials.size();
  r.nu = eq.characters.mult[0];
  r.stable = r.nu == 1;
  r.det_char = det_character(action);
  r.rk = max_invariant_quadratic_rank(action);
  r.real_action = r.rk == action.nvars();
  if (is_prime(action.modulus())) {
    r.repclass = classify(eq.characters, action, options.classify);
    r.corank_bound_ok = check_corank_bound(action.nvars(), r.rk, action.modulus(), r.det_char);
  }

  if (f.nvars() <= options.hessian_limit) {
    const Polynomial hess = hessian_det(f, options.hessian_limit);
    if (ideal_membership(hess, eq.algebra.jacobian_basis))
      throw ClaimViolation("Hessian determinant lies in the Jacobian ideal of " + to_string(f));
  }
  const std::size_t corank = f.nvars() - two_jet_rank(f);
  if (corank < 64 && r.mu < (std::uint64_t{1} << corank))
    throw ClaimViolation("Milnor number " + std::to_string(r.mu) + " below 2^" + std::to_string(corank) +
                         " for a germ of corank " + std::to_string(corank));
  return Analysis{r, eq.characters};
}

StabilityReport analyze(const Polynomial& f, const DiagonalAction& action, const AnalyzeOptions& options) {
  return analyze_with_characters(f, action, options).report;
}

}  // namespace eqsing
