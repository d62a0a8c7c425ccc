#include "eqsing/action.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eqsing/errors.hpp"

namespace eqsing {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void check_vars(const DiagonalAction& action, std::size_t nvars) {
  if (action.nvars() != nvars)
    throw DimensionError("action on " + std::to_string(action.nvars()) + " variables applied to " +
                         std::to_string(nvars));
}

}  // namespace

DiagonalAction::DiagonalAction(std::uint64_t modulus, std::span<const std::int64_t> weights) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (weights.empty()) throw std::invalid_argument("action needs at least one weight");
  const auto m = static_cast<__int128>(modulus);
  weights_.reserve(weights.size());
  for (const auto w : weights) weights_.push_back(static_cast<std::uint64_t>(((w % m) + m) % m));
}

std::uint64_t CharacterMultiset::dim() const noexcept {
  return std::accumulate(mult.begin(), mult.end(), std::uint64_t{0});
}

CharacterMultiset CharacterMultiset::dual() const {
  CharacterMultiset d = zero(modulus());
  for (std::uint64_t c = 0; c < mult.size(); ++c) d.mult[(modulus() - c) % modulus()] = mult[c];
  return d;
}

std::string to_string(const CharacterMultiset& ms) {
  std::string s = "{";
  bool first = true;
  for (std::size_t c = 0; c < ms.mult.size(); ++c) {
    if (ms.mult[c] == 0) continue;
    s += (first ? "" : ", ") + std::to_string(c) + ":" + std::to_string(ms.mult[c]);
    first = false;
  }
  return s + "}";
}

std::uint64_t weight_of(const Exponent& a, const DiagonalAction& action) {
  check_vars(action, a.size());
  const std::uint64_t m = action.modulus();
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + mulmod(action.weight(i), a[i] % m, m)) % m;
  return s;
}

std::uint64_t monomial_character(const Exponent& a, const DiagonalAction& action, CharacterConvention convention) {
  const std::uint64_t w = weight_of(a, action);
  if (convention == CharacterConvention::Direct) return w;
  return (action.modulus() - w) % action.modulus();
}

std::optional<Exponent> non_invariant_monomial(const Polynomial& f, const DiagonalAction& action) {
  check_vars(action, f.nvars());
  for (const auto& t : f.terms())
    if (weight_of(t.exponent, action) != 0) return t.exponent;
  return std::nullopt;
}

bool is_invariant(const Polynomial& f, const DiagonalAction& action) {
  return !non_invariant_monomial(f, action).has_value();
}

bool is_graded(const StandardBasis& basis, const DiagonalAction& action) {
  for (const auto& g : basis.generators) {
    if (g.is_zero()) continue;
    const std::uint64_t w = weight_of(g.leading().exponent, action);
    for (const auto& t : g.terms())
      if (weight_of(t.exponent, action) != w) return false;
  }
  return true;
}

EquivariantAlgebra equivariant_algebra(const Polynomial& f, const DiagonalAction& action,
                                       CharacterConvention convention) {
  if (auto bad = non_invariant_monomial(f, action))
    throw NotInvariant("monomial " + to_string(*bad) + " has weight " + std::to_string(weight_of(*bad, action)) +
                       " mod " + std::to_string(action.modulus()));
  EquivariantAlgebra out{milnor_algebra(f), CharacterMultiset::zero(action.modulus())};
  if (!is_graded(out.algebra.jacobian_basis, action))
    throw ClaimViolation("standard basis of an invariant Jacobian ideal is not graded by the action");
  for (const auto& e : out.algebra.monomials) ++out.characters.mult[monomial_character(e, action, convention)];
  return out;
}

CharacterMultiset equivariant_milnor(const Polynomial& f, const DiagonalAction& action,
                                     CharacterConvention convention) {
  return equivariant_algebra(f, action, convention).characters;
}

std::uint64_t nu(const Polynomial& f, const DiagonalAction& action) {
  return equivariant_milnor(f, action).mult[0];
}

std::uint64_t det_character(const DiagonalAction& action) {
  std::uint64_t s = 0;
  for (const auto w : action.weights()) s = (s + w) % action.modulus();
  return s;
}

std::size_t max_invariant_quadratic_rank(const DiagonalAction& action) {
  const std::uint64_t m = action.modulus();
  std::vector<std::uint64_t> ws(action.weights().begin(), action.weights().end());
  std::sort(ws.begin(), ws.end());
  auto count = [&](std::uint64_t c) {
    auto [lo, hi] = std::equal_range(ws.begin(), ws.end(), c);
    return static_cast<std::size_t>(hi - lo);
  };
  std::size_t rank = 0;
  for (auto it = ws.begin(); it != ws.end(); it = std::upper_bound(it, ws.end(), *it)) {
    const std::uint64_t c = *it;
    const std::uint64_t opposite = (m - c) % m;
    if (opposite == c) rank += count(c);
    else if (c < opposite) rank += 2 * std::min(count(c), count(opposite));
  }
  return rank;
}

bool is_real_action(const DiagonalAction& action) {
  return max_invariant_quadratic_rank(action) == action.nvars();
}

}  // namespace eqsing
