#include <doctest.h>

#include <random>

#include "eqsing/action.hpp"
#include "eqsing/errors.hpp"
#include "eqsing/oracle.hpp"
#include "eqsing/parse.hpp"

using namespace eqsing;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }
}  // namespace

TEST_CASE("actions and characters") {
  const DiagonalAction a(5, {1, -3});
  CHECK(a.weight(1) == 2);
  CHECK(weight_of(Exponent{2, 1}, a) == 4);
  CHECK(monomial_character(Exponent{2, 1}, a) == 1);
  CHECK(monomial_character(Exponent{2, 1}, a, CharacterConvention::Direct) == 4);
  CHECK(monomial_character(Exponent{0, 0}, a) == 0);
  CHECK_THROWS_AS(DiagonalAction(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalAction(3, std::span<const std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("invariance") {
  const DiagonalAction a(5, {1, 2});
  CHECK(is_invariant(P("x1^5 + x1*x2^2", 2), a));
  CHECK_FALSE(is_invariant(P("x1^5 + x1*x2", 2), a));
  CHECK(to_string(*non_invariant_monomial(P("x1^5 + x1*x2", 2), a)) == "x1*x2");
  CHECK_THROWS_AS(equivariant_milnor(P("x1^4", 1), DiagonalAction(5, {1})), NotInvariant);
}

TEST_CASE("equivariant Milnor multisets") {
  const DiagonalAction a(5, {1});
  const CharacterMultiset ms = equivariant_milnor(P("x1^5", 1), a);
  // Basis 1, x, x^2, x^3 with characters 0, 4, 3, 2.
  CHECK(ms.mult == std::vector<std::uint64_t>{1, 0, 1, 1, 1});
  CHECK(ms.dim() == 4);
  CHECK(ms.dual().mult == std::vector<std::uint64_t>{1, 1, 1, 1, 0});
  CHECK(nu(P("x1^5", 1), a) == 1);
  CHECK(nu(P("x1^5 + x1*x2^2", 2), DiagonalAction(5, {1, 2})) == 1);
  CHECK(nu(P("x1^4 + x2^4", 2), DiagonalAction(2, {1, 1})) == 5);
  CHECK(to_string(ms).find("0") != std::string::npos);
}

TEST_CASE("the Jacobian standard basis is graded") {
  const DiagonalAction a(13, {1, -2, 4});
  const auto eq = equivariant_algebra(P("x1^2*x2 + x2^2*x3 + x3^3*x1", 3), a);
  CHECK(is_graded(eq.algebra.jacobian_basis, a));
  CHECK(eq.characters.dim() == 12);
}

TEST_CASE("determinant and invariant quadric rank") {
  CHECK(det_character(DiagonalAction(5, {1, 2})) == 3);
  CHECK(det_character(DiagonalAction(5, {1, 4})) == 0);
  CHECK(max_invariant_quadratic_rank(DiagonalAction(5, {1, 4})) == 2);
  CHECK(max_invariant_quadratic_rank(DiagonalAction(5, {1, 1})) == 0);
  CHECK(max_invariant_quadratic_rank(DiagonalAction(4, {2, 0, 1})) == 2);
  CHECK(max_invariant_quadratic_rank(DiagonalAction(6, {1, 5, 5, 3})) == 3);
  CHECK(is_real_action(DiagonalAction(2, {1, 1, 0})));
  CHECK_FALSE(is_real_action(DiagonalAction(3, {1, 1})));
}

TEST_CASE("rank formula against sampled quadrics") {
  std::mt19937_64 rng(5);
  for (std::uint64_t m = 2; m <= 9; ++m)
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = 1 + it % 5;
      std::vector<std::int64_t> w(n);
      for (auto& x : w) x = std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(m) - 1)(rng);
      const DiagonalAction a(m, w);
      CHECK(max_invariant_quadratic_rank(a) == oracle::sampled_invariant_quadratic_rank(a, rng));
    }
}

TEST_CASE("characters of a product split") {
  // Milnor algebra of f(x) + g(y) is the tensor product; characters convolve.
  const DiagonalAction ax(7, {1}), ay(7, {3}), axy(7, {1, 3});
  const auto mx = equivariant_milnor(P("x1^7", 1), ax);
  const auto my = equivariant_milnor(P("x1^7", 1), ay);
  const auto mxy = equivariant_milnor(P("x1^7 + x2^7", 2), axy);
  auto conv = CharacterMultiset::zero(7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) conv.mult[(i + j) % 7] += mx.mult[i] * my.mult[j];
  CHECK(conv == mxy);
}
