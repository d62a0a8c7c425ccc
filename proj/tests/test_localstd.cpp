#include <doctest.h>

#include <random>

#include "eqsing/errors.hpp"
#include "eqsing/localstd.hpp"
#include "eqsing/oracle.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/verify.hpp"

using namespace eqsing;

namespace {

Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }

StandardBasis basis_of(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(s, n));
  return standard_basis(g, LocalOrder{n});
}

}  // namespace

TEST_CASE("Mora normal form") {
  const LocalOrder ord{1};
  // x^3 is not divisible by x^4: the unit 1 + x does not help.
  const std::vector<Polynomial> g{P("5*x1^4", 1)};
  CHECK_FALSE(mora_normal_form(P("20*x1^3", 1), g, ord).is_zero());
  CHECK(mora_normal_form(P("x1^5", 1), g, ord).is_zero());
  // x - x^2 = x(1 - x) generates the maximal ideal locally.
  const std::vector<Polynomial> h{P("x1 - x1^2", 1)};
  CHECK(mora_normal_form(P("x1", 1), h, ord).is_zero());
  CHECK_FALSE(mora_normal_form(P("1 + x1", 1), h, ord).is_zero());
}

TEST_CASE("standard basis of x^5 + x y^2") {
  const LocalOrder ord{2};
  const Polynomial f = P("x1^5 + x1*x2^2", 2);
  const StandardBasis b = standard_basis(jacobian_ideal(f), ord);
  const StandardMonomials sm = standard_monomials(b);
  REQUIRE(sm.finite);
  CHECK(sm.monomials.size() == 6);
  CHECK(to_string(sm.monomials.front()) == "1");
  for (const auto& g : b.generators) CHECK(g.leading().coefficient == 1);
  for (const auto& g : jacobian_ideal(f)) CHECK(ideal_membership(g, b));
  CHECK_FALSE(ideal_membership(P("x1", 2), b));
}

TEST_CASE("infinite quotients are detected") {
  const StandardBasis b = basis_of({"x1^2"}, 2);
  const StandardMonomials sm = standard_monomials(b);
  CHECK_FALSE(sm.finite);
  CHECK(sm.missing_variable == 1u);
  CHECK(standard_monomials(basis_of({"1 + x1"}, 2)).monomials.empty());
  CHECK_THROWS_AS(standard_basis(std::vector<Polynomial>{Polynomial(2)}, LocalOrder{2}), std::invalid_argument);
  CHECK_THROWS_AS(standard_monomials(basis_of({"x1^100", "x2^100"}, 2), 1000), ResourceLimit);
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number(P("x1^5 + x1*x2^2", 2)) == 6);
  CHECK(milnor_number(P("x1^3 + x2^3", 2)) == 4);
  CHECK(milnor_number(P("x1^2*x2 + x2^2*x3 + x3^3*x1", 3)) == 12);
  CHECK(milnor_number(P("x1^2 + x2^2 + x3^2", 3)) == 1);
  CHECK(milnor_number(P("x1^4 + x2^4 + x1^2*x2^2", 2)) == 9);
  // Brieskorn-Pham: mu = prod (a_i - 1).
  for (std::uint32_t a = 2; a <= 5; ++a)
    for (std::uint32_t b = 2; b <= 6; ++b)
      for (std::uint32_t c = 2; c <= 4; ++c) {
        const std::string s = "x1^" + std::to_string(a) + " + x2^" + std::to_string(b) + " + x3^" + std::to_string(c);
        CHECK(milnor_number(P(s.c_str(), 3)) == (a - 1) * (b - 1) * (c - 1));
      }
  // A unit factor changes nothing.
  CHECK(milnor_number(P("(1 + x1 + x2)*(x1^3 + x2^4)", 2)) == 6);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(milnor_algebra(P("x1 + x2^2", 2)), NotACriticalPoint);
  CHECK_THROWS_AS(milnor_algebra(P("x1^2", 2)), NonIsolated);
  CHECK_THROWS_AS(milnor_algebra(P("x1^2*x2^2", 2)), NonIsolated);
  CHECK_THROWS_AS(milnor_algebra(P("(x1^2 - x2^3)^2", 2)), NonIsolated);
  CHECK_THROWS_AS(milnor_algebra(P("7", 2)), NonIsolated);
  // Critical along a curve that is not an axis.
  CHECK_THROWS_AS(milnor_algebra(P("(x1 - x2^2)^2 + x3^2", 3)), NonIsolated);
  CHECK_THROWS_AS(milnor_algebra(P("x2*x3 + x1^3*x2", 3)), NonIsolated);
  CHECK_THROWS_AS(milnor_algebra(P("-3*x2*x3 + 5*x2^4 - x1^3*x2*x3 + 3*x1^5*x2 + 3*x1*x2^2*x3^3", 3)), NonIsolated);
  // x*y is Morse in two variables even though x divides it.
  CHECK(milnor_number(P("x1*x2", 2)) == 1);
  CHECK_THROWS_AS(milnor_algebra(P("(1 + x1 + x2)*(x1^3 + x2^4)", 2), kDefaultMonomialLimit, 5), ResourceLimit);
}

TEST_CASE("truncated standard bases") {
  const LocalOrder ord{2};
  const std::vector<Polynomial> g{P("x1^2", 2)};
  const StandardBasis b = standard_basis(g, ord, {.truncation_degree = 4});
  REQUIRE(b.degree_cut.has_value());
  const StandardMonomials sm = standard_monomials(b);
  CHECK(sm.finite);
  CHECK(sm.monomials.size() == 7);  // 1, x1, x2, x1*x2, x2^2, x1*x2^2, x2^3
  CHECK(ideal_membership(P("x2^4 + x1^2*x2", 2), b));
  CHECK_FALSE(ideal_membership(P("x2^3", 2), b));
  // Highest corner: x^3, y^3 force m^5 into the ideal.
  const std::vector<Polynomial> h{P("x1^3 + x2^7", 2), P("x2^3 + x1^9", 2)};
  const StandardBasis c = standard_basis(h, ord);
  CHECK(c.degree_cut.value_or(99) <= 5);
  CHECK(standard_monomials(c).monomials.size() == 9);
}

TEST_CASE("normal forms are idempotent and deterministic") {
  const Polynomial f = P("x1^2*x2 + x2^2*x3 + x3^3*x1", 3);
  const StandardBasis b1 = standard_basis(jacobian_ideal(f), LocalOrder{3});
  const StandardBasis b2 = standard_basis(jacobian_ideal(f), LocalOrder{3});
  CHECK(b1.generators == b2.generators);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    const Polynomial h = random_germ(rng, 3, 5, 4);
    const Polynomial r = mora_normal_form(h, b1.generators, b1.order);
    CHECK(mora_normal_form(r, b1.generators, b1.order) == r);
  }
}

TEST_CASE("agreement with the jet-space oracle") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (int it = 0; it < 300 && compared < 60; ++it) {
    const Polynomial f = random_germ(rng, 1 + it % 3, 6, 4);
    std::size_t mu = 0;
    try {
      mu = milnor_number(f);
    } catch (const NonIsolated&) {
      CHECK_FALSE(oracle::jet_space_milnor(f, 16).has_value());
      continue;
    }
    ++compared;
    CHECK_MESSAGE(oracle::jet_space_milnor(f) == mu, to_string(f));
  }
  CHECK(compared >= 60);
}

TEST_CASE("the leading ideal of the generators alone is not enough") {
  // Without completion, the staircase of df/dx_i undercounts or overcounts.
  const Polynomial f = P("x1^5 + x1*x2^2", 2);
  const auto jac = jacobian_ideal(f);
  StandardBasis raw{jac, LocalOrder{2}, {}};
  for (const auto& g : jac) raw.staircase.push_back(g.leading().exponent);
  const StandardMonomials sm = standard_monomials(raw);
  CHECK((!sm.finite || sm.monomials.size() != *oracle::jet_space_milnor(f)));
}
