#include <doctest.h>

#include <random>

#include "eqsing/errors.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/poly.hpp"

using namespace eqsing;

namespace {

Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }

Polynomial random_poly(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> deg(0, 4), coef(-6, 6), count(0, 5);
  std::vector<Term> t;
  for (int k = count(rng); k > 0; --k) {
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<Exponent::value_type>(deg(rng));
    t.push_back({e, Rational(coef(rng), 1 + std::abs(coef(rng)))});
  }
  return Polynomial::from_terms(n, std::move(t));
}

}  // namespace

TEST_CASE("local order") {
  const LocalOrder ord{2};
  CHECK(ord.greater(Exponent{0, 0}, Exponent{1, 0}));
  CHECK(ord.greater(Exponent{1, 0}, Exponent{2, 0}));
  CHECK(ord.greater(Exponent{2, 1}, Exponent{1, 2}));  // x^2 y before x y^2
  CHECK(ord.greater(Exponent{1, 0}, Exponent{0, 1}));
  CHECK(LocalOrder::compare(Exponent{1, 1}, Exponent{1, 1}) == 0);
}

TEST_CASE("leading term and arithmetic") {
  const Polynomial f = P("x1^5 + x1*x2^2", 2);
  CHECK(to_string(f.leading().exponent) == "x1*x2^2");
  CHECK(leading_term(P("x1 + 1", 1), LocalOrder{1}).exponent.is_zero());
  CHECK(P("(x1+x2)^2", 2) == P("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK((f - f).is_zero());
  CHECK(P("x1*x2 - x2*x1", 2).is_zero());
  CHECK_THROWS_AS(Polynomial(2).leading(), std::domain_error);
  CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), DimensionError);
  CHECK(P("x1^3 + x1^2 + 1", 1).jet(2) == P("x1^2 + 1", 1));
  CHECK(P("x1^3 + x1^2*x2 + x1", 2).homogeneous_part(3) == P("x1^3 + x1^2*x2", 2));
  CHECK(P("x1^3 + x1 + 1", 1).low_degree() == 0);
  Polynomial g = P("x1^3 + x1^2 + x1", 1);
  g.truncate(2);
  CHECK(g == P("x1", 1));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const auto p = random_poly(rng, 3), q = random_poly(rng, 3), r = random_poly(rng, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Polynomial(3));
    CHECK(p * Polynomial::constant(3, 1) == p);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i));
    for (std::size_t k = 1; k < p.size(); ++k)
      CHECK(LocalOrder::greater(p.terms()[k - 1].exponent, p.terms()[k].exponent));
  }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  const Polynomial f = P("x1^3 - 2*x1*x2^2 + 5*x2^3 + x1*x2*x3", 3);
  Polynomial euler(3);
  for (std::size_t i = 0; i < 3; ++i) euler += Polynomial::variable(3, i) * partial_derivative(f, i);
  CHECK(euler == f.scaled(3));
}

TEST_CASE("Hessian determinant and 2-jet rank") {
  CHECK(hessian_det(P("x1^5 + x1*x2^2", 2)) == P("40*x1^4 - 4*x2^2", 2));
  CHECK(hessian_det(P("x1^2 + x2^2 + x3^2", 3)) == Polynomial::constant(3, 8));
  CHECK(two_jet_rank(P("x1^2 + x2^2 + x3^3", 3)) == 2);
  CHECK(two_jet_rank(P("x1*x2 + x3^3", 3)) == 2);
  CHECK(two_jet_rank(P("x1^3", 1)) == 0);
  CHECK_THROWS_AS(hessian_det(Polynomial(3), 2), ResourceLimit);
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("printing") {
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(P("1 - x1^2*x2", 2)).find("x1^2*x2") != std::string::npos);
}
