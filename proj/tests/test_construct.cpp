#include <doctest.h>

#include "eqsing/construct.hpp"
#include "eqsing/errors.hpp"
#include "eqsing/parse.hpp"

using namespace eqsing;

TEST_CASE("loop polynomials") {
  const LoopGerm g = loop_polynomial(LoopSpec{{2, 2, 3}});
  CHECK(g.f == parse_polynomial("x1^2*x2 + x2^2*x3 + x3^3*x1", 3));
  CHECK(g.action.modulus() == 13);
  CHECK(g.action.weight(0) == 1);
  CHECK(g.action.weight(1) == 11);
  CHECK(g.action.weight(2) == 4);
  CHECK(loop_polynomial(LoopSpec{{4}}).f == parse_polynomial("x1^5", 1));
}

TEST_CASE("verify_loop") {
  const LoopReport single = verify_loop(LoopSpec{{2}});
  CHECK(single.m == 3);
  CHECK(single.mu == 2);
  CHECK(single.repclass == RepClass::DetTensorW);

  const LoopReport r = verify_loop(LoopSpec{{2, 2, 3}});
  CHECK(r.m == 13);
  CHECK(r.m_prime);
  CHECK(r.mu == 12);
  CHECK(r.nu == 1);
  CHECK(r.corank == 3);
  CHECK(r.rk == 0);
  CHECK(r.bound_ok == true);

  const LoopReport c = verify_loop(LoopSpec{{2, 2, 2}});
  CHECK(c.m == 9);
  CHECK_FALSE(c.m_prime);
  CHECK(c.mu == 8);
  CHECK(c.nu == 1);
  CHECK_FALSE(c.repclass.has_value());

  const LoopReport big = verify_loop(LoopSpec{{2, 2, 2, 2, 6}});
  CHECK(big.m == 97);
  CHECK(big.mu == 96);
  CHECK(big.repclass == RepClass::DetTensorW);
}

TEST_CASE("invalid loops") {
  CHECK_THROWS_AS(verify_loop(LoopSpec{{2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_loop(LoopSpec{{}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_loop(LoopSpec{{1, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_loop(LoopSpec{{50, 50, 50}}), ResourceLimit);
  const LoopSpec huge{{1ull << 40, 1ull << 40, 2}};
  CHECK_THROWS_AS(huge.validate(), ResourceLimit);
}
