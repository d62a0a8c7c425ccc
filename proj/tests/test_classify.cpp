#include <doctest.h>

#include "eqsing/classify.hpp"
#include "eqsing/errors.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/primes.hpp"

using namespace eqsing;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }
constexpr RepClass kAdmissible[] = {RepClass::TrivialOnly, RepClass::DetTensorW, RepClass::TwoDetPlusDetW,
                                    RepClass::TrivialPlus2W};
}  // namespace

TEST_CASE("class names round-trip") {
  for (RepClass c : kAdmissible) CHECK(rep_class_from_string(to_string(c)) == c);
  CHECK(rep_class_from_string(to_string(RepClass::Other)) == RepClass::Other);
  CHECK_FALSE(rep_class_from_string("nonsense").has_value());
}

TEST_CASE("expected multisets") {
  const DiagonalAction a(5, {1, 2});  // det = 3
  CHECK(expected_multiset(RepClass::TrivialOnly, a).mult == std::vector<std::uint64_t>{1, 0, 0, 0, 0});
  CHECK(expected_multiset(RepClass::DetTensorW, a).mult == std::vector<std::uint64_t>{1, 1, 1, 0, 1});
  CHECK(expected_multiset(RepClass::TwoDetPlusDetW, a).mult == std::vector<std::uint64_t>{1, 1, 1, 2, 1});
  CHECK(expected_multiset(RepClass::TrivialPlus2W, a).mult == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
  CHECK(expected_multiset(RepClass::TwoDetPlusDetW, a).dim() == 6);
  CHECK_THROWS_AS(expected_multiset(RepClass::DetTensorW, DiagonalAction(6, {1})), NotPrime);
  CHECK_THROWS_AS(expected_multiset(RepClass::Other, a), std::invalid_argument);
}

TEST_CASE("classifier is sound on every prime up to 31") {
  for (std::uint64_t p = 2; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t w1 = 0; w1 < static_cast<std::int64_t>(p); ++w1)
      for (std::int64_t w2 = 0; w2 < static_cast<std::int64_t>(p); ++w2) {
        const DiagonalAction a(p, {w1, w2});
        const bool det_trivial = det_character(a) == 0;
        for (RepClass c : kAdmissible) {
          const bool allowed = det_trivial == (c == RepClass::TrivialOnly || c == RepClass::TrivialPlus2W);
          const RepClass got = classify(expected_multiset(c, a), a);
          if (allowed) {
            CHECK(got == c);
          } else if (got != RepClass::Other) {
            // Only possible when two class multisets coincide (p = 2).
            CHECK(expected_multiset(got, a) == expected_multiset(c, a));
          }
        }
      }
  }
}

TEST_CASE("classify edge cases") {
  const DiagonalAction a(5, {1});
  CHECK(classify(CharacterMultiset::zero(5), a) == RepClass::Other);
  const auto dual = expected_multiset(RepClass::TwoDetPlusDetW, a).dual();
  CHECK(classify(dual, a) == RepClass::Other);
  CHECK(classify(dual, a, {.accept_mirrored = true}) == RepClass::TwoDetPlusDetW);
  CHECK_THROWS_AS(classify(CharacterMultiset::zero(4), DiagonalAction(4, {1})), NotPrime);
}

TEST_CASE("corank bound and exclusion") {
  CHECK(check_corank_bound(3, 0, 13, 3));   // 8 <= 14
  CHECK_FALSE(check_corank_bound(3, 0, 5, 3));
  CHECK(check_corank_bound(2, 2, 5, 0));
  CHECK_FALSE(check_corank_bound(2, 0, 5, 0));
  CHECK(check_corank_bound(5, 0, 97, 1));   // 32 <= 98
  const DiagonalAction a(7, {1, 6});
  CHECK_FALSE(excludes_trivial_plus_2w(expected_multiset(RepClass::TrivialPlus2W, a), a));
  CHECK(excludes_trivial_plus_2w(expected_multiset(RepClass::TrivialOnly, a), a));
}

TEST_CASE("analyze") {
  const auto r = analyze(P("x1^5", 1), DiagonalAction(5, {1}));
  CHECK(r.mu == 4);
  CHECK(r.nu == 1);
  CHECK(r.stable);
  CHECK(r.repclass == RepClass::DetTensorW);
  CHECK(r.det_char == 1);
  CHECK(r.corank_bound_ok == true);

  const auto r2 = analyze(P("x1^5 + x1*x2^2", 2), DiagonalAction(5, {1, 2}));
  CHECK(r2.mu == 6);
  CHECK(r2.repclass == RepClass::TwoDetPlusDetW);

  const auto morse = analyze(P("x1*x2", 2), DiagonalAction(5, {1, 4}));
  CHECK(morse.repclass == RepClass::TrivialOnly);
  CHECK(morse.rk == 2);
  CHECK(morse.real_action);

  const auto composite = analyze(P("x1^6", 1), DiagonalAction(6, {1}));
  CHECK_FALSE(composite.repclass.has_value());
  CHECK_FALSE(composite.corank_bound_ok.has_value());
  CHECK(composite.mu == 5);

  const auto unstable = analyze(P("x1^4 + x2^4", 2), DiagonalAction(2, {1, 1}));
  CHECK_FALSE(unstable.stable);
  CHECK(unstable.repclass == RepClass::Other);

  CHECK_THROWS_AS(analyze(P("x1^4", 1), DiagonalAction(5, {1})), NotInvariant);
  CHECK_THROWS_AS(analyze(P("x1^2", 2), DiagonalAction(2, {1, 0})), NonIsolated);
}
