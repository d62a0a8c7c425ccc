#ifndef EQSING_VERIFY_HPP
#define EQSING_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eqsing/action.hpp"
#include "eqsing/poly.hpp"

namespace eqsing {

/// One row of the verification table.
struct CheckResult {
  int criterion = 0;
  std::string claim;
  std::string computed;
  std::string expected;
  bool passed = false;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20261019;
  std::size_t sweep_samples = 200;
  std::size_t oracle_samples = 100;
  /// Convention used for the main run. Criterion 9 always evaluates
  /// criterion 1 under the opposite convention and expects it to fail.
  CharacterConvention convention = CharacterConvention::Contragredient;
};

using CheckCallback = std::function<void(const CheckResult&)>;

// Individual criteria. Each returns one row per case it examines.
std::vector<CheckResult> check_class2_realization(CharacterConvention convention);
std::vector<CheckResult> check_class3_realization(CharacterConvention convention);
std::vector<CheckResult> check_loop_family();
std::vector<CheckResult> check_exclusion_sweep(std::uint64_t seed, std::size_t samples, CharacterConvention convention);
std::vector<CheckResult> check_oracle_equivalence(std::uint64_t seed, std::size_t samples);
std::vector<CheckResult> check_rank_formula(std::uint64_t seed);
std::vector<CheckResult> check_prime_hunt();
std::vector<CheckResult> check_erdos_statistic();
std::vector<CheckResult> check_convention_pin(CharacterConvention convention);

/// Runs every criterion in order; on_result sees each row as it is produced.
std::vector<CheckResult> run_paper_checks(const VerifyOptions& options, const CheckCallback& on_result = {});

/// Random germ in nvars variables with 1..max_terms monomials of degree
/// 2..max_degree and small nonzero integer coefficients.
Polynomial random_germ(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms);

/// Like random_germ, but drawing only from monomials the action fixes.
/// Returns nullopt when there are none of degree 2..max_degree.
std::optional<Polynomial> random_invariant_germ(std::mt19937_64& rng, const DiagonalAction& action,
                                                std::uint32_t max_degree, std::size_t max_terms);

}  // namespace eqsing

#endif  // EQSING_VERIFY_HPP
