// Command-line front end: analyze, loop, hunt, erdos, verify-paper.
//
// Exit codes: 0 success, 1 verification failure or internal inconsistency,
// 2 usage error, 3 mathematical precondition violated, 4 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "eqsing/classify.hpp"
#include "eqsing/construct.hpp"
#include "eqsing/errors.hpp"
#include "eqsing/json_io.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/primes.hpp"
#include "eqsing/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kPrecondition = 3, kResource = 4 };

void print_report(const eqsing::StabilityReport& r) {
  auto opt_bool = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a (composite modulus)"; };
  std::cout << "mu:              " << r.mu << '\n'
            << "nu:              " << r.nu << '\n'
            << "stable:          " << (r.stable ? "true" : "false") << '\n'
            << "repclass:        " << (r.repclass ? std::string(to_string(*r.repclass)) : "n/a (composite modulus)")
            << '\n'
            << "det_char:        " << r.det_char << '\n'
            << "rk:              " << r.rk << '\n'
            << "corank_bound_ok: " << opt_bool(r.corank_bound_ok) << '\n'
            << "real_action:     " << (r.real_action ? "true" : "false") << '\n';
}

int run_verify(const eqsing::VerifyOptions& options) {
  std::size_t failed = 0;
  std::cout << std::left;
  auto row = [&](const eqsing::CheckResult& r) {
    if (!r.passed) ++failed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.claim << '\n'
              << "        computed: " << r.computed << '\n'
              << "        expected: " << r.expected << '\n'
              << "        time:     " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    std::cout.flush();
  };
  const auto rows = eqsing::run_paper_checks(options, row);
  std::cout << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Milnor algebras of germs under diagonal cyclic actions"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Stability report for an invariant germ");
  std::string germ;
  std::uint64_t modulus = 0;
  std::vector<std::int64_t> weights;
  bool json = false;
  analyze->add_option("germ", germ, "Polynomial in x1..xn, e.g. \"x1^2*x2 + x2^2*x3 + x3^3*x1\"")->required();
  analyze->add_option("--mod", modulus, "Group order m")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  analyze->add_option("--weights", weights, "Weights w1,...,wn")->required()->delimiter(',');
  analyze->add_flag("--json", json, "Emit JSON");

  auto* loop = app.add_subcommand("loop", "Build and check the loop germ for exponents d");
  std::vector<std::uint64_t> d;
  std::uint64_t mu_cap = eqsing::kDefaultMuCap;
  loop->add_option("--d", d, "Exponents d1,...,dn (n odd, each >= 2)")->required()->delimiter(',');
  loop->add_option("--mu-cap", mu_cap, "Refuse loops with Milnor number above this");

  auto* hunt = app.add_subcommand("hunt", "Primes p whose p-1 groups into many loop exponents");
  std::uint64_t hunt_max = 0;
  std::size_t min_factors = 1;
  hunt->add_option("--max", hunt_max, "Largest p to consider")->required();
  hunt->add_option("--min-factors", min_factors, "Minimum grouped length")->required();

  auto* erdos = app.add_subcommand("erdos", "Share of primes p <= N with many prime divisors of p-1");
  std::uint64_t erdos_max = 0;
  double epsilon = 0.5;
  erdos->add_option("--max", erdos_max, "N")->required();
  erdos->add_option("--epsilon", epsilon, "epsilon in (0, 1)")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the full verification suite");
  eqsing::VerifyOptions vopts;
  std::string convention = "contragredient";
  verify->add_option("--seed", vopts.seed, "Seed for the randomized sweeps");
  verify->add_option("--sweep-samples", vopts.sweep_samples, "Random invariant germs in the exclusion sweep");
  verify->add_option("--oracle-samples", vopts.oracle_samples, "Random germs compared with the jet-space oracle");
  verify->add_option("--convention", convention, "Character sign convention")
      ->check(CLI::IsMember({"contragredient", "direct"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) {
      const eqsing::DiagonalAction action(modulus, weights);
      const eqsing::Polynomial f = eqsing::parse_polynomial(germ, action.nvars());
      const auto report = eqsing::analyze(f, action);
      if (json) std::cout << nlohmann::json(report).dump(2) << '\n';
      else print_report(report);
    } else if (*loop) {
      std::cout << nlohmann::json(eqsing::verify_loop(eqsing::LoopSpec{d}, mu_cap)).dump(2) << '\n';
    } else if (*hunt) {
      std::cout << nlohmann::json(eqsing::hunt(hunt_max, min_factors)).dump(2) << '\n';
    } else if (*erdos) {
      std::cout << nlohmann::json(eqsing::erdos_statistic(erdos_max, epsilon)).dump(2) << '\n';
    } else if (*verify) {
      vopts.convention = convention == "direct" ? eqsing::CharacterConvention::Direct
                                                : eqsing::CharacterConvention::Contragredient;
      return run_verify(vopts);
    }
  } catch (const eqsing::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const eqsing::DimensionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const eqsing::NotInvariant& e) {
    std::cerr << "NotInvariant: " << e.what() << '\n';
    return kPrecondition;
  } catch (const eqsing::NonIsolated& e) {
    std::cerr << "NonIsolated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const eqsing::NotACriticalPoint& e) {
    std::cerr << "NotACriticalPoint: " << e.what() << '\n';
    return kPrecondition;
  } catch (const eqsing::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const eqsing::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
