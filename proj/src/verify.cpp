#include "eqsing/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "eqsing/classify.hpp"
#include "eqsing/construct.hpp"
#include "eqsing/errors.hpp"
#include "eqsing/localstd.hpp"
#include "eqsing/oracle.hpp"
#include "eqsing/primes.hpp"

namespace eqsing {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Germs analyzed by criteria 1-3, re-examined by the exclusion sweep.
struct Analyzed {
  std::string label;
  DiagonalAction action;
  Analysis analysis;
};
using AnalyzedLog = std::vector<Analyzed>;

std::string fmt_class(const std::optional<RepClass>& c) { return c ? std::string(to_string(*c)) : "skipped"; }

std::string fmt_d(const std::vector<std::uint64_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string fmt_report(const StabilityReport& r) {
  std::ostringstream os;
  os << "mu=" << r.mu << " nu=" << r.nu << " class=" << fmt_class(r.repclass);
  return os.str();
}

Polynomial power_germ(std::uint32_t p) { return Polynomial::monomial(Exponent{p}); }

// x^p + x y^2
Polynomial class3_germ(std::uint32_t p) {
  return Polynomial::monomial(Exponent{p, 0}) + Polynomial::monomial(Exponent{1, 2});
}

std::vector<CheckResult> class2(CharacterConvention convention, AnalyzedLog* log) {
  std::vector<CheckResult> out;
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    CheckResult r{1, "x^" + std::to_string(p) + " under Z/" + std::to_string(p) + " is class DetTensorW", "",
                  "mu=" + std::to_string(p - 1) + " nu=1 class=DetTensorW, < 1 s", false, 0};
    const auto start = Clock::now();
    try {
      const DiagonalAction action(p, {1});
      AnalyzeOptions opts;
      opts.convention = convention;
      Analysis a = analyze_with_characters(power_germ(p), action, opts);
      r.seconds = seconds_since(start);
      r.computed = fmt_report(a.report);
      r.passed = a.report.mu == p - 1 && a.report.nu == 1 && a.report.repclass == RepClass::DetTensorW &&
                 r.seconds < 1.0;
      if (log) log->push_back({"x^" + std::to_string(p), action, std::move(a)});
    } catch (const std::exception& e) {
      r.seconds = seconds_since(start);
      r.computed = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> class3(CharacterConvention convention, AnalyzedLog* log) {
  std::vector<CheckResult> out;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    CheckResult r{2,
                  "x^" + std::to_string(p) + " + x*y^2 under Z/" + std::to_string(p) + ", weights (1," +
                      std::to_string((p - 1) / 2) + ") is class TwoDetPlusDetW",
                  "", "mu=" + std::to_string(p + 1) + " nu=1 class=TwoDetPlusDetW hess notin J, < 5 s", false, 0};
    const auto start = Clock::now();
    try {
      const Polynomial f = class3_germ(p);
      const DiagonalAction action(p, {1, static_cast<std::int64_t>((p - 1) / 2)});
      AnalyzeOptions opts;
      opts.convention = convention;
      Analysis a = analyze_with_characters(f, action, opts);
      const StandardBasis jb = standard_basis(jacobian_ideal(f), LocalOrder{2});
      const bool hess_outside = !ideal_membership(hessian_det(f), jb);
      r.seconds = seconds_since(start);
      r.computed = fmt_report(a.report) + (hess_outside ? " hess notin J" : " hess in J");
      r.passed = a.report.mu == p + 1 && a.report.nu == 1 && a.report.repclass == RepClass::TwoDetPlusDetW &&
                 hess_outside && r.seconds < 5.0;
      if (log) log->push_back({"x^" + std::to_string(p) + "+xy^2", action, std::move(a)});
    } catch (const std::exception& e) {
      r.seconds = seconds_since(start);
      r.computed = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult loop_case(const LoopSpec& spec, int criterion, AnalyzedLog* log) {
  std::uint64_t prod = 1;
  for (auto d : spec.d) prod *= d;
  const std::uint64_t m = prod + 1;
  const bool prime = is_prime(m);
  CheckResult r{criterion, "loop " + fmt_d(spec.d) + " under Z/" + std::to_string(m), "",
                "mu=" + std::to_string(prod) + " nu=1" + (prime ? " class=DetTensorW bound_ok" : ""), false, 0};
  const auto start = Clock::now();
  try {
    const LoopReport lr = verify_loop(spec);
    r.seconds = seconds_since(start);
    std::ostringstream os;
    os << "mu=" << lr.mu << " nu=" << lr.nu;
    if (lr.m_prime) os << " class=" << fmt_class(lr.repclass) << (lr.bound_ok.value_or(false) ? " bound_ok" : " bound_fail");
    os << " corank=" << lr.corank;
    r.computed = os.str();
    r.passed = lr.mu == prod && lr.nu == 1 && lr.m_prime == prime;
    if (prime) r.passed = r.passed && lr.repclass == RepClass::DetTensorW && lr.bound_ok == true;
    if (log) {
      const LoopGerm germ = loop_polynomial(spec);
      log->push_back({"loop " + fmt_d(spec.d), germ.action, analyze_with_characters(germ.f, germ.action)});
    }
  } catch (const std::exception& e) {
    r.seconds = seconds_since(start);
    r.computed = std::string("error: ") + e.what();
  }
  return r;
}

std::vector<CheckResult> loops(AnalyzedLog* log) {
  std::vector<CheckResult> out;
  const auto start = Clock::now();
  for (const auto& d : std::vector<std::vector<std::uint64_t>>{{2}, {2, 2, 3}, {2, 2, 2}, {2, 3, 5}, {2, 2, 2, 2, 6}})
    out.push_back(loop_case(LoopSpec{d}, 3, log));
  const double total = seconds_since(start);
  out.push_back({3, "loop family within the 5 min budget", std::to_string(total) + " s", "< 300 s", total < 300.0,
                 total});
  return out;
}

std::vector<Exponent> monomials_between(std::size_t nvars, std::uint32_t lo, std::uint32_t hi) {
  std::vector<Exponent> out;
  std::vector<Exponent::value_type> cur(nvars, 0);
  // Odometer over the box [0, hi]^n, filtered by degree.
  for (;;) {
    std::uint32_t deg = 0;
    for (auto v : cur) deg += v;
    if (deg >= lo && deg <= hi) out.emplace_back(cur);
    std::size_t i = 0;
    while (i < nvars && cur[i] == hi) cur[i++] = 0;
    if (i == nvars) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial random_from(std::mt19937_64& rng, std::size_t nvars, const std::vector<Exponent>& pool,
                       std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(1, std::min(max_terms, pool.size()));
  std::uniform_int_distribution<int> coeff(-5, 4);
  std::vector<Exponent> chosen;
  std::sample(pool.begin(), pool.end(), std::back_inserter(chosen), count(rng), rng);
  Polynomial f(nvars);
  for (auto& e : chosen) {
    int c = coeff(rng);
    if (c >= 0) ++c;  // nonzero in [-5, 5]
    f += Polynomial::monomial(std::move(e), c);
  }
  return f;
}

std::vector<CheckResult> exclusion(std::uint64_t seed, std::size_t samples, CharacterConvention convention,
                                   const AnalyzedLog& prior) {
  const auto start = Clock::now();
  std::size_t stable = 0, violations = 0, det_trivial_nonmorse = 0, analyzed = 0, attempts = 0;
  std::size_t non_isolated = 0, capped = 0;
  std::string first_violation;
  auto examine = [&](const std::string& label, const DiagonalAction& action, const Analysis& a) {
    if (!is_prime(action.modulus())) return;  // the classes are defined for Z/p only
    ++analyzed;
    if (!a.report.stable) return;
    ++stable;
    if (!excludes_trivial_plus_2w(a.characters, action)) {
      ++violations;
      if (first_violation.empty()) first_violation = label;
    }
    if (a.report.det_char == 0 && a.report.mu != 1) {
      ++det_trivial_nonmorse;
      if (first_violation.empty()) first_violation = label;
    }
  };
  for (const auto& g : prior) examine(g.label, g.action, g.analysis);

  std::mt19937_64 rng(seed);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::size_t swept = 0;
  AnalyzeOptions opts;
  opts.convention = convention;
  while (swept < samples && attempts < 200 * samples) {
    ++attempts;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::uint64_t m = primes[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    std::vector<std::int64_t> w(n);
    for (auto& wi : w) wi = std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(m) - 1)(rng);
    const DiagonalAction action(m, w);
    const auto f = random_invariant_germ(rng, action, 6, 5);
    if (!f) continue;
    try {
      const Analysis a = analyze_with_characters(*f, action, opts);
      examine(to_string(*f), action, a);
      ++swept;
    } catch (const NonIsolated&) {
      ++non_isolated;
    } catch (const ResourceLimit&) {
      ++capped;
    } catch (const std::logic_error& e) {
      ++violations;
      ++swept;
      if (first_violation.empty()) first_violation = to_string(*f) + ": " + e.what();
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream computed;
  computed << analyzed << " germs (" << swept << " random), " << stable << " stable, " << violations
           << " C+2W, " << det_trivial_nonmorse << " det=1 non-Morse; skipped " << non_isolated
           << " non-isolated, " << capped << " over budget";
  if (!first_violation.empty()) computed << "; first: " << first_violation;
  return {{4, "no stable germ has mu_G = C + 2W; stable with det = 1 implies Morse", computed.str(),
           ">= " + std::to_string(samples) + " random germs, 0 violations",
           swept >= samples && violations == 0 && det_trivial_nonmorse == 0, secs}};
}

std::vector<CheckResult> oracle_equivalence(std::uint64_t seed, std::size_t samples) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t compared = 0, mismatches = 0, attempts = 0, mu_max = 0, capped = 0;
  std::string first_mismatch;
  while (compared < samples && attempts < 100 * samples) {
    ++attempts;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const Polynomial f = random_germ(rng, n, 6, 5);
    std::optional<std::size_t> mu;
    try {
      mu = milnor_number(f);
    } catch (const NonIsolated&) {
      continue;
    } catch (const ResourceLimit&) {
      ++capped;
      continue;
    }
    ++compared;
    mu_max = std::max(mu_max, *mu);
    const auto reference = oracle::jet_space_milnor(f);
    if (reference != mu) {
      ++mismatches;
      if (first_mismatch.empty())
        first_mismatch = to_string(f) + ": mora " + std::to_string(*mu) + " vs oracle " +
                         (reference ? std::to_string(*reference) : std::string("unstable"));
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream computed;
  computed << compared << " germs (mu up to " << mu_max << "), " << mismatches << " mismatches";
  if (capped != 0) computed << ", " << capped << " skipped over budget";
  if (!first_mismatch.empty()) computed << "; first: " << first_mismatch;
  return {{5, "Milnor number equals the truncated-jet oracle", computed.str(),
           ">= " + std::to_string(samples) + " germs, 0 mismatches", compared >= samples && mismatches == 0, secs}};
}

std::vector<CheckResult> rank_formula(std::uint64_t seed) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed + 6);
  std::size_t cases = 0, mismatches = 0;
  std::string first;
  for (std::uint64_t m = 2; m <= 13; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::int64_t> w(n, 0);
      for (;;) {
        const DiagonalAction action(m, w);
        const std::size_t formula = max_invariant_quadratic_rank(action);
        const std::size_t brute = oracle::sampled_invariant_quadratic_rank(action, rng);
        ++cases;
        if (formula != brute) {
          ++mismatches;
          if (first.empty()) first = "m=" + std::to_string(m) + " w=" + fmt_d({w.begin(), w.end()});
        }
        std::size_t i = 0;
        while (i < n && w[i] == static_cast<std::int64_t>(m) - 1) w[i++] = 0;
        if (i == n) break;
        ++w[i];
      }
    }
  }
  const double secs = seconds_since(start);
  std::string computed = std::to_string(cases) + " actions, " + std::to_string(mismatches) + " mismatches";
  if (!first.empty()) computed += "; first: " + first;
  return {{6, "rk formula equals sampled invariant-quadric rank (n <= 4, m <= 13)", computed, "0 mismatches",
           mismatches == 0, secs}};
}

std::vector<CheckResult> prime_hunt() {
  std::vector<CheckResult> out;
  struct Case {
    std::uint64_t max_p;
    std::size_t k;
    HuntHit want;
  };
  for (const Case& c : {Case{100, 5, {97, {2, 2, 2, 2, 6}}}, Case{20, 3, {13, {2, 2, 3}}}}) {
    const auto start = Clock::now();
    CheckResult r{7, "hunt(" + std::to_string(c.max_p) + ", " + std::to_string(c.k) + ") finds p=" +
                         std::to_string(c.want.p) + " and its d-vector is a valid loop",
                  "", "(" + std::to_string(c.want.p) + ", " + fmt_d(c.want.d) + "), mu=" +
                          std::to_string(c.want.p - 1) + " nu=1",
                  false, 0};
    try {
      const auto hits = hunt(c.max_p, c.k);
      const auto it = std::find_if(hits.begin(), hits.end(), [&](const HuntHit& h) { return h.p == c.want.p; });
      if (it == hits.end()) {
        r.computed = "p=" + std::to_string(c.want.p) + " missing";
      } else {
        const LoopReport lr = verify_loop(LoopSpec{it->d});
        r.computed = "(" + std::to_string(it->p) + ", " + fmt_d(it->d) + "), mu=" + std::to_string(lr.mu) +
                     " nu=" + std::to_string(lr.nu);
        r.passed = *it == c.want && lr.mu == c.want.p - 1 && lr.nu == 1 && lr.m == c.want.p;
      }
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
    }
    r.seconds = seconds_since(start);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> erdos() {
  std::vector<CheckResult> out;
  const auto start = Clock::now();
  try {
    const ErdosStatistic s = erdos_statistic(100'000, 0.5);
    out.push_back({8, "Erdos statistic at N=1e5, eps=0.5",
                   "threshold=" + std::to_string(s.threshold) + " fraction=" + std::to_string(s.fraction),
                   "fraction >= 0.8", s.fraction >= 0.8, seconds_since(start)});
    std::string series;
    bool monotone = true;
    double previous = -1;
    for (double eps : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double f = erdos_statistic(100'000, eps).fraction;
      series += (series.empty() ? "" : " ") + std::to_string(f);
      monotone = monotone && f >= previous;
      previous = f;
    }
    const double secs = seconds_since(start);
    out.push_back({8, "Erdos fraction nondecreasing in eps over {0.1,...,0.9}", series, "nondecreasing, < 60 s",
                   monotone && secs < 60.0, secs});
  } catch (const std::exception& e) {
    out.push_back({8, "Erdos statistic", std::string("error: ") + e.what(), "fraction >= 0.8", false,
                   seconds_since(start)});
  }
  return out;
}

CharacterConvention flipped(CharacterConvention c) {
  return c == CharacterConvention::Contragredient ? CharacterConvention::Direct
                                                  : CharacterConvention::Contragredient;
}

std::vector<CheckResult> convention_pin(CharacterConvention convention) {
  const auto start = Clock::now();
  const auto rows = class2(flipped(convention), nullptr);
  std::size_t broken = 0;
  for (const auto& r : rows)
    if (!r.passed) ++broken;
  return {{9, "flipping the character sign breaks the x^p classification",
           std::to_string(broken) + "/" + std::to_string(rows.size()) + " cases fail when flipped",
           "at least one case fails", broken > 0, seconds_since(start)}};
}

}  // namespace

std::vector<CheckResult> check_class2_realization(CharacterConvention convention) { return class2(convention, nullptr); }
std::vector<CheckResult> check_class3_realization(CharacterConvention convention) { return class3(convention, nullptr); }
std::vector<CheckResult> check_loop_family() { return loops(nullptr); }
std::vector<CheckResult> check_exclusion_sweep(std::uint64_t seed, std::size_t samples,
                                               CharacterConvention convention) {
  return exclusion(seed, samples, convention, {});
}
std::vector<CheckResult> check_oracle_equivalence(std::uint64_t seed, std::size_t samples) {
  return oracle_equivalence(seed, samples);
}
std::vector<CheckResult> check_rank_formula(std::uint64_t seed) { return rank_formula(seed); }
std::vector<CheckResult> check_prime_hunt() { return prime_hunt(); }
std::vector<CheckResult> check_erdos_statistic() { return erdos(); }
std::vector<CheckResult> check_convention_pin(CharacterConvention convention) { return convention_pin(convention); }

std::vector<CheckResult> run_paper_checks(const VerifyOptions& options, const CheckCallback& on_result) {
  std::vector<CheckResult> all;
  auto take = [&](std::vector<CheckResult> rows) {
    for (auto& r : rows) {
      if (on_result) on_result(r);
      all.push_back(std::move(r));
    }
  };
  AnalyzedLog log;
  take(class2(options.convention, &log));
  take(class3(options.convention, &log));
  take(loops(&log));
  take(exclusion(options.seed, options.sweep_samples, options.convention, log));
  take(oracle_equivalence(options.seed, options.oracle_samples));
  take(rank_formula(options.seed));
  take(prime_hunt());
  take(erdos());
  take(convention_pin(options.convention));
  return all;
}

Polynomial random_germ(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms) {
  return random_from(rng, nvars, monomials_between(nvars, 2, max_degree), max_terms);
}

std::optional<Polynomial> random_invariant_germ(std::mt19937_64& rng, const DiagonalAction& action,
                                                std::uint32_t max_degree, std::size_t max_terms) {
  std::vector<Exponent> pool;
  for (auto& e : monomials_between(action.nvars(), 2, max_degree))
    if (weight_of(e, action) == 0) pool.push_back(std::move(e));
  if (pool.empty()) return std::nullopt;
  return random_from(rng, action.nvars(), pool, max_terms);
}

}  // namespace eqsing
