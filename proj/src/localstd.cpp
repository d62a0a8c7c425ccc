#include "eqsing/localstd.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "eqsing/errors.hpp"

namespace eqsing {

namespace {

struct Reducer {
  Polynomial poly;
  Exponent lead;
  std::uint64_t ecart;

  explicit Reducer(Polynomial p)
      : poly(std::move(p)), lead(poly.leading().exponent), ecart(poly.degree() - lead.degree()) {}
};

using Cut = std::optional<std::uint64_t>;

struct Budget {
  std::uint64_t limit = 0;  // 0: unlimited
  std::uint64_t used = 0;

  void spend(std::size_t terms) {
    used += terms;
    if (limit != 0 && used > limit)
      throw ResourceLimit("standard basis computation exceeded " + std::to_string(limit) + " term operations");
  }
};

void check_ring(const Polynomial& p, const LocalOrder& ord) {
  if (p.nvars() != ord.nvars)
    throw DimensionError("polynomial in " + std::to_string(p.nvars()) + " variables, order on " +
                         std::to_string(ord.nvars));
}

// h - (lc(h)/lc(g)) * x^(lm(h)-lm(g)) * g, cancelling the leading term of h.
Polynomial reduce_once(const Polynomial& h, const Reducer& g) {
  const Term& lt = h.leading();
  const Exponent shift = g.lead.quotient_into(lt.exponent);
  const Rational factor = lt.coefficient / g.poly.leading().coefficient;
  return h - g.poly.times_term(shift, factor);
}

// Mora reduction. With a cut, terms of degree >= cut are discarded as they
// appear; the caller guarantees that those monomials lie in the ideal.
Polynomial weak_normal_form(Polynomial h, std::vector<Reducer> reducers, Cut cut, Budget* budget = nullptr) {
  if (cut) h.truncate(*cut);
  while (!h.is_zero()) {
    const Exponent& lead = h.leading().exponent;
    std::size_t best = reducers.size();
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!reducers[i].lead.divides(lead)) continue;
      if (best == reducers.size() || reducers[i].ecart < reducers[best].ecart) best = i;
      if (reducers[best].ecart == 0) break;
    }
    if (best == reducers.size()) break;
    const std::uint64_t ecart_h = h.degree() - lead.degree();
    if (budget) budget->spend(h.size() + reducers[best].poly.size());
    Polynomial next = reduce_once(h, reducers[best]);
    if (cut) next.truncate(*cut);
    // Below a degree cut the leading monomials live in a finite set, so plain
    // reduction terminates and T never needs to grow.
    if (!cut && reducers[best].ecart > ecart_h) reducers.emplace_back(std::move(h));
    h = std::move(next);
  }
  return h;
}

Polynomial s_polynomial(const Reducer& f, const Reducer& g) {
  const Exponent l = f.lead.lcm(g.lead);
  const Polynomial a = f.poly.times_term(f.lead.quotient_into(l), 1 / Rational(f.poly.leading().coefficient));
  const Polynomial b = g.poly.times_term(g.lead.quotient_into(l), 1 / Rational(g.poly.leading().coefficient));
  return a - b;
}

struct Pair {
  std::uint64_t degree;
  Exponent lcm;
  std::size_t i;
  std::size_t j;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (const int c = LocalOrder::compare(a.lcm, b.lcm); c != 0) return c > 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Calls visit(e) for every exponent of total degree d with e[i] < bound[i].
template <class Visit>
void for_each_in_box(std::vector<Exponent::value_type>& cur, std::size_t var, std::uint64_t remaining,
                     const std::vector<Exponent::value_type>& bound, Visit&& visit) {
  if (var + 1 == cur.size()) {
    if (remaining < bound[var]) {
      cur[var] = static_cast<Exponent::value_type>(remaining);
      visit(Exponent(cur));
    }
    return;
  }
  const std::uint64_t top = std::min<std::uint64_t>(remaining, bound[var] - 1);
  for (std::uint64_t k = 0; k <= top; ++k) {
    cur[var] = static_cast<Exponent::value_type>(k);
    for_each_in_box(cur, var + 1, remaining - k, bound, visit);
  }
}

// Smallest pure power of each variable among the leads (0 = none), capped by cut.
std::vector<Exponent::value_type> pure_power_bounds(std::span<const Exponent> leads, std::size_t n, Cut cut) {
  std::vector<Exponent::value_type> bound(n, 0);
  for (const auto& s : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || s[var] < bound[var])) bound[var] = s[var];
  }
  if (cut) {
    const auto c = static_cast<Exponent::value_type>(std::min<std::uint64_t>(*cut, UINT32_MAX));
    for (auto& b : bound)
      if (b == 0 || b > c) b = c;
  }
  return bound;
}

// Monomials outside <leads> + m^cut, degree by degree; bound must be fully set.
// Returns false when more than `limit` would be produced.
template <class Layer>
bool enumerate_standard(std::span<const Exponent> leads, const std::vector<Exponent::value_type>& bound, Cut cut,
                        std::size_t limit, Layer&& on_layer) {
  std::vector<Exponent::value_type> cur(bound.size(), 0);
  std::size_t total = 0;
  for (std::uint64_t d = 0; !cut || d < *cut; ++d) {
    std::vector<Exponent> layer;
    for_each_in_box(cur, 0, d, bound, [&](Exponent e) {
      for (const auto& s : leads)
        if (s.divides(e)) return;
      layer.push_back(std::move(e));
    });
    if (layer.empty()) break;
    total += layer.size();
    if (total > limit) return false;
    on_layer(d, std::move(layer));
  }
  return true;
}

}  // namespace

Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> reducers, const LocalOrder& ord) {
  check_ring(p, ord);
  std::vector<Reducer> t;
  for (const auto& g : reducers) {
    check_ring(g, ord);
    if (!g.is_zero()) t.emplace_back(g);
  }
  return weak_normal_form(p, std::move(t), std::nullopt);
}

StandardBasis standard_basis(std::span<const Polynomial> gens, const LocalOrder& ord,
                             const StandardBasisOptions& options) {
  const std::size_t n = ord.nvars;
  Cut cut = options.truncation_degree;
  Budget budget{options.work_limit};
  std::vector<Reducer> basis;
  std::vector<bool> alive;
  std::set<Pair, PairOrder> pairs;

  auto live_reducers = [&] {
    std::vector<Reducer> r;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (alive[i]) r.push_back(basis[i]);
    return r;
  };

  // Lowers the cut to one past the top degree of the staircase, if finite.
  auto try_highest_corner = [&] {
    if (n == 0) return;
    std::vector<Exponent> leads;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (alive[i]) leads.push_back(basis[i].lead);
    for (const auto& l : leads)
      if (l.is_zero()) return;
    const auto bound = pure_power_bounds(leads, n, cut);
    if (std::find(bound.begin(), bound.end(), 0u) != bound.end()) return;
    std::uint64_t top = 0;
    bool any = false;
    if (!enumerate_standard(leads, bound, cut, kDefaultMonomialLimit, [&](std::uint64_t d, auto&&) {
          top = d;
          any = true;
        }))
      return;
    if (!any) return;
    const std::uint64_t corner = top + 1;
    if (cut && *cut <= corner) return;
    cut = corner;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!alive[i]) continue;
      if (basis[i].lead.degree() >= corner) {
        alive[i] = false;
        continue;
      }
      Polynomial p = std::move(basis[i].poly);
      p.truncate(corner);
      basis[i] = Reducer(std::move(p));
    }
  };

  auto adjoin = [&](Polynomial h) {
    h.make_monic();
    Reducer r(std::move(h));
    const std::size_t j = basis.size();
    for (std::size_t i = 0; i < j; ++i) {
      if (!alive[i]) continue;
      if (options.product_criterion && basis[i].lead.coprime(r.lead)) continue;
      Exponent l = basis[i].lead.lcm(r.lead);
      const auto d = l.degree();
      if (cut && d >= *cut) continue;
      pairs.insert(Pair{d, std::move(l), i, j});
    }
    basis.push_back(std::move(r));
    alive.push_back(true);
    if (options.highest_corner) try_highest_corner();
  };

  bool any_nonzero = false;
  for (const auto& g : gens) {
    check_ring(g, ord);
    if (g.is_zero()) continue;
    any_nonzero = true;
    Polynomial h = weak_normal_form(g, live_reducers(), cut, &budget);
    if (!h.is_zero()) adjoin(std::move(h));
  }
  if (!any_nonzero) throw std::invalid_argument("standard basis of the zero ideal");

  while (!pairs.empty()) {
    const Pair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    if (!alive[pair.i] || !alive[pair.j] || (cut && pair.degree >= *cut)) continue;
    Polynomial h = weak_normal_form(s_polynomial(basis[pair.i], basis[pair.j]), live_reducers(), cut, &budget);
    if (!h.is_zero()) adjoin(std::move(h));
  }

  // Minimalize: drop elements whose leading exponent is divisible by another's.
  StandardBasis out{{}, ord, {}, cut};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !alive[j] || !basis[j].lead.divides(basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (redundant) continue;
    out.staircase.push_back(basis[i].lead);
    out.generators.push_back(std::move(basis[i].poly));
  }
  return out;
}

StandardMonomials standard_monomials(const StandardBasis& basis, std::size_t limit) {
  const std::size_t n = basis.order.nvars;
  StandardMonomials result;
  for (const auto& s : basis.staircase)
    if (s.is_zero()) return result;  // unit ideal: the quotient is zero
  if (basis.degree_cut == 0u) return result;
  if (n == 0) {
    result.monomials.emplace_back(0);
    return result;
  }
  const auto bound = pure_power_bounds(basis.staircase, n, basis.degree_cut);
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == 0) {
      result.finite = false;
      result.missing_variable = i;
      return result;
    }
  }
  const bool ok = enumerate_standard(basis.staircase, bound, basis.degree_cut, limit, [&](std::uint64_t, auto&& layer) {
    std::sort(layer.begin(), layer.end(), LocalOrder::greater);
    for (auto& e : layer) result.monomials.push_back(std::move(e));
  });
  if (!ok) throw ResourceLimit("more than " + std::to_string(limit) + " standard monomials");
  return result;
}

bool ideal_membership(const Polynomial& h, const StandardBasis& basis) {
  check_ring(h, basis.order);
  std::vector<Reducer> t;
  for (const auto& g : basis.generators) t.emplace_back(g);
  return weak_normal_form(h, std::move(t), basis.degree_cut).is_zero();
}

MilnorAlgebra milnor_algebra(const Polynomial& f, std::size_t limit, std::uint64_t work_limit) {
  if (const Polynomial linear = f.homogeneous_part(1); !linear.is_zero())
    throw NotACriticalPoint("germ has a nonzero linear part: " + to_string(linear));
  const std::size_t n = f.nvars();
  const LocalOrder ord{n};
  const std::vector<Polynomial> jac = jacobian_ideal(f);
  if (std::all_of(jac.begin(), jac.end(), [](const Polynomial& g) { return g.is_zero(); }))
    throw NonIsolated("Jacobian ideal is zero: the germ is constant");
  for (std::size_t i = 0; i < n; ++i)
    if (jac[i].is_zero())
      throw NonIsolated("germ does not depend on x" + std::to_string(i + 1) + ": critical along that axis");

  // Cheap exact certificate: every partial vanishes along a coordinate axis.
  for (std::size_t axis = 0; axis < n; ++axis) {
    const bool critical_along = std::all_of(jac.begin(), jac.end(), [&](const Polynomial& g) {
      return std::none_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
        return t.exponent.degree() == t.exponent[axis];
      });
    });
    if (critical_along)
      throw NonIsolated("non-isolated critical point: the Jacobian vanishes along the x" + std::to_string(axis + 1) +
                        " axis");
  }

  // f = x_i^a * g with g(0) = 0: critical along {x_i = 0} when a >= 2, and
  // along {x_i = g = 0}, of dimension n - 2, when n >= 3.
  for (std::size_t i = 0; i < n; ++i) {
    Exponent::value_type a = UINT32_MAX;
    for (const auto& t : f.terms())
      if (!t.exponent.is_zero()) a = std::min(a, t.exponent[i]);
    if (a == UINT32_MAX || a == 0 || (a == 1 && n < 3) || n < 2) continue;
    throw NonIsolated("non-isolated critical point: x" + std::to_string(i + 1) +
                      (a == 1 ? "" : "^" + std::to_string(a)) + " divides the germ");
  }

  // Bezout: an isolated zero of n equations has multiplicity <= product of degrees.
  std::uint64_t bezout = 1;
  for (const auto& g : jac) {
    const std::uint64_t d = g.degree();
    bezout = bezout > UINT64_MAX / d ? UINT64_MAX : bezout * d;
  }

  for (std::uint64_t k = 8;; k *= 2) {
    StandardBasis basis = standard_basis(jac, ord, {.truncation_degree = k, .work_limit = work_limit});
    StandardMonomials sm = standard_monomials(basis, limit);
    const std::uint64_t top = sm.monomials.empty() ? 0 : sm.monomials.back().degree();
    if (sm.monomials.empty() || top + 1 < k) {
      // No standard monomial of degree k-1, so m^(k-1) lies in J + m^k, hence in J.
      return MilnorAlgebra{std::move(basis), std::move(sm.monomials)};
    }
    if (sm.monomials.size() > bezout) {
      std::string missing;
      const auto bound = pure_power_bounds(basis.staircase, n, std::nullopt);
      for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0) missing += (missing.empty() ? "x" : ", x") + std::to_string(i + 1);
      std::string msg = "non-isolated critical point: dim Q/(J + m^" + std::to_string(k) +
                        ") = " + std::to_string(sm.monomials.size()) + " exceeds the Bezout bound " +
                        std::to_string(bezout);
      if (!missing.empty()) msg += "; no pure power of " + missing + " below degree " + std::to_string(k);
      throw NonIsolated(msg);
    }
  }
}

std::size_t milnor_number(const Polynomial& f) { return milnor_algebra(f).monomials.size(); }

}  // namespace eqsing
