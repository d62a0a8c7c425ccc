#include "eqsing/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "eqsing/errors.hpp"

namespace eqsing {

std::uint64_t Exponent::degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool Exponent::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool Exponent::divides(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Exponent Exponent::quotient_into(const Exponent& other) const {
  Exponent q(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] = other.e_[i] - e_[i];
  return q;
}

Exponent Exponent::lcm(const Exponent& other) const {
  Exponent l(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) l.e_[i] = std::max(e_[i], other.e_[i]);
  return l;
}

bool Exponent::coprime(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  Exponent s(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + other.e_[i];
  return s;
}

int LocalOrder::compare(const Exponent& a, const Exponent& b) noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void check_same_ring(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars())
    throw DimensionError("polynomials in " + std::to_string(p.nvars()) + " and " +
                         std::to_string(q.nvars()) + " variables");
}

bool term_before(const Term& a, const Term& b) {
  return LocalOrder::greater(a.exponent, b.exponent);
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  std::vector<Term> t;
  if (c != 0) t.push_back({Exponent(nvars), c});
  for (auto& term : t) term.coefficient.canonicalize();
  return Polynomial(nvars, std::move(t));
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c) {
  const auto n = e.size();
  std::vector<Term> t;
  if (c != 0) t.push_back({std::move(e), c});
  for (auto& term : t) term.coefficient.canonicalize();
  return Polynomial(n, std::move(t));
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw DimensionError("variable index " + std::to_string(var + 1) + " out of range");
  Exponent e(nvars);
  e[var] = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponent.size() != nvars) throw DimensionError("exponent length does not match nvars");
  // GMP arithmetic assumes canonical operands; callers may hand us e.g. 2/4.
  for (auto& t : terms) t.coefficient.canonicalize();
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return Polynomial(nvars, std::move(out));
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent.degree());
  return d;
}

std::uint64_t Polynomial::low_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().exponent.degree();
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return LocalOrder::greater(t.exponent, x); });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return 0;
}

Polynomial Polynomial::jet(std::uint64_t k) const {
  std::vector<Term> t;
  for (const auto& term : terms_)
    if (term.exponent.degree() <= k) t.push_back(term);
  return Polynomial(nvars_, std::move(t));
}

void Polynomial::truncate(std::uint64_t cut) {
  std::erase_if(terms_, [cut](const Term& t) { return t.exponent.degree() >= cut; });
}

Polynomial Polynomial::homogeneous_part(std::uint64_t k) const {
  std::vector<Term> t;
  for (const auto& term : terms_)
    if (term.exponent.degree() == k) t.push_back(term);
  return Polynomial(nvars_, std::move(t));
}

Polynomial Polynomial::times_term(const Exponent& e, const Rational& c) const {
  if (e.size() != nvars_) throw DimensionError("exponent length does not match nvars");
  if (c == 0) return Polynomial(nvars_);
  Rational factor = c;
  factor.canonicalize();
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.exponent + e, term.coefficient * factor});
  // Multiplication by a monomial preserves a monomial order.
  return Polynomial(nvars_, std::move(t));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  return times_term(Exponent(nvars_), c);
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  const Rational lc = terms_.front().coefficient;
  if (lc == 1) return;
  for (auto& t : terms_) t.coefficient /= lc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

std::vector<Term> Polynomial::merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = LocalOrder::compare(a[i].exponent, b[j].exponent);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (s != 0) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_same_ring(*this, q);
  terms_ = merge(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_same_ring(*this, q);
  terms_ = merge(terms_, q.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  check_same_ring(p, q);
  const Polynomial& small = p.size() <= q.size() ? p : q;
  const Polynomial& large = p.size() <= q.size() ? q : p;
  Polynomial acc(p.nvars());
  for (const auto& t : small.terms()) acc += large.times_term(t.exponent, t.coefficient);
  return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars())
    throw DimensionError("variable index " + std::to_string(var + 1) + " out of range 1.." +
                         std::to_string(p.nvars()));
  std::vector<Term> t;
  for (const auto& term : p.terms()) {
    const auto k = term.exponent[var];
    if (k == 0) continue;
    Exponent e = term.exponent;
    e[var] = k - 1;
    t.push_back({std::move(e), term.coefficient * k});
  }
  return Polynomial::from_terms(p.nvars(), std::move(t));
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> gens;
  gens.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
  return gens;
}

Term leading_term(const Polynomial& p, const LocalOrder& ord) {
  if (ord.nvars != p.nvars()) throw DimensionError("order and polynomial disagree on nvars");
  return p.leading();
}

Polynomial hessian_det(const Polynomial& f, std::size_t max_vars) {
  const std::size_t n = f.nvars();
  if (n > max_vars)
    throw ResourceLimit("Hessian of a germ in " + std::to_string(n) + " variables exceeds the limit of " +
                        std::to_string(max_vars));
  if (n == 0) return Polynomial::constant(0, 1);

  std::vector<std::vector<Polynomial>> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial fi = partial_derivative(f, i);
    for (std::size_t j = 0; j < n; ++j) h[i].push_back(partial_derivative(fi, j));
  }

  // minor[S] = det of rows (n - |S|)..n-1 restricted to the column set S.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Polynomial> minor(full + 1, Polynomial(n));
  minor[0] = Polynomial::constant(n, 1);
  std::vector<std::size_t> masks(full);
  std::iota(masks.begin(), masks.end(), std::size_t{1});
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  for (std::size_t mask : masks) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t row = n - k;
    Polynomial acc(n);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const auto& sub = minor[mask & ~(std::size_t{1} << col)];
      if (!h[row][col].is_zero() && !sub.is_zero()) {
        Polynomial prod = h[row][col] * sub;
        if (sign > 0) acc += prod; else acc -= prod;
      }
      sign = -sign;
    }
    minor[mask] = std::move(acc);
  }
  return minor[full];
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t two_jet_rank(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (const auto& t : f.terms()) {
    if (t.exponent.degree() != 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < t.exponent[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += 2 * t.coefficient;
    } else {
      m[idx[0]][idx[1]] += t.coefficient;
      m[idx[1]][idx[0]] += t.coefficient;
    }
  }
  return rational_rank(std::move(m));
}

std::string to_string(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    if (c < 0) {
      s += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      s += " + ";
    }
    first = false;
    const bool unit = t.exponent.is_zero();
    if (c != 1 || unit) {
      s += c.get_str();
      if (!unit) s += '*';
    }
    if (!unit) s += to_string(t.exponent);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << to_string(e); }

}  // namespace eqsing
