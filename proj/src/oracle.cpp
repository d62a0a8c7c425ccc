#include "eqsing/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace eqsing::oracle {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // ascending column

// Monomials of degree < order, numbered by degree.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, std::size_t order) {
    std::vector<Exponent::value_type> cur(nvars, 0);
    for (std::size_t d = 0; d < order; ++d) fill(cur, 0, d);
  }

  std::size_t size() const { return list_.size(); }
  const std::vector<Exponent>& list() const { return list_; }
  std::size_t at(const Exponent& e) const { return index_.at(e); }

 private:
  void fill(std::vector<Exponent::value_type>& cur, std::size_t var, std::size_t remaining) {
    if (cur.empty()) {
      if (remaining == 0) add(Exponent(0));
      return;
    }
    if (var + 1 == cur.size()) {
      cur[var] = static_cast<Exponent::value_type>(remaining);
      add(Exponent(cur));
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      cur[var] = static_cast<Exponent::value_type>(remaining - k);
      fill(cur, var + 1, k);
    }
  }

  void add(Exponent e) {
    index_.emplace(e, list_.size());
    list_.push_back(std::move(e));
  }

  std::vector<Exponent> list_;
  std::map<Exponent, std::size_t> index_;
};

SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  // a - factor * b
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : pivot_(ncols, kNone) {}

  void insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t col = row.front().first;
      if (pivot_[col] == kNone) {
        const Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        pivot_[col] = rows_.size();
        rows_.push_back(std::move(row));
        return;
      }
      const Rational factor = row.front().second;
      row = axpy(row, factor, rows_[pivot_[col]]);
    }
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_;
  std::vector<SparseRow> rows_;
};

}  // namespace

std::size_t truncated_jacobian_quotient_dim(const Polynomial& f, std::size_t order) {
  const std::size_t n = f.nvars();
  const MonomialIndex monomials(n, order);
  Echelon echelon(monomials.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial g = partial_derivative(f, i);
    if (g.is_zero()) continue;
    std::uint64_t low = g.degree();
    for (const auto& t : g.terms()) low = std::min(low, t.exponent.degree());
    for (const auto& beta : monomials.list()) {
      if (beta.degree() + low >= order) continue;
      SparseRow row;
      for (const auto& t : g.terms()) {
        const Exponent e = t.exponent + beta;
        if (e.degree() < order) row.emplace_back(monomials.at(e), t.coefficient);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      echelon.insert(std::move(row));
    }
  }
  return monomials.size() - echelon.rank();
}

std::optional<std::size_t> jet_space_milnor(const Polynomial& f, std::size_t max_order) {
  std::size_t previous = truncated_jacobian_quotient_dim(f, 1);
  for (std::size_t k = 2; k <= max_order; ++k) {
    const std::size_t current = truncated_jacobian_quotient_dim(f, k);
    if (current == previous) return current;
    previous = current;
  }
  return std::nullopt;
}

std::size_t sampled_invariant_quadratic_rank(const DiagonalAction& action, std::mt19937_64& rng, int tries) {
  const std::size_t n = action.nvars();
  const std::uint64_t m = action.modulus();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if ((action.weight(i) + action.weight(j)) % m == 0) pairs.emplace_back(i, j);

  std::uniform_int_distribution<long> coeff(1, 1'000'000);
  std::size_t best = 0;
  for (int t = 0; t < tries; ++t) {
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, 0));
    for (auto [i, j] : pairs) {
      const Rational c = coeff(rng);
      if (i == j) {
        h[i][i] += 2 * c;
      } else {
        h[i][j] += c;
        h[j][i] += c;
      }
    }
    // Gaussian elimination, kept local so the oracle shares no code with the library.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
      std::size_t piv = rank;
      while (piv < n && h[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(h[piv], h[rank]);
      for (std::size_t r = rank + 1; r < n; ++r) {
        if (h[r][col] == 0) continue;
        const Rational factor = h[r][col] / h[rank][col];
        for (std::size_t c = col; c < n; ++c) h[r][c] -= factor * h[rank][c];
      }
      ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

}  // namespace eqsing::oracle
