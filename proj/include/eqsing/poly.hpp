#ifndef EQSING_POLY_HPP
#define EQSING_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace eqsing {

using Rational = mpq_class;

/// Exponent vector of a monomial x^a in a fixed number of variables.
class Exponent {
 public:
  using value_type = std::uint32_t;

  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  explicit Exponent(std::vector<value_type> e) : e_(std::move(e)) {}
  Exponent(std::initializer_list<value_type> e) : e_(e) {}

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  std::span<const value_type> values() const noexcept { return e_; }

  std::uint64_t degree() const noexcept;
  bool is_zero() const noexcept;
  /// x^this divides x^other.
  bool divides(const Exponent& other) const noexcept;
  /// Exponent of x^other / x^this; requires divides(other).
  Exponent quotient_into(const Exponent& other) const;
  Exponent lcm(const Exponent& other) const;
  bool coprime(const Exponent& other) const noexcept;

  Exponent operator+(const Exponent& other) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  /// Plain lexicographic comparison, for use as a container key only.
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  std::vector<value_type> e_;
};

/// Negative-degree reverse lexicographic order ("ds").
///
/// a > b iff deg(a) < deg(b), or the degrees agree and at the last index where
/// a and b differ a has the smaller entry. The constant monomial is the unique
/// maximum, so the order is local. In particular x^2*y > x*y^2.
struct LocalOrder {
  std::size_t nvars;

  /// +1 if a > b, -1 if a < b, 0 if equal.
  static int compare(const Exponent& a, const Exponent& b) noexcept;
  static bool greater(const Exponent& a, const Exponent& b) noexcept { return compare(a, b) > 0; }
};

struct Term {
  Exponent exponent;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in decreasing LocalOrder, so the leading term in the
/// local ring is always terms().front(). No stored coefficient is zero.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(Exponent e, const Rational& c = 1);
  /// The coordinate function x_{var+1}; var is 0-based.
  static Polynomial variable(std::size_t nvars, std::size_t var);
  /// Builds from arbitrary terms: merges repeated exponents and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Leading term for the local order. Throws std::domain_error on zero.
  const Term& leading() const;
  /// Maximal total degree among terms; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  /// Minimal total degree among terms (the order of vanishing at 0).
  std::uint64_t low_degree() const noexcept;
  Rational coefficient(const Exponent& e) const;

  /// Sum of the terms of total degree <= k.
  Polynomial jet(std::uint64_t k) const;
  /// Drops, in place, every term of total degree >= cut.
  void truncate(std::uint64_t cut);
  /// Sum of the terms of total degree exactly k.
  Polynomial homogeneous_part(std::uint64_t k) const;

  /// c * x^e * (*this).
  Polynomial times_term(const Exponent& e, const Rational& c) const;
  Polynomial scaled(const Rational& c) const;
  /// Divides through by the leading coefficient.
  void make_monic();

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Polynomial(std::size_t nvars, std::vector<Term> sorted_terms)
      : nvars_(nvars), terms_(std::move(sorted_terms)) {}

  static std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign);

  std::size_t nvars_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// d p / d x_{var+1}; var is 0-based.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// (df/dx1, ..., df/dxn). Zero derivatives are kept in place.
std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

/// Ord-maximal term of p. Throws std::domain_error for p == 0.
Term leading_term(const Polynomial& p, const LocalOrder& ord);

inline constexpr std::size_t kDefaultHessianLimit = 8;

/// Exact determinant of the Hessian matrix of f, by Laplace expansion with
/// memoized minors. Throws ResourceLimit when nvars exceeds max_vars.
Polynomial hessian_det(const Polynomial& f, std::size_t max_vars = kDefaultHessianLimit);

/// Rank of the quadratic part of f, i.e. of the Hessian at the origin.
std::size_t two_jet_rank(const Polynomial& f);

/// Renders p with variables x1..xn, terms in local order.
std::string to_string(const Polynomial& p);
std::string to_string(const Exponent& e);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Exponent& e);

/// Row rank of a dense rational matrix, by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace eqsing

#endif  // EQSING_POLY_HPP
