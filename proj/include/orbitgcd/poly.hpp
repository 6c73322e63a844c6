#pragma once

// Sparse multivariate polynomials over the integers.
//
// Terms are kept in a vector sorted by graded-lexicographic order, largest
// first (x0 > x1 > ... inside one total degree), with no zero coefficients and
// no repeated monomials. Every operation returns a canonical polynomial.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitgcd/bigint.hpp"

namespace orbitgcd {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  /// True iff every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

/// Graded lexicographic order: total degree first, then x0, x1, ...
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Total degree of a polynomial. The zero polynomial carries its own tag
/// instead of a numeric stand-in.
class Degree {
 public:
  static constexpr Degree zero_polynomial() { return Degree(); }
  constexpr explicit Degree(std::uint64_t d) : value_(d), zero_poly_(false) {}

  constexpr bool is_zero_polynomial() const noexcept { return zero_poly_; }
  std::uint64_t value() const;

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.zero_poly_ == b.zero_poly_ && (a.zero_poly_ || a.value_ == b.value_);
  }

 private:
  constexpr Degree() = default;
  std::uint64_t value_ = 0;
  bool zero_poly_ = true;
};

class BigPoly {
 public:
  using Term = std::pair<Monomial, BigInt>;

  /// The zero polynomial in `arity` variables.
  explicit BigPoly(std::size_t arity = 1);

  static BigPoly constant(std::size_t arity, const BigInt& c);
  static BigPoly variable(std::size_t arity, std::size_t index);
  static BigPoly monomial(const Monomial& m, const BigInt& c);
  /// Combines duplicates, drops zeros and sorts. All monomials must have `arity`.
  static BigPoly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Degree degree() const;
  /// Largest term in graded-lex order; requires !is_zero().
  const Term& leading_term() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Coefficient of the constant monomial (0 if absent).
  BigInt constant_term() const;

  /// Text in the polynomial grammar, e.g. "x0^2*x1 - 3*x2^3"; "0" for zero.
  std::string to_string() const;

  BigPoly operator-() const;
  friend BigPoly operator+(const BigPoly& p, const BigPoly& q);
  friend BigPoly operator-(const BigPoly& p, const BigPoly& q);
  friend BigPoly operator*(const BigPoly& p, const BigPoly& q);
  friend BigPoly operator*(const BigInt& c, const BigPoly& p);
  friend bool operator==(const BigPoly& p, const BigPoly& q) {
    return p.arity_ == q.arity_ && p.terms_ == q.terms_;
  }

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Exact sum. Throws ArityError on mismatched arity.
BigPoly add(const BigPoly& p, const BigPoly& q);
BigPoly sub(const BigPoly& p, const BigPoly& q);
/// Exact product. Throws ArityError on mismatched arity.
BigPoly mul(const BigPoly& p, const BigPoly& q);
BigPoly pow(const BigPoly& p, std::uint32_t exp);

/// Value at an integer point; point.size() must equal the arity.
BigInt eval_int(const BigPoly& p, std::span<const BigInt> point);

/// p(subst[0], ..., subst[n-1]). The substitutions must be homogeneous of one
/// common degree (zero entries are allowed); throws DomainError otherwise.
BigPoly compose(const BigPoly& p, std::span<const BigPoly> subst);

/// gcd of the coefficients, non-negative; content(0) == 0.
BigInt content(const BigPoly& p);
/// p / content(p), sign kept.
BigPoly primitive_part(const BigPoly& p);

struct Homogeneity {
  bool homogeneous;
  Degree degree;  // meaningful only when homogeneous
};
Homogeneity is_homogeneous(const BigPoly& p);

/// p / q when q divides p exactly in Z[x], nullopt otherwise. q != 0.
std::optional<BigPoly> exact_divide(const BigPoly& p, const BigPoly& q);

/// Greatest common divisor in Z[x0..], primitive, with positive graded-lex
/// leading coefficient. gcd(p, 0) is the normalized primitive part of p.
BigPoly gcd_multivar(const BigPoly& p, const BigPoly& q);

/// Primitive part with positive leading coefficient.
BigPoly normalize_sign_primitive(const BigPoly& p);

}  // namespace orbitgcd
