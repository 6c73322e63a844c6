#pragma once

// Points of P^N(Q), rational self-maps of P^N and their orbits.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitgcd/bigint.hpp"
#include "orbitgcd/poly.hpp"

namespace orbitgcd {

/// A point of P^N(Q) in primitive integer coordinates whose first nonzero
/// coordinate is positive. Construct through make_point.
class ProjPoint {
 public:
  const std::vector<BigInt>& coords() const noexcept { return coords_; }
  std::size_t arity() const noexcept { return coords_.size(); }
  /// Largest |coordinate|.
  BigInt norm() const;
  /// Bit length of the largest coordinate.
  std::size_t bits() const;
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend ProjPoint make_point(std::vector<BigInt> raw);

 private:
  explicit ProjPoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  std::vector<BigInt> coords_;
};

/// Divides by the coordinate gcd and fixes the sign. Throws DomainError when all
/// coordinates are zero.
ProjPoint make_point(std::vector<BigInt> raw);

/// f : P^N --> P^N given by N+1 coprime forms of a common degree d >= 1.
class RationalMap {
 public:
  const std::vector<BigPoly>& components() const noexcept { return components_; }
  std::uint64_t degree() const noexcept { return degree_; }
  std::size_t arity() const noexcept { return components_.size(); }
  std::string to_string() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.components_ == b.components_; }
  friend RationalMap make_map(std::vector<BigPoly> components);

 private:
  RationalMap(std::vector<BigPoly> components, std::uint64_t degree)
      : components_(std::move(components)), degree_(degree) {}
  std::vector<BigPoly> components_;
  std::uint64_t degree_;
};

/// Validates homogeneity and reduces the tuple: divides out the polynomial gcd of
/// all components, then their common integer content, and makes the leading
/// coefficient of the first nonzero component positive. The stored degree is the
/// reduced one. Throws DomainError for inhomogeneous components, degree mismatch
/// or an all-zero tuple, ArityError when the component count is not the arity.
RationalMap make_map(std::vector<BigPoly> components);

RationalMap identity_map(std::size_t arity);

/// Homogeneous generators of the ideal of a closed subscheme Y.
class SubschemeIdeal {
 public:
  /// Throws DomainError for an empty list, zero or inhomogeneous generators and
  /// constants, ArityError on mixed arities.
  explicit SubschemeIdeal(std::vector<BigPoly> generators);

  const std::vector<BigPoly>& generators() const noexcept { return generators_; }
  const std::vector<std::uint64_t>& degrees() const noexcept { return degrees_; }
  std::size_t arity() const noexcept { return generators_.front().arity(); }

 private:
  std::vector<BigPoly> generators_;
  std::vector<std::uint64_t> degrees_;
};

/// f(x), or nullopt when every component vanishes at x (x is in the
/// indeterminacy locus of the reduced representation).
std::optional<ProjPoint> apply(const RationalMap& f, const ProjPoint& x);

struct IterateOptions {
  /// Upper bound on the unreduced degree deg(f) * deg(f^(k-1)) at each step.
  std::uint64_t degree_cap = 729;
};

/// Reduced representative of f^n (n >= 1), built as f o f^(n-1) with a reduction
/// after every step. Throws BudgetExceeded when a step would pass the cap.
RationalMap iterate_map(const RationalMap& f, std::uint32_t n, IterateOptions options = {});

/// One composition step: reduced representative of f o g.
RationalMap compose_maps(const RationalMap& f, const RationalMap& g);

struct Orbit {
  /// x_0, x_1, ... up to x_{n_max}, minus any point found in the indeterminacy
  /// locus (and everything after it).
  std::vector<ProjPoint> points;
  /// Index n with f^n(x) in I_f, when the orbit stopped there.
  std::optional<std::size_t> indeterminate_at;
  /// First repeat x_j == x_i (i < j): preperiod i, period j - i.
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> period;

  bool truncated() const noexcept { return indeterminate_at.has_value(); }
  bool periodic() const noexcept { return period.has_value(); }
};

Orbit orbit(const RationalMap& f, const ProjPoint& start, std::size_t n_max);

}  // namespace orbitgcd
