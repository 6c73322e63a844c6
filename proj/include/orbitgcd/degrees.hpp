#pragma once

// Dynamical degrees (degree growth, topological degree, monomial maps) and the
// arithmetic degree of an orbit.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitgcd/bigint.hpp"
#include "orbitgcd/ffield.hpp"
#include "orbitgcd/projgeom.hpp"

namespace orbitgcd {

// ---------------------------------------------------------------------------
// Degree sequence

struct DegreeStep {
  std::uint32_t n = 0;
  std::uint64_t degree = 0;  // deg f^n of the reduced iterate
  double root = 0.0;         // degree^(1/n)
};

struct DegreeSequence {
  std::vector<DegreeStep> steps;
  bool budget_exceeded = false;
  std::string budget_message;

  /// deg f^n / deg f^(n-1) at the last two available steps; deg f for one step.
  double d1_estimate() const;
};

/// Degrees of f, f^2, ..., f^n_max. Stops early (keeping the prefix) when the
/// composition cap would be exceeded and sets budget_exceeded.
DegreeSequence degree_sequence(const RationalMap& f, std::uint32_t n_max, std::uint64_t degree_cap = 729);

// ---------------------------------------------------------------------------
// Topological degree by counting fibers over finite fields

struct FiberCountOptions {
  std::vector<std::uint64_t> primes{1009, 2003, 4001};
  std::size_t targets_per_prime = 20;
  std::uint64_t seed = 1;
};

struct PrimeFiberCounts {
  std::uint64_t prime = 0;
  /// Number of geometric preimages of each random target; -1 marks a target
  /// with a positive-dimensional fiber.
  std::vector<std::int64_t> counts;
  std::map<std::int64_t, std::size_t> histogram;
  std::vector<std::int64_t> modes;
};

struct FiberCountReport {
  std::vector<PrimeFiberCounts> per_prime;
  std::map<std::int64_t, std::size_t> histogram;
  /// All values of maximal frequency; more than one means a tie.
  std::vector<std::int64_t> modes;
  bool ambiguous = false;
  bool stable_across_primes = false;
  /// Positive-dimensional fibers or no majority value: f is probably not dominant.
  bool non_dominant_suspected = false;

  std::optional<std::int64_t> mode() const;
};

/// Estimates d_2 of a rational self-map of P^2 as the most frequent number of
/// preimages, over the algebraic closure of F_p, of random targets in P^2(F_p).
///
/// Preimages are counted exactly by elimination over F_p: after a random
/// projective change of source coordinates, the two equations
/// t_k f_i - t_i f_k = 0 are intersected through their resultant in x (as a
/// polynomial in y, interpolated from d^2 + 1 specializations); the number of
/// distinct roots, minus roots shared with the resultants of two auxiliary
/// targets (these come from the base locus), is the fiber size. Every count is
/// checked against the Bezout bound d^2.
///
/// Throws DomainError for arity != 3, primes below 50, non-primes, primes not
/// above d^2, and primes that kill a component.
FiberCountReport topological_degree_ff(const RationalMap& f, const FiberCountOptions& options = {});

struct RationalFiberCounts {
  std::uint64_t prime = 0;
  std::vector<ProjPointsFp::Point> targets;
  /// Number of s in P^2(F_p) (outside the base locus) with f(s) = target.
  std::vector<std::uint64_t> counts;
  std::map<std::uint64_t, std::size_t> histogram;
};

/// Exhaustive count of F_p-rational preimages by a single scan over P^2(F_p),
/// split into `threads` index ranges. A diagnostic: rational fiber sizes depend
/// on how the fibers split over F_p and do not estimate d_2.
RationalFiberCounts rational_fiber_counts(const RationalMap& f, std::uint64_t prime, std::size_t targets,
                                          std::uint64_t seed, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Monomial maps

class MonomialMap {
 public:
  /// Square integer matrix with nonzero determinant; throws DomainError otherwise.
  explicit MonomialMap(std::vector<std::vector<long>> matrix);

  std::size_t size() const noexcept { return matrix_.size(); }
  const std::vector<std::vector<long>>& matrix() const noexcept { return matrix_; }
  const BigInt& determinant() const noexcept { return det_; }

 private:
  std::vector<std::vector<long>> matrix_;
  BigInt det_;
};

/// Characteristic polynomial det(t I - A), coefficients from t^0 upward,
/// by Faddeev-LeVerrier in exact integer arithmetic.
std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<long>>& a);

MonomialMap matrix_power(const MonomialMap& a, unsigned k);

struct MonomialDegrees {
  /// d_0 = 1, d_1, ..., d_N with d_i = |lambda_1 ... lambda_i|; d_N is |det A|.
  std::vector<double> degrees;
  /// Eigenvalues with multiplicity, sorted by decreasing modulus.
  std::vector<std::complex<double>> eigenvalues;
  std::vector<BigInt> charpoly;
  BigInt det_abs;
  /// Product of all eigenvalue moduli, for the cross-check against det_abs.
  double dN_from_roots = 0.0;
  double det_relative_error = 0.0;
  double trace_error = 0.0;
  bool validated = false;
};

MonomialDegrees monomial_dyn_degrees(const MonomialMap& a);

/// The rational map of P^N induced by A on the torus (x_1..x_N) -> (x^{a_1}, ...),
/// with P^N coordinates (x_1 : ... : x_N : 1), denominators cleared.
RationalMap monomial_rational_map(const MonomialMap& a);

// ---------------------------------------------------------------------------
// Arithmetic degree and diagnostics

struct ArithmeticDegreeEstimate {
  double root_tail = 1.0;       // max(1, h_n)^(1/n) at the last index
  std::size_t root_index = 0;
  double ratio_tail = 1.0;      // geometric mean of h_{n+1}/h_n over the tail
  std::size_t ratio_from = 0;   // first n of the ratios used
  std::size_t ratio_to = 0;     // last n + 1 of the ratios used
  std::size_t ratio_steps = 0;
  bool degenerate = false;
};

/// heights[n] = h(f^n(x)). Needs at least four finite entries (DomainError).
ArithmeticDegreeEstimate arithmetic_degree_estimate(std::span<const double> heights);

struct HyperbolicityReport {
  bool hyperbolic = false;        // d1 > d2
  bool alpha_matches_d1 = false;  // |alpha - d1| <= 2% of d1
  bool advisory = false;
  std::string message;
};

HyperbolicityReport hyperbolicity_report(double d1, double d2, double alpha);

/// Heuristic genericity evidence: is there a nonzero quadratic form vanishing on
/// all given points? Decided by the rank of the matrix of degree-2 monomial
/// values modulo large primes; full rank modulo some prime certifies that no
/// conic (hence no line) contains the points.
struct QuadricCheck {
  std::size_t points_used = 0;
  std::size_t monomials = 0;
  std::size_t rank = 0;
  bool certified_not_on_quadric = false;
  std::string label;
};

QuadricCheck quadric_containment_check(std::span<const ProjPoint> points);

}  // namespace orbitgcd
