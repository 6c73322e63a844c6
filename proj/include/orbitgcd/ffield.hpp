#pragma once

// Arithmetic in F_p and evaluation of integer polynomials modulo p.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orbitgcd/modarith.hpp"
#include "orbitgcd/poly.hpp"

namespace orbitgcd {

inline constexpr std::uint64_t kMinFiberPrime = 50;
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 62);

class FpElement {
 public:
  /// Throws DomainError unless `modulus` is a prime below 2^62.
  FpElement(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  FpElement inverse() const;

  friend FpElement operator+(FpElement a, FpElement b);
  friend FpElement operator-(FpElement a, FpElement b);
  friend FpElement operator*(FpElement a, FpElement b);
  friend bool operator==(FpElement a, FpElement b) = default;

 private:
  struct Unchecked {};
  FpElement(std::uint64_t value, std::uint64_t modulus, Unchecked) : value_(value), modulus_(modulus) {}
  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// Integer polynomial reduced mod p, laid out for fast repeated evaluation:
/// flat exponent table plus coefficients, terms with zero residue dropped.
class FpPoly {
 public:
  std::uint64_t prime() const noexcept { return prime_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t term_count() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::uint32_t degree() const noexcept { return degree_; }

  std::uint64_t eval(std::span<const std::uint64_t> point) const;

  friend FpPoly reduce_poly(const BigPoly& p, std::uint64_t prime);

 private:
  std::uint64_t prime_ = 0;
  std::size_t arity_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::uint32_t> exps_;  // term-major, arity entries per term
  std::vector<std::uint64_t> coeffs_;
};

/// Throws DomainError when `prime` is not a prime below 2^62.
FpPoly reduce_poly(const BigPoly& p, std::uint64_t prime);

/// Canonical representatives of P^N(F_p) (N = 2), normalized so that the last
/// nonzero coordinate is 1. Enumerates (x:y:1), then (x:1:0), then (1:0:0).
class ProjPointsFp {
 public:
  using Point = std::array<std::uint64_t, 3>;

  ProjPointsFp(std::size_t dimension, std::uint64_t prime);

  std::uint64_t size() const noexcept { return prime_ * prime_ + prime_ + 1; }
  /// The k-th point, 0 <= k < size(). Random access makes range splitting trivial.
  Point at(std::uint64_t k) const;
  /// Inverse of at() for a normalized point.
  std::uint64_t index_of(const Point& pt) const;
  /// Normalizes a nonzero triple; returns false for (0,0,0).
  bool normalize(Point& pt) const;

  class iterator {
   public:
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const ProjPointsFp* owner, std::uint64_t k) : owner_(owner), k_(k) {}
    Point operator*() const { return owner_->at(k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++k_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.k_ == b.k_; }

   private:
    const ProjPointsFp* owner_ = nullptr;
    std::uint64_t k_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::uint64_t prime_;
};

ProjPointsFp proj_points_fp(std::size_t dimension, std::uint64_t prime);

}  // namespace orbitgcd
