#pragma once

// Weil heights and generalized-gcd heights h_Y of rational points.
//
// For a primitive point a and generators g_j of degree d_j with values
// v_j = g_j(a), the canonical representative used throughout is
//
//   h_Y(a) = min_{v_j != 0} ( d_j log|a|_inf - log|v_j| ) + log gcd_j |v_j|
//
// and h_Y = +inf when every v_j vanishes. The integers behind both logs are
// kept in the result so that two code paths can be compared exactly.

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitgcd/bigint.hpp"
#include "orbitgcd/projgeom.hpp"

namespace orbitgcd {

struct HeightValue {
  bool infinite = false;
  double total = 0.0;
  double arch_part = 0.0;
  double gcd_part = 0.0;

  // Exact witnesses (unset when infinite).
  BigInt norm;             // |a|_inf
  BigInt gcd;              // gcd of the nonzero |v_j|
  std::size_t arch_index = 0;  // j attaining the minimum
  std::uint64_t arch_degree = 0;
  BigInt arch_value;       // |v_j| at arch_index
};

/// log max_i |a_i|.
double weil_height(const ProjPoint& x);

HeightValue subscheme_height(const SubschemeIdeal& y, const ProjPoint& x);

struct BczValue {
  BigInt height_max;  // max(a^n, b^n, 1)
  BigInt arch_max;    // max(|a^n - 1|, |b^n - 1|)
  BigInt gcd;         // gcd(a^n - 1, b^n - 1)
  double h = 0.0;
  double h_y = 0.0;
  std::optional<double> ratio;
  /// a and b are powers of a common integer.
  bool multiplicatively_dependent = false;
};

/// h, h_Y and their ratio at f^n(1:1:1) for f = (a x : b y : z) and Y = (1:1:1),
/// written out directly from the integers a^n - 1 and b^n - 1.
BczValue bcz_closed_form(const BigInt& a, const BigInt& b, unsigned long n);

bool multiplicatively_dependent(const BigInt& a, const BigInt& b);

struct RatioRow {
  std::size_t n = 0;
  std::size_t bits = 0;
  double h = 0.0;
  HeightValue h_y;
  std::optional<double> ratio;  // absent when h == 0 or h_Y infinite
};

struct RatioSeries {
  std::vector<RatioRow> rows;
  Orbit orbit;
};

/// Orbit of x0 under f with both heights at every iterate.
RatioSeries height_ratio_series(const RationalMap& f, const SubschemeIdeal& y, const ProjPoint& x0,
                                std::size_t n_max);

}  // namespace orbitgcd
