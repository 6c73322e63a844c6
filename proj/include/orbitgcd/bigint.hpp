#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace orbitgcd {

using BigInt = mpz_class;

/// Natural log of |x| for x != 0. Uses the top 53 bits and the binary exponent,
/// so the result is accurate to a relative 1e-15 for any size of x.
double log_abs(const BigInt& x);

/// log(num / den) for positive num, den. Accurate even when num and den agree in
/// almost all leading digits (computed as log1p((num - den) / den)).
double log_ratio(const BigInt& num, const BigInt& den);

/// Number of bits of |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

BigInt gcd_of(const std::vector<BigInt>& values);

BigInt pow_ui(const BigInt& base, unsigned long exp);

std::vector<std::string> to_strings(const std::vector<BigInt>& values);
std::vector<BigInt> from_strings(const std::vector<std::string>& values);

}  // namespace orbitgcd
