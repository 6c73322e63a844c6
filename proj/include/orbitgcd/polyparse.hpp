#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orbitgcd/poly.hpp"

namespace orbitgcd {

/// Polynomial text plus the number of variables x0..x{arity-1} it may use.
struct PolySource {
  std::string text;
  std::size_t arity;
};

inline constexpr std::uint32_t kMaxExponent = 1U << 16;
inline constexpr std::size_t kMaxArity = 64;

/// Parses integer literals, variables x0..x{arity-1}, + - * ^ and parentheses.
/// Precedence: ^ (on the preceding atom only) > unary minus > * > binary + -.
/// Implicit multiplication is rejected. Throws ParseError with a byte offset.
BigPoly parse_poly(const PolySource& src);

/// Splits "p0;p1;p2" and parses each piece.
std::vector<BigPoly> parse_poly_list(std::string_view text, std::size_t arity, char separator = ';');

}  // namespace orbitgcd
