#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbitgcd/poly.hpp"
#include "orbitgcd/polyparse.hpp"

namespace testing_support {

using orbitgcd::BigInt;
using orbitgcd::BigPoly;
using orbitgcd::Monomial;

inline BigPoly P(const char* text, std::size_t arity = 3) { return orbitgcd::parse_poly({text, arity}); }

inline BigPoly random_poly(std::mt19937_64& rng, std::size_t arity, std::uint32_t max_deg, std::size_t terms,
                           long coeff = 9) {
  std::uniform_int_distribution<std::uint32_t> e(0, max_deg);
  std::uniform_int_distribution<long> c(-coeff, coeff);
  std::vector<BigPoly::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> ex(arity);
    std::uint32_t left = e(rng);
    for (std::size_t i = 0; i < arity; ++i) {
      const std::uint32_t take = i + 1 == arity ? left : std::uniform_int_distribution<std::uint32_t>(0, left)(rng);
      ex[i] = take;
      left -= take;
    }
    out.emplace_back(Monomial(std::move(ex)), BigInt(c(rng)));
  }
  return BigPoly::from_terms(arity, std::move(out));
}

inline BigPoly random_homogeneous(std::mt19937_64& rng, std::size_t arity, std::uint32_t deg, std::size_t terms,
                                  long coeff = 9) {
  std::uniform_int_distribution<long> c(-coeff, coeff);
  std::vector<BigPoly::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> ex(arity);
    std::uint32_t left = deg;
    for (std::size_t i = 0; i < arity; ++i) {
      const std::uint32_t take = i + 1 == arity ? left : std::uniform_int_distribution<std::uint32_t>(0, left)(rng);
      ex[i] = take;
      left -= take;
    }
    out.emplace_back(Monomial(std::move(ex)), BigInt(c(rng)));
  }
  return BigPoly::from_terms(arity, std::move(out));
}

inline std::vector<BigInt> random_point(std::mt19937_64& rng, std::size_t arity, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < arity; ++i) out.emplace_back(c(rng));
  return out;
}

}  // namespace testing_support
