#include "orbitgcd/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace orbitgcd {

namespace {

// x = mant * 2^exp with 0.5 <= |mant| < 1
double mantissa(const BigInt& x, long& exp) { return mpz_get_d_2exp(&exp, x.get_mpz_t()); }

}  // namespace

double log_abs(const BigInt& x) {
  if (sgn(x) == 0) throw std::domain_error("log_abs: zero argument");
  long exp = 0;
  const double m = std::fabs(mantissa(x, exp));
  return std::log(m) + static_cast<double>(exp) * std::log(2.0);
}

double log_ratio(const BigInt& num, const BigInt& den) {
  if (sgn(num) <= 0 || sgn(den) <= 0) throw std::domain_error("log_ratio: non-positive argument");
  const BigInt diff = num - den;
  if (sgn(diff) == 0) return 0.0;
  long e_diff = 0;
  long e_den = 0;
  const double m_diff = mantissa(diff, e_diff);
  const double m_den = mantissa(den, e_den);
  const long shift = e_diff - e_den;
  if (shift > 1000) return log_abs(num) - log_abs(den);
  if (shift < -1100) return 0.0;
  const double q = std::ldexp(m_diff / m_den, static_cast<int>(shift));
  return std::log1p(q);
}

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt gcd_of(const std::vector<BigInt>& values) {
  BigInt g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::vector<std::string> to_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::vector<BigInt> from_strings(const std::vector<std::string>& values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const auto& s : values) {
    BigInt v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace orbitgcd
