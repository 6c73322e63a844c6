#pragma once

// Word-size arithmetic modulo a prime and dense univariate polynomials over F_p.
// Primes up to 62 bits; products go through unsigned __int128.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbitgcd::modp {

using u64 = std::uint64_t;

inline u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 pow(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a nonzero residue (Fermat).
inline u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modp::inv: zero has no inverse");
  return pow(a, p - 2, p);
}

/// Deterministic Miller-Rabin for all 64-bit n (bases from Sinclair's set).
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Dense polynomial over F_p, coefficient i multiplies t^i. Canonical form has no
/// trailing zeros; the zero polynomial is the empty vector.
using UPoly = std::vector<u64>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Degree, or -1 for the zero polynomial.
inline long degree(const UPoly& a) { return static_cast<long>(a.size()) - 1; }

inline u64 eval(const UPoly& a, u64 t, u64 p) {
  u64 acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = add(mul(acc, t, p), a[i], p);
  return acc;
}

inline UPoly derivative(const UPoly& a, u64 p) {
  UPoly d;
  if (a.size() <= 1) return d;
  d.resize(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p, p);
  trim(d);
  return d;
}

inline UPoly mul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("modp::divmod: division by zero polynomial");
  trim(a);
  if (a.size() < b.size()) return {UPoly{}, a};
  const u64 lc_inv = inv(b.back(), p);
  UPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size() - 1;; --k) {
    const u64 coef = mul(a[k], lc_inv, p);
    q[k - (b.size() - 1)] = coef;
    if (coef != 0) {
      const std::size_t shift = k - (b.size() - 1);
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(coef, b[j], p), p);
    }
    if (k == b.size() - 1) break;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

inline UPoly monic(UPoly a, u64 p) {
  trim(a);
  if (a.empty()) return a;
  const u64 s = inv(a.back(), p);
  for (auto& c : a) c = mul(c, s, p);
  return a;
}

/// Monic gcd (zero if both are zero).
inline UPoly gcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

/// Resultant of a and b taken with formal degrees deg_a, deg_b (leading
/// coefficients may not vanish: caller guarantees a.size() == deg_a + 1 etc.).
inline u64 resultant(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  while (true) {
    const long da = degree(a);
    const long db = degree(b);
    if (db == 0) return mul(res, pow(b[0], static_cast<u64>(da), p), p);
    if (da == 0) return mul(res, pow(a[0], static_cast<u64>(db), p), p);
    if (da < db) {
      if ((da & 1) && (db & 1)) res = neg(res, p);
      std::swap(a, b);
      continue;
    }
    // res(a, b) = (-1)^{da db} lc(b)^{da - deg r} res(b, r), with r = a mod b.
    auto r = divmod(a, b, p).second;
    if (r.empty()) return 0;
    const long dr = degree(r);
    res = mul(res, pow(b.back(), static_cast<u64>(da - dr), p), p);
    if ((da & 1) && (db & 1)) res = neg(res, p);
    a = std::move(b);
    b = std::move(r);
  }
}

/// Polynomial of degree < xs.size() through the points (xs[i], ys[i]); xs distinct.
inline UPoly interpolate(std::span<const u64> xs, std::span<const u64> ys, u64 p) {
  const std::size_t n = xs.size();
  UPoly result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ys[i] == 0) continue;
    // basis numerator prod_{j != i} (t - x_j), denominator prod (x_i - x_j)
    UPoly basis{1};
    u64 denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis = mul(basis, UPoly{neg(xs[j], p), 1}, p);
      denom = mul(denom, sub(xs[i], xs[j], p), p);
    }
    const u64 scale = mul(ys[i], inv(denom, p), p);
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] = add(result[k], mul(basis[k], scale, p), p);
  }
  trim(result);
  return result;
}

/// Square-free part (valid when deg a < p).
inline UPoly squarefree_part(const UPoly& a, u64 p) {
  if (a.size() <= 1) return monic(a, p);
  const auto g = gcd(a, derivative(a, p), p);
  return monic(divmod(a, g, p).first, p);
}

}  // namespace orbitgcd::modp
