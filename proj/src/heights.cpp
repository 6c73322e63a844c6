#include "orbitgcd/heights.hpp"

#include "orbitgcd/errors.hpp"

namespace orbitgcd {

double weil_height(const ProjPoint& x) { return log_abs(x.norm()); }

namespace {

// True when d_i log N - log V_i < d_j log N - log V_j, i.e. N^{d_i} V_j < N^{d_j} V_i.
bool arch_smaller(const BigInt& norm, std::uint64_t di, const BigInt& vi, std::uint64_t dj, const BigInt& vj) {
  if (di == dj) return cmp(vi, vj) > 0;
  if (di > dj) return cmp(pow_ui(norm, di - dj) * vj, vi) < 0;
  return cmp(vj, pow_ui(norm, dj - di) * vi) < 0;
}

}  // namespace

HeightValue subscheme_height(const SubschemeIdeal& y, const ProjPoint& x) {
  if (y.arity() != x.arity()) throw ArityError("subscheme_height: ideal and point live in different spaces");
  HeightValue out;
  const auto& gens = y.generators();
  const auto& degs = y.degrees();

  std::optional<std::size_t> best;
  BigInt g = 0;
  std::vector<BigInt> values;
  values.reserve(gens.size());
  out.norm = x.norm();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    BigInt v = abs(eval_int(gens[j], x.coords()));
    if (sgn(v) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (!best || arch_smaller(out.norm, degs[j], v, degs[*best], values[*best])) best = j;
    }
    values.push_back(std::move(v));
  }
  if (!best) {
    out.infinite = true;
    out.norm = 0;
    return out;
  }
  out.gcd = g;
  out.arch_index = *best;
  out.arch_degree = degs[*best];
  out.arch_value = values[*best];
  out.arch_part = log_ratio(pow_ui(out.norm, out.arch_degree), out.arch_value);
  out.gcd_part = log_abs(out.gcd);
  out.total = out.arch_part + out.gcd_part;
  return out;
}

bool multiplicatively_dependent(const BigInt& a, const BigInt& b) {
  if (a < 2 || b < 2) throw DomainError("multiplicative dependence is only checked for integers >= 2");
  // a, b are dependent iff they are powers of the same primitive root r.
  auto root_of = [](const BigInt& v) {
    BigInt best = v;
    for (unsigned long k = 2; k <= bit_length(v); ++k) {
      BigInt r;
      if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) != 0 && r < best) best = r;
    }
    return best;
  };
  return root_of(a) == root_of(b);
}

BczValue bcz_closed_form(const BigInt& a, const BigInt& b, unsigned long n) {
  if (a < 2 || b < 2) throw DomainError("bcz_closed_form: a and b must be at least 2");
  if (n == 0) throw DomainError("bcz_closed_form: n must be positive");
  BczValue out;
  const BigInt an = pow_ui(a, n);
  const BigInt bn = pow_ui(b, n);
  const BigInt am1 = an - 1;
  const BigInt bm1 = bn - 1;
  out.height_max = std::max<BigInt>({an, bn, BigInt(1)});
  out.arch_max = std::max(abs(am1), abs(bm1));
  mpz_gcd(out.gcd.get_mpz_t(), am1.get_mpz_t(), bm1.get_mpz_t());
  out.h = log_abs(out.height_max);
  out.h_y = log_ratio(out.height_max, out.arch_max) + log_abs(out.gcd);
  if (out.h > 0) out.ratio = out.h_y / out.h;
  out.multiplicatively_dependent = multiplicatively_dependent(a, b);
  return out;
}

RatioSeries height_ratio_series(const RationalMap& f, const SubschemeIdeal& y, const ProjPoint& x0,
                                std::size_t n_max) {
  if (y.arity() != f.arity()) throw ArityError("height_ratio_series: ideal and map live in different spaces");
  RatioSeries out;
  out.orbit = orbit(f, x0, n_max);
  out.rows.reserve(out.orbit.points.size());
  for (std::size_t n = 0; n < out.orbit.points.size(); ++n) {
    const auto& p = out.orbit.points[n];
    RatioRow row;
    row.n = n;
    row.bits = p.bits();
    row.h = weil_height(p);
    row.h_y = subscheme_height(y, p);
    if (row.h > 0 && !row.h_y.infinite) row.ratio = row.h_y.total / row.h;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace orbitgcd
