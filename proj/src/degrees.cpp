#include "orbitgcd/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "orbitgcd/errors.hpp"
#include "orbitgcd/modarith.hpp"

namespace orbitgcd {

// ---------------------------------------------------------------------------
// Degree sequence

double DegreeSequence::d1_estimate() const {
  if (steps.empty()) return 0.0;
  if (steps.size() == 1) return static_cast<double>(steps.front().degree);
  const auto& last = steps[steps.size() - 1];
  const auto& prev = steps[steps.size() - 2];
  return static_cast<double>(last.degree) / static_cast<double>(prev.degree);
}

DegreeSequence degree_sequence(const RationalMap& f, std::uint32_t n_max, std::uint64_t degree_cap) {
  DegreeSequence out;
  if (n_max == 0) return out;
  if (f.degree() > degree_cap) {
    out.budget_exceeded = true;
    out.budget_message = "deg f exceeds the composition cap " + std::to_string(degree_cap);
    return out;
  }
  RationalMap current = f;
  out.steps.push_back({1, f.degree(), static_cast<double>(f.degree())});
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const std::uint64_t raw = f.degree() * current.degree();
    if (raw > degree_cap) {
      out.budget_exceeded = true;
      out.budget_message = "raw degree " + std::to_string(raw) + " of f^" + std::to_string(n) +
                           " exceeds the composition cap " + std::to_string(degree_cap);
      break;
    }
    current = compose_maps(f, current);
    out.steps.push_back(
        {n, current.degree(), std::pow(static_cast<double>(current.degree()), 1.0 / static_cast<double>(n))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fiber counting

std::optional<std::int64_t> FiberCountReport::mode() const {
  if (modes.size() != 1) return std::nullopt;
  return modes.front();
}

namespace {

template <typename K>
std::vector<K> modes_of(const std::map<K, std::size_t>& histogram) {
  std::size_t best = 0;
  for (const auto& [value, count] : histogram) best = std::max(best, count);
  std::vector<K> out;
  for (const auto& [value, count] : histogram) {
    if (count == best && best > 0) out.push_back(value);
  }
  return out;
}

using Vec3 = std::array<std::uint64_t, 3>;
using Mat3 = std::array<Vec3, 3>;

std::uint64_t det3(const Mat3& m, std::uint64_t p) {
  using namespace modp;
  auto minor = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
    return sub(mul(m[r1][c1], m[r2][c2], p), mul(m[r1][c2], m[r2][c1], p), p);
  };
  std::uint64_t d = mul(m[0][0], minor(1, 2, 1, 2), p);
  d = sub(d, mul(m[0][1], minor(1, 2, 0, 2), p), p);
  d = add(d, mul(m[0][2], minor(1, 2, 0, 1), p), p);
  return d;
}

// Fiber sizes of f over one prime, in a random projective frame.
class FiberCounter {
 public:
  FiberCounter(const RationalMap& f, std::uint64_t prime, std::mt19937_64& rng)
      : prime_(prime), degree_(f.degree()), rng_(rng) {
    for (const auto& c : f.components()) {
      comps_.push_back(reduce_poly(c, prime));
      if (!c.is_zero() && comps_.back().is_zero()) {
        throw DomainError("prime " + std::to_string(prime) + " divides the content of a map component");
      }
    }
    do {
      for (auto& row : frame_) {
        for (auto& x : row) x = rng_() % prime_;
      }
    } while (det3(frame_, prime_) == 0);
  }

  // Resultant polynomial in y for target t; nullopt if the frame puts a
  // leading coefficient at zero for this target.
  std::optional<modp::UPoly> resultant_in_y(const Vec3& t) const {
    using namespace modp;
    std::size_t k = 2;
    while (t[k] == 0) --k;
    std::array<std::size_t, 2> others{};
    for (std::size_t i = 0, j = 0; i < 3; ++i) {
      if (i != k) others[j++] = i;
    }
    // leading coefficients in x are the equations evaluated at u = (1, 0, 0)
    const Vec3 top = mapped({1, 0, 0});
    for (auto i : others) {
      if (sub(mul(t[k], top[i], prime_), mul(t[i], top[k], prime_), prime_) == 0) return std::nullopt;
    }
    const std::size_t d = degree_;
    const std::size_t big_d = d * d;
    std::vector<std::uint64_t> xs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) xs[i] = i;
    std::vector<std::uint64_t> cs(big_d + 1);
    std::vector<std::uint64_t> values(big_d + 1);
    std::vector<std::uint64_t> e1(d + 1);
    std::vector<std::uint64_t> e2(d + 1);
    for (std::size_t ci = 0; ci <= big_d; ++ci) {
      const std::uint64_t c = ci;
      cs[ci] = c;
      for (std::size_t xi = 0; xi <= d; ++xi) {
        const Vec3 v = mapped({xs[xi], c, 1});
        e1[xi] = sub(mul(t[k], v[others[0]], prime_), mul(t[others[0]], v[k], prime_), prime_);
        e2[xi] = sub(mul(t[k], v[others[1]], prime_), mul(t[others[1]], v[k], prime_), prime_);
      }
      const UPoly p1 = interpolate(xs, e1, prime_);
      const UPoly p2 = interpolate(xs, e2, prime_);
      values[ci] = resultant(p1, p2, prime_);
    }
    return interpolate(cs, values, prime_);
  }

  std::optional<modp::UPoly> resultant_for_random_target() {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Vec3 t = random_target();
      if (auto r = resultant_in_y(t)) return r;
    }
    return std::nullopt;
  }

  Vec3 random_target() {
    const ProjPointsFp plane(2, prime_);
    return plane.at(rng_() % plane.size());
  }

  std::uint64_t prime() const { return prime_; }
  std::uint64_t degree() const { return degree_; }

 private:
  Vec3 mapped(const Vec3& u) const {
    using namespace modp;
    Vec3 s{};
    for (std::size_t r = 0; r < 3; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < 3; ++c) acc = add(acc, mul(frame_[r][c], u[c], prime_), prime_);
      s[r] = acc;
    }
    Vec3 out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = comps_[i].eval(s);
    return out;
  }

  std::uint64_t prime_;
  std::uint64_t degree_;
  std::mt19937_64& rng_;
  std::vector<FpPoly> comps_;
  Mat3 frame_{};
};

PrimeFiberCounts count_fibers_at_prime(const RationalMap& f, std::uint64_t prime, std::size_t targets,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (prime * 0x9e3779b97f4a7c15ULL));
  FiberCounter counter(f, prime, rng);
  const std::uint64_t bezout = f.degree() * f.degree();
  PrimeFiberCounts out;
  out.prime = prime;

  // Roots shared by two unrelated targets come from the base locus.
  modp::UPoly base{1};
  {
    auto r1 = counter.resultant_for_random_target();
    auto r2 = counter.resultant_for_random_target();
    if (r1 && r2 && !r1->empty() && !r2->empty()) base = modp::gcd(*r1, *r2, prime);
  }

  for (std::size_t i = 0; i < targets; ++i) {
    auto r = counter.resultant_for_random_target();
    if (!r) throw std::runtime_error("fiber count: no usable projective frame found");
    std::int64_t count = -1;
    if (!r->empty()) {
      const auto sqf = modp::squarefree_part(*r, prime);
      const auto shared = modp::gcd(sqf, base, prime);
      count = modp::degree(sqf) - modp::degree(shared);
      if (static_cast<std::uint64_t>(count) > bezout) {
        throw std::logic_error("fiber count " + std::to_string(count) + " exceeds the Bezout bound " +
                               std::to_string(bezout));
      }
    }
    out.counts.push_back(count);
    ++out.histogram[count];
  }
  out.modes = modes_of(out.histogram);
  return out;
}

}  // namespace

FiberCountReport topological_degree_ff(const RationalMap& f, const FiberCountOptions& options) {
  if (f.arity() != 3) throw DomainError("fiber counting needs a map of the projective plane (3 variables)");
  if (options.primes.empty()) throw DomainError("fiber counting needs at least one prime");
  if (options.targets_per_prime == 0) throw DomainError("fiber counting needs at least one target per prime");
  const std::uint64_t bezout = f.degree() * f.degree();
  for (auto p : options.primes) {
    if (p < kMinFiberPrime) throw DomainError("prime " + std::to_string(p) + " is too small (< 50)");
    if (!modp::is_prime(p) || p >= kMaxPrime) throw DomainError(std::to_string(p) + " is not a prime below 2^62");
    if (p <= bezout) {
      throw DomainError("prime " + std::to_string(p) + " must exceed deg(f)^2 = " + std::to_string(bezout));
    }
  }

  FiberCountReport out;
  for (auto p : options.primes) {
    out.per_prime.push_back(count_fibers_at_prime(f, p, options.targets_per_prime, options.seed));
    for (const auto& [value, count] : out.per_prime.back().histogram) out.histogram[value] += count;
  }
  out.modes = modes_of(out.histogram);
  out.ambiguous = out.modes.size() > 1;

  out.stable_across_primes = true;
  for (const auto& pp : out.per_prime) {
    if (pp.modes.size() != 1 || out.modes.size() != 1 || pp.modes.front() != out.modes.front()) {
      out.stable_across_primes = false;
    }
  }
  std::size_t total = 0;
  for (const auto& [value, count] : out.histogram) total += count;
  const bool positive_dim = out.histogram.count(-1) > 0;
  const std::size_t mode_freq = out.modes.empty() ? 0 : out.histogram.at(out.modes.front());
  out.non_dominant_suspected = positive_dim || 2 * mode_freq < total ||
                               (out.modes.size() == 1 && out.modes.front() <= 0);
  return out;
}

RationalFiberCounts rational_fiber_counts(const RationalMap& f, std::uint64_t prime, std::size_t targets,
                                          std::uint64_t seed, unsigned threads) {
  if (f.arity() != 3) throw DomainError("fiber counting needs a map of the projective plane (3 variables)");
  if (prime < kMinFiberPrime) throw DomainError("prime " + std::to_string(prime) + " is too small (< 50)");
  const ProjPointsFp plane(2, prime);
  std::vector<FpPoly> comps;
  for (const auto& c : f.components()) comps.push_back(reduce_poly(c, prime));

  RationalFiberCounts out;
  out.prime = prime;
  std::mt19937_64 rng(seed ^ (prime * 0x9e3779b97f4a7c15ULL));
  std::unordered_multimap<std::uint64_t, std::size_t> slot;
  for (std::size_t i = 0; i < targets; ++i) {
    const std::uint64_t idx = rng() % plane.size();
    out.targets.push_back(plane.at(idx));
    slot.emplace(idx, i);
  }

  threads = std::max(1U, threads);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(targets, 0));
  auto work = [&](unsigned tid) {
    const std::uint64_t total = plane.size();
    const std::uint64_t lo = total * tid / threads;
    const std::uint64_t hi = total * (tid + 1) / threads;
    auto& mine = partial[tid];
    for (std::uint64_t k = lo; k < hi; ++k) {
      const auto s = plane.at(k);
      ProjPointsFp::Point image{comps[0].eval(s), comps[1].eval(s), comps[2].eval(s)};
      if (!plane.normalize(image)) continue;  // s is in the base locus
      auto [a, b] = slot.equal_range(plane.index_of(image));
      for (auto it = a; it != b; ++it) ++mine[it->second];
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();

  out.counts.assign(targets, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < targets; ++i) out.counts[i] += part[i];
  }
  for (auto c : out.counts) ++out.histogram[c];
  return out;
}

// ---------------------------------------------------------------------------
// Monomial maps

namespace {

BigInt bareiss_determinant(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigPoly derivative_univariate(const BigPoly& p) {
  std::vector<BigPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[0] == 0) continue;
    terms.emplace_back(Monomial(std::vector<std::uint32_t>{m[0] - 1}), c * m[0]);
  }
  return BigPoly::from_terms(1, std::move(terms));
}

BigPoly div_exact(const BigPoly& p, const BigPoly& q) {
  auto r = exact_divide(p, q);
  if (!r) throw std::logic_error("square-free decomposition: inexact division");
  return std::move(*r);
}

// Yun's algorithm: returns (factor, multiplicity) with square-free factors.
std::vector<std::pair<BigPoly, unsigned>> squarefree_decomposition(const BigPoly& f) {
  std::vector<std::pair<BigPoly, unsigned>> out;
  const BigPoly df = derivative_univariate(f);
  const BigPoly a0 = gcd_multivar(f, df);
  BigPoly b = div_exact(f, a0);
  BigPoly c = div_exact(df, a0);
  BigPoly d = c - derivative_univariate(b);
  for (unsigned i = 1; !b.is_constant(); ++i) {
    const BigPoly a = gcd_multivar(b, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = div_exact(b, a);
    c = div_exact(d, a);
    d = c - derivative_univariate(b);
  }
  return out;
}

using cld = std::complex<long double>;

// Simple roots of a square-free integer polynomial by Aberth-Ehrlich iteration.
std::vector<cld> simple_roots(const BigPoly& p) {
  const std::size_t deg = p.degree().value();
  std::vector<long double> coef(deg + 1, 0.0L);
  for (const auto& [m, c] : p.terms()) coef[m[0]] = static_cast<long double>(c.get_d());
  if (deg == 1) return {cld(-coef[0] / coef[1], 0.0L)};

  auto eval = [&](const cld& z, cld& dp) {
    cld v = coef[deg];
    dp = 0;
    for (std::size_t i = deg; i-- > 0;) {
      dp = dp * z + v;
      v = v * z + coef[i];
    }
    return v;
  };

  long double radius = 0.0L;
  for (std::size_t j = 0; j < deg; ++j) {
    radius = std::max(radius, std::pow(std::fabs(coef[j] / coef[deg]), 1.0L / static_cast<long double>(deg - j)));
  }
  radius = std::max(radius, 1.0L);
  std::vector<cld> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(deg) + 0.4L;
    z[k] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0.0L;
    for (std::size_t k = 0; k < deg; ++k) {
      cld dp;
      const cld v = eval(z[k], dp);
      if (v == cld(0)) continue;
      const cld ratio = v / dp;
      cld repulsion = 0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-19L) break;
  }
  for (auto& r : z) {
    for (int polish = 0; polish < 3; ++polish) {
      cld dp;
      const cld v = eval(r, dp);
      if (dp == cld(0) || v == cld(0)) break;
      r -= v / dp;
    }
  }
  return z;
}

}  // namespace

MonomialMap::MonomialMap(std::vector<std::vector<long>> matrix) : matrix_(std::move(matrix)) {
  if (matrix_.empty()) throw DomainError("monomial map: empty matrix");
  for (const auto& row : matrix_) {
    if (row.size() != matrix_.size()) throw DomainError("monomial map: matrix is not square");
  }
  det_ = bareiss_determinant(matrix_);
  if (sgn(det_) == 0) throw DomainError("monomial map: singular matrix");
}

std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I   (M_0 = 0)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = am[i][j] + (i == j ? c[n - k + 1] : BigInt(0));
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
      trace += am[i][i];
    }
    BigInt q = -trace;
    if (!mpz_divisible_ui_p(q.get_mpz_t(), k)) throw std::logic_error("Faddeev-LeVerrier: inexact division");
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), k);
    c[n - k] = q;
  }
  return c;
}

MonomialMap matrix_power(const MonomialMap& a, unsigned k) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (unsigned step = 0; step < k; ++step) {
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += r[i][l] * a.matrix()[l][j];
      }
    }
    r = std::move(next);
  }
  std::vector<std::vector<long>> out(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[i][j].fits_slong_p()) throw DomainError("matrix_power: entries overflow a machine integer");
      out[i][j] = r[i][j].get_si();
    }
  }
  return MonomialMap(std::move(out));
}

MonomialDegrees monomial_dyn_degrees(const MonomialMap& a) {
  const std::size_t n = a.size();
  MonomialDegrees out;
  out.charpoly = characteristic_polynomial(a.matrix());
  out.det_abs = abs(out.charpoly[0]);

  std::vector<BigPoly::Term> terms;
  for (std::size_t i = 0; i <= n; ++i) {
    terms.emplace_back(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)}), out.charpoly[i]);
  }
  const BigPoly chi = BigPoly::from_terms(1, std::move(terms));

  std::vector<std::pair<long double, std::complex<double>>> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(chi)) {
    for (const auto& r : simple_roots(factor)) {
      for (unsigned k = 0; k < mult; ++k) roots.emplace_back(std::abs(r), std::complex<double>(r));
    }
  }
  if (roots.size() != n) throw std::logic_error("monomial_dyn_degrees: root count mismatch");
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  out.degrees.push_back(1.0);
  long double prod = 1.0L;
  std::complex<long double> sum = 0;
  for (const auto& [modulus, value] : roots) {
    prod *= modulus;
    sum += std::complex<long double>(value);
    out.degrees.push_back(static_cast<double>(prod));
    out.eigenvalues.push_back(value);
  }
  out.dN_from_roots = static_cast<double>(prod);
  const double det = out.det_abs.get_d();
  out.det_relative_error = std::fabs(out.dN_from_roots - det) / det;
  out.degrees.back() = det;

  long double trace = 0;
  long double scale = 1;
  for (std::size_t i = 0; i < n; ++i) trace += static_cast<long double>(a.matrix()[i][i]);
  for (const auto& r : roots) scale += r.first;
  out.trace_error = static_cast<double>(std::abs(sum - std::complex<long double>(trace)) / scale);
  out.validated = out.det_relative_error < 1e-10 && out.trace_error < 1e-10;
  return out;
}

RationalMap monomial_rational_map(const MonomialMap& a) {
  const std::size_t n = a.size();
  // exponent vectors in (x_1..x_N, z): row i -> (a_i1, ..., a_iN, -sum_j a_ij); last component 1 -> 0
  std::vector<std::vector<long>> e(n + 1, std::vector<long>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      e[i][j] = a.matrix()[i][j];
      s += a.matrix()[i][j];
    }
    e[i][n] = -s;
  }
  std::vector<long> low(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i <= n; ++i) low[j] = std::min(low[j], e[i][j]);
  }
  std::vector<BigPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::uint32_t> ex(n + 1);
    for (std::size_t j = 0; j <= n; ++j) ex[j] = static_cast<std::uint32_t>(e[i][j] - low[j]);
    comps.push_back(BigPoly::monomial(Monomial(std::move(ex)), 1));
  }
  return make_map(std::move(comps));
}

// ---------------------------------------------------------------------------
// Arithmetic degree

ArithmeticDegreeEstimate arithmetic_degree_estimate(std::span<const double> heights) {
  std::size_t finite = 0;
  for (double h : heights) {
    if (std::isfinite(h)) ++finite;
  }
  if (finite < 4) throw DomainError("arithmetic_degree_estimate needs at least four finite heights");
  ArithmeticDegreeEstimate out;
  const bool all_zero = std::all_of(heights.begin(), heights.end(), [](double h) { return h == 0.0; });
  if (all_zero) {
    out.degenerate = true;
    out.root_index = heights.size() - 1;
    return out;
  }

  out.root_index = heights.size() - 1;
  const double last = heights.back();
  out.root_tail = std::pow(std::max(1.0, std::isfinite(last) ? last : 1.0), 1.0 / static_cast<double>(out.root_index));

  const std::size_t len = heights.size();
  const std::size_t steps = std::min(len - 1, (len + 2) / 3);
  out.ratio_to = len - 1;
  out.ratio_from = len - 1 - steps;
  double log_sum = 0.0;
  for (std::size_t n = out.ratio_from; n + 1 < len; ++n) {
    const double lo = heights[n];
    const double hi = heights[n + 1];
    if (lo == 0.0 || !std::isfinite(lo) || !std::isfinite(hi) || hi <= 0.0) continue;
    log_sum += std::log(hi / lo);
    ++out.ratio_steps;
  }
  if (out.ratio_steps == 0) {
    out.degenerate = true;
    out.ratio_tail = 1.0;
  } else {
    out.ratio_tail = std::exp(log_sum / static_cast<double>(out.ratio_steps));
  }
  return out;
}

HyperbolicityReport hyperbolicity_report(double d1, double d2, double alpha) {
  HyperbolicityReport out;
  out.hyperbolic = d1 > d2;
  out.alpha_matches_d1 = std::fabs(alpha - d1) <= 0.02 * d1;
  out.advisory = out.hyperbolic && out.alpha_matches_d1;
  if (out.advisory) {
    out.message = "orbit expected Zariski dense (1-cohomologically hyperbolic and alpha = d1)";
  } else if (!out.hyperbolic) {
    out.message = "not 1-cohomologically hyperbolic (d1 <= d2)";
  } else {
    out.message = "1-cohomologically hyperbolic, but alpha differs from d1";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadric containment

QuadricCheck quadric_containment_check(std::span<const ProjPoint> points) {
  QuadricCheck out;
  if (points.empty()) {
    out.label = "heuristic: no points";
    return out;
  }
  const std::size_t n = points.front().arity();
  std::vector<std::pair<std::size_t, std::size_t>> monos;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) monos.emplace_back(i, j);
  }
  out.monomials = monos.size();
  out.points_used = points.size();

  for (std::uint64_t prime : {2305843009213693951ULL, 4611686018427387847ULL}) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& pt : points) {
      std::vector<std::uint64_t> red(n);
      for (std::size_t i = 0; i < n; ++i) red[i] = mpz_fdiv_ui(pt.coords()[i].get_mpz_t(), prime);
      std::vector<std::uint64_t> row;
      for (const auto& [i, j] : monos) row.push_back(modp::mul(red[i], red[j], prime));
      rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < monos.size() && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const std::uint64_t inv = modp::inv(rows[rank][col], prime);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const std::uint64_t factor = modp::mul(rows[r][col], inv, prime);
        for (std::size_t c = col; c < monos.size(); ++c) {
          rows[r][c] = modp::sub(rows[r][c], modp::mul(factor, rows[rank][c], prime), prime);
        }
      }
      ++rank;
    }
    out.rank = std::max(out.rank, rank);
    if (rank == monos.size()) {
      out.certified_not_on_quadric = true;
      break;
    }
  }
  out.label = out.certified_not_on_quadric
                  ? "heuristic genericity: no conic or line contains the computed orbit segment"
                  : "heuristic genericity: the computed orbit segment may lie on a conic";
  return out;
}

}  // namespace orbitgcd
