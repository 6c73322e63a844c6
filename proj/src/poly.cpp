#include "orbitgcd/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "orbitgcd/errors.hpp"
#include "orbitgcd/modarith.hpp"

namespace orbitgcd {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityError("monomial arity mismatch");
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw DomainError("monomial quotient is not exact");
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() < b.exponents();
}

std::uint64_t Degree::value() const {
  if (zero_poly_) throw DomainError("degree of the zero polynomial has no numeric value");
  return value_;
}

// ---------------------------------------------------------------------------
// BigPoly basics

namespace {

void check_arity(const BigPoly& p, const BigPoly& q, const char* op) {
  if (p.arity() != q.arity()) {
    throw ArityError(std::string(op) + ": arity mismatch (" + std::to_string(p.arity()) + " vs " +
                     std::to_string(q.arity()) + ")");
  }
}

// Canonicalize a vector of terms: sort descending, merge equal monomials, drop zeros.
std::vector<BigPoly::Term> canonical(std::vector<BigPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const BigPoly::Term& a, const BigPoly::Term& b) { return grlex_less(b.first, a.first); });
  std::vector<BigPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  return out;
}

// Merge two canonical term lists with coefficient signs (sign_q = +1 or -1).
std::vector<BigPoly::Term> merge(const std::vector<BigPoly::Term>& a, const std::vector<BigPoly::Term>& b,
                                 bool negate_b) {
  std::vector<BigPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].first, a[i].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].first, b[j].first)) {
      out.emplace_back(b[j].first, negate_b ? BigInt(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigInt c = negate_b ? BigInt(a[i].second - b[j].second) : BigInt(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BigPoly::BigPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw ArityError("polynomial arity must be positive");
}

BigPoly BigPoly::constant(std::size_t arity, const BigInt& c) {
  BigPoly p(arity);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(arity), c);
  return p;
}

BigPoly BigPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityError("variable index out of range");
  std::vector<std::uint32_t> e(arity, 0);
  e[index] = 1;
  return monomial(Monomial(std::move(e)), 1);
}

BigPoly BigPoly::monomial(const Monomial& m, const BigInt& c) {
  BigPoly p(m.arity());
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

BigPoly BigPoly::from_terms(std::size_t arity, std::vector<Term> terms) {
  BigPoly p(arity);
  for (const auto& t : terms) {
    if (t.first.arity() != arity) throw ArityError("term arity does not match polynomial arity");
  }
  p.terms_ = canonical(std::move(terms));
  return p;
}

bool BigPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree() == 0);
}

Degree BigPoly::degree() const {
  if (terms_.empty()) return Degree::zero_polynomial();
  return Degree(terms_.front().first.degree());
}

const BigPoly::Term& BigPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t BigPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

BigInt BigPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.degree() == 0) return terms_.back().second;
  return 0;
}

std::string BigPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << i;
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

BigPoly BigPoly::operator-() const {
  BigPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

BigPoly operator+(const BigPoly& p, const BigPoly& q) {
  check_arity(p, q, "add");
  BigPoly r(p.arity());
  r.terms_ = merge(p.terms_, q.terms_, false);
  return r;
}

BigPoly operator-(const BigPoly& p, const BigPoly& q) {
  check_arity(p, q, "sub");
  BigPoly r(p.arity());
  r.terms_ = merge(p.terms_, q.terms_, true);
  return r;
}

BigPoly operator*(const BigInt& c, const BigPoly& p) {
  BigPoly r(p.arity());
  if (sgn(c) == 0) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

BigPoly operator*(const BigPoly& p, const BigPoly& q) {
  check_arity(p, q, "mul");
  const std::size_t n = p.arity();
  if (p.is_zero() || q.is_zero()) return BigPoly(n);

  std::vector<BigPoly::Term> out;
  const std::uint64_t max_deg = p.degree().value() + q.degree().value();
  const unsigned bits = std::max(1U, static_cast<unsigned>(std::bit_width(max_deg)));

  if (static_cast<std::uint64_t>(bits) * n <= 64) {
    // Pack exponent vectors into one word; var 0 in the highest field.
    auto pack = [&](const Monomial& m) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < n; ++i) key = (key << bits) | m[i];
      return key;
    };
    std::vector<std::uint64_t> qkeys;
    qkeys.reserve(q.terms_.size());
    for (const auto& t : q.terms_) qkeys.push_back(pack(t.first));

    std::unordered_map<std::uint64_t, BigInt> acc;
    acc.reserve(std::min<std::size_t>(p.terms_.size() * q.terms_.size(), 1U << 22));
    for (const auto& [pm, pc] : p.terms_) {
      const std::uint64_t pk = pack(pm);
      for (std::size_t j = 0; j < q.terms_.size(); ++j) {
        BigInt& slot = acc[pk + qkeys[j]];
        mpz_addmul(slot.get_mpz_t(), pc.get_mpz_t(), q.terms_[j].second.get_mpz_t());
      }
    }
    out.reserve(acc.size());
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    for (auto& [key, c] : acc) {
      if (sgn(c) == 0) continue;
      std::vector<std::uint32_t> e(n);
      std::uint64_t k = key;
      for (std::size_t i = n; i-- > 0;) {
        e[i] = static_cast<std::uint32_t>(k & mask);
        k >>= bits;
      }
      out.emplace_back(Monomial(std::move(e)), std::move(c));
    }
  } else {
    std::map<Monomial, BigInt, GrlexGreater> acc;
    for (const auto& [pm, pc] : p.terms_) {
      for (const auto& [qm, qc] : q.terms_) {
        BigInt& slot = acc[pm * qm];
        mpz_addmul(slot.get_mpz_t(), pc.get_mpz_t(), qc.get_mpz_t());
      }
    }
    for (auto& [m, c] : acc) {
      if (sgn(c) != 0) out.emplace_back(m, std::move(c));
    }
  }
  return BigPoly::from_terms(n, std::move(out));
}

BigPoly add(const BigPoly& p, const BigPoly& q) { return p + q; }
BigPoly sub(const BigPoly& p, const BigPoly& q) { return p - q; }
BigPoly mul(const BigPoly& p, const BigPoly& q) { return p * q; }

BigPoly pow(const BigPoly& p, std::uint32_t exp) {
  BigPoly result = BigPoly::constant(p.arity(), 1);
  BigPoly base = p;
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation and composition

BigInt eval_int(const BigPoly& p, std::span<const BigInt> point) {
  if (point.size() != p.arity()) {
    throw ArityError("eval_int: point has " + std::to_string(point.size()) + " coordinates, polynomial has arity " +
                     std::to_string(p.arity()));
  }
  std::vector<std::map<std::uint32_t, BigInt>> powers(p.arity());
  auto power = [&](std::size_t var, std::uint32_t e) -> const BigInt& {
    auto [it, inserted] = powers[var].try_emplace(e);
    if (inserted) it->second = pow_ui(point[var], e);
    return it->second;
  };
  BigInt total = 0;
  BigInt term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      term *= power(i, m[i]);
      if (sgn(term) == 0) break;
    }
    total += term;
  }
  return total;
}

BigPoly compose(const BigPoly& p, std::span<const BigPoly> subst) {
  if (subst.size() != p.arity()) {
    throw ArityError("compose: " + std::to_string(subst.size()) + " substitutions for arity " +
                     std::to_string(p.arity()));
  }
  if (subst.empty()) throw ArityError("compose: empty substitution");
  const std::size_t out_arity = subst.front().arity();
  std::optional<std::uint64_t> common;
  for (const auto& s : subst) {
    if (s.arity() != out_arity) throw ArityError("compose: substitutions have different arities");
    const auto h = is_homogeneous(s);
    if (!h.homogeneous) throw DomainError("compose: substitution " + s.to_string() + " is not homogeneous");
    if (h.degree.is_zero_polynomial()) continue;
    if (common && *common != h.degree.value()) throw DomainError("compose: substitutions of unequal degree");
    common = h.degree.value();
  }

  std::vector<std::map<std::uint32_t, BigPoly>> powers(p.arity());
  auto power = [&](std::size_t var, std::uint32_t e) -> const BigPoly& {
    auto& cache = powers[var];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    // build from the largest cached power below e
    auto below = cache.lower_bound(e);
    BigPoly value(out_arity);
    if (below != cache.begin()) {
      --below;
      value = below->second * pow(subst[var], e - below->first);
    } else {
      value = pow(subst[var], e);
    }
    return cache.emplace(e, std::move(value)).first->second;
  };

  BigPoly result(out_arity);
  // Process terms from low to high exponents so the power cache grows upward.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    BigPoly term = BigPoly::constant(out_arity, c);
    for (std::size_t i = 0; i < m.arity() && !term.is_zero(); ++i) {
      if (m[i] == 0) continue;
      term = term * power(i, m[i]);
    }
    result = result + term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Content, homogeneity, division

BigInt content(const BigPoly& p) {
  BigInt g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigPoly primitive_part(const BigPoly& p) {
  const BigInt c = content(p);
  if (sgn(c) == 0 || c == 1) return p;
  std::vector<BigPoly::Term> terms = p.terms();
  for (auto& t : terms) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  return BigPoly::from_terms(p.arity(), std::move(terms));
}

BigPoly normalize_sign_primitive(const BigPoly& p) {
  BigPoly r = primitive_part(p);
  if (!r.is_zero() && sgn(r.leading_term().second) < 0) r = -r;
  return r;
}

Homogeneity is_homogeneous(const BigPoly& p) {
  if (p.is_zero()) return {true, Degree::zero_polynomial()};
  const std::uint64_t d = p.terms().front().first.degree();
  for (const auto& t : p.terms()) {
    if (t.first.degree() != d) return {false, Degree::zero_polynomial()};
  }
  return {true, Degree(d)};
}

std::optional<BigPoly> exact_divide(const BigPoly& p, const BigPoly& q) {
  check_arity(p, q, "exact_divide");
  if (q.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
  if (p.is_zero()) return BigPoly(p.arity());

  if (q.term_count() == 1) {
    const auto& [qm, qc] = q.leading_term();
    std::vector<BigPoly::Term> out;
    out.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
      if (!qm.divides(m) || !mpz_divisible_p(c.get_mpz_t(), qc.get_mpz_t())) return std::nullopt;
      BigInt quo;
      mpz_divexact(quo.get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
      out.emplace_back(m / qm, std::move(quo));
    }
    return BigPoly::from_terms(p.arity(), std::move(out));
  }

  if (p.degree().value() < q.degree().value()) return std::nullopt;
  const auto& [lm, lc] = q.leading_term();
  std::map<Monomial, BigInt, GrlexGreater> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  std::vector<BigPoly::Term> quotient;
  while (!rem.empty()) {
    auto head = rem.begin();
    if (!lm.divides(head->first) || !mpz_divisible_p(head->second.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    const Monomial tm = head->first / lm;
    BigInt tc;
    mpz_divexact(tc.get_mpz_t(), head->second.get_mpz_t(), lc.get_mpz_t());
    for (const auto& [qm, qc] : q.terms()) {
      Monomial m = qm * tm;
      auto [it, inserted] = rem.try_emplace(std::move(m), 0);
      mpz_submul(it->second.get_mpz_t(), tc.get_mpz_t(), qc.get_mpz_t());
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.emplace_back(tm, std::move(tc));
  }
  return BigPoly::from_terms(p.arity(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Multivariate gcd

namespace {

BigPoly divide_or_throw(const BigPoly& p, const BigPoly& q) {
  auto r = exact_divide(p, q);
  if (!r) throw std::logic_error("gcd_multivar: expected exact division failed");
  return std::move(*r);
}

// Polynomial in one main variable with coefficients in Z[other vars]; index = power.
struct Univ {
  std::vector<BigPoly> c;

  long deg() const { return static_cast<long>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const BigPoly& lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

Univ split(const BigPoly& p, std::size_t var) {
  Univ u;
  std::vector<std::vector<BigPoly::Term>> buckets(p.degree_in(var) + (p.is_zero() ? 0 : 1));
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> e = m.exponents();
    const auto k = e[var];
    e[var] = 0;
    buckets[k].emplace_back(Monomial(std::move(e)), c);
  }
  for (auto& b : buckets) u.c.push_back(BigPoly::from_terms(p.arity(), std::move(b)));
  u.trim();
  return u;
}

BigPoly join(const Univ& u, std::size_t arity, std::size_t var) {
  std::vector<BigPoly::Term> terms;
  for (std::size_t k = 0; k < u.c.size(); ++k) {
    for (const auto& [m, c] : u.c[k].terms()) {
      std::vector<std::uint32_t> e = m.exponents();
      e[var] += static_cast<std::uint32_t>(k);
      terms.emplace_back(Monomial(std::move(e)), c);
    }
  }
  return BigPoly::from_terms(arity, std::move(terms));
}

Univ scale(const Univ& u, const BigPoly& s) {
  Univ r;
  r.c.reserve(u.c.size());
  for (const auto& x : u.c) r.c.push_back(x * s);
  r.trim();
  return r;
}

Univ divide_coeffs(const Univ& u, const BigPoly& s) {
  Univ r;
  r.c.reserve(u.c.size());
  for (const auto& x : u.c) r.c.push_back(divide_or_throw(x, s));
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Univ prem(const Univ& a, const Univ& b) {
  Univ r = a;
  long e = a.deg() - b.deg() + 1;
  const BigPoly& lb = b.lc();
  while (!r.zero() && r.deg() >= b.deg()) {
    const long shift = r.deg() - b.deg();
    const BigPoly lr = r.lc();
    Univ next = scale(r, lb);
    for (long k = 0; k <= b.deg(); ++k) {
      next.c[static_cast<std::size_t>(k + shift)] = next.c[static_cast<std::size_t>(k + shift)] - lr * b.c[static_cast<std::size_t>(k)];
    }
    next.trim();
    r = std::move(next);
    --e;
  }
  if (e > 0 && !r.zero()) r = scale(r, pow(lb, static_cast<std::uint32_t>(e)));
  return r;
}

std::optional<std::size_t> main_variable(const BigPoly& a, const BigPoly& b) {
  for (std::size_t v = a.arity(); v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return std::nullopt;
}

BigPoly gcd_rec(const BigPoly& a, const BigPoly& b);

BigPoly content_in(const Univ& u) {
  BigPoly g(u.c.empty() ? 1 : u.c.front().arity());
  for (const auto& x : u.c) {
    g = gcd_rec(g, x);
    if (g.is_constant() && !g.is_zero() && abs(g.constant_term()) == 1) break;
  }
  return g;
}

// gcd up to sign.
BigPoly gcd_rec(const BigPoly& a, const BigPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto v = main_variable(a, b);
  if (!v) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t());
    return BigPoly::constant(a.arity(), g);
  }
  Univ ua = split(a, *v);
  Univ ub = split(b, *v);
  if (ua.deg() == 0) return gcd_rec(a, content_in(ub));
  if (ub.deg() == 0) return gcd_rec(content_in(ua), b);

  const BigPoly ca = content_in(ua);
  const BigPoly cb = content_in(ub);
  const BigPoly c = gcd_rec(ca, cb);
  Univ u = divide_coeffs(ua, ca);
  Univ w = divide_coeffs(ub, cb);
  if (u.deg() < w.deg()) std::swap(u, w);

  // Subresultant PRS (Collins / Brown).
  BigPoly g = BigPoly::constant(a.arity(), 1);
  BigPoly h = BigPoly::constant(a.arity(), 1);
  while (true) {
    const long delta = u.deg() - w.deg();
    Univ r = prem(u, w);
    if (r.zero()) break;
    if (r.deg() == 0) {
      w = Univ{{BigPoly::constant(a.arity(), 1)}};
      break;
    }
    u = std::move(w);
    w = divide_coeffs(r, g * pow(h, static_cast<std::uint32_t>(delta)));
    g = u.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(pow(g, static_cast<std::uint32_t>(delta)), pow(h, static_cast<std::uint32_t>(delta - 1)));
    }
  }
  const Univ pw = divide_coeffs(w, content_in(w));
  return c * join(pw, a.arity(), *v);
}

// Proves gcd(a, b) constant by univariate images modulo a prime, one variable at
// a time. false means "could not certify", not "non-trivial".
bool certify_coprime(const BigPoly& a, const BigPoly& b) {
  constexpr modp::u64 prime = 2305843009213693951ULL;  // 2^61 - 1
  std::mt19937_64 rng(0x6f726269746763ULL);
  const std::size_t n = a.arity();

  auto image = [&](const BigPoly& p, std::size_t var, const std::vector<modp::u64>& values) {
    modp::UPoly u(p.degree_in(var) + 1, 0);
    for (const auto& [m, c] : p.terms()) {
      modp::u64 t = mpz_fdiv_ui(c.get_mpz_t(), prime);
      for (std::size_t i = 0; i < n && t != 0; ++i) {
        if (i == var || m[i] == 0) continue;
        t = modp::mul(t, modp::pow(values[i], m[i], prime), prime);
      }
      u[m[var]] = modp::add(u[m[var]], t, prime);
    }
    return u;
  };

  for (std::size_t var = 0; var < n; ++var) {
    const auto da = a.degree_in(var);
    const auto db = b.degree_in(var);
    if (da == 0 || db == 0) continue;
    bool certified = false;
    for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
      std::vector<modp::u64> values(n);
      for (auto& x : values) x = 1 + rng() % (prime - 1);
      auto ia = image(a, var, values);
      auto ib = image(b, var, values);
      if (ia.back() == 0 || ib.back() == 0) continue;  // leading coefficient vanished
      if (modp::degree(modp::gcd(ia, ib, prime)) == 0) certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace

BigPoly gcd_multivar(const BigPoly& p, const BigPoly& q) {
  check_arity(p, q, "gcd_multivar");
  const std::size_t n = p.arity();
  if (p.is_zero() && q.is_zero()) return BigPoly(n);
  if (p.is_zero()) return normalize_sign_primitive(q);
  if (q.is_zero()) return normalize_sign_primitive(p);

  // Common monomial factor.
  std::vector<std::uint32_t> low(n, UINT32_MAX);
  for (const auto* poly : {&p, &q}) {
    for (const auto& [m, c] : poly->terms()) {
      for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], m[i]);
    }
  }
  const BigPoly mono = BigPoly::monomial(Monomial(low), 1);
  const BigPoly a = primitive_part(divide_or_throw(p, mono));
  const BigPoly b = primitive_part(divide_or_throw(q, mono));

  BigPoly g = mono;
  if (!a.is_constant() && !b.is_constant() && !certify_coprime(a, b)) {
    g = mono * gcd_rec(a, b);
  }
  g = normalize_sign_primitive(g);
  if (!exact_divide(p, g) || !exact_divide(q, g)) {
    throw std::logic_error("gcd_multivar: result does not divide both inputs");
  }
  return g;
}

}  // namespace orbitgcd
