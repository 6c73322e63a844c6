#include "orbitgcd/projgeom.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

#include "orbitgcd/errors.hpp"

namespace orbitgcd {

BigInt ProjPoint::norm() const {
  BigInt m = 0;
  for (const auto& c : coords_) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

std::size_t ProjPoint::bits() const { return bit_length(norm()); }

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ':';
    os << coords_[i].get_str();
  }
  os << ')';
  return os.str();
}

ProjPoint make_point(std::vector<BigInt> raw) {
  if (raw.empty()) throw ArityError("make_point: no coordinates");
  const BigInt g = gcd_of(raw);
  if (sgn(g) == 0) throw DomainError("make_point: all coordinates are zero");
  int sign = 0;
  for (const auto& c : raw) {
    if (sgn(c) != 0) {
      sign = sgn(c);
      break;
    }
  }
  for (auto& c : raw) {
    if (g != 1) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) c = -c;
  }
  return ProjPoint(std::move(raw));
}

// ---------------------------------------------------------------------------

std::string RationalMap::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) s += " : ";
    s += components_[i].to_string();
  }
  return s + ")";
}

RationalMap make_map(std::vector<BigPoly> components) {
  if (components.empty()) throw ArityError("make_map: no components");
  const std::size_t arity = components.front().arity();
  if (components.size() != arity) {
    throw ArityError("make_map: " + std::to_string(components.size()) + " components for " + std::to_string(arity) +
                     " variables");
  }
  std::optional<std::uint64_t> degree;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.arity() != arity) throw ArityError("make_map: component arities differ");
    const auto h = is_homogeneous(c);
    if (!h.homogeneous) throw DomainError("make_map: component " + std::to_string(i) + " is not homogeneous");
    if (h.degree.is_zero_polynomial()) continue;
    if (degree && *degree != h.degree.value()) {
      throw DomainError("make_map: component " + std::to_string(i) + " has degree " +
                        std::to_string(h.degree.value()) + ", expected " + std::to_string(*degree));
    }
    degree = h.degree.value();
  }
  if (!degree) throw DomainError("make_map: all components are zero");

  BigPoly g(arity);
  for (const auto& c : components) {
    g = gcd_multivar(g, c);
    if (g.is_constant()) break;
  }
  if (!g.is_constant()) {
    for (auto& c : components) {
      auto q = exact_divide(c, g);
      if (!q) throw std::logic_error("make_map: common factor does not divide a component");
      c = std::move(*q);
    }
  }
  BigInt cont = 0;
  for (const auto& c : components) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), content(c).get_mpz_t());
  if (cont != 1) {
    for (auto& c : components) c = *exact_divide(c, BigPoly::constant(arity, cont));
  }
  for (const auto& c : components) {
    if (c.is_zero()) continue;
    if (c.leading_term().second < 0) {
      for (auto& x : components) x = -x;
    }
    break;
  }
  std::uint64_t reduced = 0;
  for (const auto& c : components) {
    if (!c.is_zero()) reduced = c.degree().value();
  }
  if (reduced == 0) throw DomainError("make_map: components reduce to constants (degree 0 map)");
  return RationalMap(std::move(components), reduced);
}

RationalMap identity_map(std::size_t arity) {
  std::vector<BigPoly> comps;
  for (std::size_t i = 0; i < arity; ++i) comps.push_back(BigPoly::variable(arity, i));
  return make_map(std::move(comps));
}

SubschemeIdeal::SubschemeIdeal(std::vector<BigPoly> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("subscheme ideal needs at least one generator");
  const std::size_t arity = generators_.front().arity();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.arity() != arity) throw ArityError("subscheme generators have different arities");
    const auto h = is_homogeneous(g);
    if (g.is_zero()) throw DomainError("subscheme generator " + std::to_string(i) + " is zero");
    if (!h.homogeneous) throw DomainError("subscheme generator " + std::to_string(i) + " is not homogeneous");
    if (h.degree.value() == 0) throw DomainError("subscheme generator " + std::to_string(i) + " is a constant");
    degrees_.push_back(h.degree.value());
  }
}

// ---------------------------------------------------------------------------

std::optional<ProjPoint> apply(const RationalMap& f, const ProjPoint& x) {
  if (x.arity() != f.arity()) throw ArityError("apply: point and map live in different spaces");
  std::vector<BigInt> values;
  values.reserve(f.arity());
  bool all_zero = true;
  for (const auto& c : f.components()) {
    values.push_back(eval_int(c, x.coords()));
    if (sgn(values.back()) != 0) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  return make_point(std::move(values));
}

RationalMap compose_maps(const RationalMap& f, const RationalMap& g) {
  if (f.arity() != g.arity()) throw ArityError("compose_maps: arity mismatch");
  std::vector<BigPoly> comps;
  comps.reserve(f.arity());
  for (const auto& c : f.components()) comps.push_back(compose(c, g.components()));
  return make_map(std::move(comps));
}

RationalMap iterate_map(const RationalMap& f, std::uint32_t n, IterateOptions options) {
  if (n == 0) throw DomainError("iterate_map: n must be at least 1");
  if (f.degree() > options.degree_cap) {
    throw BudgetExceeded("iterate_map: deg f = " + std::to_string(f.degree()) + " exceeds cap " +
                         std::to_string(options.degree_cap));
  }
  RationalMap current = f;
  for (std::uint32_t k = 2; k <= n; ++k) {
    const std::uint64_t raw = f.degree() * current.degree();
    if (raw > options.degree_cap) {
      throw BudgetExceeded("iterate_map: raw degree " + std::to_string(raw) + " of f^" + std::to_string(k) +
                           " exceeds cap " + std::to_string(options.degree_cap));
    }
    current = compose_maps(f, current);
  }
  return current;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t hash_point(const ProjPoint& p) {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : p.coords()) {
    const std::size_t limb = mpz_size(c.get_mpz_t()) ? mpz_getlimbn(c.get_mpz_t(), 0) : 0;
    h ^= std::hash<std::size_t>{}(limb ^ (mpz_size(c.get_mpz_t()) << 1U) ^ static_cast<std::size_t>(sgn(c) + 1)) +
         0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  }
  return h;
}

}  // namespace

Orbit orbit(const RationalMap& f, const ProjPoint& start, std::size_t n_max) {
  if (start.arity() != f.arity()) throw ArityError("orbit: point and map live in different spaces");
  Orbit out;
  std::unordered_multimap<std::size_t, std::size_t> seen;
  out.points.push_back(start);
  seen.emplace(hash_point(start), 0);
  for (std::size_t n = 0; n < n_max; ++n) {
    auto next = apply(f, out.points.back());
    if (!next) {
      // x_n lies in I_f: the well-defined part of the orbit is x_0 .. x_{n-1}.
      out.indeterminate_at = n;
      out.points.pop_back();
      return out;
    }
    if (!out.period) {
      const std::size_t h = hash_point(*next);
      auto [lo, hi] = seen.equal_range(h);
      for (auto it = lo; it != hi; ++it) {
        if (out.points[it->second] == *next) {
          out.preperiod = it->second;
          out.period = n + 1 - it->second;
          break;
        }
      }
      seen.emplace(h, n + 1);
    }
    out.points.push_back(std::move(*next));
  }
  return out;
}

}  // namespace orbitgcd
