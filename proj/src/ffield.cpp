#include "orbitgcd/ffield.hpp"

#include "orbitgcd/errors.hpp"

namespace orbitgcd {

namespace {

void require_prime(std::uint64_t p) {
  if (p >= kMaxPrime || !modp::is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime below 2^62");
}

}  // namespace

FpElement::FpElement(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  require_prime(modulus);
  value_ = value % modulus;
}

FpElement FpElement::inverse() const { return {modp::inv(value_, modulus_), modulus_, Unchecked{}}; }

FpElement operator+(FpElement a, FpElement b) {
  if (a.modulus_ != b.modulus_) throw DomainError("F_p elements with different moduli");
  return {modp::add(a.value_, b.value_, a.modulus_), a.modulus_, FpElement::Unchecked{}};
}

FpElement operator-(FpElement a, FpElement b) {
  if (a.modulus_ != b.modulus_) throw DomainError("F_p elements with different moduli");
  return {modp::sub(a.value_, b.value_, a.modulus_), a.modulus_, FpElement::Unchecked{}};
}

FpElement operator*(FpElement a, FpElement b) {
  if (a.modulus_ != b.modulus_) throw DomainError("F_p elements with different moduli");
  return {modp::mul(a.value_, b.value_, a.modulus_), a.modulus_, FpElement::Unchecked{}};
}

FpPoly reduce_poly(const BigPoly& p, std::uint64_t prime) {
  require_prime(prime);
  FpPoly out;
  out.prime_ = prime;
  out.arity_ = p.arity();
  for (const auto& [m, c] : p.terms()) {
    const std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), prime);
    if (r == 0) continue;
    out.coeffs_.push_back(r);
    out.exps_.insert(out.exps_.end(), m.exponents().begin(), m.exponents().end());
    out.degree_ = std::max<std::uint32_t>(out.degree_, static_cast<std::uint32_t>(m.degree()));
  }
  return out;
}

std::uint64_t FpPoly::eval(std::span<const std::uint64_t> point) const {
  if (point.size() != arity_) throw ArityError("FpPoly::eval: wrong number of coordinates");
  std::uint64_t acc = 0;
  const std::uint32_t* e = exps_.data();
  for (std::size_t t = 0; t < coeffs_.size(); ++t, e += arity_) {
    std::uint64_t term = coeffs_[t];
    for (std::size_t i = 0; i < arity_ && term != 0; ++i) {
      if (e[i] == 1) {
        term = modp::mul(term, point[i], prime_);
      } else if (e[i] > 1) {
        term = modp::mul(term, modp::pow(point[i], e[i], prime_), prime_);
      }
    }
    acc = modp::add(acc, term, prime_);
  }
  return acc;
}

ProjPointsFp::ProjPointsFp(std::size_t dimension, std::uint64_t prime) : prime_(prime) {
  if (dimension != 2) throw DomainError("proj_points_fp: only the projective plane is supported");
  require_prime(prime);
  if (prime > (std::uint64_t{1} << 31)) throw DomainError("proj_points_fp: prime too large to enumerate");
}

ProjPointsFp::Point ProjPointsFp::at(std::uint64_t k) const {
  const std::uint64_t p = prime_;
  if (k < p * p) return {k / p, k % p, 1};
  k -= p * p;
  if (k < p) return {k, 1, 0};
  return {1, 0, 0};
}

std::uint64_t ProjPointsFp::index_of(const Point& pt) const {
  const std::uint64_t p = prime_;
  if (pt[2] == 1) return pt[0] * p + pt[1];
  if (pt[1] == 1) return p * p + pt[0];
  return p * p + p;
}

bool ProjPointsFp::normalize(Point& pt) const {
  for (std::size_t i = 3; i-- > 0;) {
    if (pt[i] != 0) {
      if (pt[i] != 1) {
        const std::uint64_t s = modp::inv(pt[i], prime_);
        for (std::size_t j = 0; j < i; ++j) pt[j] = modp::mul(pt[j], s, prime_);
        pt[i] = 1;
      }
      return true;
    }
  }
  return false;
}

ProjPointsFp proj_points_fp(std::size_t dimension, std::uint64_t prime) { return {dimension, prime}; }

}  // namespace orbitgcd
