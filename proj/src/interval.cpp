#include "qlat/interval.hpp"

#include <algorithm>

#include "qlat/error.hpp"

namespace qlat {

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
  Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

RationalInterval RationalInterval::intersect(const RationalInterval& o) const {
  Rational lo = std::max(lo_, o.lo_);
  Rational hi = std::min(hi_, o.hi_);
  if (lo > hi) throw DomainError("intersection of disjoint intervals");
  return {lo, hi};
}

RationalInterval RationalInterval::hull(const RationalInterval& o) const {
  return {std::min(lo_, o.lo_), std::max(hi_, o.hi_)};
}

RationalInterval RationalInterval::clamp(const Rational& bound_lo,
                                         const Rational& bound_hi) const {
  Rational lo = std::min(std::max(lo_, bound_lo), bound_hi);
  Rational hi = std::min(std::max(hi_, bound_lo), bound_hi);
  return {lo, hi};
}

std::string RationalInterval::str() const {
  return "[" + lo_.str() + ", " + hi_.str() + "]";
}

RationalInterval interval_sqrt(const Rational& a, const Rational& eps) {
  if (a.sign() < 0) throw DomainError("square root of negative rational");
  if (eps.sign() <= 0) throw DomainError("non-positive precision");
  if (a.is_zero()) return RationalInterval::point(Rational(0));

  mpz_class p = a.num(), q = a.den();
  if (mpz_perfect_square_p(p.get_mpz_t()) && mpz_perfect_square_p(q.get_mpz_t())) {
    mpz_class sp, sq;
    mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
    return RationalInterval::point(Rational(sp, sq));
  }

  /* Choose k with 1/(q*2^k) <= eps, i.e. 2^k >= eps.den/(q*eps.num). */
  mpz_class need;
  mpz_cdiv_q(need.get_mpz_t(), eps.den().get_mpz_t(),
             mpz_class(q * eps.num()).get_mpz_t());
  unsigned long k = (need <= 1) ? 0 : mpz_sizeinbase(need.get_mpz_t(), 2);

  mpz_class scale;  // 2^k
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
  mpz_class n = p * q * scale * scale;  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());  // floor square root
  mpz_class denom = q * scale;
  return {Rational(s, denom), Rational(s + 1, denom)};
}

Rational sqrt_upper(const Rational& a, const Rational& eps) {
  return interval_sqrt(a, eps).hi();
}

} // namespace qlat
