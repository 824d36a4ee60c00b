#ifndef QLAT_INTERVAL_HPP
#define QLAT_INTERVAL_HPP

#include <string>

#include "qlat/rational.hpp"

namespace qlat {

/* Closed interval [lo, hi] with exact rational endpoints.  Endpoint
   arithmetic is exact, so "outward rounding" never loses soundness: the
   result interval always contains every pointwise result. */
class RationalInterval {
public:
  RationalInterval() = default;  // [0, 0]
  RationalInterval(Rational lo, Rational hi);
  static RationalInterval point(Rational v) { return {v, v}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RationalInterval& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }

  RationalInterval operator-() const { return {-hi_, -lo_}; }
  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return a + (-b);
  }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

  RationalInterval intersect(const RationalInterval& o) const;  // DomainError if disjoint
  RationalInterval hull(const RationalInterval& o) const;

  /* Clamp into [bound_lo, bound_hi]; the true value must be known to lie in
     the bound for this to stay an enclosure (used for probabilities in [0,1]). */
  RationalInterval clamp(const Rational& bound_lo, const Rational& bound_hi) const;

  std::string str() const;  // "[lo, hi]"

private:
  Rational lo_, hi_;
};

/* Enclosure of sqrt(a) for a >= 0 with width <= eps (eps > 0), lower end >= 0.
   Exact point interval whenever a is the square of a rational.  Implemented on
   integers: sqrt(p/q) = sqrt(p*q)/q, then a floor square root at scale 2^k. */
RationalInterval interval_sqrt(const Rational& a, const Rational& eps);

/* Convenience: the upper end of interval_sqrt. */
Rational sqrt_upper(const Rational& a, const Rational& eps);

} // namespace qlat

#endif
