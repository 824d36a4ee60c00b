#ifndef QLAT_POLYNOMIAL_HPP
#define QLAT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "qlat/interval.hpp"
#include "qlat/rational.hpp"

namespace qlat {

/* Dense univariate polynomial over the rationals.  coeff(i) multiplies t^i;
   trailing zero coefficients are trimmed, so the zero polynomial has an
   empty coefficient vector and degree -1. */
class Poly {
public:
  Poly() = default;  // zero
  static Poly from_coeffs(std::vector<Rational> c);
  static Poly monomial(const Rational& a, size_t k);  // a * t^k

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  Rational eval(const Rational& t) const;
  RationalInterval eval_on(const RationalInterval& box) const;  // Horner enclosure

  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& a) const;

  /* Euclidean remainder; divisor must be nonzero. */
  static Poly rem(const Poly& a, const Poly& b);

  std::string str() const;

private:
  std::vector<Rational> c_;
  void trim();
};

/* Open-closed root box from isolation: the tracked polynomial has exactly one
   root in (lo, hi].  Both endpoints stay non-roots except possibly hi. */
struct RootBox {
  Rational lo;
  Rational hi;
};

/* Sturm sequence of p: p, p', then negated Euclidean remainders until zero.
   Sign-variation differences count distinct real roots, multiplicities
   ignored, which is exactly the count wanted here. */
std::vector<Poly> sturm_chain(const Poly& p);

/* Sign variations of the chain evaluated at x, zeros skipped. */
int sign_variations_at(const std::vector<Poly>& chain, const Rational& x);

/* Number of distinct roots of the chain's polynomial in (lo, hi]. */
int count_roots_in(const std::vector<Poly>& chain, const Rational& lo,
                   const Rational& hi);

/* Isolating boxes for every distinct real root of p inside (lo, hi],
   sorted left to right.  p must be nonzero and p(lo) != 0. */
std::vector<RootBox> isolate_roots(const Poly& p, const Rational& lo,
                                   const Rational& hi);

/* Shrinks an isolating box by bisection until hi - lo <= eps, preserving
   the exactly-one-root invariant.  Snaps to an exact root when the simplest
   rational in the box is one, returning a degenerate box lo == hi. */
void refine_root_box(const Poly& p, const std::vector<Poly>& chain,
                     RootBox& box, const Rational& eps);

} // namespace qlat

#endif
