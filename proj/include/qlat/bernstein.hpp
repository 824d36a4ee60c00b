#ifndef QLAT_BERNSTEIN_HPP
#define QLAT_BERNSTEIN_HPP

#include "qlat/plfunction.hpp"
#include "qlat/polynomial.hpp"
#include "qlat/rational.hpp"

namespace qlat {

/* Polynomial approximant with a certified uniform error bound on [-1, 1]:
   |p(t) - f(t)| <= error for every t in [-1, 1]. */
struct CertifiedPolynomial {
  Poly p;
  Rational error;
};

/* Degree-n Bernstein approximant of f transported to [-1, 1], with exact
   rational coefficients.  The certified error is (3/2) * Lip(f) / sqrt(n)
   (rounded upward); the probabilistic variance bound in fact gives
   Lip(f) / sqrt(n), so the reported constant has slack. */
CertifiedPolynomial bernstein_approximant(const PLFunction& f, unsigned long degree);

/* Approximant with error <= eps, via degree ceil(9 L^2 / (4 eps^2)).
   The n^(-1/2) modulus makes tight tolerances explode: degrees beyond
   max_degree raise ResourceError rather than grind. */
CertifiedPolynomial bernstein_for_precision(const PLFunction& f, const Rational& eps,
                                            unsigned long max_degree);

} // namespace qlat

#endif
