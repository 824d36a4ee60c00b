#include "qlat/bernstein.hpp"

#include <gmpxx.h>

#include "qlat/error.hpp"

namespace qlat {

namespace {

Rational binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

} // namespace

CertifiedPolynomial bernstein_approximant(const PLFunction& f, unsigned long degree) {
  if (degree == 0) throw DomainError("approximant degree must be positive");
  const unsigned long n = degree;
  const Rational lip = f.lipschitz();
  if (lip.sign() == 0)
    return {Poly::from_coeffs({f.eval(Rational(0))}), Rational(0)};

  /* Work on the transported g(u) = f(2u - 1) over [0, 1]; sample points
     k/n map back to (2k - n)/n. */
  std::vector<Rational> cu(n + 1, Rational(0));
  for (unsigned long k = 0; k <= n; ++k) {
    Rational g = f.eval(Rational(2 * static_cast<long>(k) - static_cast<long>(n),
                                 static_cast<long>(n)));
    if (g.sign() == 0) continue;
    Rational w = g * binom(n, k);
    // u^k (1-u)^(n-k) expanded in powers of u
    for (unsigned long m = 0; m + k <= n; ++m) {
      Rational term = w * binom(n - k, m);
      if (m % 2) term = -term;
      cu[k + m] = cu[k + m] + term;
    }
  }

  // substitute u = (t + 1)/2 to land on the operator's [-1, 1] scale
  std::vector<Rational> ct(n + 1, Rational(0));
  for (unsigned long d = 0; d <= n; ++d) {
    if (cu[d].sign() == 0) continue;
    Rational factor = cu[d] * Rational::pow2(-static_cast<long>(d));
    for (unsigned long j = 0; j <= d; ++j)
      ct[j] = ct[j] + factor * binom(d, j);
  }

  Rational err = Rational(3, 2) * lip *
                 sqrt_upper(Rational(1, static_cast<long>(n)),
                            Rational(1, 1000 * static_cast<long>(n)));
  return {Poly::from_coeffs(std::move(ct)), std::move(err)};
}

CertifiedPolynomial bernstein_for_precision(const PLFunction& f, const Rational& eps,
                                            unsigned long max_degree) {
  if (eps.sign() <= 0) throw DomainError("precision must be positive");
  const Rational lip = f.lipschitz();
  if (lip.sign() == 0)
    return {Poly::from_coeffs({f.eval(Rational(0))}), Rational(0)};
  // smallest n with (3/2) L n^(-1/2) <= eps
  Rational need = Rational(9, 4) * lip * lip / (eps * eps);
  mpz_class n_z = floor_int(need);
  if (need != Rational(n_z)) n_z += 1;
  if (n_z < 1) n_z = 1;
  if (!n_z.fits_ulong_p() || n_z.get_ui() > max_degree)
    throw ResourceError("required approximant degree exceeds the configured cap");
  CertifiedPolynomial cp = bernstein_approximant(f, n_z.get_ui());
  /* the degree choice makes the true modulus bound at most eps, so eps
     itself is a valid certificate even though the rounded reported error
     may sit a hair above it */
  if (eps < cp.error) cp.error = eps;
  return cp;
}

} // namespace qlat
