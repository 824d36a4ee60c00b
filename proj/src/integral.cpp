#include "qlat/integral.hpp"

#include "qlat/bernstein.hpp"
#include "qlat/error.hpp"

namespace qlat {

namespace {

RationalInterval integrate_measure(AtomicMeasure meas, const PLFunction& f,
                                   const Rational& precision) {
  RationalInterval est = meas.integrate(f);
  Rational eps(1, 16);
  while (precision < est.width()) {
    meas.refine(eps);
    est = meas.integrate(f);
    eps = eps / Rational(4);
  }
  return est;
}

RationalInterval integrate_polynomial(const BoundedOperator& A, const Vector& x,
                                      const PLFunction& f,
                                      const IntegralOptions& opts) {
  const Rational mass = x.norm_sq();
  /* budget: half the precision to the approximant modulus (scaled by the
     mass), everything exact beyond that for exact-apply kinds */
  Rational modulus = opts.precision / (Rational(2) * (mass.sign() ? mass : Rational(1)));
  CertifiedPolynomial cp = bernstein_for_precision(f, modulus, opts.max_poly_degree);

  const auto& c = cp.p.coeffs();
  Rational trunc_err(0);
  Vector y;
  if (!c.empty()) {
    const long n = cp.p.degree();
    y = Gaussian(c[static_cast<size_t>(n)]) * x;
    for (long k = n - 1; k >= 0; --k) {
      if (A.exact_apply()) {
        y = A.apply(y);
      } else {
        auto [img, err] = A.apply_truncated(y, opts.truncation);
        y = std::move(img);
        /* one Horner step turns an accumulated l2 error e into at most
           e * ||A|| + (truncation error) <= e + err */
        trunc_err = trunc_err + err;
      }
      if (c[static_cast<size_t>(k)].sign() != 0)
        y += Gaussian(c[static_cast<size_t>(k)]) * x;
    }
  }
  Gaussian val = inner(x, y);
  /* <x, p(A) x> is real for self-adjoint A and real p; truncation can leave
     a stray imaginary part, which the error term already dominates */
  Rational v = val.re();

  const Rational tol(1, 1 << 20);
  Rational err = cp.error * mass;
  if (trunc_err.sign() != 0)
    err = err + sqrt_upper(mass, tol) * trunc_err;
  return RationalInterval(v - err, v + err);
}

} // namespace

RationalInterval spectral_integral(const BoundedOperator& A, const Vector& x,
                                   const PLFunction& f, const IntegralOptions& opts) {
  if (!A.self_adjoint())
    throw DomainError("spectral integrals need a self-adjoint operator");
  if (opts.precision.sign() <= 0) throw DomainError("precision must be positive");
  if (x.is_zero()) return RationalInterval::point(Rational(0));

  switch (opts.route) {
    case IntegralRoute::OrbitMeasure: {
      auto meas = krylov_measure(A, x, opts.orbit_cap);
      if (!meas)
        throw ResourceError("orbit did not close under the configured cap");
      return integrate_measure(std::move(*meas), f, opts.precision);
    }
    case IntegralRoute::Approximant:
      return integrate_polynomial(A, x, f, opts);
    case IntegralRoute::Auto: {
      if (A.exact_apply()) {
        auto meas = krylov_measure(A, x, opts.orbit_cap);
        if (meas) return integrate_measure(std::move(*meas), f, opts.precision);
      }
      return integrate_polynomial(A, x, f, opts);
    }
  }
  throw DomainError("unreachable integral route");
}

} // namespace qlat
