#ifndef QLAT_INTEGRAL_HPP
#define QLAT_INTEGRAL_HPP

#include <cstdint>

#include "qlat/interval.hpp"
#include "qlat/moments.hpp"
#include "qlat/op.hpp"
#include "qlat/plfunction.hpp"

namespace qlat {

/* How to evaluate the spectral integral <x, f(A) x>:
     OrbitMeasure  -- close the orbit of x, reconstruct the atomic measure,
                      integrate f exactly against it (exact-apply operators
                      whose orbit closes under the cap);
     Approximant   -- replace f by a certified polynomial approximant and
                      evaluate <x, p(A) x> directly;
     Auto          -- orbit measure when possible, approximant otherwise. */
enum class IntegralRoute { Auto, OrbitMeasure, Approximant };

struct IntegralOptions {
  Rational precision{1, 1024};
  IntegralRoute route = IntegralRoute::Auto;
  unsigned long orbit_cap = 48;
  unsigned long max_poly_degree = 4000;
  std::uint64_t truncation = 4096;  // row cutoff for general-kind operators
};

/* Certified enclosure of the spectral integral of f for the state x under a
   self-adjoint A with spectrum in [-1, 1].  The enclosure always contains
   the true integral; its width is at most `precision` except on the
   approximant route over general-kind operators, where the declared
   truncation tails add their own term. */
RationalInterval spectral_integral(const BoundedOperator& A, const Vector& x,
                                   const PLFunction& f, const IntegralOptions& opts);

} // namespace qlat

#endif
