#ifndef QLAT_VALUATION_HPP
#define QLAT_VALUATION_HPP

#include <vector>

#include "qlat/closed_set.hpp"
#include "qlat/integral.hpp"
#include "qlat/op.hpp"
#include "qlat/plfunction.hpp"
#include "qlat/semidecision.hpp"
#include "qlat/upper_real.hpp"

namespace qlat {

/* The spectral value of a state x at a closed set C is
       inf { I(f) : f piecewise linear, f >= 0 everywhere, f > 1 on C },
   where I(f) encloses <x, f(A) x>.  The infimum equals the spectral mass
   x assigns to C; it is approached from above by the plateau witnesses
   below, by continuity from above of the measure on its closed set. */

/* Witness number j >= 1 adapted to C: value 1 + 2^-j on a union of blocks
   covering C (components closer than 2^-j+1 merge), linear ramps of width
   2^-j down to 0 outside.  Nonnegative everywhere, exceeds 1 on C; as j
   grows the blocks shrink onto C.  For empty C the witness is identically
   zero. */
PLFunction plateau_witness(const ClosedRationalSet& C, unsigned long j);

struct ValuationOptions {
  unsigned long orbit_cap = 48;
  unsigned long max_poly_degree = 4000;
};

/* Semidecides "spectral value of x at C is < q": probes witnesses in
   schedule order, integrating witness j at precision 2^-(j+2); confirms as
   soon as an integral's upper end drops below q.  Sound at every fuel;
   every true instance is confirmed at some fuel.  A witness whose integral
   exceeds the configured resource caps is skipped, never misreported. */
Semidecision valuation_less(const BoundedOperator& A, const Vector& x,
                            const ClosedRationalSet& C, const Rational& q,
                            const ValuationOptions& opts = {});

/* The spectral value as a rational upper-bound stream: bound number s is
   the best witness integral seen through witness s, clamped into
   [0, ||x||^2].  Non-increasing, converges to the value from above. */
UpperReal valuation_upper(const BoundedOperator& A, const Vector& x,
                          const ClosedRationalSet& C,
                          const ValuationOptions& opts = {});

/* Independent closed form for diagonal operators: the mass of x on the
   coordinates whose diagonal entry lies in C.  Coordinates beyond the list
   carry diagonal entry 0. */
Rational diagonal_oracle(const std::vector<Rational>& eigs, const Vector& x,
                         const ClosedRationalSet& C);

} // namespace qlat

#endif
