#ifndef QLAT_PLFUNCTION_HPP
#define QLAT_PLFUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "qlat/closed_set.hpp"
#include "qlat/interval.hpp"
#include "qlat/rational.hpp"

namespace qlat {

/* Continuous piecewise-linear function on the real line with rational
   breakpoints: affine between consecutive breakpoints, constant to the left
   of the first and to the right of the last.  Exactly representable and
   exactly evaluable; the natural test-function class for spectral
   integrals. */
class PLFunction {
public:
  /* Breakpoints must have strictly increasing abscissae. */
  static PLFunction from_breakpoints(
      std::vector<std::pair<Rational, Rational>> pts);
  static PLFunction constant(Rational v);

  const std::vector<std::pair<Rational, Rational>>& breakpoints() const {
    return pts_;
  }

  Rational eval(const Rational& t) const;

  /* Least Lipschitz constant: the largest absolute slope (0 for constants). */
  Rational lipschitz() const;

  /* Exact global extrema over the whole line; attained at breakpoints. */
  Rational min_global() const;
  Rational max_global() const;

  /* Exact range over a closed interval: extrema occur at the interval's
     endpoints or at breakpoints inside it. */
  RationalInterval range_on(const RationalInterval& box) const;

  /* Exact minimum over a nonempty closed set (DomainError when empty). */
  Rational min_on(const ClosedRationalSet& set) const;

  PLFunction scale(const Rational& a) const;
  PLFunction add(const PLFunction& o) const;

  std::string str() const;

private:
  // invariant: nonempty, strictly increasing abscissae
  std::vector<std::pair<Rational, Rational>> pts_;
};

} // namespace qlat

#endif
