#ifndef QLAT_MOMENTS_HPP
#define QLAT_MOMENTS_HPP

#include <optional>
#include <vector>

#include "qlat/interval.hpp"
#include "qlat/op.hpp"
#include "qlat/plfunction.hpp"
#include "qlat/polynomial.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* One atom of a purely atomic spectral measure: a position enclosure (a
   point interval once the root is recognized as rational) and a weight
   enclosure (a point interval whenever every position is exact). */
struct SpectralAtom {
  RationalInterval position;
  RationalInterval weight;
  bool exact() const {
    return position.width().sign() == 0 && weight.width().sign() == 0;
  }
};

/* Spectral measure of a vector whose orbit closes in finitely many steps:
   finitely many atoms with positive weights summing to ||x||^2.  Carries
   enough state to re-tighten enclosures on demand. */
class AtomicMeasure {
public:
  const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  bool fully_exact() const;
  Rational total() const;  // ||x||^2, exact

  /* Tightens every enclosure to width <= eps and recomputes weights. */
  void refine(const Rational& eps);

  /* Enclosure of the integral of f; a point interval when fully exact. */
  RationalInterval integrate(const PLFunction& f) const;

private:
  std::vector<SpectralAtom> atoms_;
  Poly minpoly_;               // squarefree; its roots are the positions
  std::vector<Poly> chain_;
  std::vector<RootBox> boxes_;
  std::vector<Rational> moments_;
  Rational total_{0};
  void recompute_weights();
  friend std::optional<AtomicMeasure> krylov_measure(const BoundedOperator& A,
                                                     const Vector& x,
                                                     unsigned long cap);
};

/* Reconstructs the spectral measure of x under a self-adjoint operator with
   exact application by closing the orbit x, Ax, A^2 x, ...: the restricted
   matrix in the orbit's orthogonal basis gives the minimal polynomial, its
   real roots the atom positions, and the power moments <x, A^k x> determine
   the weights through Lagrange interpolation.  Returns nullopt when the
   orbit has not closed after `cap` steps. */
std::optional<AtomicMeasure> krylov_measure(const BoundedOperator& A, const Vector& x,
                                            unsigned long cap);

} // namespace qlat

#endif
