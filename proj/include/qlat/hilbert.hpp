#ifndef QLAT_HILBERT_HPP
#define QLAT_HILBERT_HPP

#include <vector>

#include "qlat/interval.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* Pairwise-orthogonal family of nonzero (not necessarily normalized) vectors,
   with cached squared norms.  Keeping vectors unnormalized keeps everything
   rational: normalizing would drag in square roots. */
class OrthogonalFamily {
public:
  OrthogonalFamily() = default;

  /* Validates pairwise orthogonality and rejects zero members. */
  static OrthogonalFamily checked(std::vector<Vector> vecs);

  const std::vector<Vector>& vectors() const { return vecs_; }
  const std::vector<Rational>& norms_sq() const { return norms_; }
  std::size_t dim() const { return vecs_.size(); }

private:
  friend OrthogonalFamily gram_schmidt(const std::vector<Vector>&);
  static OrthogonalFamily trusted(std::vector<Vector> vecs);

  std::vector<Vector> vecs_;
  std::vector<Rational> norms_;
};

/* Exact Gram-Schmidt without normalization.  Dependent generators produce a
   zero residual and are dropped, so dim() of the result is the rank. */
OrthogonalFamily gram_schmidt(const std::vector<Vector>& gens);

/* Orthogonal projection onto span(F). */
Vector project(const Vector& c, const OrthogonalFamily& F);

/* Exact squared distance from c to span(F):
   ||c||^2 - sum_b |<b, c>|^2 / ||b||^2. */
Rational distance_sq(const Vector& c, const OrthogonalFamily& F);

/* Convenience: distance against raw generators (runs gram_schmidt). */
Rational distance_sq_to_span(const Vector& c, const std::vector<Vector>& gens);

/* Exactly-unit rational vector u with ||u - x/||x|| || <= eps.  The returned
   norm is verified to be exactly 1; the distance bound is verified a
   posteriori with interval arithmetic before returning.  When ||x||^2 is the
   square of a rational the result is exactly x/||x||.  Throws DomainError on
   the zero vector or eps <= 0.

   Method: divide x by a rational upper bound q of ||x|| so y = x/q lands
   inside the closed unit ball, then shoot the chord from an antipodal basis
   pole p (chosen with Re<p, y> <= 0) through y; the second sphere
   intersection u = p + t(y - p), t = 2(1 - Re<p,y>)/||y - p||^2, has exactly
   unit norm by construction.  Tighten q until the verified distance bound
   drops under eps. */
Vector rationalize_unit(const Vector& x, const Rational& eps);

} // namespace qlat

#endif
