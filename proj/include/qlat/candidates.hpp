#ifndef QLAT_CANDIDATES_HPP
#define QLAT_CANDIDATES_HPP

#include <cstddef>
#include <vector>

#include "qlat/rational.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* One slot of the global candidate enumeration: an exactly-unit direction
   and a radius in [0,1).  `grid` is the raw grid vector the unit was snapped
   from (kept for diagnostics and tests). */
struct Candidate {
  Vector unit;
  Rational r;
  Vector grid;
};

/* The fixed, deterministic, fair enumeration of (direction, radius) pairs
   that every subspace coding filters.  Slots are graded by
       T = k + h + b
   with k the support size, h the vector height (entry heights and occupied
   indices both count) and b the radius denominator.  Within a grade, classes
   (k, h, b) go in lexicographic order; within a class, supports are the
   k-subsets of {0..h-1} in lexicographic order, entry tuples run through an
   odometer over the height-<=h nonzero Gaussian values (components ordered by
   denominator then numerator; vectors whose height is not exactly h are
   skipped so each vector appears in exactly one class), and radii a/b run
   through the numerators coprime to b in increasing order (b = 1 contributes
   r = 0).  Grid vectors are snapped to the unit sphere with tolerance
   1/(h+1); a grid vector whose norm is already the square of a rational is
   normalized exactly, so every rational unit vector occurs in its own class.
   The enumeration is memoized process-wide: slot i always returns the same
   candidate. */
Candidate candidate_at(std::size_t slot);

/* Materialize slots [begin, end). */
std::vector<Candidate> candidate_block(std::size_t begin, std::size_t end);

/* The nonzero Gaussian values of height <= h in enumeration order (exposed
   for tests). */
std::vector<Gaussian> gaussian_values_up_to(long h);

} // namespace qlat

#endif
