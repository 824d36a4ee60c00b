#ifndef QLAT_SUBSPACE_HPP
#define QLAT_SUBSPACE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qlat/hilbert.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* Closed subspace, presented either by finitely many generators or by a
   countable generator stream.  A countable presentation may carry a tail
   bound t(n), promising that for every unit vector c the distance to the
   n-generator truncation overshoots the true distance by at most t(n):
   d(c, L_n) <= d(c, L) + t(n).  Without a tail bound, truncations only give
   upper bounds on the distance and nothing about L itself can be certified
   from below. */
class Subspace {
public:
  static Subspace finite(std::vector<Vector> gens);  // empty list = zero subspace

  static Subspace countable(
      std::function<Vector(std::size_t)> gen,
      std::optional<std::function<Rational(std::size_t)>> tail_bound);

  bool is_finite() const;
  bool has_tail_bound() const;

  /* Finite presentations only. */
  const std::vector<Vector>& generators() const;
  const OrthogonalFamily& basis() const;  // cached exact Gram-Schmidt
  std::size_t dim() const;                // rank of the generators

  /* Countable presentations: the i-th generator (memoized). */
  Vector generator(std::size_t i) const;

  /* Orthogonal family for the first n generators of a countable
     presentation (or the full basis if n covers a finite one). */
  OrthogonalFamily prefix_basis(std::size_t n) const;

  Rational tail_bound(std::size_t n) const;  // DomainError if none declared

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

} // namespace qlat

#endif
