#ifndef QLAT_OP_HPP
#define QLAT_OP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "qlat/linalg.hpp"
#include "qlat/rational.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* Bounded operator on l2, presented through exact matrix entries.  Every
   constructor documents (and where checkable, enforces) the norm contract
   ||A|| <= 1, so spectra live in [-1, 1].

   Structured kinds -- diagonal, banded, finite -- have columns of finite
   support, so applying them to a finitely supported vector is exact.  The
   general kind only promises truncations: entries plus a per-column tail
   bound, and apply_truncated returns a vector together with an l2 error
   bound. */
class BoundedOperator {
public:
  enum class Kind { Diagonal, Banded, Finite, General };

  /* Multiplication operator: e_i -> eigs[i] * e_i, zero beyond the list.
     Enforces |eig| <= 1.  Self-adjoint. */
  static BoundedOperator diagonal(std::vector<Rational> eigs);

  /* Infinite diagonal from an entry rule; the rule must keep |eig(i)| <= 1
     (checked at every use, DomainError on violation).  Self-adjoint. */
  static BoundedOperator diagonal_stream(std::function<Rational(std::uint64_t)> eig);

  /* Band matrix: entry(i, j) may be nonzero only for |i - j| <= band (the
     rule is simply not consulted outside the band).  The caller asserts
     self-adjointness (entry(i,j) == conj(entry(j,i))) and the norm bound;
     spot_check_self_adjoint probes the former on an initial window. */
  static BoundedOperator banded(std::uint64_t band,
                                std::function<Gaussian(std::uint64_t, std::uint64_t)> entry,
                                bool self_adjoint);

  /* Dense block acting on coordinates 0..m.rows()-1, zero elsewhere.
     Requires a square matrix; checks hermitian symmetry exactly and flags
     self-adjoint accordingly.  The norm contract is the caller's. */
  static BoundedOperator finite(Matrix m);

  /* Coordinate shifts: down(e_i) = e_{i+1}, up(e_{i+1}) = e_i and
     up(e_0) = 0.  Isometry / co-isometry; not self-adjoint. */
  static BoundedOperator shift_down();
  static BoundedOperator shift_up();

  /* Entry oracle with a declared column tail: tail(j, n) must bound the
     squared l2 mass of column j at rows >= n, non-increasing in n.  Used
     only through apply_truncated. */
  static BoundedOperator general(std::function<Gaussian(std::uint64_t, std::uint64_t)> entry,
                                 std::function<Rational(std::uint64_t, std::uint64_t)> column_tail,
                                 bool self_adjoint);

  Kind kind() const;
  bool self_adjoint() const;
  bool exact_apply() const;  // true for every kind except General

  Gaussian entry(std::uint64_t i, std::uint64_t j) const;

  /* Exact image of a finitely supported vector; DomainError for the
     general kind. */
  Vector apply(const Vector& x) const;

  /* Image truncated to rows < cutoff plus an upper bound on the l2 norm of
     what was dropped.  Exact kinds return their exact image and error 0. */
  std::pair<Vector, Rational> apply_truncated(const Vector& x, std::uint64_t cutoff) const;

  /* Checks entry(i,j) == conj(entry(j,i)) for all i, j < window; returns
     false on the first mismatch. */
  bool spot_check_self_adjoint(std::uint64_t window) const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit BoundedOperator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

} // namespace qlat

#endif
