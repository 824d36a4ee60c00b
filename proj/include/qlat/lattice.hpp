#ifndef QLAT_LATTICE_HPP
#define QLAT_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qlat/candidates.hpp"
#include "qlat/lazy_seq.hpp"
#include "qlat/semidecision.hpp"
#include "qlat/subspace.hpp"

namespace qlat {

/* One certificate of avoidance: an exactly-unit direction c and a radius
   r in [0,1) with r < d(c, L).  A certificate promises that no unit vector
   of L comes within r of c, so the closed r-ball around c is safe to use for
   refutations. */
struct Certificate {
  Vector c;
  Rational r;
};

/* r < d(c, L), decided exactly as r^2 < d^2(c, L) (both sides rational).
   Preconditions: ||c|| = 1 exactly, 0 <= r < 1, L finitely presented. */
bool certificate_valid(const Subspace& L, const Vector& c, const Rational& r);

/* The two exact geometric tests behind a certificate, for unit c and unit x:

     in_halfspace         Re<c,x>^2 >= 1 - r^2, i.e. x (or -x) lies in the
                          closed half-space {y : Re<c,y> >= sqrt(1-r^2)};
                          decided on squares so no root is ever taken.

     in_closed_ball_scaled  some multiple lambda*x with lambda in [-1,1] lies
                          in the closed ball around c of radius r; decided
                          through the real quadratic
                            f(lambda) = lambda^2 - 2 lambda Re<c,x> + 1 - r^2,
                          which has a root in [-1,1] iff its discriminant is
                          nonnegative and a root point of [-1,1] is reachable
                          (vertex inside, or a sign condition at an endpoint).

   The two fields agree on all unit inputs; they are computed by the two
   different routes on purpose. */
struct HalfspaceReport {
  bool in_halfspace;
  bool in_closed_ball_scaled;
};
HalfspaceReport halfspace_tests(const Vector& c, const Rational& r, const Vector& x);

/* ||x/||x|| - c|| < r for nonzero x and unit c, decided exactly on squares:
   with w = Re<c,x>, the inequality holds iff w > 0 and
   (2 - r^2)^2 ||x||^2 < 4 w^2. */
bool unit_distance_less(const Vector& x, const Vector& c, const Rational& r);

/* A code of a closed subspace: the slot-aligned certificate stream obtained
   by filtering the global candidate enumeration.  slot(i) carries the
   certificate at enumeration slot i, or nothing when that slot's candidate is
   not certified.  Codes loaded from files occupy a prefix of slots. */
class SubspaceCode {
public:
  /* Filter the global enumeration against L.  Finite L: slot i is decided
     exactly.  Countable L with a declared tail bound: slot i is checked at
     truncation levels dovetailed with slots, so every certifiable pair is
     eventually emitted.  Countable L without a tail bound: no slot is ever
     certified (truncations cannot bound the distance from below). */
  static SubspaceCode encode(const Subspace& L);

  /* A code given as an explicit certificate list (e.g. parsed from a file);
     the list occupies slots 0..n-1. */
  static SubspaceCode from_list(std::vector<Certificate> certs);

  std::optional<Certificate> slot(std::size_t i) const;

  /* First `max_certs` certificates scanning at most `slot_cap` slots. */
  std::vector<Certificate> collect(std::size_t max_certs, std::size_t slot_cap) const;

private:
  explicit SubspaceCode(LazySeq<std::optional<Certificate>> slots)
      : slots_(std::move(slots)) {}
  LazySeq<std::optional<Certificate>> slots_;
};

/* Semidecide x not in L from a code of L: confirmed at fuel f iff some slot
   below f holds a certificate (c, r) with ||x/||x|| - c|| < r.  Sound by
   the certificate property; complete in the limit for x outside L.  Throws
   DomainError for x = 0 (the zero vector lies in every subspace). */
Semidecision not_member(const SubspaceCode& code, const Vector& x);

/* Lattice operations on finitely presented subspaces. */
Subspace meet(const Subspace& A, const Subspace& B);   // intersection
Subspace join(const Subspace& A, const Subspace& B);   // closed span of the union
/* Orthogonal complement inside the coordinate range [0, ambient_dim); every
   generator of L must be supported there. */
Subspace ortho_complement(const Subspace& L, std::uint64_t ambient_dim);

} // namespace qlat

#endif
