#ifndef QLAT_CLOSED_SET_HPP
#define QLAT_CLOSED_SET_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlat/rational.hpp"

namespace qlat {

/* Finite union of closed rational intervals inside the spectral window
   [-1, 1], kept normalized: pieces sorted, pairwise disjoint, never touching
   (touching closed intervals merge).  The empty set is allowed. */
class ClosedRationalSet {
public:
  ClosedRationalSet() = default;  // empty

  static ClosedRationalSet full();  // [-1, 1]

  /* Normalizes: clips every piece to [-1, 1] (pieces sliding entirely
     outside vanish), sorts, merges.  A piece with lo > hi is a DomainError. */
  static ClosedRationalSet from_intervals(
      std::vector<std::pair<Rational, Rational>> pieces);

  /* "[a,b]", "[a,b]u[c,d]", with "U" or a literal union sign accepted
     between pieces; "empty" for the empty set.  Whitespace is tolerated
     around every token.  Bounds are rational literals. */
  static ClosedRationalSet parse(std::string_view s);

  const std::vector<std::pair<Rational, Rational>>& pieces() const { return p_; }
  bool is_empty() const { return p_.empty(); }
  bool contains(const Rational& t) const;

  ClosedRationalSet union_with(const ClosedRationalSet& o) const;
  ClosedRationalSet intersect(const ClosedRationalSet& o) const;

  std::string str() const;

private:
  std::vector<std::pair<Rational, Rational>> p_;
};

} // namespace qlat

#endif
