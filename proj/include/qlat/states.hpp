#ifndef QLAT_STATES_HPP
#define QLAT_STATES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qlat/interval.hpp"
#include "qlat/lattice.hpp"
#include "qlat/subspace.hpp"
#include "qlat/upper_real.hpp"

namespace qlat {

/* Pure state: an exactly-unit rational vector x, evaluated on subspaces as
   x -> <x, P_L x>.  Exact unitness is a constructor precondition so every
   later probability is exact. */
class PureState {
public:
  explicit PureState(Vector x);
  const Vector& vec() const { return x_; }

private:
  Vector x_;
};

/* <x, P_L x> = 1 - d^2(x, L), exact.  Finite presentations only. */
Rational pure_eval(const PureState& s, const Subspace& L);

/* The same value computed from a code of L alone, as an upper real.  Each
   certificate (c, r) lower-bounds the distance through the triangle
   inequality, d(x, L) >= r - ||x - c||, giving the valid upper bound
   1 - ((r - t)_+)^2 with t an upper enclosure of ||x - c||.  Slots without a
   certificate contribute the trivial bound 1.  The infimum over the stream is
   the exact value: the enumeration carries x itself as a direction with radii
   increasing to d(x, L). */
UpperReal pure_eval_code(const PureState& s, const SubspaceCode& code);

/* Countable convex combination of orthogonal pure states.  Presentations:
   a finite list, or a finite prefix continued geometrically on fresh basis
   directions above every prefix support.  Weights are positive and sum to 1
   exactly (for the geometric continuation, in closed form). */
class State {
public:
  struct Term {
    Rational weight;
    Vector vec;
  };

  static State finite(std::vector<Term> terms);

  /* Continues the prefix with terms
       weight_{m+j} = w_last * ratio^{j+1},   vec_{m+j} = e_{K+j}
     where m is the prefix length, w_last the last prefix weight, and K is one
     past the largest prefix support index.  Requires 0 < ratio < 1 and total
     mass exactly 1. */
  static State geometric(std::vector<Term> prefix, Rational ratio);

  Term term(std::size_t k) const;
  std::optional<std::size_t> finite_size() const;

  /* The explicitly listed terms (all of them for a finite state, the prefix
     for a geometric one) and, when geometric, the continuation ratio. */
  std::size_t listed_size() const;
  std::optional<Rational> geometric_ratio() const;

  /* Exact mass sum of all terms with index >= n. */
  Rational tail_weight(std::size_t n) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/* Enclosure of the mixed value sum_k weight_k (1 - d^2(vec_k, L)) from the
   first n terms: the computed partial sum plus [0, tail_weight(n)], clamped
   to [0, 1].  Verifies pairwise orthogonality of the inspected prefix. */
RationalInterval mixed_eval(const State& S, const Subspace& L, std::size_t n);

/* Exact additivity of a pure state across an orthogonal pair: requires every
   generator of P orthogonal to every generator of Q, evaluates P, Q and
   their join, and reports whether the values add exactly (they always do;
   the report keeps the three numbers for inspection). */
struct AdditivityReport {
  Rational value_p, value_q, value_join;
  bool additive;
};
AdditivityReport check_additivity(const PureState& s, const Subspace& P,
                                  const Subspace& Q);

} // namespace qlat

#endif
