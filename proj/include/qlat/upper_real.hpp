#ifndef QLAT_UPPER_REAL_HPP
#define QLAT_UPPER_REAL_HPP

#include <cstdint>
#include <functional>

#include "qlat/lazy_seq.hpp"
#include "qlat/rational.hpp"

namespace qlat {

/* A real given only from above: a non-increasing stream of rational upper
   bounds whose infimum is the value.  Bounds never promise a rate — the only
   guarantees are (a) every bound is valid, (b) bounds are non-increasing,
   (c) the infimum over all steps is the represented value.  Monotonicity is
   enforced at construction by a running minimum, so a sloppy raw generator
   cannot break (b). */
class UpperReal {
public:
  /* raw(step) for step = 1,2,... gives the step-th raw bound. */
  static UpperReal from_bounds(std::function<Rational(std::uint64_t)> raw);

  /* Stateful producer called once per step, in order. */
  static UpperReal from_producer(std::function<Rational()> produce);

  static UpperReal constant(Rational c);

  /* The steps-th enforced bound (steps >= 1).  Replayable and monotone:
     refine(n+1) <= refine(n) always. */
  Rational refine(std::uint64_t steps) const;

private:
  explicit UpperReal(LazySeq<Rational> seq) : seq_(std::move(seq)) {}
  LazySeq<Rational> seq_;
};

} // namespace qlat

#endif
