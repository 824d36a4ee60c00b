#ifndef QLAT_TOPOLOGY_HPP
#define QLAT_TOPOLOGY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qlat/op.hpp"
#include "qlat/rational.hpp"
#include "qlat/subspace.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* Strong-operator convergence of a sequence of operators to 0, watched on
   finitely many probe vectors. */

struct ShiftProbeReport {
  Vector probe;
  /* Smallest n with T^n probe = 0 for all later n, when one exists. */
  std::optional<std::uint64_t> vanish_at;
  Rational final_norm_sq;  // ||T^n probe||^2 at the largest n inspected
};

struct ShiftSotReport {
  bool converges;  // on every probe
  std::vector<ShiftProbeReport> per_probe;
};

/* Powers of the upward shift (e_{i+1} -> e_i, e_0 -> 0) annihilate any
   finitely supported vector: the n-th power drops the first n coordinates,
   so the exact vanishing index is max_index + 1.  Fully exact: no limits,
   no tolerance. */
ShiftSotReport sot_shift_up_powers(const std::vector<Vector>& probes);

/* Powers of the downward shift (e_i -> e_{i+1}) preserve every norm
   exactly, so no nonzero probe ever converges; vanish_at stays empty and
   final_norm_sq reports the conserved mass. */
ShiftSotReport sot_shift_down_powers(const std::vector<Vector>& probes);

/* Generic fuel-bounded check: semidecides ||T_n x||^2 < eps for all
   n0 <= n < fuel on every probe, reporting the first such n0 when found
   within the fuel.  A report without a value means "not within this fuel",
   never "diverges". */
struct SotProbeWindow {
  Vector probe;
  std::optional<std::uint64_t> settled_at;
};
std::vector<SotProbeWindow> sot_window_check(
    const std::function<BoundedOperator(std::uint64_t)>& ops,
    const std::vector<Vector>& probes, const Rational& eps, std::uint64_t fuel);

/* The value a unit vector assigns to a subspace is not continuous along
   decreasing sequences of subspaces: the lines spanned by e_0 + e_n give
   the fixed probe e_0 the exact value 1/2 at every n, while the limit
   subspace {0} gives 0. */
struct ValueJumpReport {
  std::vector<Rational> values;  // value at A_n for n = 1..max_n
  Rational limit_value;          // value at the limit subspace
  bool discontinuous;            // values stay away from the limit
};
ValueJumpReport demo_value_jump(std::uint64_t max_n);

/* Meets do not distribute over countable joins: with P the e_0 axis and
   Q_n the line through e_0 + (1/n) e_1, each P meet Q_n is {0}, so the
   join of the meets is {0}; but the join of the Q_n alone already contains
   P.  Witnessed exactly at a finite stage. */
struct JoinDistributivityReport {
  std::size_t stages;            // how many Q_n entered the join
  std::size_t dim_meet_of_join;  // dim(P meet join Q_n)
  std::size_t dim_join_of_meets; // dim(join of (P meet Q_n))
  bool distributive;
};
JoinDistributivityReport demo_join_distributivity(std::size_t stages);

/* Double orthogonal complements ignore set decreasing limits: the sets
   C_n = {m x : m integer, m >= n} shrink to nothing, yet every C_n has the
   same double complement, the full line through x. */
struct BiorthReport {
  std::uint64_t max_n;
  bool all_closures_equal_line;  // double complement = span{x} for n <= max_n
  bool tail_escapes;             // for each m, m*x leaves C_n eventually
};
BiorthReport demo_biorth_collapse(std::uint64_t max_n);

} // namespace qlat

#endif
