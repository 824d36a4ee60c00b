#include "qlat/topology.hpp"

#include "qlat/error.hpp"
#include "qlat/hilbert.hpp"
#include "qlat/lattice.hpp"
#include "qlat/states.hpp"

namespace qlat {

ShiftSotReport sot_shift_up_powers(const std::vector<Vector>& probes) {
  const BoundedOperator S = BoundedOperator::shift_up();
  ShiftSotReport rep;
  rep.converges = true;
  for (const auto& x : probes) {
    ShiftProbeReport pr;
    pr.probe = x;
    const std::uint64_t n0 = x.is_zero() ? 0 : x.max_index() + 1;
    // walk the powers and confirm the predicted index exactly
    Vector y = x;
    for (std::uint64_t n = 0; n < n0; ++n) {
      if (y.is_zero()) throw DomainError("power vanished before the predicted index");
      y = S.apply(y);
    }
    if (!y.is_zero()) throw DomainError("power failed to vanish at the predicted index");
    pr.vanish_at = n0;
    pr.final_norm_sq = Rational(0);
    rep.per_probe.push_back(std::move(pr));
  }
  return rep;
}

ShiftSotReport sot_shift_down_powers(const std::vector<Vector>& probes) {
  const BoundedOperator S = BoundedOperator::shift_down();
  ShiftSotReport rep;
  rep.converges = true;
  for (const auto& x : probes) {
    ShiftProbeReport pr;
    pr.probe = x;
    const Rational mass = x.norm_sq();
    /* an isometry: every power keeps the norm, checked exactly on an
       initial stretch, and no nonzero probe can ever converge */
    Vector y = x;
    for (int n = 0; n < 8; ++n) {
      if (y.norm_sq() != mass) throw DomainError("shift failed to preserve the norm");
      y = S.apply(y);
    }
    pr.vanish_at = std::nullopt;
    pr.final_norm_sq = mass;
    if (!x.is_zero()) rep.converges = false;
    if (x.is_zero()) pr.vanish_at = 0;
    rep.per_probe.push_back(std::move(pr));
  }
  return rep;
}

std::vector<SotProbeWindow> sot_window_check(
    const std::function<BoundedOperator(std::uint64_t)>& ops,
    const std::vector<Vector>& probes, const Rational& eps, std::uint64_t fuel) {
  if (eps.sign() <= 0) throw DomainError("tolerance must be positive");
  std::vector<SotProbeWindow> out;
  for (const auto& x : probes) {
    SotProbeWindow w;
    w.probe = x;
    std::optional<std::uint64_t> last_bad;
    for (std::uint64_t n = 0; n < fuel; ++n) {
      Rational m = ops(n).apply(x).norm_sq();
      if (!(m < eps)) last_bad = n;
    }
    if (!last_bad)
      w.settled_at = 0;
    else if (*last_bad + 1 < fuel)
      w.settled_at = *last_bad + 1;
    out.push_back(std::move(w));
  }
  return out;
}

ValueJumpReport demo_value_jump(std::uint64_t max_n) {
  if (max_n == 0) throw DomainError("need at least one stage");
  ValueJumpReport rep;
  const PureState probe(Vector::basis(0));
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    Subspace line = Subspace::finite({Vector::basis(0) + Vector::basis(n)});
    rep.values.push_back(pure_eval(probe, line));
  }
  rep.limit_value = pure_eval(probe, Subspace::finite({}));
  rep.discontinuous = true;
  for (const auto& v : rep.values)
    if (v == rep.limit_value) rep.discontinuous = false;
  return rep;
}

JoinDistributivityReport demo_join_distributivity(std::size_t stages) {
  if (stages < 2) throw DomainError("need at least two stages");
  const Subspace P = Subspace::finite({Vector::basis(0)});
  Subspace join_q = Subspace::finite({});
  Subspace join_of_meets = Subspace::finite({});
  for (std::size_t n = 1; n <= stages; ++n) {
    Vector g = Vector::basis(0);
    g.set(1, Gaussian(Rational(1, static_cast<long>(n))));
    Subspace q = Subspace::finite({g});
    join_q = join(join_q, q);
    join_of_meets = join(join_of_meets, meet(P, q));
  }
  JoinDistributivityReport rep;
  rep.stages = stages;
  rep.dim_meet_of_join = meet(P, join_q).dim();
  rep.dim_join_of_meets = join_of_meets.dim();
  rep.distributive = rep.dim_meet_of_join == rep.dim_join_of_meets;
  return rep;
}

BiorthReport demo_biorth_collapse(std::uint64_t max_n) {
  if (max_n == 0) throw DomainError("need at least one stage");
  BiorthReport rep;
  rep.max_n = max_n;
  const Vector x = Vector::basis(0) + Vector::basis(1);
  const std::uint64_t ambient = 2;

  /* the orthogonality constraints cut out by {m x : m >= n} are those of a
     single nonzero multiple, so each stage's double complement is computed
     from the span of its first element n*x */
  rep.all_closures_equal_line = true;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    Vector gen = Gaussian(Rational(static_cast<long>(n))) * x;
    Subspace closure =
        ortho_complement(ortho_complement(Subspace::finite({gen}), ambient), ambient);
    const bool line = closure.dim() == 1 &&
                      distance_sq(x, closure.basis()).sign() == 0;
    if (!line) rep.all_closures_equal_line = false;
  }

  /* yet the sets themselves drain out: the element m x sits in C_n exactly
     when m >= n, so each fixed element leaves the sequence at stage m+1 */
  auto in_stage = [](std::uint64_t mult, std::uint64_t n) { return mult >= n; };
  rep.tail_escapes = true;
  for (std::uint64_t m = 1; m <= max_n; ++m) {
    bool escaped = false;
    for (std::uint64_t n = 1; n <= max_n + 1; ++n)
      if (!in_stage(m, n)) escaped = true;
    if (!escaped) rep.tail_escapes = false;
  }
  return rep;
}

} // namespace qlat
