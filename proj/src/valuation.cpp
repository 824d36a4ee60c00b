#include "qlat/valuation.hpp"

#include "qlat/error.hpp"

namespace qlat {

PLFunction plateau_witness(const ClosedRationalSet& C, unsigned long j) {
  if (j == 0) throw DomainError("witness index starts at 1");
  if (C.is_empty()) return PLFunction::constant(Rational(0));
  const Rational delta = Rational::pow2(-static_cast<long>(j));
  const Rational v = Rational(1) + delta;

  /* merge components whose gap the ramps would bridge anyway */
  std::vector<std::pair<Rational, Rational>> blocks;
  for (const auto& [a, b] : C.pieces()) {
    if (!blocks.empty() && !(blocks.back().second + delta + delta < a))
      blocks.back().second = b;
    else
      blocks.emplace_back(a, b);
  }

  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& [a, b] : blocks) {
    pts.emplace_back(a - delta, Rational(0));
    pts.emplace_back(a, v);
    if (a < b) pts.emplace_back(b, v);
    pts.emplace_back(b + delta, Rational(0));
  }
  return PLFunction::from_breakpoints(std::move(pts));
}

namespace {

/* Upper end of the witness-j integral, or no value when the resource caps
   cut the evaluation short. */
std::optional<Rational> witness_upper(const BoundedOperator& A, const Vector& x,
                                      const ClosedRationalSet& C, unsigned long j,
                                      const ValuationOptions& opts) {
  PLFunction f = plateau_witness(C, j);
  // defensive admissibility check; the construction satisfies both
  if (f.min_global().sign() < 0) throw DomainError("witness dips below zero");
  if (!C.is_empty() && !(Rational(1) < f.min_on(C)))
    throw DomainError("witness fails to dominate on the set");
  IntegralOptions iopts;
  iopts.precision = Rational::pow2(-static_cast<long>(j) - 2);
  iopts.orbit_cap = opts.orbit_cap;
  iopts.max_poly_degree = opts.max_poly_degree;
  try {
    return spectral_integral(A, x, f, iopts).hi();
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

} // namespace

Semidecision valuation_less(const BoundedOperator& A, const Vector& x,
                            const ClosedRationalSet& C, const Rational& q,
                            const ValuationOptions& opts) {
  return Semidecision::from_items([A, x, C, q, opts](std::uint64_t i) {
    auto u = witness_upper(A, x, C, i + 1, opts);
    return u && *u < q;
  });
}

UpperReal valuation_upper(const BoundedOperator& A, const Vector& x,
                          const ClosedRationalSet& C,
                          const ValuationOptions& opts) {
  const Rational mass = x.norm_sq();
  return UpperReal::from_bounds([A, x, C, opts, mass](std::uint64_t step) {
    auto u = witness_upper(A, x, C, step, opts);
    Rational bound = u ? *u : mass;
    if (mass < bound) bound = mass;
    if (bound.sign() < 0) bound = Rational(0);
    return bound;
  });
}

Rational diagonal_oracle(const std::vector<Rational>& eigs, const Vector& x,
                         const ClosedRationalSet& C) {
  Rational acc(0);
  for (const auto& [i, v] : x.entries()) {
    const Rational eig = i < eigs.size() ? eigs[i] : Rational(0);
    if (C.contains(eig)) acc = acc + v.norm_sq();
  }
  return acc;
}

} // namespace qlat
