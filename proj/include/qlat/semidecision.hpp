#ifndef QLAT_SEMIDECISION_HPP
#define QLAT_SEMIDECISION_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "qlat/upper_real.hpp"

namespace qlat {

enum class Verdict { Confirmed, Unknown };

/* A semidecidable property probed with a fuel budget.  Contract:
     - probe is monotone: once Confirmed at some fuel, Confirmed at every
       larger fuel (enforced here by remembering the first hit);
     - Confirmed is sound: it is only ever reported when the property holds;
     - Unknown carries no information beyond "not confirmed yet". */
class Semidecision {
public:
  /* Confirmed at fuel f iff item(i) holds for some i < f.  Items are
     evaluated lazily, once each, in order, and memoized. */
  static Semidecision from_items(std::function<bool(std::uint64_t)> item);

  static Semidecision never();

  Verdict probe(std::uint64_t fuel) const;

  /* Smallest fuel at which Confirmed, if the scan has reached it. */
  std::optional<std::uint64_t> confirmed_at() const;

private:
  struct State;
  std::shared_ptr<State> st_;
};

/* Semidecide value(u) < q: confirmed as soon as some refinement step drops
   strictly below q.  Sound because every bound is an upper bound; never
   confirms when the value equals q. */
Semidecision semidecide_less(const UpperReal& u, const Rational& q);

} // namespace qlat

#endif
