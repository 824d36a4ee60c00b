#include "qlat/upper_real.hpp"

#include <memory>
#include <optional>

#include "qlat/error.hpp"

namespace qlat {

UpperReal UpperReal::from_producer(std::function<Rational()> produce) {
  /* Running minimum turns an arbitrary bound stream into a non-increasing one
     without changing its infimum. */
  auto best = std::make_shared<std::optional<Rational>>();
  return UpperReal(LazySeq<Rational>([produce = std::move(produce), best]() {
    Rational raw = produce();
    if (!best->has_value() || raw < **best) *best = raw;
    return **best;
  }));
}

UpperReal UpperReal::from_bounds(std::function<Rational(std::uint64_t)> raw) {
  auto step = std::make_shared<std::uint64_t>(0);
  return from_producer([raw = std::move(raw), step]() { return raw(++*step); });
}

UpperReal UpperReal::constant(Rational c) {
  return from_producer([c = std::move(c)]() { return c; });
}

Rational UpperReal::refine(std::uint64_t steps) const {
  if (steps == 0) throw DomainError("refine needs at least one step");
  return seq_.at(static_cast<std::size_t>(steps - 1));
}

} // namespace qlat
