#include "qlat/semidecision.hpp"

#include <mutex>
#include <vector>

namespace qlat {

struct Semidecision::State {
  std::mutex m;
  std::function<bool(std::uint64_t)> item;  // empty => never
  std::vector<bool> memo;
  std::optional<std::uint64_t> first_hit;  // index of first true item
};

Semidecision Semidecision::from_items(std::function<bool(std::uint64_t)> item) {
  Semidecision s;
  s.st_ = std::make_shared<State>();
  s.st_->item = std::move(item);
  return s;
}

Semidecision Semidecision::never() {
  Semidecision s;
  s.st_ = std::make_shared<State>();
  return s;
}

Verdict Semidecision::probe(std::uint64_t fuel) const {
  std::lock_guard<std::mutex> lock(st_->m);
  if (st_->first_hit && *st_->first_hit < fuel) return Verdict::Confirmed;
  if (!st_->item) return Verdict::Unknown;
  while (st_->memo.size() < fuel) {
    std::uint64_t i = st_->memo.size();
    bool hit = st_->item(i);
    st_->memo.push_back(hit);
    if (hit && !st_->first_hit) st_->first_hit = i;
    if (hit) return Verdict::Confirmed;
  }
  return (st_->first_hit && *st_->first_hit < fuel) ? Verdict::Confirmed
                                                    : Verdict::Unknown;
}

std::optional<std::uint64_t> Semidecision::confirmed_at() const {
  std::lock_guard<std::mutex> lock(st_->m);
  if (!st_->first_hit) return std::nullopt;
  return *st_->first_hit + 1;  // fuel is a count, hit index is 0-based
}

Semidecision semidecide_less(const UpperReal& u, const Rational& q) {
  return Semidecision::from_items(
      [u, q](std::uint64_t i) { return u.refine(i + 1) < q; });
}

} // namespace qlat
