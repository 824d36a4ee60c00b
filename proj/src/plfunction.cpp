#include "qlat/plfunction.hpp"

#include <algorithm>

#include "qlat/error.hpp"

namespace qlat {

PLFunction PLFunction::from_breakpoints(
    std::vector<std::pair<Rational, Rational>> pts) {
  if (pts.empty()) throw DomainError("piecewise-linear function needs a breakpoint");
  for (size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].first < pts[i].first))
      throw DomainError("breakpoint abscissae must be strictly increasing");
  }
  PLFunction f;
  f.pts_ = std::move(pts);
  return f;
}

PLFunction PLFunction::constant(Rational v) {
  return from_breakpoints({{Rational(0), std::move(v)}});
}

Rational PLFunction::eval(const Rational& t) const {
  if (!(pts_.front().first < t)) return pts_.front().second;
  if (!(t < pts_.back().first)) return pts_.back().second;
  // first breakpoint strictly right of t; its predecessor is the segment start
  auto it = std::upper_bound(
      pts_.begin(), pts_.end(), t,
      [](const Rational& x, const auto& p) { return x < p.first; });
  const auto& [t1, v1] = *it;
  const auto& [t0, v0] = *(it - 1);
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

Rational PLFunction::lipschitz() const {
  Rational best(0);
  for (size_t i = 1; i < pts_.size(); ++i) {
    Rational slope =
        ((pts_[i].second - pts_[i - 1].second) /
            (pts_[i].first - pts_[i - 1].first)).abs();
    if (best < slope) best = slope;
  }
  return best;
}

Rational PLFunction::min_global() const {
  Rational best = pts_.front().second;
  for (const auto& [t, v] : pts_)
    if (v < best) best = v;
  return best;
}

Rational PLFunction::max_global() const {
  Rational best = pts_.front().second;
  for (const auto& [t, v] : pts_)
    if (best < v) best = v;
  return best;
}

RationalInterval PLFunction::range_on(const RationalInterval& box) const {
  Rational lo = eval(box.lo());
  Rational hi = lo;
  auto fold = [&](const Rational& v) {
    if (v < lo) lo = v;
    if (hi < v) hi = v;
  };
  fold(eval(box.hi()));
  for (const auto& [t, v] : pts_) {
    if (box.lo() < t && t < box.hi()) fold(v);
  }
  return RationalInterval(lo, hi);
}

Rational PLFunction::min_on(const ClosedRationalSet& set) const {
  if (set.is_empty()) throw DomainError("minimum over the empty set");
  bool have = false;
  Rational best(0);
  for (const auto& [a, b] : set.pieces()) {
    Rational m = range_on(RationalInterval(a, b)).lo();
    if (!have || m < best) {
      best = m;
      have = true;
    }
  }
  return best;
}

PLFunction PLFunction::scale(const Rational& a) const {
  std::vector<std::pair<Rational, Rational>> pts = pts_;
  for (auto& [t, v] : pts) v = v * a;
  return from_breakpoints(std::move(pts));
}

PLFunction PLFunction::add(const PLFunction& o) const {
  std::vector<Rational> xs;
  for (const auto& [t, v] : pts_) xs.push_back(t);
  for (const auto& [t, v] : o.pts_) xs.push_back(t);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(xs.size());
  for (const auto& t : xs) pts.emplace_back(t, eval(t) + o.eval(t));
  return from_breakpoints(std::move(pts));
}

std::string PLFunction::str() const {
  std::string out = "pl[";
  for (size_t i = 0; i < pts_.size(); ++i) {
    if (i) out += " ";
    out += "(" + pts_[i].first.str() + "," + pts_[i].second.str() + ")";
  }
  return out + "]";
}

} // namespace qlat
