#include "qlat/candidates.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "qlat/hilbert.hpp"

namespace qlat {

/* Reduced rationals p/q with max(|p|, q) <= h, ordered by (q, p). */
static std::vector<Rational> rational_values_up_to(long h) {
  std::vector<Rational> out;
  for (long q = 1; q <= h; ++q)
    for (long p = -h; p <= h; ++p) {
      if (std::gcd(std::labs(p), q) != 1 && !(p == 0 && q == 1)) continue;
      if (p == 0 && q != 1) continue;
      out.emplace_back(p, q);
    }
  return out;
}

std::vector<Gaussian> gaussian_values_up_to(long h) {
  std::vector<Rational> rs = rational_values_up_to(h);
  std::vector<Gaussian> out;
  out.reserve(rs.size() * rs.size() - 1);
  for (const Rational& re : rs)
    for (const Rational& im : rs) {
      Gaussian z(re, im);
      if (!z.is_zero()) out.push_back(z);
    }
  return out;
}

namespace {

/* Resumable odometer over the enumeration described in the header.  advance()
   yields the next grid/radius pair; the snapping to the unit sphere happens
   in the caller. */
class Walker {
public:
  Walker() { enter_grade(3); }

  void next(Vector& grid_out, Rational& r_out, long& h_out) {
    for (;;) {
      if (!class_live_) {
        if (!advance_class()) {
          enter_grade(T_ + 1);
          continue;
        }
        if (!enter_class()) continue;
      }
      /* innermost: radius numerators */
      if (r_pos_ < radii_.size()) {
        grid_out = current_grid_;
        r_out = radii_[r_pos_++];
        h_out = h_;
        return;
      }
      r_pos_ = 0;
      if (!advance_entries()) {
        if (!advance_support()) {
          class_live_ = false;
          continue;
        }
        reset_entries();
      }
      if (!settle_entries()) {  // no further tuple with exact height h
        if (!advance_support_and_settle()) class_live_ = false;
        continue;
      }
    }
  }

private:
  void enter_grade(long T) {
    T_ = T;
    k_ = 0;  // advance_class() steps to the first class
    class_live_ = false;
  }

  /* classes (k, h, b), k + h + b = T, k >= 1, h >= 1, b >= 1, lex order */
  bool advance_class() {
    if (k_ == 0) {
      k_ = 1;
      h_ = 1;
    } else if (h_ < T_ - k_ - 1) {
      ++h_;
    } else {
      ++k_;
      h_ = 1;
    }
    if (k_ > T_ - 2) return false;
    b_ = T_ - k_ - h_;
    return true;
  }

  bool enter_class() {
    if (k_ > h_) return false;  // support needs k distinct indices below h
    values_ = gaussian_values_up_to(h_);
    radii_.clear();
    if (b_ == 1) {
      radii_.emplace_back(0);
    } else {
      for (long a = 1; a < b_; ++a)
        if (std::gcd(a, b_) == 1) radii_.emplace_back(a, b_);
    }
    if (radii_.empty()) return false;
    support_.resize(static_cast<std::size_t>(k_));
    std::iota(support_.begin(), support_.end(), 0);  // first k-subset
    reset_entries();
    if (!settle_entries()) {
      if (!advance_support_and_settle()) return false;
    }
    class_live_ = true;
    r_pos_ = 0;
    return true;
  }

  void reset_entries() { digits_.assign(static_cast<std::size_t>(k_), 0); }

  /* odometer step over entry tuples; first position most significant */
  bool advance_entries() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < values_.size()) return true;
      digits_[i] = 0;
    }
    return false;
  }

  /* leave digits_ at the next tuple (including the current one) whose vector
     has height exactly h; build current_grid_ */
  bool settle_entries() {
    for (;;) {
      Vector g;
      for (std::size_t i = 0; i < digits_.size(); ++i)
        g.set(support_[i], values_[digits_[i]]);
      if (g.height() == h_) {
        current_grid_ = std::move(g);
        return true;
      }
      if (!advance_entries()) return false;
    }
  }

  /* next k-subset of {0..h-1} in lex order */
  bool advance_support() {
    long k = k_, h = h_;
    for (long i = k - 1; i >= 0; --i) {
      if (support_[static_cast<std::size_t>(i)] <
          static_cast<std::uint64_t>(h - k + i)) {
        ++support_[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < k; ++j)
          support_[static_cast<std::size_t>(j)] =
              support_[static_cast<std::size_t>(j - 1)] + 1;
        return true;
      }
    }
    return false;
  }

  bool advance_support_and_settle() {
    while (advance_support()) {
      reset_entries();
      if (settle_entries()) return true;
    }
    return false;
  }

  long T_ = 3, k_ = 0, h_ = 1, b_ = 1;
  bool class_live_ = false;
  std::vector<Gaussian> values_;
  std::vector<Rational> radii_;
  std::size_t r_pos_ = 0;
  std::vector<std::uint64_t> support_;
  std::vector<std::size_t> digits_;
  Vector current_grid_;
};

struct Memo {
  std::mutex m;
  Walker walker;
  std::vector<Candidate> slots;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

void ensure(Memo& mm, std::size_t count) {
  while (mm.slots.size() < count) {
    Vector grid;
    Rational r;
    long h = 0;
    mm.walker.next(grid, r, h);
    Vector unit = rationalize_unit(grid, Rational(1, h + 1));
    mm.slots.push_back(Candidate{std::move(unit), std::move(r), std::move(grid)});
  }
}

} // namespace

Candidate candidate_at(std::size_t slot) {
  Memo& mm = memo();
  std::lock_guard<std::mutex> lock(mm.m);
  ensure(mm, slot + 1);
  return mm.slots[slot];
}

std::vector<Candidate> candidate_block(std::size_t begin, std::size_t end) {
  Memo& mm = memo();
  std::lock_guard<std::mutex> lock(mm.m);
  ensure(mm, end);
  return std::vector<Candidate>(mm.slots.begin() + static_cast<long>(begin),
                                mm.slots.begin() + static_cast<long>(end));
}

} // namespace qlat
