#include "qlat/closed_set.hpp"

#include <algorithm>
#include <cctype>

#include "qlat/error.hpp"

namespace qlat {

namespace {

const Rational kLo{-1};
const Rational kHi{1};

} // namespace

ClosedRationalSet ClosedRationalSet::full() {
  ClosedRationalSet s;
  s.p_.emplace_back(kLo, kHi);
  return s;
}

ClosedRationalSet ClosedRationalSet::from_intervals(
    std::vector<std::pair<Rational, Rational>> pieces) {
  for (const auto& [lo, hi] : pieces) {
    if (hi < lo) throw DomainError("interval with lo > hi");
  }
  // clip to the spectral window; fully outside pieces vanish
  std::vector<std::pair<Rational, Rational>> kept;
  for (auto& [lo, hi] : pieces) {
    const Rational a = lo < kLo ? kLo : lo;
    const Rational b = kHi < hi ? kHi : hi;
    if (!(b < a)) kept.emplace_back(a, b);
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return x.second < y.second;
            });
  ClosedRationalSet s;
  for (auto& piece : kept) {
    if (!s.p_.empty() && !(s.p_.back().second < piece.first)) {
      // overlap or touch: closed intervals merge
      if (s.p_.back().second < piece.second) s.p_.back().second = piece.second;
    } else {
      s.p_.push_back(piece);
    }
  }
  return s;
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
}

bool eat(std::string_view& s, char c) {
  skip_ws(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

Rational parse_bound(std::string_view& s, char stop) {
  skip_ws(s);
  size_t i = 0;
  while (i < s.size() && s[i] != stop) ++i;
  if (i == s.size()) throw ParseError("unterminated interval bound");
  std::string_view tok = s.substr(0, i);
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
    tok.remove_suffix(1);
  Rational r = Rational::parse(tok);
  s.remove_prefix(i);
  return r;
}

// accepts "u", "U", or the UTF-8 union sign between pieces
bool eat_union(std::string_view& s) {
  skip_ws(s);
  if (s.empty()) return false;
  if (s.front() == 'u' || s.front() == 'U') {
    s.remove_prefix(1);
    return true;
  }
  static const std::string_view cup = "\xe2\x88\xaa";
  if (s.substr(0, cup.size()) == cup) {
    s.remove_prefix(cup.size());
    return true;
  }
  return false;
}

} // namespace

ClosedRationalSet ClosedRationalSet::parse(std::string_view s) {
  skip_ws(s);
  if (s.substr(0, 5) == "empty") {
    std::string_view rest = s.substr(5);
    skip_ws(rest);
    if (!rest.empty()) throw ParseError("trailing junk after 'empty'");
    return ClosedRationalSet();
  }
  std::vector<std::pair<Rational, Rational>> pieces;
  for (;;) {
    if (!eat(s, '[')) throw ParseError("expected '[' to open an interval");
    Rational lo = parse_bound(s, ',');
    if (!eat(s, ',')) throw ParseError("expected ',' in interval");
    Rational hi = parse_bound(s, ']');
    if (!eat(s, ']')) throw ParseError("expected ']' to close an interval");
    if (hi < lo) throw ParseError("interval with lo > hi");
    pieces.emplace_back(std::move(lo), std::move(hi));
    std::string_view probe = s;
    if (!eat_union(probe)) break;
    s = probe;
  }
  skip_ws(s);
  if (!s.empty()) throw ParseError("trailing junk after set expression");
  return from_intervals(std::move(pieces));
}

bool ClosedRationalSet::contains(const Rational& t) const {
  for (const auto& [lo, hi] : p_) {
    if (t < lo) return false;
    if (!(hi < t)) return true;
  }
  return false;
}

ClosedRationalSet ClosedRationalSet::union_with(const ClosedRationalSet& o) const {
  std::vector<std::pair<Rational, Rational>> all = p_;
  all.insert(all.end(), o.p_.begin(), o.p_.end());
  return from_intervals(std::move(all));
}

ClosedRationalSet ClosedRationalSet::intersect(const ClosedRationalSet& o) const {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [a, b] : p_) {
    for (const auto& [c, d] : o.p_) {
      const Rational lo = a < c ? c : a;
      const Rational hi = b < d ? b : d;
      if (!(hi < lo)) out.emplace_back(lo, hi);
    }
  }
  return from_intervals(std::move(out));
}

std::string ClosedRationalSet::str() const {
  if (p_.empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) out += " u ";
    out += "[" + p_[i].first.str() + "," + p_[i].second.str() + "]";
  }
  return out;
}

} // namespace qlat
