#include "qlat/rational.hpp"

#include <ostream>

#include "qlat/error.hpp"

namespace qlat {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);  // mpq_class division canonicalizes
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::size_t slash = s.find('/');
  std::string_view ns = (slash == std::string_view::npos) ? s : s.substr(0, slash);
  std::string_view ds = (slash == std::string_view::npos) ? std::string_view("1")
                                                          : s.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds))
    throw ParseError("bad rational literal: " + std::string(s));
  if (ns.front() == '+') ns.remove_prefix(1);  // mpz rejects a leading '+'
  if (ds.front() == '+') ds.remove_prefix(1);
  mpz_class n(std::string(ns), 10);
  mpz_class d(std::string(ds), 10);
  if (d == 0) throw ParseError("zero denominator in literal: " + std::string(s));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

mpz_class Rational::height() const {
  mpz_class n = ::abs(v_.get_num());
  mpz_class d = v_.get_den();
  return n > d ? n : d;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow2(long e) {
  mpq_class r;
  if (e >= 0) {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r = mpq_class(n);
  } else {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    r = mpq_class(1) / mpq_class(d);
  }
  return Rational(r);
}

Rational Rational::pow(const Rational& a, unsigned long k) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), k);
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class floor_int(const Rational& a) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
  return q;
}

/* Stern-Brocot descent: maintain the interval in "continued fraction peeled"
   form.  Classic recursion: simplest(lo,hi) with 0 < lo <= hi is
     - floor(lo)+1 clamped into range when an integer lies inside,
     - else floor(lo) + 1/simplest(1/(hi-floor), 1/(lo-floor)).
   Handles signs and zero by reduction to the positive case. */
static Rational simplest_pos(const Rational& lo, const Rational& hi) {
  mpz_class fl = floor_int(lo);
  Rational flr{fl};
  if (flr == lo) return lo;           // lo itself is an integer
  Rational next{mpz_class(fl + 1)};
  if (next <= hi) return next;
  Rational a = lo - flr, b = hi - flr;          // 0 < a <= b < 1
  return flr + simplest_pos(b.inverse(), a.inverse()).inverse();
}

Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw DomainError("simplest_in on empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (lo.sign() > 0) return simplest_pos(lo, hi);
  return -simplest_pos(-hi, -lo);
}

} // namespace qlat
