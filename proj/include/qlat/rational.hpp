#ifndef QLAT_RATIONAL_HPP
#define QLAT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qlat {

/* Arbitrary-precision rational, always held in canonical form (coprime
   numerator/denominator, denominator > 0).  Thin facade over mpq_class; the
   facade exists so the rest of the library speaks one fixed vocabulary
   (str()/parse() formats, sign conventions, error behavior) independent of the
   backing type. */
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v);

  /* Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after reduction.
     Throws ParseError on anything else (including whitespace). */
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;  // throws DomainError on zero

  /* max(|num|, den) — the height used to grade enumeration. */
  mpz_class height() const;

  /* "p" when den == 1, else "p/q". */
  std::string str() const;

  /* Nearest double (for display / bench only; never used in decisions). */
  double to_double() const { return v_.get_d(); }

  /* 2^e for e possibly negative. */
  static Rational pow2(long e);

  /* a^k for k >= 0. */
  static Rational pow(const Rational& a, unsigned long k);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

/* Smallest-height rational in the closed interval [lo, hi] via the
   Stern-Brocot walk.  Used to snap isolated polynomial roots back to exact
   rationals before verification. */
Rational simplest_in(const Rational& lo, const Rational& hi);

/* Floor of a as an integer. */
mpz_class floor_int(const Rational& a);

} // namespace qlat

#endif
