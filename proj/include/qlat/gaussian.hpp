#ifndef QLAT_GAUSSIAN_HPP
#define QLAT_GAUSSIAN_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "qlat/rational.hpp"

namespace qlat {

/* Complex number with exact rational real and imaginary parts.  The scalar
   field of every vector and operator entry in this library. */
class Gaussian {
public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(long re) : re_(re) {}

  /* "a" / "a+bi" / "a-bi" with a, b rational literals; also accepts "bi".
     This is the display/serialization format used across the JSON files. */
  static Gaussian parse(std::string_view s);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }
  Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);  // throws DomainError on zero divisor

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  mpz_class height() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z);

private:
  Rational re_, im_;
};

} // namespace qlat

#endif
