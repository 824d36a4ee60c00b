#include "qlat/gaussian.hpp"

#include <ostream>

#include "qlat/error.hpp"

namespace qlat {

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.norm_sq();
  if (n.is_zero()) throw DomainError("division by complex zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

mpz_class Gaussian::height() const {
  mpz_class a = re_.height(), b = im_.height();
  return a > b ? a : b;
}

std::string Gaussian::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out;
  if (!re_.is_zero()) out += re_.str();
  if (im_.sign() > 0 && !re_.is_zero()) out += "+";
  out += im_.str() + "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
  return os << z.str();
}

/* Split "a+bi" / "a-bi" / "a" / "bi" at the sign that separates the two
   components; that sign is a '+' or '-' which is not the leading character and
   not immediately after '/' or another sign (so "-1/2-3/4i" splits at the
   second '-'). */
Gaussian Gaussian::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty complex literal");
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c != '+' && c != '-') continue;
    char prev = s[i - 1];
    if (prev == '/' || prev == '+' || prev == '-') continue;
    split = i;  // first separating sign: the real part before it is complete
    break;
  }
  auto strip_i = [](std::string_view t) -> Rational {
    if (t.empty() || t.back() != 'i')
      throw ParseError("complex literal missing 'i' on imaginary part");
    t.remove_suffix(1);
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::parse(t);
  };
  if (split == std::string_view::npos) {
    if (s.back() == 'i') return Gaussian(Rational(0), strip_i(s));
    return Gaussian(Rational::parse(s));
  }
  std::string_view res = s.substr(0, split);
  std::string_view ims = s.substr(split);  // keeps the sign
  if (ims.back() != 'i')
    throw ParseError("bad complex literal: " + std::string(s));
  return Gaussian(Rational::parse(res), strip_i(ims));
}

} // namespace qlat
