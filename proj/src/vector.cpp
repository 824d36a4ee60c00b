#include "qlat/vector.hpp"

#include <sstream>

#include "qlat/error.hpp"

namespace qlat {

Vector Vector::basis(std::uint64_t i) {
  Vector v;
  v.e_[i] = Gaussian(Rational(1));
  return v;
}

Vector Vector::from_entries(
    const std::vector<std::pair<std::uint64_t, Gaussian>>& entries) {
  Vector v;
  for (const auto& [i, z] : entries) {
    if (v.e_.count(i)) throw DomainError("repeated index in vector literal");
    if (!z.is_zero()) v.e_[i] = z;
  }
  return v;
}

void Vector::set(std::uint64_t i, const Gaussian& v) {
  if (v.is_zero())
    e_.erase(i);
  else
    e_[i] = v;
}

Gaussian Vector::get(std::uint64_t i) const {
  auto it = e_.find(i);
  return it == e_.end() ? Gaussian() : it->second;
}

std::uint64_t Vector::max_index() const {
  if (e_.empty()) throw DomainError("max_index of zero vector");
  return e_.rbegin()->first;
}

Vector Vector::operator-() const {
  Vector v;
  for (const auto& [i, z] : e_) v.e_[i] = -z;
  return v;
}

Vector& Vector::operator+=(const Vector& o) {
  for (const auto& [i, z] : o.e_) {
    auto it = e_.find(i);
    if (it == e_.end()) {
      e_[i] = z;
    } else {
      it->second += z;
      if (it->second.is_zero()) e_.erase(it);
    }
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  return *this += -o;
}

Vector operator*(const Gaussian& s, const Vector& v) {
  Vector r;
  if (s.is_zero()) return r;
  for (const auto& [i, z] : v.e_) r.e_[i] = s * z;
  return r;
}

Rational Vector::norm_sq() const {
  Rational s;
  for (const auto& [i, z] : e_) s += z.norm_sq();
  return s;
}

mpz_class Vector::height() const {
  mpz_class h = 0;
  for (const auto& [i, z] : e_) {
    mpz_class zh = z.height();
    if (zh > h) h = zh;
    mpz_class idx = mpz_class(static_cast<unsigned long>(i)) + 1;
    if (idx > h) h = idx;
  }
  return h;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, z] : e_) {
    if (!first) os << ", ";
    first = false;
    os << i << ": " << z.str();
  }
  os << "}";
  return os.str();
}

Gaussian inner(const Vector& a, const Vector& b) {
  /* walk the shorter support */
  const Vector& small = a.support_size() <= b.support_size() ? a : b;
  const Vector& big = a.support_size() <= b.support_size() ? b : a;
  bool small_is_a = &small == &a;
  Gaussian s;
  for (const auto& [i, z] : small.entries()) {
    Gaussian w = big.get(i);
    if (w.is_zero()) continue;
    s += small_is_a ? z.conj() * w : w.conj() * z;
  }
  return s;
}

} // namespace qlat
