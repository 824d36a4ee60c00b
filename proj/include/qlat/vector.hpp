#ifndef QLAT_VECTOR_HPP
#define QLAT_VECTOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlat/gaussian.hpp"

namespace qlat {

/* Finitely supported vector in l2 over the Gaussian rationals: a sparse map
   index -> nonzero entry.  The map is ordered, so iteration, printing and
   serialization are deterministic.  Zero entries are never stored. */
class Vector {
public:
  Vector() = default;

  static Vector basis(std::uint64_t i);

  /* Throws DomainError on a repeated index. */
  static Vector from_entries(const std::vector<std::pair<std::uint64_t, Gaussian>>& entries);

  void set(std::uint64_t i, const Gaussian& v);  // v == 0 erases
  Gaussian get(std::uint64_t i) const;

  const std::map<std::uint64_t, Gaussian>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  std::size_t support_size() const { return e_.size(); }

  /* Largest occupied index; DomainError on the zero vector. */
  std::uint64_t max_index() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Gaussian& s, const Vector& v);

  friend bool operator==(const Vector& a, const Vector& b) { return a.e_ == b.e_; }

  Rational norm_sq() const;

  /* max over entry heights and (max_index + 1); grades enumeration.  Zero
     vector has height 0. */
  mpz_class height() const;

  std::string str() const;

private:
  std::map<std::uint64_t, Gaussian> e_;
};

/* Hermitian inner product, conjugate-linear in the FIRST argument:
   <a, b> = sum_i conj(a_i) * b_i. */
Gaussian inner(const Vector& a, const Vector& b);

} // namespace qlat

#endif
