#ifndef QLAT_LINALG_HPP
#define QLAT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qlat/gaussian.hpp"

namespace qlat {

/* Dense matrix over the Gaussian rationals.  Small and exact: this backs
   subspace intersections, orthogonal complements and restricted-operator
   computations, all of which live in dimensions of at most a few dozen. */
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Gaussian& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Gaussian& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Gaussian& s) const;
  Gaussian trace() const;

  std::size_t rank() const;

  /* Basis of the right null space {v : A v = 0}. */
  std::vector<std::vector<Gaussian>> kernel_basis() const;

  /* Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier
     recurrence, exact.  Returned as coefficients c[0..n] with c[k] the
     coefficient of t^k and c[n] = 1. */
  std::vector<Gaussian> char_poly() const;

private:
  std::size_t rows_, cols_;
  std::vector<Gaussian> a_;
};

} // namespace qlat

#endif
