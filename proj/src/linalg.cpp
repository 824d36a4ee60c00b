#include "qlat/linalg.hpp"

#include "qlat/error.hpp"

namespace qlat {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Gaussian(Rational(1));
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Gaussian& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("matrix sum shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Gaussian& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = s * a_[i];
  return r;
}

Gaussian Matrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of non-square matrix");
  Gaussian t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

/* Row echelon elimination; returns pivot columns.  Operates on a copy held by
   the caller. */
static std::vector<std::size_t> echelon(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(p, c));
    Gaussian inv = Gaussian(Rational(1)) / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = inv * m.at(row, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Gaussian f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return echelon(m).size();
}

std::vector<std::vector<Gaussian>> Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots = echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Gaussian>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Gaussian> v(cols_);
    v[free] = Gaussian(Rational(1));
    /* pivot row r has its pivot at pivots[r]; back-substitute */
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Gaussian> Matrix::char_poly() const {
  if (rows_ != cols_) throw DomainError("char_poly of non-square matrix");
  std::size_t n = rows_;
  std::vector<Gaussian> c(n + 1);
  c[n] = Gaussian(Rational(1));
  Matrix M(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    /* M_k = A (M_{k-1} + c_{n-k+1} I); c_{n-k} = -tr(M_k)/k */
    Matrix shifted = M + identity(n).scaled(c[n - k + 1]);
    M = *this * shifted;
    c[n - k] = -(M.trace() / Gaussian(Rational(static_cast<long>(k))));
  }
  return c;
}

} // namespace qlat
