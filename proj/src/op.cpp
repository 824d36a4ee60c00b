#include "qlat/op.hpp"

#include "qlat/error.hpp"
#include "qlat/interval.hpp"

namespace qlat {

struct BoundedOperator::Impl {
  Kind kind;
  bool self_adjoint = false;
  // diagonal
  std::function<Rational(std::uint64_t)> eig;
  // banded
  std::uint64_t band = 0;
  std::function<Gaussian(std::uint64_t, std::uint64_t)> ent;
  // finite
  Matrix box{0, 0};
  // general
  std::function<Rational(std::uint64_t, std::uint64_t)> tail;
};

namespace {

Rational checked_eig(const std::function<Rational(std::uint64_t)>& eig, std::uint64_t i) {
  Rational v = eig(i);
  if (Rational(1) < v.abs()) throw DomainError("diagonal entry outside [-1, 1]");
  return v;
}

} // namespace

BoundedOperator BoundedOperator::diagonal(std::vector<Rational> eigs) {
  for (const auto& v : eigs)
    if (Rational(1) < v.abs()) throw DomainError("diagonal entry outside [-1, 1]");
  auto list = std::make_shared<std::vector<Rational>>(std::move(eigs));
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Diagonal;
  impl->self_adjoint = true;
  impl->eig = [list](std::uint64_t i) {
    return i < list->size() ? (*list)[i] : Rational(0);
  };
  return BoundedOperator(std::move(impl));
}

BoundedOperator BoundedOperator::diagonal_stream(std::function<Rational(std::uint64_t)> eig) {
  if (!eig) throw DomainError("diagonal rule must be callable");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Diagonal;
  impl->self_adjoint = true;
  impl->eig = std::move(eig);
  return BoundedOperator(std::move(impl));
}

BoundedOperator BoundedOperator::banded(
    std::uint64_t band, std::function<Gaussian(std::uint64_t, std::uint64_t)> entry,
    bool self_adjoint) {
  if (!entry) throw DomainError("band entry rule must be callable");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Banded;
  impl->self_adjoint = self_adjoint;
  impl->band = band;
  impl->ent = std::move(entry);
  return BoundedOperator(std::move(impl));
}

BoundedOperator BoundedOperator::finite(Matrix m) {
  if (m.rows() != m.cols()) throw DomainError("finite block must be square");
  bool sym = true;
  for (std::size_t i = 0; i < m.rows() && sym; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i).conj()) {
        sym = false;
        break;
      }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Finite;
  impl->self_adjoint = sym;
  impl->box = std::move(m);
  return BoundedOperator(std::move(impl));
}

BoundedOperator BoundedOperator::shift_down() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Banded;
  impl->self_adjoint = false;
  impl->band = 1;
  impl->ent = [](std::uint64_t i, std::uint64_t j) {
    return i == j + 1 ? Gaussian(Rational(1)) : Gaussian();
  };
  return BoundedOperator(std::move(impl));
}

BoundedOperator BoundedOperator::shift_up() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Banded;
  impl->self_adjoint = false;
  impl->band = 1;
  impl->ent = [](std::uint64_t i, std::uint64_t j) {
    return j == i + 1 ? Gaussian(Rational(1)) : Gaussian();
  };
  return BoundedOperator(std::move(impl));
}

BoundedOperator BoundedOperator::general(
    std::function<Gaussian(std::uint64_t, std::uint64_t)> entry,
    std::function<Rational(std::uint64_t, std::uint64_t)> column_tail,
    bool self_adjoint) {
  if (!entry || !column_tail) throw DomainError("general operator needs entry and tail rules");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::General;
  impl->self_adjoint = self_adjoint;
  impl->ent = std::move(entry);
  impl->tail = std::move(column_tail);
  return BoundedOperator(std::move(impl));
}

BoundedOperator::Kind BoundedOperator::kind() const { return impl_->kind; }
bool BoundedOperator::self_adjoint() const { return impl_->self_adjoint; }
bool BoundedOperator::exact_apply() const { return impl_->kind != Kind::General; }

Gaussian BoundedOperator::entry(std::uint64_t i, std::uint64_t j) const {
  switch (impl_->kind) {
    case Kind::Diagonal:
      return i == j ? Gaussian(checked_eig(impl_->eig, i)) : Gaussian();
    case Kind::Banded: {
      const std::uint64_t d = i < j ? j - i : i - j;
      return d <= impl_->band ? impl_->ent(i, j) : Gaussian();
    }
    case Kind::Finite:
      if (i < impl_->box.rows() && j < impl_->box.cols())
        return impl_->box.at(i, j);
      return Gaussian();
    case Kind::General:
      return impl_->ent(i, j);
  }
  throw DomainError("unreachable operator kind");
}

Vector BoundedOperator::apply(const Vector& x) const {
  switch (impl_->kind) {
    case Kind::Diagonal: {
      Vector y;
      for (const auto& [i, v] : x.entries())
        y.set(i, Gaussian(checked_eig(impl_->eig, i)) * v);
      return y;
    }
    case Kind::Banded: {
      Vector y;
      for (const auto& [j, v] : x.entries()) {
        const std::uint64_t lo = j >= impl_->band ? j - impl_->band : 0;
        for (std::uint64_t i = lo; i <= j + impl_->band; ++i) {
          Gaussian a = impl_->ent(i, j);
          if (a == Gaussian()) continue;
          y.set(i, y.get(i) + a * v);
        }
      }
      return y;
    }
    case Kind::Finite: {
      const std::size_t n = impl_->box.rows();
      Vector y;
      for (const auto& [j, v] : x.entries()) {
        if (j >= n) continue;  // the block is zero off its box
        for (std::size_t i = 0; i < n; ++i) {
          const Gaussian& a = impl_->box.at(i, j);
          if (a == Gaussian()) continue;
          y.set(i, y.get(i) + a * v);
        }
      }
      return y;
    }
    case Kind::General:
      throw DomainError("general operators only support truncated application");
  }
  throw DomainError("unreachable operator kind");
}

std::pair<Vector, Rational> BoundedOperator::apply_truncated(
    const Vector& x, std::uint64_t cutoff) const {
  if (impl_->kind != Kind::General) return {apply(x), Rational(0)};
  Vector y;
  for (const auto& [j, v] : x.entries()) {
    for (std::uint64_t i = 0; i < cutoff; ++i) {
      Gaussian a = impl_->ent(i, j);
      if (a == Gaussian()) continue;
      y.set(i, y.get(i) + a * v);
    }
  }
  /* dropped = sum_j x_j * (column j below the cutoff); by the triangle
     inequality its norm is at most sum_j |x_j| * tail_j, each factor
     rounded upward. */
  Rational err(0);
  const Rational tol(1, 1000000);
  for (const auto& [j, v] : x.entries()) {
    Rational t = impl_->tail(j, cutoff);
    if (t.sign() < 0) throw DomainError("column tail bound must be nonnegative");
    Rational coef = sqrt_upper(v.norm_sq(), tol);
    err = err + coef * sqrt_upper(t, tol);
  }
  return {std::move(y), std::move(err)};
}

bool BoundedOperator::spot_check_self_adjoint(std::uint64_t window) const {
  for (std::uint64_t i = 0; i < window; ++i)
    for (std::uint64_t j = 0; j < window; ++j)
      if (entry(i, j) != entry(j, i).conj()) return false;
  return true;
}

} // namespace qlat
