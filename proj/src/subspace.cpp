#include "qlat/subspace.hpp"

#include <mutex>

#include "qlat/error.hpp"
#include "qlat/lazy_seq.hpp"

namespace qlat {

struct Subspace::Impl {
  bool finite = true;
  std::vector<Vector> gens;                     // finite case
  std::optional<LazySeq<Vector>> gen_stream;    // countable case
  std::optional<std::function<Rational(std::size_t)>> tail;

  std::mutex m;
  std::optional<OrthogonalFamily> cached_basis;  // finite case
};

Subspace Subspace::finite(std::vector<Vector> gens) {
  Subspace s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->gens = std::move(gens);
  return s;
}

Subspace Subspace::countable(
    std::function<Vector(std::size_t)> gen,
    std::optional<std::function<Rational(std::size_t)>> tail_bound) {
  Subspace s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->finite = false;
  auto idx = std::make_shared<std::size_t>(0);
  s.impl_->gen_stream.emplace(
      LazySeq<Vector>([gen = std::move(gen), idx]() { return gen((*idx)++); }));
  s.impl_->tail = std::move(tail_bound);
  return s;
}

bool Subspace::is_finite() const { return impl_->finite; }

bool Subspace::has_tail_bound() const { return impl_->tail.has_value(); }

const std::vector<Vector>& Subspace::generators() const {
  if (!impl_->finite) throw DomainError("countable presentation has no finite generator list");
  return impl_->gens;
}

const OrthogonalFamily& Subspace::basis() const {
  if (!impl_->finite) throw DomainError("countable presentation has no finite basis");
  std::lock_guard<std::mutex> lock(impl_->m);
  if (!impl_->cached_basis) impl_->cached_basis = gram_schmidt(impl_->gens);
  return *impl_->cached_basis;
}

std::size_t Subspace::dim() const { return basis().dim(); }

Vector Subspace::generator(std::size_t i) const {
  if (impl_->finite) {
    if (i >= impl_->gens.size()) throw DomainError("generator index out of range");
    return impl_->gens[i];
  }
  return impl_->gen_stream->at(i);
}

OrthogonalFamily Subspace::prefix_basis(std::size_t n) const {
  if (impl_->finite) return basis();
  std::vector<Vector> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(impl_->gen_stream->at(i));
  return gram_schmidt(gens);
}

Rational Subspace::tail_bound(std::size_t n) const {
  if (!impl_->tail) throw DomainError("presentation declares no tail bound");
  Rational t = (*impl_->tail)(n);
  if (t.sign() < 0) throw DomainError("negative tail bound");
  return t;
}

} // namespace qlat
