#include "qlat/states.hpp"

#include <algorithm>

#include "qlat/error.hpp"

namespace qlat {

PureState::PureState(Vector x) : x_(std::move(x)) {
  if (x_.norm_sq() != Rational(1))
    throw DomainError("pure state needs an exactly unit vector");
}

Rational pure_eval(const PureState& s, const Subspace& L) {
  if (!L.is_finite()) throw DomainError("pure_eval needs a finite presentation");
  return Rational(1) - distance_sq(s.vec(), L.basis());
}

UpperReal pure_eval_code(const PureState& s, const SubspaceCode& code) {
  Vector x = s.vec();
  return UpperReal::from_bounds([x, code](std::uint64_t step) -> Rational {
    std::size_t slot = static_cast<std::size_t>(step - 1);
    std::optional<Certificate> cert = code.slot(slot);
    if (!cert) return Rational(1);
    /* t^2 = ||x - c||^2 = 2 - 2 Re<c,x> for unit x, c; enclose t from above
       with precision shrinking along the stream */
    Rational t_sq = Rational(2) - Rational(2) * inner(cert->c, x).re();
    long prec = static_cast<long>(std::min<std::uint64_t>(step, 190)) + 10;
    Rational t_up = sqrt_upper(t_sq, Rational::pow2(-prec));
    Rational gain = cert->r - t_up;
    if (gain.sign() <= 0) return Rational(1);
    return Rational(1) - gain * gain;
  });
}

struct State::Impl {
  std::vector<Term> terms;          // the finite list, or the prefix
  bool geometric = false;
  Rational ratio;                   // geometric case
  std::uint64_t fresh_base = 0;     // K: first fresh basis index
  Rational geo_total;               // mass of the whole continuation
};

static void validate_prefix(const std::vector<State::Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].weight.sign() <= 0)
      throw DomainError("state weights must be positive");
    if (terms[i].vec.norm_sq() != Rational(1))
      throw DomainError("state vectors must be exactly unit");
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (!inner(terms[i].vec, terms[j].vec).is_zero())
        throw DomainError("state vectors must be pairwise orthogonal");
  }
}

State State::finite(std::vector<Term> terms) {
  validate_prefix(terms);
  Rational total;
  for (const Term& t : terms) total += t.weight;
  if (total != Rational(1))
    throw DomainError("state weights must sum to exactly 1");
  State s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->terms = std::move(terms);
  return s;
}

State State::geometric(std::vector<Term> prefix, Rational ratio) {
  if (prefix.empty())
    throw DomainError("geometric continuation needs a nonempty prefix");
  if (ratio.sign() <= 0 || ratio >= Rational(1))
    throw DomainError("geometric ratio must lie in (0, 1)");
  validate_prefix(prefix);
  Rational total;
  std::uint64_t K = 0;
  for (const Term& t : prefix) {
    total += t.weight;
    K = std::max(K, t.vec.max_index() + 1);
  }
  Rational w_last = prefix.back().weight;
  Rational geo_total = w_last * ratio / (Rational(1) - ratio);
  if (total + geo_total != Rational(1))
    throw DomainError("state mass (prefix plus continuation) must be exactly 1");
  State s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->terms = std::move(prefix);
  s.impl_->geometric = true;
  s.impl_->ratio = std::move(ratio);
  s.impl_->fresh_base = K;
  s.impl_->geo_total = std::move(geo_total);
  return s;
}

State::Term State::term(std::size_t k) const {
  const Impl& im = *impl_;
  if (k < im.terms.size()) return im.terms[k];
  if (!im.geometric) throw DomainError("term index past the end of a finite state");
  std::size_t j = k - im.terms.size();
  Rational w = im.terms.back().weight *
               Rational::pow(im.ratio, static_cast<unsigned long>(j + 1));
  return Term{std::move(w), Vector::basis(im.fresh_base + j)};
}

std::optional<std::size_t> State::finite_size() const {
  if (impl_->geometric) return std::nullopt;
  return impl_->terms.size();
}

std::size_t State::listed_size() const { return impl_->terms.size(); }

std::optional<Rational> State::geometric_ratio() const {
  if (!impl_->geometric) return std::nullopt;
  return impl_->ratio;
}

Rational State::tail_weight(std::size_t n) const {
  const Impl& im = *impl_;
  std::size_t m = im.terms.size();
  Rational tail;
  for (std::size_t k = n; k < m; ++k) tail += im.terms[k].weight;
  if (!im.geometric) return tail;
  if (n <= m) return tail + im.geo_total;
  /* sum_{k >= n} w_last ratio^{k-m+1} = w_last ratio^{n-m+1} / (1 - ratio) */
  Rational w_last = im.terms.back().weight;
  return w_last * Rational::pow(im.ratio, static_cast<unsigned long>(n - m + 1)) /
         (Rational(1) - im.ratio);
}

RationalInterval mixed_eval(const State& S, const Subspace& L, std::size_t n) {
  if (!L.is_finite()) throw DomainError("mixed_eval needs a finite presentation");
  std::vector<State::Term> prefix;
  if (std::optional<std::size_t> sz = S.finite_size())
    n = std::min(n, *sz);
  prefix.reserve(n);
  for (std::size_t k = 0; k < n; ++k) prefix.push_back(S.term(k));
  for (std::size_t i = 0; i < prefix.size(); ++i)
    for (std::size_t j = i + 1; j < prefix.size(); ++j)
      if (!inner(prefix[i].vec, prefix[j].vec).is_zero())
        throw DomainError("inspected state prefix is not orthogonal");

  Rational partial;
  for (const State::Term& t : prefix)
    partial += t.weight * (Rational(1) - distance_sq(t.vec, L.basis()));
  Rational tail = S.tail_weight(n);
  return RationalInterval(partial, partial + tail).clamp(Rational(0), Rational(1));
}

AdditivityReport check_additivity(const PureState& s, const Subspace& P,
                                  const Subspace& Q) {
  if (!P.is_finite() || !Q.is_finite())
    throw DomainError("check_additivity needs finite presentations");
  for (const Vector& p : P.generators())
    for (const Vector& q : Q.generators())
      if (!inner(p, q).is_zero())
        throw DomainError("check_additivity needs orthogonal subspaces");
  AdditivityReport rep;
  rep.value_p = pure_eval(s, P);
  rep.value_q = pure_eval(s, Q);
  rep.value_join = pure_eval(s, join(P, Q));
  rep.additive = rep.value_join == rep.value_p + rep.value_q;
  return rep;
}

} // namespace qlat
