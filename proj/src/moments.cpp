#include "qlat/moments.hpp"

#include "qlat/error.hpp"

namespace qlat {

namespace {

// reciprocal of an interval that excludes zero
RationalInterval interval_inverse(const RationalInterval& v) {
  if (v.lo().sign() <= 0 && 0 <= v.hi().sign())
    throw DomainError("interval reciprocal through zero");
  return RationalInterval(v.hi().inverse(), v.lo().inverse());
}

RationalInterval box_interval(const RootBox& b) {
  return RationalInterval(b.lo, b.hi);
}

} // namespace

bool AtomicMeasure::fully_exact() const {
  for (const auto& a : atoms_)
    if (!a.exact()) return false;
  return true;
}

Rational AtomicMeasure::total() const { return total_; }

void AtomicMeasure::recompute_weights() {
  const size_t m = boxes_.size();
  atoms_.clear();
  atoms_.reserve(m);
  bool all_exact = true;
  for (const auto& b : boxes_)
    if (b.lo != b.hi) all_exact = false;

  if (all_exact) {
    /* every root is a recognized rational: Lagrange weights come out as
       exact rationals and must be positive with exact total mass */
    std::vector<Rational> roots;
    roots.reserve(m);
    for (const auto& b : boxes_) roots.push_back(b.lo);
    Rational sum(0);
    for (size_t i = 0; i < m; ++i) {
      // ell_i(t) = prod_{j != i} (t - theta_j) / (theta_i - theta_j)
      Poly num = Poly::from_coeffs({Rational(1)});
      Rational den(1);
      for (size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        num = num * Poly::from_coeffs({-roots[j], Rational(1)});
        den = den * (roots[i] - roots[j]);
      }
      Rational w(0);
      for (size_t k = 0; k < m; ++k) w = w + num.coeff(k) * moments_[k];
      w = w / den;
      if (w.sign() <= 0)
        throw DomainError("reconstructed spectral weight not positive");
      sum = sum + w;
      atoms_.push_back(SpectralAtom{RationalInterval::point(roots[i]),
                                    RationalInterval::point(w)});
    }
    if (sum != total_)
      throw DomainError("reconstructed spectral weights do not sum to the mass");
    return;
  }

  std::vector<RationalInterval> roots;
  roots.reserve(m);
  for (const auto& b : boxes_) roots.push_back(box_interval(b));
  for (size_t i = 0; i < m; ++i) {
    std::vector<RationalInterval> num{RationalInterval::point(Rational(1))};
    RationalInterval den = RationalInterval::point(Rational(1));
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      // multiply the coefficient list by (t - theta_j)
      std::vector<RationalInterval> next(num.size() + 1,
                                         RationalInterval::point(Rational(0)));
      for (size_t k = 0; k < num.size(); ++k) {
        next[k + 1] = next[k + 1] + num[k];
        next[k] = next[k] + num[k] * (-roots[j]);
      }
      num = std::move(next);
      den = den * (roots[i] - roots[j]);
    }
    RationalInterval w = RationalInterval::point(Rational(0));
    for (size_t k = 0; k < num.size() && k < moments_.size(); ++k)
      w = w + num[k] * RationalInterval::point(moments_[k]);
    w = w * interval_inverse(den);
    atoms_.push_back(SpectralAtom{roots[i], std::move(w)});
  }
}

void AtomicMeasure::refine(const Rational& eps) {
  bool changed = false;
  for (auto& b : boxes_) {
    if (b.lo == b.hi) continue;
    Rational before = b.hi - b.lo;
    refine_root_box(minpoly_, chain_, b, eps);
    if (b.hi - b.lo != before) changed = true;
  }
  if (changed) recompute_weights();
}

RationalInterval AtomicMeasure::integrate(const PLFunction& f) const {
  RationalInterval acc = RationalInterval::point(Rational(0));
  for (const auto& a : atoms_) {
    if (a.position.width().sign() == 0) {
      Rational v = f.eval(a.position.lo());
      acc = acc + a.weight * RationalInterval::point(v);
    } else {
      acc = acc + a.weight * f.range_on(a.position);
    }
  }
  return acc;
}

std::optional<AtomicMeasure> krylov_measure(const BoundedOperator& A, const Vector& x,
                                            unsigned long cap) {
  if (!A.exact_apply())
    throw DomainError("orbit reconstruction needs exact application");
  if (!A.self_adjoint())
    throw DomainError("orbit reconstruction needs a self-adjoint operator");
  if (x.is_zero()) throw DomainError("orbit reconstruction of the zero vector");
  if (cap == 0) throw DomainError("orbit cap must be positive");

  /* close the orbit under A with exact orthogonalization */
  std::vector<Vector> basis{x};
  std::vector<Rational> basis_norm{x.norm_sq()};
  std::vector<Vector> images;  // images[k] = A * basis[k]
  bool closed = false;
  while (!closed) {
    Vector w = A.apply(basis.back());
    images.push_back(w);
    Vector r = w;
    for (size_t i = 0; i < basis.size(); ++i) {
      Gaussian coef = inner(basis[i], w) / Gaussian(basis_norm[i]);
      r -= coef * basis[i];
    }
    if (r.is_zero()) {
      closed = true;
    } else if (basis.size() >= cap) {
      return std::nullopt;
    } else {
      basis_norm.push_back(r.norm_sq());
      basis.push_back(std::move(r));
    }
  }

  const size_t m = basis.size();
  /* restricted matrix in the orthogonal orbit basis; exact because the
     closed orbit span is invariant */
  Matrix M(m, m);
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < m; ++i)
      M.at(i, j) = inner(basis[i], images[j]) / Gaussian(basis_norm[i]);

  std::vector<Gaussian> cp = M.char_poly();
  std::vector<Rational> coeffs;
  coeffs.reserve(cp.size());
  for (const auto& c : cp) {
    if (!c.is_real())
      throw DomainError("restricted matrix has a non-real characteristic polynomial");
    coeffs.push_back(c.re());
  }
  Poly chi = Poly::from_coeffs(std::move(coeffs));

  /* window strictly containing [-1, 1]; the left endpoint is a non-root
     because the norm contract confines the spectrum */
  const Rational lo(-9, 8), hi(9, 8);
  if (chi.eval(lo).sign() == 0 || chi.eval(hi).sign() == 0)
    throw DomainError("spectrum escapes the operator norm contract");

  AtomicMeasure meas;
  meas.minpoly_ = chi;  // squarefree for a faithful self-adjoint restriction
  meas.chain_ = sturm_chain(meas.minpoly_);
  meas.boxes_ = isolate_roots(meas.minpoly_, lo, hi);
  if (meas.boxes_.size() != m)
    throw DomainError("restricted matrix does not have full real spectrum");

  /* strictly separate neighboring boxes so interval Lagrange denominators
     stay away from zero */
  for (size_t pass = 0; pass < 1000; ++pass) {
    bool sep = true;
    for (size_t i = 0; i + 1 < meas.boxes_.size(); ++i)
      if (!(meas.boxes_[i].hi < meas.boxes_[i + 1].lo)) sep = false;
    if (sep) break;
    for (auto& b : meas.boxes_) {
      Rational w = b.hi - b.lo;
      if (w.sign() > 0)
        refine_root_box(meas.minpoly_, meas.chain_, b, w / Rational(4));
    }
  }

  Vector y = x;
  meas.moments_.reserve(m);
  for (size_t k = 0; k < m; ++k) {
    Gaussian mk = inner(x, y);
    if (!mk.is_real())
      throw DomainError("power moment of a self-adjoint operator must be real");
    meas.moments_.push_back(mk.re());
    if (k + 1 < m) y = A.apply(y);
  }
  meas.total_ = x.norm_sq();
  meas.recompute_weights();
  return meas;
}

} // namespace qlat
