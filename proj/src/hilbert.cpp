#include "qlat/hilbert.hpp"

#include "qlat/error.hpp"

namespace qlat {

OrthogonalFamily OrthogonalFamily::checked(std::vector<Vector> vecs) {
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].is_zero()) throw DomainError("zero vector in orthogonal family");
    for (std::size_t j = i + 1; j < vecs.size(); ++j)
      if (!inner(vecs[i], vecs[j]).is_zero())
        throw DomainError("family is not orthogonal");
  }
  return trusted(std::move(vecs));
}

OrthogonalFamily OrthogonalFamily::trusted(std::vector<Vector> vecs) {
  OrthogonalFamily f;
  f.vecs_ = std::move(vecs);
  f.norms_.reserve(f.vecs_.size());
  for (const Vector& v : f.vecs_) f.norms_.push_back(v.norm_sq());
  return f;
}

OrthogonalFamily gram_schmidt(const std::vector<Vector>& gens) {
  std::vector<Vector> basis;
  std::vector<Rational> norms;
  for (const Vector& g : gens) {
    Vector r = g;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Gaussian coeff = inner(basis[i], r) / Gaussian(norms[i]);
      r -= coeff * basis[i];
    }
    if (r.is_zero()) continue;  // dependent generator
    norms.push_back(r.norm_sq());
    basis.push_back(std::move(r));
  }
  return OrthogonalFamily::trusted(std::move(basis));
}

Vector project(const Vector& c, const OrthogonalFamily& F) {
  Vector p;
  for (std::size_t i = 0; i < F.dim(); ++i) {
    Gaussian coeff = inner(F.vectors()[i], c) / Gaussian(F.norms_sq()[i]);
    p += coeff * F.vectors()[i];
  }
  return p;
}

Rational distance_sq(const Vector& c, const OrthogonalFamily& F) {
  Rational d = c.norm_sq();
  for (std::size_t i = 0; i < F.dim(); ++i)
    d -= inner(F.vectors()[i], c).norm_sq() / F.norms_sq()[i];
  return d;
}

Rational distance_sq_to_span(const Vector& c, const std::vector<Vector>& gens) {
  return distance_sq(c, gram_schmidt(gens));
}

Vector rationalize_unit(const Vector& x, const Rational& eps) {
  if (x.is_zero()) throw DomainError("cannot normalize the zero vector");
  if (eps.sign() <= 0) throw DomainError("non-positive tolerance");
  Rational s = x.norm_sq();

  {
    /* ||x||^2 a rational square: exact normalization, no approximation. */
    RationalInterval root = interval_sqrt(s, Rational(1));
    if (root.is_point()) {
      Vector u = Gaussian(root.lo().inverse()) * x;
      if (u.norm_sq() != Rational(1)) throw DomainError("internal: exact normalization failed");
      return u;
    }
  }

  Rational eps_sq = eps * eps;
  Rational delta = (eps < Rational(1) ? eps : Rational(1)) / Rational(4);
  for (int attempt = 0; attempt < 128; ++attempt, delta /= Rational(4)) {
    RationalInterval root = interval_sqrt(s, delta);  // ||x|| in [lo, hi]
    const Rational& q = root.hi();                    // q >= ||x||, so ||y|| <= 1
    Vector y = Gaussian(q.inverse()) * x;

    /* pole: the basis direction where y is largest, on the far side */
    std::uint64_t j = 0;
    Rational best(-1);
    for (const auto& [i, z] : y.entries()) {
      Rational m = z.norm_sq();
      if (m > best) {
        best = m;
        j = i;
      }
    }
    Rational sigma = y.get(j).re().sign() >= 0 ? Rational(-1) : Rational(1);
    Vector p = Gaussian(sigma) * Vector::basis(j);

    Rational a = inner(p, y).re();  // <= 0 by the sign choice
    Rational m = y.norm_sq() + Rational(1) - Rational(2) * a;  // ||y - p||^2
    Rational t = Rational(2) * (Rational(1) - a) / m;
    Vector u = p + Gaussian(t) * (y - p);
    if (u.norm_sq() != Rational(1))
      throw DomainError("internal: chord point left the sphere");

    /* verify ||u - x/||x|| ||^2 = 2 - 2 Re<u,x>/||x|| <= eps^2 using the
       interval enclosure of ||x|| */
    Rational w = inner(u, x).re();
    Rational bound = (w.sign() >= 0) ? Rational(2) - Rational(2) * w / root.hi()
                                     : Rational(2) - Rational(2) * w / root.lo();
    if (bound <= eps_sq) return u;
  }
  throw DomainError("unit rationalization did not converge");
}

} // namespace qlat
