#include "qlat/lattice.hpp"

#include <memory>
#include <set>

#include "qlat/error.hpp"
#include "qlat/linalg.hpp"

namespace qlat {

static void require_unit(const Vector& c, const char* who) {
  if (c.norm_sq() != Rational(1))
    throw DomainError(std::string(who) + ": direction is not exactly unit");
}

static void require_radius(const Rational& r) {
  if (r.sign() < 0 || r >= Rational(1))
    throw DomainError("radius outside [0, 1)");
}

bool certificate_valid(const Subspace& L, const Vector& c, const Rational& r) {
  require_unit(c, "certificate_valid");
  require_radius(r);
  if (!L.is_finite())
    throw DomainError("certificate_valid needs a finite presentation");
  return r * r < distance_sq(c, L.basis());
}

HalfspaceReport halfspace_tests(const Vector& c, const Rational& r, const Vector& x) {
  require_unit(c, "halfspace_tests");
  require_unit(x, "halfspace_tests");
  require_radius(r);
  Rational re = inner(c, x).re();
  Rational gap = Rational(1) - r * r;

  HalfspaceReport rep;
  rep.in_halfspace = re * re >= gap;

  /* quadratic route: f(l) = l^2 - 2 l re + gap, look for a root in [-1,1] */
  Rational disc = re * re - gap;
  if (disc.sign() < 0) {
    rep.in_closed_ball_scaled = false;
  } else {
    Rational f_neg1 = Rational(1) + Rational(2) * re + gap;
    Rational f_pos1 = Rational(1) - Rational(2) * re + gap;
    bool both_below = f_neg1.sign() < 0 && f_pos1.sign() < 0;
    bool reachable = f_neg1.sign() <= 0 || f_pos1.sign() <= 0 ||
                     (re >= Rational(-1) && re <= Rational(1));
    rep.in_closed_ball_scaled = !both_below && reachable;
  }
  return rep;
}

bool unit_distance_less(const Vector& x, const Vector& c, const Rational& r) {
  if (x.is_zero()) throw DomainError("unit_distance_less on zero vector");
  require_unit(c, "unit_distance_less");
  require_radius(r);
  /* ||x/||x|| - c|| < r  iff  (2 - r^2) ||x|| < 2 Re<c,x>; the left side is
     positive, so the sign of w decides before squaring removes the root */
  Rational w = inner(c, x).re();
  if (w.sign() <= 0) return false;
  Rational lhs = Rational(2) - r * r;
  return lhs * lhs * x.norm_sq() < Rational(4) * w * w;
}

SubspaceCode SubspaceCode::encode(const Subspace& L) {
  if (L.is_finite()) {
    auto idx = std::make_shared<std::size_t>(0);
    return SubspaceCode(LazySeq<std::optional<Certificate>>(
        [L, idx]() -> std::optional<Certificate> {
          Candidate cand = candidate_at((*idx)++);
          if (cand.r * cand.r < distance_sq(cand.unit, L.basis()))
            return Certificate{std::move(cand.unit), std::move(cand.r)};
          return std::nullopt;
        }));
  }

  if (!L.has_tail_bound()) {
    /* truncations upper-bound the distance; nothing is ever certifiable */
    return SubspaceCode(LazySeq<std::optional<Certificate>>(
        []() -> std::optional<Certificate> { return std::nullopt; }));
  }

  /* dovetail cells (candidate slot s, truncation level l) along diagonals;
     a certificate appears in the first cell that certifies it */
  struct Sweep {
    std::size_t diag = 0, s = 0;
    std::set<std::size_t> emitted;
  };
  auto sw = std::make_shared<Sweep>();
  return SubspaceCode(LazySeq<std::optional<Certificate>>(
      [L, sw]() -> std::optional<Certificate> {
        std::size_t s = sw->s, level = sw->diag - sw->s;
        if (sw->s == sw->diag) {
          ++sw->diag;
          sw->s = 0;
        } else {
          ++sw->s;
        }
        if (sw->emitted.count(s)) return std::nullopt;
        Candidate cand = candidate_at(s);
        Rational reach = cand.r + L.tail_bound(level);
        if (reach >= Rational(1)) return std::nullopt;  // cannot certify yet
        OrthogonalFamily prefix = L.prefix_basis(level);
        if (reach * reach < distance_sq(cand.unit, prefix)) {
          sw->emitted.insert(s);
          return Certificate{std::move(cand.unit), std::move(cand.r)};
        }
        return std::nullopt;
      }));
}

SubspaceCode SubspaceCode::from_list(std::vector<Certificate> certs) {
  for (const Certificate& cert : certs) {
    require_unit(cert.c, "subspace code");
    require_radius(cert.r);
  }
  auto idx = std::make_shared<std::size_t>(0);
  auto list = std::make_shared<std::vector<Certificate>>(std::move(certs));
  return SubspaceCode(LazySeq<std::optional<Certificate>>(
      [list, idx]() -> std::optional<Certificate> {
        std::size_t i = (*idx)++;
        if (i < list->size()) return (*list)[i];
        return std::nullopt;
      }));
}

std::optional<Certificate> SubspaceCode::slot(std::size_t i) const {
  return slots_.at(i);
}

std::vector<Certificate> SubspaceCode::collect(std::size_t max_certs,
                                               std::size_t slot_cap) const {
  std::vector<Certificate> out;
  for (std::size_t i = 0; i < slot_cap && out.size() < max_certs; ++i)
    if (std::optional<Certificate> cert = slots_.at(i)) out.push_back(*cert);
  return out;
}

Semidecision not_member(const SubspaceCode& code, const Vector& x) {
  if (x.is_zero())
    throw DomainError("membership refutation for the zero vector");
  return Semidecision::from_items([code, x](std::uint64_t i) {
    std::optional<Certificate> cert = code.slot(static_cast<std::size_t>(i));
    return cert && unit_distance_less(x, cert->c, cert->r);
  });
}

Subspace meet(const Subspace& A, const Subspace& B) {
  if (!A.is_finite() || !B.is_finite())
    throw DomainError("meet needs finite presentations");
  const std::vector<Vector>& u = A.generators();
  const std::vector<Vector>& w = B.generators();

  std::set<std::uint64_t> coords;
  for (const Vector& g : u)
    for (const auto& [i, z] : g.entries()) coords.insert(i);
  for (const Vector& g : w)
    for (const auto& [i, z] : g.entries()) coords.insert(i);

  /* kernel of [U | -W]: a coefficient vector (a, b) with U a = W b names the
     common point sum a_j u_j */
  Matrix M(coords.size(), u.size() + w.size());
  std::size_t row = 0;
  for (std::uint64_t ci : coords) {
    for (std::size_t j = 0; j < u.size(); ++j) M.at(row, j) = u[j].get(ci);
    for (std::size_t j = 0; j < w.size(); ++j)
      M.at(row, u.size() + j) = -w[j].get(ci);
    ++row;
  }

  std::vector<Vector> gens;
  for (const std::vector<Gaussian>& ker : M.kernel_basis()) {
    Vector v;
    for (std::size_t j = 0; j < u.size(); ++j) v += ker[j] * u[j];
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return Subspace::finite(std::move(gens));
}

Subspace join(const Subspace& A, const Subspace& B) {
  if (!A.is_finite() || !B.is_finite())
    throw DomainError("join needs finite presentations");
  std::vector<Vector> gens = A.generators();
  const std::vector<Vector>& more = B.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return Subspace::finite(std::move(gens));
}

Subspace ortho_complement(const Subspace& L, std::uint64_t ambient_dim) {
  if (!L.is_finite())
    throw DomainError("orthogonal complement needs a finite presentation");
  for (const Vector& g : L.generators())
    if (!g.is_zero() && g.max_index() >= ambient_dim)
      throw DomainError("generator leaves the ambient coordinate range");

  Matrix M(L.generators().size(), static_cast<std::size_t>(ambient_dim));
  for (std::size_t r = 0; r < L.generators().size(); ++r)
    for (const auto& [i, z] : L.generators()[r].entries())
      M.at(r, static_cast<std::size_t>(i)) = z.conj();

  std::vector<Vector> gens;
  for (const std::vector<Gaussian>& ker : M.kernel_basis()) {
    Vector v;
    for (std::size_t c = 0; c < ker.size(); ++c)
      if (!ker[c].is_zero()) v.set(static_cast<std::uint64_t>(c), ker[c]);
    gens.push_back(std::move(v));
  }
  return Subspace::finite(std::move(gens));
}

} // namespace qlat
