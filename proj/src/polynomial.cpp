#include "qlat/polynomial.hpp"

#include <utility>

#include "qlat/error.hpp"

namespace qlat {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Rational> c) {
  Poly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

Poly Poly::monomial(const Rational& a, size_t k) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = a;
  return from_coeffs(std::move(c));
}

const Rational& Poly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

Rational Poly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

RationalInterval Poly::eval_on(const RationalInterval& box) const {
  RationalInterval acc = RationalInterval::point(Rational(0));
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * box + RationalInterval::point(c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1, Rational(0));
  for (size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return from_coeffs(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].sign() == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  }
  return Poly::from_coeffs(std::move(c));
}

Poly Poly::scaled(const Rational& a) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = x * a;
  return from_coeffs(std::move(c));
}

namespace {

// long division: a = q*b + r with deg r < deg b
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q;
  const long db = b.degree();
  const Rational lead = b.leading();
  long dr = a.degree();
  if (dr >= db) q.assign(static_cast<size_t>(dr - db) + 1, Rational(0));
  while (dr >= db) {
    Rational f = r[static_cast<size_t>(dr)] / lead;
    q[static_cast<size_t>(dr - db)] = f;
    for (long i = 0; i <= db; ++i)
      r[static_cast<size_t>(dr - db + i)] =
          r[static_cast<size_t>(dr - db + i)] - f * b.coeff(static_cast<size_t>(i));
    while (!r.empty() && r.back().sign() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
  }
  return {Poly::from_coeffs(std::move(q)), Poly::from_coeffs(std::move(r))};
}

// scale to leading coefficient +-1; positive factors keep all sign data
Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading().abs().inverse());
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = normalized(r);
  }
  return normalized(a);
}

/* p divided by gcd(p, p'): same distinct roots, all simple. */
Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

} // namespace

Poly Poly::rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  for (;;) {
    Poly r = Poly::rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(normalized(r).scaled(Rational(-1)));
  }
  return chain;
}

int sign_variations_at(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int count_roots_in(const std::vector<Poly>& chain, const Rational& lo,
                   const Rational& hi) {
  if (hi < lo) throw DomainError("root count over an empty interval");
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

namespace {

void isolate_rec(const Poly& q, const std::vector<Poly>& chain,
                 const Rational& lo, int vlo, const Rational& hi, int vhi,
                 std::vector<RootBox>& out) {
  const int n = vlo - vhi;
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(RootBox{lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  const int vm = sign_variations_at(chain, mid);
  isolate_rec(q, chain, lo, vlo, mid, vm, out);
  isolate_rec(q, chain, mid, vm, hi, vhi, out);
}

} // namespace

std::vector<RootBox> isolate_roots(const Poly& p, const Rational& lo,
                                   const Rational& hi) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  if (p.eval(lo).sign() == 0)
    throw DomainError("left isolation endpoint must not be a root");
  Poly q = squarefree_part(p);
  std::vector<Poly> chain = sturm_chain(q);
  std::vector<RootBox> out;
  isolate_rec(q, chain, lo, sign_variations_at(chain, lo), hi,
              sign_variations_at(chain, hi), out);
  return out;
}

void refine_root_box(const Poly& p, const std::vector<Poly>& chain,
                     RootBox& box, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("refinement tolerance must be positive");
  for (;;) {
    if (box.lo == box.hi) return;  // already snapped exact
    // a rational root eventually becomes the simplest rational in the box
    Rational guess = simplest_in(box.lo, box.hi);
    if (guess != box.lo && p.eval(guess).sign() == 0) {
      box.lo = guess;
      box.hi = guess;
      return;
    }
    if (!(eps < box.hi - box.lo)) return;
    Rational mid = (box.lo + box.hi) / Rational(2);
    if (p.eval(mid).sign() == 0) {
      box.lo = mid;
      box.hi = mid;
      return;
    }
    if (count_roots_in(chain, box.lo, mid) == 1)
      box.hi = std::move(mid);
    else
      box.lo = std::move(mid);
  }
}

} // namespace qlat
