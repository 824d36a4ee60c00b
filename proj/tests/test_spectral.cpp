#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlat/bernstein.hpp"
#include "qlat/closed_set.hpp"
#include "qlat/error.hpp"
#include "qlat/integral.hpp"
#include "qlat/moments.hpp"
#include "qlat/op.hpp"
#include "qlat/plfunction.hpp"
#include "qlat/polynomial.hpp"
#include "qlat/valuation.hpp"

using namespace qlat;

static Rational Q(long n, long d = 1) { return Rational(n, d); }

/* independent oracle: the integral of f against a finitely supported
   diagonal measure, summed entry by entry */
static Rational diag_integral_oracle(const std::vector<Rational>& eigs,
                                     const Vector& x, const PLFunction& f) {
  Rational acc(0);
  for (const auto& [i, v] : x.entries()) {
    Rational eig = i < eigs.size() ? eigs[i] : Rational(0);
    acc = acc + f.eval(eig) * v.norm_sq();
  }
  return acc;
}

TEST_CASE("closed set normalization and queries") {
  auto s = ClosedRationalSet::from_intervals({{Q(0), Q(1, 2)}, {Q(1, 4), Q(3, 4)}});
  REQUIRE(s.pieces().size() == 1);
  CHECK(s.pieces()[0].first == Q(0));
  CHECK(s.pieces()[0].second == Q(3, 4));

  // touching closed intervals merge
  auto t = ClosedRationalSet::from_intervals({{Q(-1, 2), Q(0)}, {Q(0), Q(1, 4)}});
  REQUIRE(t.pieces().size() == 1);

  // clipping to the window, fully outside pieces vanish
  auto c = ClosedRationalSet::from_intervals({{Q(-3), Q(-2)}, {Q(1, 2), Q(7)}});
  REQUIRE(c.pieces().size() == 1);
  CHECK(c.pieces()[0].first == Q(1, 2));
  CHECK(c.pieces()[0].second == Q(1));

  CHECK_THROWS_AS(ClosedRationalSet::from_intervals({{Q(1), Q(0)}}), DomainError);

  auto u = ClosedRationalSet::from_intervals({{Q(-1), Q(-1, 2)}, {Q(0), Q(1, 4)}});
  CHECK(u.contains(Q(-3, 4)));
  CHECK(u.contains(Q(-1, 2)));
  CHECK(u.contains(Q(0)));
  CHECK(!u.contains(Q(-1, 4)));
  CHECK(!u.contains(Q(1, 2)));
  CHECK(ClosedRationalSet().is_empty());
  CHECK(!ClosedRationalSet().contains(Q(0)));
}

TEST_CASE("closed set parsing") {
  auto s = ClosedRationalSet::parse("[0,1/2]");
  REQUIRE(s.pieces().size() == 1);
  CHECK(s.pieces()[0].second == Q(1, 2));

  auto two = ClosedRationalSet::parse(" [ -1 , -1/2 ] U [ 0 , 1/4 ] ");
  REQUIRE(two.pieces().size() == 2);
  CHECK(two.pieces()[1].first == Q(0));

  auto utf = ClosedRationalSet::parse("[-1/3,0]\xe2\x88\xaa[1/3,2/3]");
  REQUIRE(utf.pieces().size() == 2);

  CHECK(ClosedRationalSet::parse("empty").is_empty());
  CHECK(ClosedRationalSet::parse("[0,1/2]u[1/2,1]").pieces().size() == 1);

  CHECK_THROWS_AS(ClosedRationalSet::parse("0,1"), ParseError);
  CHECK_THROWS_AS(ClosedRationalSet::parse("[0,1] junk"), ParseError);
  CHECK_THROWS_AS(ClosedRationalSet::parse("[1,0]"), ParseError);
  CHECK_THROWS_AS(ClosedRationalSet::parse("[0 1]"), ParseError);

  // round trip through str
  auto rt = ClosedRationalSet::parse(two.str());
  REQUIRE(rt.pieces().size() == 2);
  CHECK(rt.pieces()[0].first == two.pieces()[0].first);
}

TEST_CASE("closed set union and intersection against membership") {
  auto a = ClosedRationalSet::parse("[-1,-1/4]u[0,1/2]");
  auto b = ClosedRationalSet::parse("[-1/2,1/4]");
  auto un = a.union_with(b);
  auto in = a.intersect(b);
  // probe a grid of rationals; set algebra must match pointwise logic
  for (long num = -16; num <= 16; ++num) {
    Rational t(num, 16);
    CHECK(un.contains(t) == (a.contains(t) || b.contains(t)));
    CHECK(in.contains(t) == (a.contains(t) && b.contains(t)));
  }
  CHECK(a.intersect(ClosedRationalSet()).is_empty());
}

TEST_CASE("piecewise linear evaluation and extrema") {
  // hat on [0,1] with peak 1 at 1/2
  auto hat = PLFunction::from_breakpoints(
      {{Q(0), Q(0)}, {Q(1, 2), Q(1)}, {Q(1), Q(0)}});
  CHECK(hat.eval(Q(0)) == Q(0));
  CHECK(hat.eval(Q(1, 4)) == Q(1, 2));
  CHECK(hat.eval(Q(1, 2)) == Q(1));
  CHECK(hat.eval(Q(3, 4)) == Q(1, 2));
  CHECK(hat.eval(Q(-5)) == Q(0));   // constant extension
  CHECK(hat.eval(Q(5)) == Q(0));
  CHECK(hat.lipschitz() == Q(2));
  CHECK(hat.min_global() == Q(0));
  CHECK(hat.max_global() == Q(1));

  auto r = hat.range_on(RationalInterval(Q(1, 4), Q(3, 8)));
  CHECK(r.lo() == Q(1, 2));
  CHECK(r.hi() == Q(3, 4));
  auto full = hat.range_on(RationalInterval(Q(-1), Q(1)));
  CHECK(full.lo() == Q(0));
  CHECK(full.hi() == Q(1));

  auto set = ClosedRationalSet::parse("[1/4,3/8]u[3/4,1]");
  CHECK(hat.min_on(set) == Q(0));
  CHECK(hat.min_on(ClosedRationalSet::parse("[1/4,3/4]")) == Q(1, 2));
  CHECK_THROWS_AS(hat.min_on(ClosedRationalSet()), DomainError);

  CHECK(PLFunction::constant(Q(7, 3)).eval(Q(100)) == Q(7, 3));
  CHECK(PLFunction::constant(Q(7, 3)).lipschitz() == Q(0));
  CHECK_THROWS_AS(
      PLFunction::from_breakpoints({{Q(0), Q(0)}, {Q(0), Q(1)}}), DomainError);
}

TEST_CASE("piecewise linear algebra is pointwise") {
  auto f = PLFunction::from_breakpoints({{Q(-1), Q(1)}, {Q(0), Q(0)}, {Q(1), Q(1)}});
  auto g = PLFunction::from_breakpoints({{Q(-1, 2), Q(0)}, {Q(1, 2), Q(2)}});
  auto sum = f.add(g);
  auto scaled = f.scale(Q(-3, 2));
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<long> num(-24, 24);
  for (int i = 0; i < 200; ++i) {
    Rational t(num(rng), 8);
    CHECK(sum.eval(t) == f.eval(t) + g.eval(t));
    CHECK(scaled.eval(t) == Q(-3, 2) * f.eval(t));
  }
}

TEST_CASE("polynomial arithmetic and enclosure") {
  auto p = Poly::from_coeffs({Q(1), Q(-2), Q(1)});  // (t-1)^2
  CHECK(p.eval(Q(1)) == Q(0));
  CHECK(p.eval(Q(3)) == Q(4));
  CHECK(p.degree() == 2);
  auto d = p.derivative();
  CHECK(d.eval(Q(1)) == Q(0));
  CHECK(d.eval(Q(2)) == Q(2));

  auto q = Poly::from_coeffs({Q(-1), Q(1)});
  auto prod = p * q;
  CHECK(prod.degree() == 3);
  CHECK(prod.eval(Q(5)) == p.eval(Q(5)) * q.eval(Q(5)));
  CHECK((p + q).eval(Q(5)) == p.eval(Q(5)) + q.eval(Q(5)));
  CHECK((p - q).eval(Q(5)) == p.eval(Q(5)) - q.eval(Q(5)));

  // remainder of division by (t - 1) is the value at 1
  auto r = Poly::rem(Poly::from_coeffs({Q(2), Q(0), Q(3)}), q);
  CHECK(r.degree() == 0);
  CHECK(r.coeff(0) == Q(5));

  auto box = RationalInterval(Q(-1), Q(2));
  auto enc = p.eval_on(box);
  for (long n = -4; n <= 8; ++n)
    CHECK(enc.contains(p.eval(Q(n, 4))));
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
}

TEST_CASE("sturm chain counts distinct roots") {
  // (t-1)(t-2)(t-3)
  auto p = Poly::from_coeffs({Q(-6), Q(11), Q(-6), Q(1)});
  auto chain = sturm_chain(p);
  CHECK(count_roots_in(chain, Q(0), Q(4)) == 3);
  CHECK(count_roots_in(chain, Q(0), Q(3, 2)) == 1);
  CHECK(count_roots_in(chain, Q(3, 2), Q(5, 2)) == 1);
  CHECK(count_roots_in(chain, Q(4), Q(9)) == 0);
  // half-open convention: the right endpoint counts, the left does not
  CHECK(count_roots_in(chain, Q(0), Q(1)) == 1);
  CHECK(count_roots_in(chain, Q(1), Q(2)) == 1);
  CHECK(count_roots_in(chain, Q(1), Q(3, 2)) == 0);

  // multiplicity is ignored: (t-1)^2 (t+1) has two distinct roots
  auto m = Poly::from_coeffs({Q(1), Q(1), Q(-1), Q(-1)});
  auto boxes = isolate_roots(m, Q(-2), Q(2));
  CHECK(boxes.size() == 2);
}

TEST_CASE("root isolation and refinement recover rational roots exactly") {
  auto p = Poly::from_coeffs({Q(-6), Q(11), Q(-6), Q(1)});
  auto q = Poly::from_coeffs({Q(-6), Q(11), Q(-6), Q(1)});
  auto chain = sturm_chain(q);
  auto boxes = isolate_roots(p, Q(-9, 8), Q(9, 2));
  REQUIRE(boxes.size() == 3);
  std::vector<Rational> roots;
  for (auto& b : boxes) {
    refine_root_box(q, chain, b, Q(1, 1000000));
    REQUIRE(b.lo == b.hi);
    roots.push_back(b.lo);
  }
  CHECK(roots[0] == Q(1));
  CHECK(roots[1] == Q(2));
  CHECK(roots[2] == Q(3));
}

TEST_CASE("irrational roots get enclosures that square correctly") {
  auto p = Poly::from_coeffs({Q(-2), Q(0), Q(1)});  // t^2 - 2
  auto chain = sturm_chain(p);
  auto boxes = isolate_roots(p, Q(-2), Q(2));
  REQUIRE(boxes.size() == 2);
  for (auto& b : boxes) {
    refine_root_box(p, chain, b, Rational::pow2(-40));
    CHECK(b.lo != b.hi);  // no rational root to snap to
    CHECK(!(b.hi - b.lo > Rational::pow2(-40)));
  }
  // positive root encloses sqrt(2)
  CHECK(boxes[1].lo * boxes[1].lo < Q(2));
  CHECK(Q(2) < boxes[1].hi * boxes[1].hi);
}

TEST_CASE("random products of distinct linear factors are recovered") {
  std::mt19937_64 rng(4457);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 8);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Rational> roots;
    while (roots.size() < 4) {
      Rational r(num(rng), den(rng));
      bool fresh = true;
      for (const auto& s : roots)
        if (s == r) fresh = false;
      if (fresh) roots.push_back(r);
    }
    Poly p = Poly::from_coeffs({Q(1)});
    for (const auto& r : roots) p = p * Poly::from_coeffs({-r, Q(1)});
    std::sort(roots.begin(), roots.end());

    Poly sf = p;
    auto chain = sturm_chain(sf);
    auto boxes = isolate_roots(p, Q(-100), Q(100));
    REQUIRE(boxes.size() == roots.size());
    for (size_t i = 0; i < boxes.size(); ++i) {
      refine_root_box(sf, chain, boxes[i], Q(1, 1000000000));
      REQUIRE(boxes[i].lo == boxes[i].hi);
      CHECK(boxes[i].lo == roots[i]);
    }
  }
}

TEST_CASE("operator kinds apply exactly") {
  auto D = BoundedOperator::diagonal({Q(1, 2), Q(-1, 3), Q(0), Q(1)});
  CHECK(D.self_adjoint());
  CHECK(D.exact_apply());
  Vector x = Vector::basis(0) + Vector::basis(1) + Vector::basis(3) + Vector::basis(7);
  Vector y = D.apply(x);
  CHECK(y.get(0) == Gaussian(Q(1, 2)));
  CHECK(y.get(1) == Gaussian(Q(-1, 3)));
  CHECK(y.get(3) == Gaussian(Q(1)));
  CHECK(y.get(7) == Gaussian());  // beyond the list the diagonal is zero
  CHECK(D.entry(2, 2) == Gaussian());
  CHECK(D.entry(0, 1) == Gaussian());
  CHECK_THROWS_AS(BoundedOperator::diagonal({Q(3, 2)}), DomainError);

  auto S = BoundedOperator::diagonal_stream(
      [](std::uint64_t i) { return Rational(1, static_cast<long>(i) + 2); });
  CHECK(S.apply(Vector::basis(4)).get(4) == Gaussian(Q(1, 6)));
  auto bad = BoundedOperator::diagonal_stream(
      [](std::uint64_t) { return Rational(2); });
  CHECK_THROWS_AS(bad.apply(Vector::basis(0)), DomainError);
}

TEST_CASE("banded and finite operators match their entries") {
  // tridiagonal with 1/2 off the diagonal on the first two coordinates
  auto ent = [](std::uint64_t i, std::uint64_t j) -> Gaussian {
    if (i < 2 && j < 2 && i != j) return Gaussian(Q(1, 2));
    return Gaussian();
  };
  auto B = BoundedOperator::banded(1, ent, true);
  CHECK(B.spot_check_self_adjoint(6));
  Vector y = B.apply(Vector::basis(0));
  CHECK(y.get(1) == Gaussian(Q(1, 2)));
  CHECK(y.support_size() == 1);

  Matrix m(2, 2);
  m.at(0, 1) = Gaussian(Q(0), Q(-1, 2));
  m.at(1, 0) = Gaussian(Q(0), Q(1, 2));
  auto F = BoundedOperator::finite(m);
  CHECK(F.self_adjoint());  // hermitian, not symmetric
  Vector z = F.apply(Vector::basis(0));
  CHECK(z.get(1) == Gaussian(Q(0), Q(1, 2)));
  // off the box the block acts as zero
  CHECK(F.apply(Vector::basis(5)).is_zero());

  CHECK(!BoundedOperator::shift_down().self_adjoint());
  CHECK(BoundedOperator::shift_down().apply(Vector::basis(2)).get(3) == Gaussian(Q(1)));
  CHECK(BoundedOperator::shift_up().apply(Vector::basis(0)).is_zero());
  CHECK(BoundedOperator::shift_up().apply(Vector::basis(3)).get(2) == Gaussian(Q(1)));
}

TEST_CASE("general kind truncation error bound dominates the true error") {
  // honest general presentation of the diagonal entry 2^-(i+1)
  auto ent = [](std::uint64_t i, std::uint64_t j) -> Gaussian {
    if (i == j) return Gaussian(Rational::pow2(-static_cast<long>(i) - 1));
    return Gaussian();
  };
  // squared column mass at rows >= n: the single entry 4^-(j+1) if j >= n
  auto tail = [](std::uint64_t j, std::uint64_t n) -> Rational {
    return j >= n ? Rational::pow2(-2 * (static_cast<long>(j) + 1)) : Rational(0);
  };
  auto G = BoundedOperator::general(ent, tail, true);
  CHECK(!G.exact_apply());
  CHECK_THROWS_AS(G.apply(Vector::basis(0)), DomainError);

  auto exact_twin = BoundedOperator::diagonal_stream(
      [](std::uint64_t i) { return Rational::pow2(-static_cast<long>(i) - 1); });
  Vector x = Vector::basis(0) + Vector::basis(3) + Vector::basis(6);
  auto [y, err] = G.apply_truncated(x, 4);
  Vector truth = exact_twin.apply(x);
  Rational diff = (truth - y).norm_sq();
  CHECK(diff <= err * err);   // bound is valid
  CHECK(y.get(6) == Gaussian());  // row 6 fell past the cutoff
  auto [y2, err2] = G.apply_truncated(x, 64);
  CHECK(y2 == truth);
  CHECK(!(err2 < Rational(0)));
}

TEST_CASE("degree choice meets the certified modulus") {
  auto hat = PLFunction::from_breakpoints(
      {{Q(-1, 2), Q(0)}, {Q(0), Q(1)}, {Q(1, 2), Q(0)}});
  auto cp = bernstein_for_precision(hat, Q(1, 4), 4000);
  CHECK(!(cp.error > Q(1, 4)));
  // sample |p - f| across [-1, 1]; the certificate must dominate
  for (long n = -16; n <= 16; ++n) {
    Rational t(n, 16);
    Rational gap = (cp.p.eval(t) - hat.eval(t)).abs();
    CHECK(!(cp.error < gap));
  }
  // affine functions reproduce exactly at every degree
  auto lin = PLFunction::from_breakpoints({{Q(-1), Q(-1, 3)}, {Q(1), Q(1, 3)}});
  auto cl = bernstein_approximant(lin, 7);
  for (long n = -8; n <= 8; ++n) {
    Rational t(n, 8);
    CHECK((cl.p.eval(t) - lin.eval(t)).abs() <= cl.error);
  }
  CHECK(bernstein_for_precision(PLFunction::constant(Q(2, 7)), Q(1, 1000000), 10).error ==
        Q(0));
  CHECK_THROWS_AS(bernstein_for_precision(hat, Q(1, 4096), 4000), ResourceError);
}

TEST_CASE("orbit measure of a diagonal operator matches the closed form") {
  std::vector<Rational> eigs{Q(0), Q(1, 2), Q(-1, 3)};
  auto D = BoundedOperator::diagonal(eigs);
  Vector x = Vector::basis(0) + Vector::basis(1) + Vector::basis(2);
  auto meas = krylov_measure(D, x, 16);
  REQUIRE(meas.has_value());
  REQUIRE(meas->atoms().size() == 3);
  CHECK(meas->fully_exact());
  CHECK(meas->total() == Q(3));
  // sorted atom positions with unit weights
  std::vector<Rational> want{Q(-1, 3), Q(0), Q(1, 2)};
  for (size_t i = 0; i < 3; ++i) {
    CHECK(meas->atoms()[i].position.lo() == want[i]);
    CHECK(meas->atoms()[i].weight.lo() == Q(1));
  }

  // a repeated diagonal entry folds into one atom of doubled weight
  auto D2 = BoundedOperator::diagonal({Q(1, 2), Q(1, 2), Q(0)});
  Vector x2 = Vector::basis(0) + Vector::basis(1) + Vector::basis(2);
  auto m2 = krylov_measure(D2, x2, 16);
  REQUIRE(m2.has_value());
  REQUIRE(m2->atoms().size() == 2);
  CHECK(m2->atoms()[0].position.lo() == Q(0));
  CHECK(m2->atoms()[0].weight.lo() == Q(1));
  CHECK(m2->atoms()[1].position.lo() == Q(1, 2));
  CHECK(m2->atoms()[1].weight.lo() == Q(2));
}

TEST_CASE("orbit measure of a two by two block") {
  // offdiagonal 1/2 block: atoms at +-1/2 with weight 1/2 each for e_0
  auto ent = [](std::uint64_t i, std::uint64_t j) -> Gaussian {
    if (i < 2 && j < 2 && i != j) return Gaussian(Q(1, 2));
    return Gaussian();
  };
  auto B = BoundedOperator::banded(1, ent, true);
  auto meas = krylov_measure(B, Vector::basis(0), 8);
  REQUIRE(meas.has_value());
  REQUIRE(meas->atoms().size() == 2);
  CHECK(meas->fully_exact());
  CHECK(meas->atoms()[0].position.lo() == Q(-1, 2));
  CHECK(meas->atoms()[0].weight.lo() == Q(1, 2));
  CHECK(meas->atoms()[1].position.lo() == Q(1, 2));
  CHECK(meas->atoms()[1].weight.lo() == Q(1, 2));

  // the orbit cannot close within a cap of 1
  CHECK(!krylov_measure(B, Vector::basis(0), 1).has_value());
  CHECK_THROWS_AS(krylov_measure(BoundedOperator::shift_down(), Vector::basis(0), 8),
                  DomainError);
}

TEST_CASE("orbit measure with irrational spectrum stays an enclosure") {
  // [[1/2, 1/2], [1/2, 0]]: eigenvalues (1 +- sqrt(5))/4, both irrational
  auto ent = [](std::uint64_t i, std::uint64_t j) -> Gaussian {
    if (i == 0 && j == 0) return Gaussian(Q(1, 2));
    if (i < 2 && j < 2 && i != j) return Gaussian(Q(1, 2));
    return Gaussian();
  };
  auto B = BoundedOperator::banded(1, ent, true);
  auto meas = krylov_measure(B, Vector::basis(0), 8);
  REQUIRE(meas.has_value());
  REQUIRE(meas->atoms().size() == 2);
  CHECK(!meas->fully_exact());
  meas->refine(Rational::pow2(-40));

  // weights bracket truth; their sum straddles the mass 1
  Rational wlo = meas->atoms()[0].weight.lo() + meas->atoms()[1].weight.lo();
  Rational whi = meas->atoms()[0].weight.hi() + meas->atoms()[1].weight.hi();
  CHECK(wlo <= Q(1));
  CHECK(Q(1) <= whi);

  // integrating the identity must enclose the first moment <x, A x> = 1/2
  auto ident = PLFunction::from_breakpoints({{Q(-1), Q(-1)}, {Q(1), Q(1)}});
  auto enc = meas->integrate(ident);
  CHECK(enc.contains(Q(1, 2)));
  CHECK(enc.width() < Q(1, 1000));

  // positions square to the characteristic values: theta^2 = theta/2 + 1/4
  for (const auto& atom : meas->atoms()) {
    auto t = atom.position;
    auto residue = t * t - t * RationalInterval::point(Q(1, 2)) -
                   RationalInterval::point(Q(1, 4));
    CHECK(residue.contains(Q(0)));
  }
}

TEST_CASE("spectral integral routes agree on a diagonal operator") {
  std::vector<Rational> eigs{Q(-1, 2), Q(0), Q(1, 4), Q(3, 4)};
  auto D = BoundedOperator::diagonal(eigs);
  Vector x = Q(1, 2) * Vector::basis(0) + Q(1, 2) * Vector::basis(1) +
             Q(1, 2) * Vector::basis(2) + Q(1, 2) * Vector::basis(3);
  CHECK(x.norm_sq() == Q(1));
  auto f = PLFunction::from_breakpoints(
      {{Q(-3, 4), Q(0)}, {Q(-1, 4), Q(1)}, {Q(1, 2), Q(1, 2)}, {Q(1), Q(0)}});
  Rational truth = diag_integral_oracle(eigs, x, f);

  IntegralOptions exact_opts;
  exact_opts.route = IntegralRoute::OrbitMeasure;
  auto via_measure = spectral_integral(D, x, f, exact_opts);
  CHECK(via_measure.is_point());
  CHECK(via_measure.lo() == truth);

  IntegralOptions approx_opts;
  approx_opts.route = IntegralRoute::Approximant;
  approx_opts.precision = Q(1, 4);
  auto via_poly = spectral_integral(D, x, f, approx_opts);
  CHECK(via_poly.contains(truth));
  CHECK(!(via_poly.width() > Q(1, 4)));

  IntegralOptions auto_opts;
  auto via_auto = spectral_integral(D, x, f, auto_opts);
  CHECK(via_auto.contains(truth));
  CHECK(via_auto.is_point());

  CHECK_THROWS_AS(
      spectral_integral(BoundedOperator::shift_down(), x, f, auto_opts), DomainError);
}

TEST_CASE("plateau witnesses are admissible and adapted") {
  auto C = ClosedRationalSet::parse("[-1/2,-1/4]u[0,1/8]");
  for (unsigned long j = 1; j <= 8; ++j) {
    auto f = plateau_witness(C, j);
    CHECK(f.min_global() == Q(0));
    Rational m = f.min_on(C);
    CHECK(Q(1) < m);
    CHECK(m == Q(1) + Rational::pow2(-static_cast<long>(j)));
    // vanishes one ramp width outside the blocks
    CHECK(f.eval(Q(-1, 2) - Rational::pow2(-static_cast<long>(j))) == Q(0));
  }
  // close components merge until the ramps can separate them
  auto f1 = plateau_witness(C, 1);
  CHECK(f1.eval(Q(-3, 16)) > Q(1));  // the j=1 ramps bridge the gap
  auto f5 = plateau_witness(C, 5);
  CHECK(f5.eval(Q(-3, 16)) == Q(0)); // later witnesses cut it
  CHECK(plateau_witness(ClosedRationalSet(), 3).max_global() == Q(0));
  CHECK_THROWS_AS(plateau_witness(C, 0), DomainError);
}

TEST_CASE("valuation bounds close on the diagonal closed form") {
  std::vector<Rational> eigs{Q(-1, 2), Q(0), Q(1, 2), Q(1)};
  auto D = BoundedOperator::diagonal(eigs);
  Vector x = Q(1, 2) * Vector::basis(0) + Q(1, 2) * Vector::basis(1) +
             Q(1, 2) * Vector::basis(2) + Q(1, 2) * Vector::basis(3);
  auto C = ClosedRationalSet::parse("[-3/4,-1/4]u[3/8,5/8]");
  Rational truth = diagonal_oracle(eigs, x, C);
  CHECK(truth == Q(1, 2));  // mass at -1/2 and 1/2

  auto u = valuation_upper(D, x, C);
  Rational b4 = u.refine(4);
  Rational b14 = u.refine(14);
  CHECK(!(b14 > b4));          // non-increasing
  CHECK(!(b14 < truth));       // always an upper bound
  CHECK(b14 - truth < Rational::pow2(-10));

  // strictly above the value: confirmed; at or below: never
  CHECK(valuation_less(D, x, C, truth + Q(1, 32)).probe(16) == Verdict::Confirmed);
  CHECK(valuation_less(D, x, C, truth).probe(16) == Verdict::Unknown);
  CHECK(valuation_less(D, x, C, truth - Q(1, 8)).probe(16) == Verdict::Unknown);
}

TEST_CASE("valuation on the empty set and the full window") {
  auto D = BoundedOperator::diagonal({Q(1, 3), Q(-2, 3)});
  Vector x = Q(3, 5) * Vector::basis(0) + Q(4, 5) * Vector::basis(1);
  CHECK(x.norm_sq() == Q(1));

  auto empty = ClosedRationalSet();
  CHECK(diagonal_oracle({Q(1, 3), Q(-2, 3)}, x, empty) == Q(0));
  auto ue = valuation_upper(D, x, empty);
  CHECK(ue.refine(6) < Q(1, 16));
  CHECK(valuation_less(D, x, empty, Q(1, 100)).probe(12) == Verdict::Confirmed);

  auto full = ClosedRationalSet::full();
  CHECK(diagonal_oracle({Q(1, 3), Q(-2, 3)}, x, full) == Q(1));
  auto uf = valuation_upper(D, x, full);
  CHECK(!(uf.refine(10) < Q(1)));                 // never dips under the mass
  CHECK(uf.refine(10) - Q(1) < Q(1, 64));
  CHECK(valuation_less(D, x, full, Q(1)).probe(12) == Verdict::Unknown);
  CHECK(valuation_less(D, x, full, Q(9, 8)).probe(12) == Verdict::Confirmed);
}

TEST_CASE("valuation respects boundary membership of eigenvalues") {
  // eigenvalue sitting exactly on the set's edge belongs to the closed set
  std::vector<Rational> eigs{Q(1, 2), Q(-1, 2)};
  auto D = BoundedOperator::diagonal(eigs);
  Vector x = Q(3, 5) * Vector::basis(0) + Q(4, 5) * Vector::basis(1);
  auto C = ClosedRationalSet::parse("[0,1/2]");
  Rational truth = diagonal_oracle(eigs, x, C);
  CHECK(truth == Q(9, 25));
  auto u = valuation_upper(D, x, C);
  CHECK(!(u.refine(14) < truth));
  CHECK(u.refine(14) - truth < Rational::pow2(-10));
}
