#include <doctest.h>

#include "bcsurf/surface.hpp"

using namespace bcs;

namespace {
Scalar S(long v) { return Scalar(v); }
}

TEST_CASE("pullback of y along phi") {
  Mode g = Mode::generic();
  auto ab = g.abbrev();
  auto phi = MapSpec::make(MapKind::Phi, g);
  auto p = pullback_form(BiForm::y(), phi);
  CHECK_FALSE(p.cancelled);
  BiForm want = (BiForm::x() * BiForm::z()).scaled(ab.delta) + (BiForm::y() * BiForm::w()).scaled(ab.gamma);
  CHECK(p.form == want);
  CHECK_THROWS_AS(pullback_form(BiForm(1, 0), phi), ZeroForm);
}

TEST_CASE("sigma iterates give x z^n at tau one") {
  Mode t = Mode::tau_one();
  auto sig = MapSpec::make(MapKind::Sigma, t);
  BiForm f = BiForm::x();
  for (int n = 1; n <= 4; ++n) {
    f = pullback_form(f, sig).form;
    CHECK(f == BiForm::monomial(1, n, 1, n));
  }
  auto c = curve_forms(4, t);
  CHECK(c.X == BiForm::monomial(1, 4, 1, 4));
  CHECK(c.Z == BiForm::z());
  CHECK(c.W == BiForm::w());
}

TEST_CASE("phi changes bidegree (a,b) to (a,a+b)") {
  Mode g = Mode::generic();
  auto p = pullback_form(BiForm::x() * BiForm::z() + BiForm::y() * BiForm::w(), MapSpec::make(MapKind::Phi, g));
  CHECK(p.form.a() == 1);
  CHECK(p.form.b() == 2);
}

TEST_CASE("curve forms") {
  Mode g = Mode::generic();
  auto c0 = curve_forms(0, g);
  CHECK(c0.X == BiForm::x());
  CHECK(c0.W == BiForm::w());
  auto ab = g.abbrev();
  auto c1 = curve_forms(1, g);
  CHECK(c1.Y == (BiForm::x() * BiForm::z()).scaled(ab.delta) + (BiForm::y() * BiForm::w()).scaled(ab.gamma));
  auto c2 = curve_forms(2, g);
  CHECK(c2.Y.a() == 1);
  CHECK(c2.Y.b() == 2);
  // Y2 = delta X1 W1 + gamma Y1 Z1 ... as substitution of Y1 into the phi images
  BiForm X1 = c1.X, Y1 = c1.Y, Z1 = c1.Z, W1 = c1.W;
  BiForm want = (X1 * Z1).scaled(ab.delta) + (Y1 * W1).scaled(ab.gamma);
  CHECK(proportional(c2.Y, want));
  bool z2 = false, w2 = false;
  for (int i = 0; i <= 1; ++i) {
    z2 |= !c2.Y.coef(i, 2).is_zero();
    w2 |= !c2.Y.coef(i, 0).is_zero();
  }
  CHECK(z2);
  CHECK(w2);
}

TEST_CASE("phi inverse undoes phi on forms") {
  Mode g = Mode::generic();
  auto phi = MapSpec::make(MapKind::Phi, g);
  auto inv = MapSpec::make(MapKind::PhiInverse, g);
  // x o phi o phi^{-1} is x times a common factor
  BiForm f = substitute(substitute(BiForm::x(), phi.images), inv.images);
  BiForm h = substitute(substitute(BiForm::y(), phi.images), inv.images);
  CHECK(proportional(f * BiForm::y(), h * BiForm::x()));
}

TEST_CASE("stability certificate") {
  for (const auto& s : stability_certificate(4, Mode::generic())) CHECK(s.stable());
  for (const auto& s : stability_certificate(4, Mode::specialized(2, 3))) CHECK(s.stable());
  // the non-stable example tau(-1, 1)
  auto bad = stability_certificate(3, Mode::specialized(-1, 1));
  bool fired = false;
  for (const auto& s : bad) fired |= !s.stable();
  CHECK(fired);
}

TEST_CASE("round and square coordinates") {
  SurfacePoint p{CoordSystem::Square, {S(3), S(-2)}, {Scalar::rho(), S(1)}};
  CHECK(p.to_round().to_square().same_point(p));
  auto r = p.to_round();
  CHECK(r.first[0] == S(5));
  CHECK(r.first[1] == S(1));
  auto n = p.normalized();
  CHECK(n.first[1].is_one());
  CHECK(n.same_point(p));
}

TEST_CASE("orbit points") {
  Mode g = Mode::generic();
  auto f0 = orbit_point(0, OrbitWhich::F, g);
  CHECK(f0.same_point(SurfacePoint{CoordSystem::Round, {S(1), S(-1)}, {S(1), S(1)}}));
  // F itself is [0:1][1:0]
  CHECK(f0.same_point(SurfacePoint{CoordSystem::Square, {S(0), S(1)}, {S(1), S(0)}}));
  auto f1 = orbit_point(1, OrbitWhich::F, g);
  Scalar r = Scalar::rho(), t = Scalar::theta();
  CHECK(f1.same_point(SurfacePoint{CoordSystem::Round, {r + t, S(-1) - r * t}, {t, S(1)}}));
  // the recurrence agrees with the inverse map
  for (int n = 0; n < 4; ++n) {
    auto a = apply_phi_inverse(orbit_point(n, OrbitWhich::F, g), g);
    CHECK(a.same_point(orbit_point(n + 1, OrbitWhich::F, g)));
    auto b = apply_phi_inverse(orbit_point(n, OrbitWhich::Q, g), g);
    CHECK(b.same_point(orbit_point(n + 1, OrbitWhich::Q, g)));
  }
  auto q0 = orbit_point(0, OrbitWhich::Q, g);
  CHECK(q0.same_point(SurfacePoint{CoordSystem::Square, {S(1), S(0)}, {S(0), S(1)}}));
}

TEST_CASE("orbit polynomials modulo theta") {
  auto o = orbit_polys(6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(o.p[n].substitute(1, 0) == rho_poly().pow(n));
    CHECK(o.q[n].substitute(1, 0) == MPoly(kParamVars, -1));
  }
}

TEST_CASE("critical density determinants") {
  CHECK(critdens_determinant(0, 0, {0}) == MPoly(kParamVars, 1));
  MPoly d = critdens_determinant(1, 0, {0, 1});
  MPoly want = (MPoly(kParamVars, 1) - rho_poly()) * (MPoly(kParamVars, 1) - theta_poly());
  CHECK((d == want || d == -want));
  MPoly d4 = critdens_determinant(1, 1, {0, 1, 2, 3});
  CHECK_FALSE(d4.is_zero());
  for (auto idx : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}}) {
    MPoly e = critdens_determinant(1, 0, idx);
    auto lo = lowest_term_theta_rho(e);
    auto pr = predicted_lowest_term(1, 0, idx);
    CHECK(lo.theta_exp == pr.theta_exp);
    CHECK(lo.rho_exp == pr.rho_exp);
    CHECK(lo.coeff == pr.coeff);
  }
  auto lo = lowest_term_theta_rho(d4);
  auto pr = predicted_lowest_term(1, 1, {0, 1, 2, 3});
  CHECK(lo.theta_exp == pr.theta_exp);
  CHECK(lo.rho_exp == pr.rho_exp);
  CHECK_THROWS_AS(critdens_determinant(1, 0, {1, 0}), BadIndexList);
  CHECK_THROWS_AS(critdens_determinant(1, 0, {0, 1, 2}), BadIndexList);
}

TEST_CASE("base locus") {
  Mode g = Mode::generic();
  for (int m = 1; m <= 3; ++m) {
    auto r = base_locus_check(m, g);
    CHECK(r.ok());
    CHECK(r.local_b_order == -1);
  }
  auto t = base_locus_check(3, Mode::tau_one());
  CHECK_FALSE(t.ok());
  CHECK(t.local_b_order == 3);
}

TEST_CASE("vanishing order of a product") {
  Mode g = Mode::generic();
  auto c = curve_forms(2, g);
  auto f0 = orbit_point(0, OrbitWhich::F, g);
  CHECK(vanishing_order(c.X, f0, 4) == 1);
  CHECK(vanishing_order(c.X * c.Y, f0, 4) == 2);
  CHECK(vanishing_order(BiForm::y(), f0, 4) == 0);
}
