#include <doctest.h>

#include "bcsurf/fibercoh.hpp"
#include "bcsurf/linsys.hpp"

using namespace bcs;

TEST_CASE("truncated series arithmetic") {
  auto v = TruncElement::monomial(3, -2, 2, 0, 1);
  auto one = TruncElement::monomial(3, -2, 2, 0, 0);
  auto x = one;
  x += v;
  auto inv = x.unit_inverse();
  auto prod = x * inv;
  CHECK(prod == one);
  // v^3 = 0
  CHECK((v * v * v).is_zero());
  CHECK_THROWS_AS(TruncElement::monomial(3, -2, 2, 3, 0), WindowOverflow);
  CHECK_THROWS_AS(v.shifted(5, 0), WindowOverflow);
}

TEST_CASE("curve restricted to the fat fiber") {
  Mode g = Mode::generic();
  auto r0 = restrict_curve_to_fiber(0, 3, Chart::Minus, g);
  CHECK(r0.terms().size() == 1);
  CHECK(r0.coef(-1, 0).is_one());
  // alpha_1 = (delta / gamma) v
  auto al = fiber_alpha(1, 3, g);
  Abbrev ab = g.abbrev();
  CHECK(al.terms().size() == 1);
  CHECK(al.coef(0, 1) == ab.delta / ab.gamma);
  auto a2 = fiber_alpha(2, 3, g);
  CHECK(a2.coef(0, 0).is_zero());
  CHECK_FALSE(a2.is_zero());
}

TEST_CASE("fat fiber cech examples") {
  auto z = cech_h1_fatfiber(-1, 0, 0, 1, 1);
  CHECK(z.dim == 0);
  CHECK(z.matches_closed_form());
  auto r = cech_h1_fatfiber(-3, 0, 0, 2, 2);
  CHECK(r.dim == 3);
  CHECK(r.profile.multiplicities == std::vector<int>{2, 1});
  CHECK(r.matches_closed_form());
  CHECK(r.triangular);
  auto s = cech_h1_fatfiber(-4, 0, 1, 3, 3);
  CHECK(s.dim == 3);
  CHECK(s.profile.multiplicities == std::vector<int>{2, 1});
  CHECK(s.matches_closed_form());
  // b does not move anything
  auto t = cech_h1_fatfiber(-3, 5, 0, 2, 2);
  CHECK(t.basis == r.basis);
}

TEST_CASE("fat fiber window and preconditions") {
  CHECK_THROWS_AS(cech_h1_fatfiber(-3, 0, 0, 2, 2, CechWindow{1, 6}), WindowTooSmall);
  CHECK_THROWS_AS(cech_h1_fatfiber(-4, 0, 0, 1, 3), std::invalid_argument);
  // a wider window reports the same thing
  auto a = cech_h1_fatfiber(-4, 0, 0, 3, 3);
  auto b = cech_h1_fatfiber(-4, 0, 0, 3, 3, CechWindow{-30, 30});
  CHECK(a.basis == b.basis);
  CHECK(a.profile == b.profile);
}

TEST_CASE("t action and ell stabilization") {
  auto r = mu_t_and_stabilization(-3, 0, 0, 2, 2);
  CHECK(r.mu_t_bijective);
  CHECK(r.restriction_bijective);
  CHECK(r.dim_n == 3);
  auto z = mu_t_and_stabilization(-1, 0, 0, 1, 1);
  CHECK(z.dim_n == 0);
  auto q = mu_t_and_stabilization(-4, 0, 0, 3, 3);
  CHECK(q.dim_n1 == 6);
}

TEST_CASE("point module filtration") {
  auto r = filtration_pointmodules(-3, 0, 0, 2, 2, 4);
  CHECK(r.point_modules == 3);
  for (const auto& h : r.hilbert) CHECK(h == std::vector<long>{1, 1, 1});
  CHECK(filtration_pointmodules(-2, 0, 0, 1, 1, 3).point_modules == 1);
  CHECK(filtration_pointmodules(-1, 0, 0, 1, 1, 2).point_modules == 0);
}

TEST_CASE("R1p lengths") {
  for (int m = 0; m <= 2; ++m) CHECK(r1p_length(2, m, -1, 0, Variant::R).total == 0);
  auto r = r1p_length(1, 1, -2, 0, Variant::R);
  CHECK(r.total == 2);
  CHECK(r.ok());
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].k == 0);
  CHECK(r.points[0].profile.multiplicities == std::vector<int>{1});
  auto a = r1p_length(2, 0, -3, 0, Variant::A);
  CHECK(a.total == 2);
  CHECK(a.ok());
  for (int av = -3; av <= -1; ++av)
    for (int m = 0; m <= 2; ++m)
      for (int n = -av - 1; n <= -av + 1; ++n) {
        auto x = r1p_length(n, m, av, 0, Variant::R), y = r1p_length(n, m, av, 0, Variant::A);
        CHECK(x.ok());
        CHECK(y.ok());
        CHECK(x.total == y.total);
      }
  CHECK(r1p_profiles_match_cech(r1p_length(3, 1, -3, 0, Variant::R), 0));
}

TEST_CASE("product ideal exponents") {
  // (u, w^m)(u, w^{m+1}): u^0 needs w^{2m+1}
  CHECK(product_ideal_exponent(2, 1, 0) == 3);
  CHECK(product_ideal_exponent(2, 1, 1) == 1);
  CHECK(product_ideal_exponent(2, 1, 2) == 0);
  CHECK(product_ideal_exponent(3, 0, 0) == 3);
}

TEST_CASE("pushforward splitting") {
  auto p = pushforward_split_A(2, 0, -1, 0);
  CHECK(p.degrees_before == std::vector<long>{-1, -1});
  CHECK(p.degrees == std::vector<long>{2, 2});
  CHECK(p.h1 == 0);
  CHECK(p.matches());
  auto q = pushforward_split_A(5, 1, -2, 0);
  CHECK(q.degrees.size() == 4);
  CHECK(q.matches());
  auto d = pushforward_split_A(3, 0, 0, 0);
  CHECK(d.matches());
  CHECK(d.degrees_before.size() == 4);
  CHECK(d.degrees_before[0] == d.degrees_before[3]);
  CHECK_THROWS_AS(pushforward_split_A(1, 0, -2, 0), RangeUnsupported);
  CHECK_THROWS_AS(pushforward_split_A(1, 0, 1, 0), RangeUnsupported);
}

TEST_CASE("tau-one sheaf h1 and Leray balance") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 2; ++m) CHECK(a_sheaf_h1(n, m, 0, 0) == a_h0_h1(n, m).h1);
  for (int a : {-2, -1, 0, 1})
    for (int b : {-1, 0, 1})
      for (int m = 0; m <= 1; ++m) {
        const int n = a <= -1 ? -a : a + 1;
        for (int k = n; k <= n + 2; ++k) CHECK(leray_balance(k, m, a, b, false).balanced_A());
      }
  auto r = leray_balance(3, 1, -2, 0, true);
  CHECK(r.has_R);
  CHECK(r.balanced_A());
  CHECK(r.chain_ok());
}
