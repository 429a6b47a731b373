#include <doctest.h>

#include "bcsurf/linsys.hpp"
#include "bcsurf/skew.hpp"

using namespace bcs;

TEST_CASE("fat point schemes") {
  Mode g = Mode::generic();
  auto s11 = fat_point_scheme(1, 1, g);
  REQUIRE(s11.points.size() == 2);
  CHECK(s11.points[0].mult == 1);
  CHECK(s11.length() == 2);
  auto s20 = fat_point_scheme(2, 0, g);
  CHECK(s20.points.size() == 2);
  CHECK(s20.length() == 2);
  auto s21 = fat_point_scheme(2, 1, g);
  REQUIRE(s21.points.size() == 4);
  CHECK(s21.points[0].mult == 2);
  CHECK(s21.points[2].mult == 1);
  CHECK(s21.length() == 8);
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m)
      CHECK(fat_point_scheme(n, m, g).length() == 2 * (m * binom(n + 1, 2) + binom(n + 1, 3)));
  CHECK_THROWS(fat_point_scheme(2, 1, Mode::tau_one()));
}

TEST_CASE("condition ranks") {
  Mode g = Mode::generic();
  FatPointScheme one;
  one.points.push_back(FatPoint{orbit_point(0, OrbitWhich::F, g).to_square(), 1, OrbitWhich::F, 0});
  auto r1 = condition_rank(one, 1, 1, g);
  CHECK(r1.exact());
  CHECK(r1.lower == 1);
  auto r2 = condition_rank(fat_point_scheme(1, 1, g), 1, 1, g);
  CHECK(r2.exact());
  CHECK(r2.lower == 2);
  auto r3 = condition_rank(fat_point_scheme(2, 1, g), 2, 5, g);
  CHECK(r3.exact());
  CHECK(r3.lower == 8);
}

TEST_CASE("h0 and h1 of ring sheaves") {
  Mode g = Mode::generic();
  auto a = h0_h1(1, 0, 0, 0, g);
  CHECK(a.h0 == 4);
  CHECK(a.h1 == 0);
  auto b = h0_h1(2, 0, 0, 0, g);
  CHECK(b.h0 == 10);
  CHECK(b.h1 == 0);
  auto c = h0_h1(2, 1, 0, 0, g);
  CHECK(c.h0 == 10);
  CHECK(c.h1 == 0);
  CHECK(c.certified());
  CHECK_THROWS_AS(h0_h1(2, 0, -3, 0, g), AmbientCohomology);
  CHECK_THROWS(h0_h1(2, 0, 0, 0, Mode::tau_one()));
}

TEST_CASE("ring pieces equal section spaces") {
  SkewContext ctx(Mode::generic());
  for (auto [n, m] : {std::pair{1, 0}, {2, 0}, {3, 1}}) {
    auto r = sections_equal_ring(n, m, ctx);
    CHECK(r.ok());
    CHECK(r.ring_dim == static_cast<std::size_t>(binom(n + 3, 3)));
  }
  auto r2 = sections_equal_ring(2, 0, ctx);
  CHECK(r2.conditions == 2);
}

TEST_CASE("tau-one monomial regions") {
  auto r10 = a_monomial_basis(1, 0);
  CHECK(r10.monomials() == std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto r20 = a_monomial_basis(2, 0);
  CHECK(r20.rows == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(r20.size() == 10);
  auto r21 = a_monomial_basis(2, 1);
  CHECK(r21.rows == std::vector<std::pair<int, int>>{{0, 2}, {1, 4}, {3, 5}});
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 3; ++m) {
      CHECK(a_monomial_basis(n, m).monomials() == a_product_monomials(n, m));
      CHECK(a_monomial_basis(n, m).size() == binom(n + 3, 3));
    }
}

TEST_CASE("tau-one sheaf cohomology") {
  for (auto [n, m] : {std::pair{1, 0}, {2, 0}, {2, 3}, {4, 2}}) {
    auto c = a_h0_h1(n, m);
    CHECK(c.h0 == binom(n + 3, 3));
    CHECK(c.h1 == 0);
    CHECK(c.h0_equals_ring);
  }
}
