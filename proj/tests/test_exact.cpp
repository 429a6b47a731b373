#include <doctest.h>

#include <random>

#include "bcsurf/exact.hpp"
#include "bcsurf/modp.hpp"

using namespace bcs;

namespace {
MPoly R() { return rho_poly(); }
MPoly T() { return theta_poly(); }
MPoly one() { return MPoly(kParamVars, 1); }

MPoly random_poly(std::mt19937_64& g) {
  MPoly p(kParamVars);
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  for (int k = 0; k < 4; ++k) p += MPoly::monomial(kParamVars, {e(g), e(g)}, c(g));
  return p;
}
}  // namespace

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(R() * R() - one(), R() - one()) == (R() - one()).normalized());
  CHECK(poly_gcd(MPoly(kParamVars), T() + one()) == (T() + one()).normalized());
  MPoly c = R() * T() + one();
  MPoly g = poly_gcd(c * (R() - T()), c * (T() + one()));
  CHECK(g == c.normalized());
}

TEST_CASE("gcd divides both arguments") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
    MPoly p = a * c, q = b * c;
    MPoly g = poly_gcd(p, q);
    if (p.is_zero() && q.is_zero()) continue;
    CHECK(MPoly::divide_exact(p, g).has_value());
    CHECK(MPoly::divide_exact(q, g).has_value());
    if (!c.is_zero()) CHECK(MPoly::divide_exact(g, c.normalized()).has_value());
  }
}

TEST_CASE("ring axioms and normalization fixpoint") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    MPoly a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.normalized().normalized() == a.normalized());
  }
}

TEST_CASE("rank and kernel") {
  ScalarMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = Scalar(1);
  auto rk = rank_and_kernel(id);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.empty());

  ScalarMatrix m(2, 2);
  m(0, 0) = Scalar::rho();
  m(0, 1) = Scalar::theta();
  m(1, 0) = Scalar::rho() * Scalar::theta();
  m(1, 1) = Scalar::theta() * Scalar::theta();
  rk = rank_and_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.size() == 1);
  for (const auto& e : mat_vec(m, rk.kernel[0])) CHECK(e.is_zero());
  // proportional to (theta, -rho)
  CHECK(rk.kernel[0][0] * Scalar::rho() == -rk.kernel[0][1] * Scalar::theta());

  ScalarMatrix z(2, 4);
  rk = rank_and_kernel(z);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.size() == 4);
}

TEST_CASE("specialize") {
  auto ab = abbreviations(Scalar::rho(), Scalar::theta());
  CHECK(specialize(ab.gamma, 2, 5) == 3);
  CHECK(specialize(ab.zeta / ab.epsilon, 0, 3) == mpq_class(1, 2));
  CHECK_THROWS_AS(specialize(ab.zeta / ab.epsilon, 0, -1), DenominatorVanishes);
}

TEST_CASE("exact rank agrees with specialized rank") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    ScalarMatrix m(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = Scalar(c(gen)) * Scalar::rho() + Scalar(c(gen)) * Scalar::theta() + Scalar(c(gen));
    // force a dependency now and then
    if (trial % 2)
      for (std::size_t j = 0; j < 5; ++j) m(3, j) = m(0, j) * Scalar::rho() + m(1, j);
    auto rk = rank_and_kernel(m);
    for (const auto& v : rk.kernel)
      for (const auto& e : mat_vec(m, v)) CHECK(e.is_zero());
    CHECK(rk.rank + rk.kernel.size() == 5);
    std::vector<std::vector<std::uint64_t>> rows(4, std::vector<std::uint64_t>(5));
    fp::Point pt(1234567, 7654321);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) rows[i][j] = pt.eval(m(i, j));
    CHECK(rank_mod_p(rows, 5) == rk.rank);
  }
}

TEST_CASE("scalar fractions normalize structurally") {
  Scalar a = Scalar::rho() / (Scalar::rho() + Scalar(1));
  Scalar b = (Scalar::rho() * Scalar::theta()) / (Scalar::theta() * Scalar::rho() + Scalar::theta());
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK((a * a.inverse()).is_one());
}

TEST_CASE("serial and parallel echelon agree") {
  std::mt19937_64 gen(5);
  std::vector<std::vector<std::uint64_t>> rows;
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint64_t> r(120);
    for (auto& x : r) x = gen() % 5 == 0 ? gen() % fp::P : 0;
    rows.push_back(r);
  }
  for (int i = 0; i < 100; ++i) {
    auto r = rows[i];
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = fp::add(r[j], fp::mul(3, rows[i + 1][j]));
    rows.push_back(r);
  }
  IncrementalEchelon a(120), b(120);
  CHECK(a.add_rows_serial(rows) == b.add_rows_parallel(rows));
  CHECK(a.rank() == b.rank());
}
