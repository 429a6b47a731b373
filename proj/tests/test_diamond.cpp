#include <doctest.h>

#include <algorithm>

#include "bcsurf/diamond.hpp"
#include "bcsurf/linsys.hpp"
#include "bcsurf/skew.hpp"

using namespace bcs;

namespace {
// x1..x4 are symbols 0..3
Word W(std::initializer_list<int> xs) {
  Word w;
  for (int x : xs) w.push_back(x - 1);
  return w;
}
}  // namespace

TEST_CASE("A-system overlaps resolve") {
  auto sys = a_system();
  auto rep = resolve_overlaps(sys);
  CHECK_FALSE(rep.checked.empty());
}

TEST_CASE("toy systems") {
  RewriteRule xy0{{0, 1}, {}};
  RewriteSystem one({"x", "y"}, {0, 1}, {xy0});
  CHECK(resolve_overlaps(one).checked.empty());
  RewriteRule yx{{1, 0}, {{{0, 1}, Scalar(1)}}};
  RewriteSystem two({"x", "y"}, {0, 1}, {yx, xy0});
  auto rep = resolve_overlaps(two);
  // yxy and xyx
  REQUIRE(rep.checked.size() == 2);
  CHECK(std::find(rep.checked.begin(), rep.checked.end(), Word{1, 0, 1}) != rep.checked.end());
  // yx -> xy and xy -> yx is not decreasing
  RewriteRule bad{{0, 1}, {{{1, 0}, Scalar(1)}}};
  CHECK_THROWS_AS(RewriteSystem({"x", "y"}, {0, 1}, {bad}), InvalidSystem);
  // ba -> ab, cb -> 0: cba goes to 0 one way and to the irreducible cab the other
  RewriteRule ba{{1, 0}, {{{0, 1}, Scalar(1)}}}, cb{{2, 1}, {}};
  RewriteSystem three({"a", "b", "c"}, {0, 1, 2}, {ba, cb});
  try {
    resolve_overlaps(three);
    FAIL("overlap resolved");
  } catch (const UnresolvableOverlap& e) {
    CHECK(e.word == Word{2, 1, 0});
    CHECK(e.difference.size() == 1);
  }
}

TEST_CASE("irreducible counts") {
  auto sys = a_system();
  CHECK(irreducible_count(sys, 0) == 1);
  CHECK(irreducible_count(sys, 2) == 10);
  CHECK(irreducible_count(sys, 5) == 56);
  for (int n = 0; n <= 10; ++n) CHECK(irreducible_count(sys, n) == binom(n + 3, 3));
  // irreducible words are x2^i x1^j x3^k x4^l
  for (const auto& w : irreducible_words(sys, 4)) CHECK(std::is_sorted(w.begin(), w.end(), [](int a, int b) {
    const int r[4] = {1, 0, 2, 3};
    return r[a] < r[b];
  }));
}

TEST_CASE("normal forms") {
  auto sys = a_system();
  auto f = sys.normal_form(W({3, 1}));
  CHECK(f == LinComb{{W({1, 3}), Scalar(1)}});
  auto g = sys.normal_form(W({4, 3, 1}));
  CHECK(g == LinComb{{W({2, 3, 3}), Scalar(1)}});
  CHECK(sys.normal_form(W({4, 3, 1}), Strategy::Rightmost) == g);
  CHECK(sys.normal_form(W({2, 1, 3, 4})) == LinComb{{W({2, 1, 3, 4}), Scalar(1)}});
  auto t = normal_form_table(sys, 4);
  for (const auto& [w, nf] : t.reduction) {
    CHECK(sys.normal_form(nf) == nf);
    CHECK(sys.normal_form(w, Strategy::Rightmost) == nf);
    for (const auto& [v, c] : nf) CHECK(sys.irreducible(v));
  }
}

TEST_CASE("irreducible counts match tau-one graded pieces") {
  auto sys = a_system();
  SkewContext t(Mode::tau_one());
  for (int n = 0; n <= 6; ++n) CHECK(irreducible_count(sys, n) == t.piece(n).dim.lower);
}
