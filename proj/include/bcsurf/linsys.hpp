#ifndef BCSURF_LINSYS_HPP
#define BCSURF_LINSYS_HPP

#include <set>
#include <utility>
#include <vector>

#include "bcsurf/surface.hpp"

namespace bcs {

class SkewContext;

long binom(long n, long k);

struct FatPoint {
  SurfacePoint pt;
  int mult = 1;
  OrbitWhich which = OrbitWhich::F;
  int index = 0;  // orbit index j of F_j or Q_j
};

struct FatPointScheme {
  std::vector<FatPoint> points;
  long length() const;
};

// B_n^m: F_j and Q_j with multiplicity min(n, n+m-1-j), 0 <= j <= n+m-2
FatPointScheme fat_point_scheme(int n, int m, const Mode& mode);

struct NoChart : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// conditions "all derivatives of order < mult vanish" on the (A+1)(B+1)
// coefficients of a bidegree (A,B) form, one block per point
std::vector<std::vector<std::uint64_t>> condition_rows_modp(const FatPointScheme& s, int A, int B,
                                                            const fp::Point& pt);
ScalarMatrix condition_matrix(const FatPointScheme& s, int A, int B);

// lower: rank at the modular certificate point (never exceeds the true rank);
// upper: row count, or the exact rank when the matrix is small enough
struct RankBound {
  std::size_t lower = 0, upper = 0;
  bool exact() const { return lower == upper; }
};
RankBound condition_rank(const FatPointScheme& s, int A, int B, const Mode& mode);

struct AmbientCohomology : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CohomologyCount {
  long h0 = 0, h1 = 0;
  long ambient = 0, length = 0;
  RankBound rank;
  bool certified() const { return rank.exact(); }
};
// twist degree k = C(n+m+1,2) - C(m+1,2)
int twist_degree(int n, int m);
CohomologyCount h0_h1(int n, int m, int a, int b, const Mode& mode);

struct SectionsReport {
  int n = 0, m = 0;
  std::size_t ring_dim = 0;
  long h0 = 0;
  std::size_t conditions = 0;
  bool rows_vanish = false;          // every basis form kills every condition row (mod P)
  bool vanishing_certified = false;  // exact, factor by factor
  bool ok() const { return rows_vanish && vanishing_certified && static_cast<long>(ring_dim) == h0; }
};
SectionsReport sections_equal_ring(int n, int m, SkewContext& ctx);

// ---- tau-one monomial description

struct MonomialRegion {
  int n = 0, m = 0;
  std::vector<std::pair<int, int>> rows;  // [a(i), b(i)] for i = 0..n
  long size() const;
  std::set<std::pair<int, int>> monomials() const;
};
MonomialRegion a_monomial_basis(int n, int m);
// exponents (i,j) of u^i v^j reached by products E^{sigma^m} ... E^{sigma^{m+n-1}}
std::set<std::pair<int, int>> a_product_monomials(int n, int m);

struct AH0H1 {
  long h0 = 0, h1 = 0;
  bool h0_equals_ring = false;  // the chart intersection is the monomial span itself
};
AH0H1 a_h0_h1(int n, int m);

}  // namespace bcs

#endif
