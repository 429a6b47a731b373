#include "bcsurf/linsys.hpp"

#include <algorithm>
#include <climits>

#include "bcsurf/skew.hpp"

namespace bcs {

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

long FatPointScheme::length() const {
  long s = 0;
  for (const auto& p : points) s += binom(p.mult + 1, 2);
  return s;
}

FatPointScheme fat_point_scheme(int n, int m, const Mode& mode) {
  if (n < 1 || m < 0) throw std::invalid_argument("fat_point_scheme: need n >= 1, m >= 0");
  if (mode.kind == ModeKind::TauOne)
    throw std::invalid_argument("fat_point_scheme: orbit collapses at tau = 1");
  FatPointScheme s;
  for (int j = 0; j <= n + m - 2; ++j) {
    int mult = std::min(n, n + m - 1 - j);
    for (OrbitWhich w : {OrbitWhich::F, OrbitWhich::Q})
      s.points.push_back(FatPoint{orbit_point(j, w, mode).to_square(), mult, w, j});
  }
  return s;
}

namespace {

std::vector<std::uint64_t> pw(std::uint64_t x, int n) {
  std::vector<std::uint64_t> p(n + 1);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) p[k] = fp::mul(p[k - 1], x);
  return p;
}

void point_rows(const FatPoint& fpnt, int A, int B, const fp::Point& pt, std::vector<std::vector<std::uint64_t>>& out) {
  const auto& s = fpnt.pt;
  std::uint64_t x0 = pt.eval(s.first[0]), y0 = pt.eval(s.first[1]);
  std::uint64_t z0 = pt.eval(s.second[0]), w0 = pt.eval(s.second[1]);
  if ((!x0 && !y0) || (!z0 && !w0)) throw NoChart("condition rows: point degenerates at the certificate prime");
  const bool px = y0 != 0, pz = w0 != 0;
  auto X = pw(x0, A), Y = pw(y0, A), Z = pw(z0, B), W = pw(w0, B);
  for (int tot = 0; tot < fpnt.mult; ++tot)
    for (int k = 0; k <= tot; ++k) {
      int l = tot - k;
      std::vector<std::uint64_t> fa(A + 1, 0), fb(B + 1, 0);
      for (int i = 0; i <= A; ++i) {
        if (px) {
          if (i >= k) fa[i] = fp::mul(fp::from_mpz(binom(i, k)), fp::mul(X[i - k], Y[A - i]));
        } else if (A - i >= k) {
          fa[i] = fp::mul(fp::from_mpz(binom(A - i, k)), fp::mul(X[i], Y[A - i - k]));
        }
      }
      for (int j = 0; j <= B; ++j) {
        if (pz) {
          if (j >= l) fb[j] = fp::mul(fp::from_mpz(binom(j, l)), fp::mul(Z[j - l], W[B - j]));
        } else if (B - j >= l) {
          fb[j] = fp::mul(fp::from_mpz(binom(B - j, l)), fp::mul(Z[j], W[B - j - l]));
        }
      }
      std::vector<std::uint64_t> row(static_cast<std::size_t>((A + 1) * (B + 1)), 0);
      for (int i = 0; i <= A; ++i)
        if (fa[i])
          for (int j = 0; j <= B; ++j) row[static_cast<std::size_t>(i * (B + 1) + j)] = fp::mul(fa[i], fb[j]);
      out.push_back(std::move(row));
    }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> condition_rows_modp(const FatPointScheme& s, int A, int B,
                                                            const fp::Point& pt) {
  std::vector<std::vector<std::vector<std::uint64_t>>> blocks(s.points.size());
  bool bad = false;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    try {
      point_rows(s.points[k], A, B, pt, blocks[k]);
    } catch (const NoChart&) {
#pragma omp critical
      bad = true;
    }
  }
  if (bad) throw NoChart("condition rows: point degenerates at the certificate prime");
  std::vector<std::vector<std::uint64_t>> rows;
  for (auto& b : blocks)
    for (auto& r : b) rows.push_back(std::move(r));
  return rows;
}

ScalarMatrix condition_matrix(const FatPointScheme& s, int A, int B) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : s.points) {
    auto r = vanishing_conditions(p.pt, p.mult, A, B);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  const std::size_t cols = static_cast<std::size_t>((A + 1) * (B + 1));
  ScalarMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

RankBound condition_rank(const FatPointScheme& s, int A, int B, const Mode& mode) {
  const std::size_t cols = static_cast<std::size_t>((A + 1) * (B + 1));
  auto rows = condition_rows_modp(s, A, B, mode.cert_point());
  RankBound r;
  r.lower = rank_mod_p(rows, cols);
  r.upper = std::min(rows.size(), cols);
  // rank deficient at the prime: settle it exactly when entries are rational
  if (!r.exact() && mode.kind != ModeKind::Generic && rows.size() * cols <= 40000)
    r.lower = r.upper = exact_rank(condition_matrix(s, A, B));
  return r;
}

int twist_degree(int n, int m) { return static_cast<int>(binom(n + m + 1, 2) - binom(m + 1, 2)); }

CohomologyCount h0_h1(int n, int m, int a, int b, const Mode& mode) {
  if (mode.kind == ModeKind::TauOne)
    throw std::invalid_argument("h0_h1: tau-one sheaves go through a_h0_h1");
  const int k = twist_degree(n, m);
  if (n + a < 0 || k + b < 0)
    throw AmbientCohomology("h0_h1: ambient bundle O(" + std::to_string(n + a) + "," + std::to_string(k + b) +
                            ") has higher cohomology");
  CohomologyCount c;
  FatPointScheme s = fat_point_scheme(n, m, mode);
  c.ambient = static_cast<long>(n + a + 1) * (k + b + 1);
  c.length = s.length();
  c.rank = condition_rank(s, n + a, k + b, mode);
  c.h0 = c.ambient - static_cast<long>(c.rank.lower);
  c.h1 = c.length - static_cast<long>(c.rank.lower);
  return c;
}

SectionsReport sections_equal_ring(int n, int m, SkewContext& ctx) {
  SectionsReport rep;
  rep.n = n;
  rep.m = m;
  const GradedPiece& g = ctx.piece(n, m);
  CohomologyCount c = h0_h1(n, m, 0, 0, ctx.mode());
  rep.h0 = c.h0;
  rep.ring_dim = g.rows.size();
  FatPointScheme s = fat_point_scheme(n, m, ctx.mode());
  auto rows = condition_rows_modp(s, g.A, g.B, ctx.point());
  rep.conditions = rows.size();
  rep.rows_vanish = true;
  for (const auto& f : g.rows)
    for (const auto& r : rows) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < r.size(); ++t)
        if (r[t] && f.c[t]) acc = fp::add(acc, fp::mul(r[t], f.c[t]));
      if (acc) rep.rows_vanish = false;
    }
  rep.vanishing_certified = ctx.vanishing_certified(std::max(m, 1), m + n - 1);
  if (!c.certified()) rep.h0 = -1;
  return rep;
}

// ---- tau-one

long MonomialRegion::size() const {
  long s = 0;
  for (auto [a, b] : rows) s += b - a + 1;
  return s;
}

std::set<std::pair<int, int>> MonomialRegion::monomials() const {
  std::set<std::pair<int, int>> s;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = rows[i].first; j <= rows[i].second; ++j) s.insert({i, j});
  return s;
}

MonomialRegion a_monomial_basis(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("a_monomial_basis: negative index");
  MonomialRegion r;
  r.n = n;
  r.m = m;
  for (int i = 0; i <= n; ++i)
    r.rows.push_back({static_cast<int>(i * m + binom(i, 2)),
                      static_cast<int>(i * m + binom(n + 1, 2) - binom(n - i, 2))});
  return r;
}

std::set<std::pair<int, int>> a_product_monomials(int n, int m) {
  std::set<std::pair<int, int>> cur{{0, 0}};
  for (int l = m; l < m + n; ++l) {
    // E^{sigma^l} = span{1, u v^l, v, u v^(l+1)}
    const std::pair<int, int> gens[4] = {{0, 0}, {1, l}, {0, 1}, {1, l + 1}};
    std::set<std::pair<int, int>> next;
    for (auto [i, j] : cur)
      for (auto [di, dj] : gens) next.insert({i + di, j + dj});
    cur = std::move(next);
  }
  return cur;
}

AH0H1 a_h0_h1(int n, int m) {
  auto W = a_product_monomials(n, m);
  int qmin = INT_MAX, qmax = INT_MIN;
  for (auto [p, q] : W) {
    qmin = std::min(qmin, q);
    qmax = std::max(qmax, q);
  }
  // U_+^+ : i>=p, j>=q; U_-^+ : i>=p, j<=q; U_-^- : i<=p, j<=q; U_+^- : i<=p, j>=q
  auto in_chart = [&](int i, int j, int si, int sj) {
    for (auto [p, q] : W)
      if ((si > 0 ? i >= p : i <= p) && (sj > 0 ? j >= q : j <= q)) return true;
    return false;
  };
  AH0H1 r;
  std::set<std::pair<int, int>> h0;
  // U_-^+ forces i >= 0, U_+^- forces i <= n; the j range is bounded likewise
  for (int i = 0; i <= n; ++i)
    for (int j = qmin; j <= qmax; ++j)
      if (in_chart(i, j, 1, 1) && in_chart(i, j, 1, -1) && in_chart(i, j, -1, -1) && in_chart(i, j, -1, 1))
        h0.insert({i, j});
  r.h0 = static_cast<long>(h0.size());
  r.h0_equals_ring = h0 == W;
  const long k = twist_degree(n, m);
  const long ambient = static_cast<long>(n + 1) * (k + 1);
  const long length = 2 * (m * binom(n + 1, 2) + binom(n + 1, 3));
  r.h1 = -ambient + r.h0 + length;
  return r;
}

}  // namespace bcs
