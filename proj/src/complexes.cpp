#include "bcsurf/complexes.hpp"

#include "bcsurf/linsys.hpp"

namespace bcs {

std::vector<BiForm> product_forms(const SkewMatrix& a, const SkewMatrix& b, SkewContext& ctx) {
  if (a.cols != b.rows) throw std::invalid_argument("product_forms: shape mismatch");
  std::vector<BiForm> out;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      SkewPoly p;
      for (std::size_t k = 0; k < a.cols; ++k)
        if (a.at(i, k) && b.at(k, j)) p.add(Scalar(1), {*a.at(i, k), *b.at(k, j)});
      out.push_back(p.terms.empty() ? BiForm(2, twist_degree(2, 0)) : ctx.poly_exact(p, 0));
    }
  return out;
}

void verify_complex(const GradedComplex& c) {
  SkewContext ctx(c.mode, 2);
  const char* names[3] = {"QP", "PN", "NM"};
  for (int k = 0; k < 3; ++k)
    for (const auto& f : product_forms(c.maps[k], c.maps[k + 1], ctx))
      if (!f.is_zero()) throw RelationFailed(k + 1, std::string(names[k]) + ": " + f.str());
}

GradedComplex build_complex(const Mode& mode) {
  GradedComplex c;
  c.mode = mode;
  auto z = z_letters(mode);
  auto Z = [&](int i) { return std::optional<Letter>(z[static_cast<std::size_t>(i - 1)]); };
  SkewMatrix Q(1, 4), P(4, 6), N(6, 4), M(4, 1);
  for (int j = 0; j < 4; ++j) Q.at(0, j) = generator(j);
  P.at(0, 0) = Z(1), P.at(0, 1) = Z(3), P.at(0, 4) = Z(5), P.at(0, 5) = Z(7);
  P.at(1, 2) = Z(1), P.at(1, 3) = Z(3);
  P.at(2, 0) = Z(2), P.at(2, 1) = Z(4);
  P.at(3, 2) = Z(2), P.at(3, 3) = Z(4), P.at(3, 4) = Z(6), P.at(3, 5) = Z(8);
  N.at(0, 0) = Z(9), N.at(1, 0) = Z(10), N.at(2, 1) = Z(9), N.at(3, 1) = Z(10);
  N.at(4, 2) = Z(1), N.at(4, 3) = Z(3), N.at(5, 2) = Z(2), N.at(5, 3) = Z(4);
  M.at(2, 0) = Z(9), M.at(3, 0) = Z(10);
  c.maps = {Q, P, N, M};
  verify_complex(c);
  return c;
}

bool entries_are_generator_multiples(const GradedComplex& c) {
  for (const auto& m : c.maps)
    for (const auto& e : m.entries) {
      if (!e) continue;
      int nz = 0;
      for (const auto& s : *e) nz += !s.is_zero();
      if (nz != 1) return false;
    }
  return true;
}

long DegreeReport::euler() const {
  long s = 0;
  for (int i = 0; i < 5; ++i) s += (i % 2 ? -1 : 1) * dims[i];
  return s;
}

bool DegreeReport::exact() const {
  if (!certified) return false;
  for (int i = 0; i < 5; ++i)
    if (homology[i] != (i == 0 && n == 0 ? 1 : 0)) return false;
  return true;
}

namespace {

std::vector<std::uint64_t> stack(const std::vector<PForm>& blocks) {
  std::vector<std::uint64_t> v;
  for (const auto& b : blocks) v.insert(v.end(), b.c.begin(), b.c.end());
  return v;
}

// rank of x -> m x on columns of R_d (left multiplication, source at twist 1)
long left_rank(const SkewMatrix& m, int d, SkewContext& ctx) {
  if (d < 0) return 0;
  const GradedPiece& src = ctx.piece(d, 1);
  const int tn = d + 1, tb = twist_degree(tn, 0);
  std::vector<PForm> ent(m.entries.size());
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    if (m.entries[k]) ent[k] = ctx.letter_modp(*m.entries[k], 0);
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const auto& x : src.rows) {
      std::vector<PForm> blocks;
      for (std::size_t i = 0; i < m.rows; ++i) {
        const auto& e = m.entries[i * m.cols + j];
        blocks.push_back(e ? ent[i * m.cols + j] * x : PForm(tn, tb));
      }
      rows.push_back(stack(blocks));
    }
  if (rows.empty()) return 0;
  return static_cast<long>(rank_mod_p(rows, rows.front().size()));
}

// rank of y -> y m on rows of R_d (right multiplication)
long right_rank(const SkewMatrix& m, int d, SkewContext& ctx) {
  if (d < 0) return 0;
  const GradedPiece& src = ctx.piece(d, 0);
  const int tn = d + 1, tb = twist_degree(tn, 0);
  std::vector<PForm> ent(m.entries.size());
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    if (m.entries[k]) ent[k] = ctx.letter_modp(*m.entries[k], d);
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (const auto& x : src.rows) {
      std::vector<PForm> blocks;
      for (std::size_t j = 0; j < m.cols; ++j) {
        const auto& e = m.entries[i * m.cols + j];
        blocks.push_back(e ? x * ent[i * m.cols + j] : PForm(tn, tb));
      }
      rows.push_back(stack(blocks));
    }
  if (rows.empty()) return 0;
  return static_cast<long>(rank_mod_p(rows, rows.front().size()));
}

}  // namespace

DegreeReport exactness_in_degree(int n, const GradedComplex& c, SkewContext& ctx) {
  DegreeReport r;
  r.n = n;
  r.certified = true;
  for (int i = 0; i < 5; ++i) {
    const int d = n - i;
    if (d < 0) {
      r.dims[i] = 0;
      continue;
    }
    const GradedPiece& g = ctx.piece(d, 0);
    r.certified = r.certified && g.dim.exact() && ctx.piece(d, 1).dim.exact();
    r.dims[i] = c.ranks[i] * g.dim.lower;
  }
  for (int k = 0; k < 4; ++k) r.ranks[k] = left_rank(c.maps[k], n - k - 1, ctx);
  for (int i = 0; i < 5; ++i)
    r.homology[i] = r.dims[i] - (i >= 1 ? r.ranks[i - 1] : 0) - (i <= 3 ? r.ranks[i] : 0);
  return r;
}

ExtReport ext_dimensions(int n, const GradedComplex& c, SkewContext& ctx) {
  ExtReport r;
  r.n = n;
  auto dim_at = [&](int d) -> long {
    if (d < 0) return 0;
    if (d > ctx.max_degree()) return -1;
    const GradedPiece& g = ctx.piece(d, 0);
    return g.dim.exact() ? g.dim.lower : -1;
  };
  // dual of maps[k] goes C_k* -> C_{k+1}*, source in degree n is R_{n+k}
  auto dual_rank = [&](int k) -> long {
    if (k < 0 || k > 3) return 0;
    if (n + k > ctx.max_degree()) return -1;
    return right_rank(c.maps[k], n + k, ctx);
  };
  for (int i = 0; i < 5; ++i) {
    long d = dim_at(n + i);
    r.dims[i] = d < 0 ? -1 : c.ranks[i] * d;
    long out = i <= 3 ? dual_rank(i) : 0;
    long in = i >= 1 ? dual_rank(i - 1) : 0;
    r.ext[i] = (r.dims[i] < 0 || out < 0 || in < 0) ? -1 : r.dims[i] - out - in;
  }
  return r;
}

QuotientDim quotient_hilbert(int n, SkewContext& ctx) {
  QuotientDim q;
  q.n = n;
  const GradedPiece& g = ctx.piece(n, 0);
  if (!g.dim.exact()) throw std::runtime_error("quotient_hilbert: graded piece not certified");
  if (n == 0) {
    q.lower = q.upper = 1;
    return q;
  }
  auto z = z_letters(ctx.mode());
  SkewMatrix m(2, 1);
  m.at(0, 0) = z[8];
  m.at(1, 0) = z[9];
  q.upper = g.dim.lower - right_rank(m, n - 1, ctx);
  // (b z1, b z3) with b in R_{n-2} is killed by z1 z9 + z3 z10 = 0 and is
  // injective in b because R is a domain
  auto zr = z_elements(ctx.mode());
  const bool killed = zr.vanish[12];
  const long d1 = ctx.piece(n - 1, 0).dim.lower;
  const long d2 = n >= 2 ? ctx.piece(n - 2, 0).dim.lower : 0;
  const bool ok = killed && ctx.piece(n - 1, 0).dim.exact() && (n < 2 || ctx.piece(n - 2, 0).dim.exact());
  q.lower = ok ? g.dim.lower - (2 * d1 - d2) : 0;
  if (q.lower < 0) q.lower = 0;
  return q;
}

PresentationKernel presentation_kernel(SkewContext& ctx) {
  PresentationKernel k;
  std::vector<std::vector<std::uint64_t>> rows;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rows.push_back(ctx.word_modp({generator(a), generator(b)}, 0).c);
  k.word_rank = static_cast<long>(rank_mod_p(rows, rows.front().size()));
  auto f = relations(ctx.mode());
  ScalarMatrix m(6, 16);
  for (int r = 0; r < 6; ++r)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(r, a * 4 + b) = f[r][a][b];
  k.relation_rank = static_cast<long>(exact_rank(m));
  k.relations_vanish = true;
  for (const auto& q : f)
    if (!ctx.poly_exact(quadratic_image(q), 0).is_zero()) k.relations_vanish = false;
  return k;
}

long euler_sum(int n) {
  return binom(n + 3, 3) - 4 * binom(n + 2, 3) + 6 * binom(n + 1, 3) - 4 * binom(n, 3) + binom(n - 1, 3);
}

}  // namespace bcs
