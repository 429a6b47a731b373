#include "bcsurf/skew.hpp"

#include <algorithm>
#include <set>

#include "bcsurf/linsys.hpp"

namespace bcs {

Letter generator(int j) {
  if (j < 0 || j > 3) throw std::invalid_argument("generator: index out of range");
  Letter l;
  l[static_cast<std::size_t>(j)] = Scalar(1);
  return l;
}

int SkewPoly::degree() const { return terms.empty() ? 0 : static_cast<int>(terms.front().second.size()); }

SkewPoly& SkewPoly::add(const Scalar& c, SkewWord w) {
  if (!terms.empty() && w.size() != terms.front().second.size())
    throw DegreeMismatch("SkewPoly: words of different lengths");
  terms.emplace_back(c, std::move(w));
  return *this;
}

int default_bound(const Mode& mode) { return mode.kind == ModeKind::Generic ? 5 : 8; }

SkewContext::SkewContext(const Mode& mode, int max_degree)
    : mode_(mode), max_degree_(max_degree < 0 ? default_bound(mode) : max_degree), pt_(mode.cert_point()) {
  PForm x(1, 0), y(1, 0), z(0, 1), w(0, 1);
  x.at(1, 0) = y.at(0, 0) = z.at(0, 1) = w.at(0, 0) = 1;
  lv_modp_.push_back({x, y, z, w});
  lv_exact_.push_back({BiForm::x(), BiForm::y(), BiForm::z(), BiForm::w()});
}

// X' = g X Z + d Y W, Y' = d X Z + g Y W, Z' = e Z + z W, W' = z Z + e W
void SkewContext::extend_levels_modp(int level) {
  Abbrev ab = mode_.abbrev();
  const std::uint64_t g = pt_.eval(ab.gamma), d = pt_.eval(ab.delta), e = pt_.eval(ab.epsilon), z = pt_.eval(ab.zeta);
  while (static_cast<int>(lv_modp_.size()) <= level) {
    const auto& c = lv_modp_.back();
    PForm xz = c[0] * c[2], yw = c[1] * c[3];
    PForm X = xz.scaled(g), Y = xz.scaled(d);
    X += yw.scaled(d);
    Y += yw.scaled(g);
    PForm Z = c[2].scaled(e), W = c[2].scaled(z);
    Z += c[3].scaled(z);
    W += c[3].scaled(e);
    lv_modp_.push_back({X, Y, Z, W});
  }
}

void SkewContext::extend_levels_exact(int level) {
  Abbrev ab = mode_.abbrev();
  while (static_cast<int>(lv_exact_.size()) <= level) {
    const auto& c = lv_exact_.back();
    BiForm xz = c[0] * c[2], yw = c[1] * c[3];
    lv_exact_.push_back({xz.scaled(ab.gamma) + yw.scaled(ab.delta), xz.scaled(ab.delta) + yw.scaled(ab.gamma),
                         c[2].scaled(ab.epsilon) + c[3].scaled(ab.zeta), c[2].scaled(ab.zeta) + c[3].scaled(ab.epsilon)});
  }
}

PForm SkewContext::letter_modp(const Letter& l, int level) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  extend_levels_modp(level);
  const auto& c = lv_modp_[static_cast<std::size_t>(level)];
  // (1, u, v, uv) cleared by Y W
  const PForm* f[4][2] = {{&c[1], &c[3]}, {&c[0], &c[3]}, {&c[1], &c[2]}, {&c[0], &c[2]}};
  PForm out(1, level + 1);
  for (int k = 0; k < 4; ++k) {
    std::uint64_t s = pt_.eval(l[k]);
    if (s) out += ((*f[k][0]) * (*f[k][1])).scaled(s);
  }
  return out;
}

BiForm SkewContext::letter_exact(const Letter& l, int level) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  extend_levels_exact(level);
  const auto& c = lv_exact_[static_cast<std::size_t>(level)];
  const BiForm* f[4][2] = {{&c[1], &c[3]}, {&c[0], &c[3]}, {&c[1], &c[2]}, {&c[0], &c[2]}};
  BiForm out(1, level + 1);
  for (int k = 0; k < 4; ++k)
    if (!l[k].is_zero()) out += ((*f[k][0]) * (*f[k][1])).scaled(l[k]);
  return out;
}

PForm SkewContext::word_modp(const SkewWord& w, int twist) {
  PForm out(0, 0);
  out.c[0] = 1;
  for (std::size_t k = 0; k < w.size(); ++k) out = out * letter_modp(w[k], twist + static_cast<int>(k));
  return out;
}

BiForm SkewContext::word_exact(const SkewWord& w, int twist) {
  BiForm out = BiForm::monomial(0, 0, 0, 0);
  for (std::size_t k = 0; k < w.size(); ++k) out = out * letter_exact(w[k], twist + static_cast<int>(k));
  return out;
}

BiForm SkewContext::poly_exact(const SkewPoly& p, int twist) {
  const int n = p.degree();
  BiForm out(n, twist_degree(n, twist));
  for (const auto& [c, w] : p.terms)
    if (!c.is_zero()) out += word_exact(w, twist).scaled(c);
  return out;
}

PForm SkewContext::poly_modp(const SkewPoly& p, int twist) {
  const int n = p.degree();
  PForm out(n, twist_degree(n, twist));
  for (const auto& [c, w] : p.terms) {
    std::uint64_t s = pt_.eval(c);
    if (s) out += word_modp(w, twist).scaled(s);
  }
  return out;
}

bool SkewContext::vanishing_certified(int lo, int hi) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (mode_.kind == ModeKind::TauOne) return false;
  for (int l = std::max(lo, 1); l <= hi; ++l) {
    auto it = vanish_.find(l);
    if (it == vanish_.end()) it = vanish_.emplace(l, base_locus_check(l, mode_).vanish_ok).first;
    if (!it->second) return false;
  }
  return true;
}

const GradedPiece& SkewContext::piece(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("piece: negative index");
  if (n > max_degree_)
    throw BoundExceeded("degree " + std::to_string(n) + " exceeds the bound " + std::to_string(max_degree_));
  std::lock_guard<std::recursive_mutex> lk(mu_);
  auto key = std::make_pair(n, m);
  auto it = pieces_.find(key);
  if (it != pieces_.end()) return *it->second;
  auto g = std::make_unique<GradedPiece>(build_piece(n, m));
  return *pieces_.emplace(key, std::move(g)).first->second;
}

GradedPiece SkewContext::build_piece(int n, int m) {
  GradedPiece g;
  g.n = n;
  g.m = m;
  g.A = n;
  g.B = twist_degree(n, m);
  if (n == 0) {
    PForm one(0, 0);
    one.c[0] = 1;
    g.words = {{}};
    g.rows = {one};
    g.dim = {1, 1, "constants"};
    return g;
  }
  const GradedPiece& prev = piece(n - 1, m);
  const int level = m + n - 1;
  std::array<PForm, 4> gens;
  for (int j = 0; j < 4; ++j) gens[j] = letter_modp(generator(j), level);
  const std::size_t np = prev.rows.size();
  std::vector<std::vector<std::uint64_t>> prods(np * 4);
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < np * 4; ++t) prods[t] = (prev.rows[t / 4] * gens[t % 4]).c;
  const std::size_t cols = static_cast<std::size_t>((g.A + 1) * (g.B + 1));
  std::set<std::size_t> support;
  for (const auto& p : prods)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k]) support.insert(k);
  IncrementalEchelon ech(cols);
  auto kept = ech.add_rows(prods);
  for (std::size_t t = 0; t < prods.size(); ++t) {
    if (!kept[t]) continue;
    auto w = prev.words[t / 4];
    w.push_back(static_cast<int>(t % 4));
    g.words.push_back(std::move(w));
    PForm f(g.A, g.B);
    f.c = std::move(prods[t]);
    g.rows.push_back(std::move(f));
  }
  g.dim.lower = static_cast<long>(ech.rank());
  const long ambient = static_cast<long>(cols);
  g.dim.upper = ambient;
  g.dim.method = "ambient";
  if (mode_.kind == ModeKind::TauOne) {
    // every product is a single monomial; when the previous basis spans, the
    // products span and their supports bound the dimension
    if (prev.dim.exact()) {
      g.dim.upper = static_cast<long>(support.size());
      g.dim.method = "monomial support";
    }
  } else if (vanishing_certified(std::max(m, 1), m + n - 1)) {
    // R_n lies inside the sections vanishing on B_n^m
    FatPointScheme s = fat_point_scheme(n, m, mode_);
    RankBound r = condition_rank(s, g.A, g.B, mode_);
    g.dim.upper = ambient - static_cast<long>(r.lower);
    g.dim.method = "fat-point bound";
  }
  return g;
}

// ---- relations

std::array<Quadratic, 6> relations(const Mode& mode) {
  Abbrev ab = mode.abbrev();
  const Scalar &g = ab.gamma, &d = ab.delta, &e = ab.epsilon, &z = ab.zeta;
  std::array<Quadratic, 6> f;
  auto set = [&](int k, int a, int b, const Scalar& c) { f[k][a - 1][b - 1] = c; };
  set(0, 1, 1, z), set(0, 1, 3, -e), set(0, 3, 1, e), set(0, 3, 3, -z);
  set(1, 1, 2, z), set(1, 1, 4, -e), set(1, 3, 2, e), set(1, 3, 4, -z);
  set(2, 2, 1, z), set(2, 2, 3, -e), set(2, 4, 1, e), set(2, 4, 3, -z);
  set(3, 2, 2, z), set(3, 2, 4, -e), set(3, 4, 2, e), set(3, 4, 4, -z);
  set(4, 1, 1, d), set(4, 1, 2, -g), set(4, 4, 1, g), set(4, 4, 2, -d);
  set(5, 1, 3, d), set(5, 1, 4, -g), set(5, 4, 3, g), set(5, 4, 4, -d);
  return f;
}

SkewPoly quadratic_image(const Quadratic& q) {
  SkewPoly p;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!q[a][b].is_zero()) p.add(q[a][b], {generator(a), generator(b)});
  if (p.terms.empty()) p.add(Scalar(0), {generator(0), generator(0)});
  return p;
}

void check_relation_list(const std::vector<Quadratic>& rels, const Mode& mode) {
  SkewContext ctx(mode, 2);
  for (std::size_t k = 0; k < rels.size(); ++k) {
    BiForm f = ctx.poly_exact(quadratic_image(rels[k]), 0);
    if (!f.is_zero()) throw RelationFailed(static_cast<int>(k) + 1, f.str());
  }
}

namespace {

bool proportional_tables(const Quadratic& a, const Quadratic& b) {
  // a = c b for one nonzero c
  Scalar c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (a[i][j].is_zero() != b[i][j].is_zero()) return false;
      if (a[i][j].is_zero()) continue;
      Scalar r = a[i][j] / b[i][j];
      if (c.is_zero())
        c = r;
      else if (r != c)
        return false;
    }
  return !c.is_zero();
}

Quadratic binomial(int a, int b, int c, int d) {
  Quadratic q;
  q[a - 1][b - 1] = Scalar(1);
  q[c - 1][d - 1] = Scalar(-1);
  return q;
}

}  // namespace

RelationReport check_relations(const Mode& mode) {
  auto f = relations(mode);
  check_relation_list({f.begin(), f.end()}, mode);
  RelationReport rep;
  rep.vanish.assign(6, true);
  if (mode.kind == ModeKind::TauOne) {
    Quadratic f5p;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) f5p[a][b] = f[2][a][b] - f[4][a][b];
    const Quadratic expect[6] = {binomial(3, 1, 1, 3), binomial(3, 2, 1, 4), binomial(4, 1, 2, 3),
                                 binomial(4, 2, 2, 4), binomial(1, 2, 2, 3), binomial(4, 3, 1, 4)};
    const Quadratic* got[6] = {&f[0], &f[1], &f[2], &f[3], &f5p, &f[5]};
    for (int k = 0; k < 6; ++k)
      if (!proportional_tables(*got[k], expect[k])) {
        rep.binomial_ok = false;
        rep.notes.push_back("relation " + std::to_string(k + 1) + " is not the expected binomial");
      }
  }
  return rep;
}

// ---- z-elements

std::array<Letter, 10> z_letters(const Mode& mode) {
  Abbrev ab = mode.abbrev();
  const Scalar &g = ab.gamma, &d = ab.delta, &e = ab.epsilon, &z = ab.zeta;
  const Scalar o(0);
  return {Letter{z, o, -e, o},
          Letter{e, o, -z, o},
          Letter{o, z, o, -e},
          Letter{o, e, o, -z},
          Letter{d, -g, o, o},
          Letter{g, -d, o, o},
          Letter{o, o, d, -g},
          Letter{o, o, g, -d},
          Letter{-d * e, g * e, d * z, -g * z},
          Letter{g * z, -d * z, -g * e, d * e}};
}

std::vector<SkewPoly> z_relations(const Mode& mode) {
  auto zl = z_letters(mode);
  auto Z = [&](int i) { return zl[static_cast<std::size_t>(i - 1)]; };
  auto R = [](int i) { return generator(i - 1); };
  auto pair = [](const Letter& a, const Letter& b, const Letter& c, const Letter& d) {
    SkewPoly p;
    p.add(Scalar(1), {a, b});
    p.add(Scalar(1), {c, d});
    return p;
  };
  return {pair(R(1), Z(1), R(3), Z(2)), pair(R(1), Z(3), R(3), Z(4)), pair(R(2), Z(1), R(4), Z(2)),
          pair(R(2), Z(3), R(4), Z(4)), pair(R(1), Z(5), R(4), Z(6)), pair(R(1), Z(7), R(4), Z(8)),
          pair(Z(5), Z(1), Z(7), Z(2)), pair(Z(5), Z(3), Z(7), Z(4)), pair(Z(6), Z(1), Z(8), Z(2)),
          pair(Z(6), Z(3), Z(8), Z(4)), pair(Z(9), Z(1), Z(10), Z(2)), pair(Z(9), Z(3), Z(10), Z(4)),
          pair(Z(1), Z(9), Z(3), Z(10)), pair(Z(2), Z(9), Z(4), Z(10))};
}

bool z_identity_required(int k) { return k != 11 && k != 12; }

ZReport z_elements(const Mode& mode) {
  SkewContext ctx(mode, 2);
  ZReport rep;
  rep.z = z_letters(mode);
  auto rels = z_relations(mode);
  for (std::size_t k = 0; k < rels.size(); ++k) {
    BiForm f = ctx.poly_exact(rels[k], 0);
    rep.vanish.push_back(f.is_zero());
    rep.residue.push_back(f.is_zero() ? "0" : f.str());
    if (!f.is_zero() && z_identity_required(static_cast<int>(k) + 1))
      throw RelationFailed(static_cast<int>(k) + 1, f.str());
  }
  return rep;
}

// ---- syzygies

namespace {

using Pair = std::pair<Letter, Letter>;

std::vector<Pair> stated_syzygies(int a, int b, Side side) {
  auto R = [](int i) { return generator(i - 1); };
  auto neg = [](Letter l) {
    for (auto& c : l) c = -c;
    return l;
  };
  std::pair<int, int> key{std::min(a, b), std::max(a, b)};
  if (key != std::make_pair(a, b)) throw std::invalid_argument("syzygy_kernel: list the pair in increasing order");
  const bool first_kind = key == std::make_pair(1, 2) || key == std::make_pair(3, 4);
  const bool second_kind = key == std::make_pair(1, 3) || key == std::make_pair(2, 4);
  if (!first_kind && !second_kind) throw std::invalid_argument("syzygy_kernel: pair not covered");
  if (second_kind) return {{R(3), neg(R(1))}, {R(4), neg(R(2))}};
  if (side == Side::Right) return {{R(2), neg(R(3))}};
  return {{R(4), neg(R(1))}};
}

std::vector<std::uint64_t> concat(const PForm& x, const PForm& y) {
  std::vector<std::uint64_t> v = x.c;
  v.insert(v.end(), y.c.begin(), y.c.end());
  return v;
}

}  // namespace

SyzygyReport syzygy_kernel(int a, int b, int n, Side side, SkewContext& ctx) {
  if (ctx.mode().kind != ModeKind::TauOne) throw std::invalid_argument("syzygy_kernel: tau-one mode only");
  SyzygyReport rep;
  rep.n = n;
  const Letter ra = generator(a - 1), rb = generator(b - 1);
  auto stated = stated_syzygies(a, b, side);
  // the stated generators kill (a, b) in degree 2; associativity does the rest
  rep.contained = true;
  for (const auto& [g1, g2] : stated) {
    SkewPoly p;
    if (side == Side::Right) {
      p.add(Scalar(1), {ra, g1});
      p.add(Scalar(1), {rb, g2});
    } else {
      p.add(Scalar(1), {g1, ra});
      p.add(Scalar(1), {g2, rb});
    }
    if (!ctx.poly_exact(p, 0).is_zero()) rep.contained = false;
  }
  // map A_n + A_n -> A_{n+1}
  const int xt = side == Side::Right ? 1 : 0;
  const GradedPiece& src = ctx.piece(n, xt);
  std::vector<std::vector<std::uint64_t>> img;
  PForm fa = side == Side::Right ? ctx.letter_modp(ra, 0) : ctx.letter_modp(ra, n);
  PForm fb = side == Side::Right ? ctx.letter_modp(rb, 0) : ctx.letter_modp(rb, n);
  for (const PForm* f : {&fa, &fb})
    for (const auto& x : src.rows) img.push_back((side == Side::Right ? *f * x : x * *f).c);
  const std::size_t out_cols = img.empty() ? 0 : img.front().size();
  const long rank = static_cast<long>(rank_mod_p(img, out_cols));
  rep.kernel_dim = 2 * static_cast<long>(src.rows.size()) - rank;
  if (!src.dim.exact()) rep.kernel_dim = -1;
  // stated module in degree n: (g1 c, g2 c) or (c g1, c g2) with c in A_{n-1}
  if (n >= 1) {
    const GradedPiece& c = ctx.piece(n - 1, side == Side::Right ? 2 : 0);
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& [g1, g2] : stated) {
      PForm h1 = side == Side::Right ? ctx.letter_modp(g1, 1) : ctx.letter_modp(g1, n - 1);
      PForm h2 = side == Side::Right ? ctx.letter_modp(g2, 1) : ctx.letter_modp(g2, n - 1);
      for (const auto& x : c.rows)
        rows.push_back(side == Side::Right ? concat(h1 * x, h2 * x) : concat(x * h1, x * h2));
    }
    rep.expected_dim = static_cast<long>(rank_mod_p(rows, rows.front().size()));
  }
  return rep;
}

// ---- membership

namespace {

void append_row(std::vector<std::vector<Scalar>>& rows, const BiForm& f) { rows.push_back(f.coeffs()); }

ScalarMatrix to_matrix(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  ScalarMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

bool ideal_membership(const SkewPoly& element, const std::vector<SkewPoly>& gens, SkewContext& ctx) {
  const int n = element.degree();
  for (const auto& [c, w] : element.terms)
    if (static_cast<int>(w.size()) != n) throw DegreeMismatch("ideal_membership: element is not homogeneous");
  const std::size_t cols = static_cast<std::size_t>((n + 1) * (twist_degree(n, 0) + 1));
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    const int d = g.degree();
    if (d > n) throw DegreeMismatch("ideal_membership: generator degree exceeds the element degree");
    BiForm gf = ctx.poly_exact(g, 0);
    const GradedPiece& rest = ctx.piece(n - d, d);
    if (!rest.dim.exact()) throw std::runtime_error("ideal_membership: graded piece not certified");
    for (const auto& word : rest.words) {
      SkewWord sw;
      for (int j : word) sw.push_back(generator(j));
      append_row(rows, gf * ctx.word_exact(sw, d));
    }
  }
  const std::size_t base = rows.empty() ? 0 : exact_rank(to_matrix(rows, cols));
  append_row(rows, ctx.poly_exact(element, 0));
  return exact_rank(to_matrix(rows, cols)) == base;
}

OppositeReport opposite_dims(int n, const Mode& mode) {
  OppositeReport r;
  r.n = n;
  SkewContext a(mode), b(mode.inverted());
  r.dim = a.piece(n).dim;
  r.dim_inverse = b.piece(n).dim;
  return r;
}

}  // namespace bcs
