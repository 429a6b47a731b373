#include "bcsurf/fibercoh.hpp"

#include <algorithm>
#include <climits>
#include <mutex>

#include "bcsurf/linsys.hpp"

namespace bcs {

// ---- TruncElement

TruncElement::TruncElement(int ell, int lo, int hi) : ell_(ell), lo_(lo), hi_(hi) {
  if (ell < 1 || lo > hi) throw std::invalid_argument("TruncElement: bad shape");
}

TruncElement TruncElement::monomial(int ell, int lo, int hi, int i, int j, const Scalar& c) {
  TruncElement t(ell, lo, hi);
  t.add(i, j, c);
  return t;
}

Scalar TruncElement::coef(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Scalar(0) : it->second;
}

void TruncElement::add(int i, int j, const Scalar& c) {
  if (j >= ell_ || c.is_zero()) return;
  if (j < 0) throw std::invalid_argument("TruncElement: negative v-exponent");
  if (i < lo_ || i > hi_)
    throw WindowOverflow("u-exponent " + std::to_string(i) + " outside [" + std::to_string(lo_) + ", " +
                         std::to_string(hi_) + "]");
  auto it = c_.find({i, j});
  if (it == c_.end()) {
    c_.emplace(Key{i, j}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

TruncElement& TruncElement::operator+=(const TruncElement& o) {
  for (const auto& [k, c] : o.c_) add(k.first, k.second, c);
  return *this;
}

TruncElement& TruncElement::operator-=(const TruncElement& o) {
  for (const auto& [k, c] : o.c_) add(k.first, k.second, -c);
  return *this;
}

TruncElement operator*(const TruncElement& a, const TruncElement& b) {
  TruncElement r(std::min(a.ell_, b.ell_), a.lo_, a.hi_);
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_)
      if (ka.second + kb.second < r.ell_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

TruncElement TruncElement::scaled(const Scalar& s) const {
  TruncElement r(ell_, lo_, hi_);
  for (const auto& [k, c] : c_) r.add(k.first, k.second, c * s);
  return r;
}

TruncElement TruncElement::shifted(int du, int dv) const {
  TruncElement r(ell_, lo_, hi_);
  for (const auto& [k, c] : c_) r.add(k.first + du, k.second + dv, c);
  return r;
}

TruncElement TruncElement::with_window(int lo, int hi) const {
  TruncElement r(ell_, lo, hi);
  for (const auto& [k, c] : c_) r.add(k.first, k.second, c);
  return r;
}

TruncElement TruncElement::truncated(int ell) const {
  TruncElement r(ell, lo_, hi_);
  for (const auto& [k, c] : c_) r.add(k.first, k.second, c);
  return r;
}

TruncElement TruncElement::unit_inverse() const {
  for (const auto& [k, c] : c_)
    if (k.first != 0) throw std::invalid_argument("unit_inverse: expects a series in v alone");
  Scalar c0 = coef(0, 0);
  if (c0.is_zero()) throw std::domain_error("unit_inverse: constant term vanishes");
  // c0 (1 + x) with x nilpotent: the geometric series stops at x^ell
  TruncElement x = scaled(c0.inverse());
  x.add(0, 0, Scalar(-1));
  TruncElement r = TruncElement::monomial(ell_, lo_, hi_, 0, 0), p = r;
  for (int k = 1; k < ell_; ++k) {
    p = p * x.scaled(Scalar(-1));
    r += p;
  }
  return r.scaled(c0.inverse());
}

bool TruncElement::v_dominates_u() const {
  for (const auto& [k, c] : c_)
    if (k.second < k.first) return false;
  return true;
}

std::string TruncElement::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")u^" + std::to_string(k.first) + "v^" + std::to_string(k.second);
  }
  return s;
}

long TorsionProfile::total() const {
  long s = 0;
  for (int m : multiplicities) s += m;
  return s;
}

TorsionProfile TorsionProfile::from(std::vector<int> m) {
  m.erase(std::remove(m.begin(), m.end(), 0), m.end());
  std::sort(m.begin(), m.end(), std::greater<>());
  return TorsionProfile{std::move(m)};
}

std::string TorsionProfile::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) s += (i ? "," : "") + std::to_string(multiplicities[i]);
  return s + ")";
}

// ---- curve data

namespace {

// Y^{phi^i} for i = 0..N, built by repeated pullback and cached per mode
const BiForm& y_form(int i, const Mode& mode) {
  static std::mutex mu;
  static std::map<std::string, std::vector<BiForm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = mode.name() + ":" + mode.rho0.get_str() + ":" + mode.theta0.get_str() + (mode.inverse ? "'" : "");
  auto& v = cache[key];
  if (v.empty()) v.push_back(BiForm::y());
  if (static_cast<int>(v.size()) <= i) {
    MapSpec phi = MapSpec::make(MapKind::Phi, mode);
    while (static_cast<int>(v.size()) <= i) v.push_back(pullback_form(v.back(), phi).form);
  }
  return v[static_cast<std::size_t>(i)];
}

}  // namespace

TruncElement fiber_alpha(int i, int ell, const Mode& mode) {
  if (i < 0) throw std::invalid_argument("fiber_alpha: negative index");
  const BiForm& Y = y_form(i, mode);
  // x eta(z,w) + y xi(z,w), dehomogenized at w = 1 with v = z
  TruncElement eta(ell, 0, 0), xi(ell, 0, 0);
  for (int j = 0; j <= Y.b() && j < ell; ++j) {
    eta.add(0, j, Y.coef(1, j));
    xi.add(0, j, Y.coef(0, j));
  }
  if (xi.coef(0, 0).is_zero())
    throw NotTransverse("Y^phi^" + std::to_string(i) + ": xi is not a unit along the fiber");
  if (!eta.coef(0, 0).is_zero())
    throw NotTransverse("Y^phi^" + std::to_string(i) + ": eta is not in (v), the curve misses Q");
  return eta * xi.unit_inverse();
}

TruncElement restrict_curve_to_fiber(int i, int ell, Chart chart, const Mode& mode) {
  TruncElement al = fiber_alpha(i, ell, mode);
  if (chart == Chart::Minus) {
    TruncElement r = al.with_window(-1, 0);
    r.add(-1, 0, Scalar(1));
    return r;
  }
  TruncElement r = al.with_window(0, 1).shifted(1, 0);
  r.add(0, 0, Scalar(1));
  return r;
}

CechWindow default_window(int a, int ell, int n) {
  const int w = n + ell + std::abs(a) + 2;
  return {-w, w};
}

// ---- Cech cokernel
//
// The differential is triangular once every alpha_i lies in (v): u^i v^j h has
// lowest term u^i v^j with coefficient 1.  That shape is certified exactly from
// the curve coefficients, so the cokernel basis is exact; the remaining linear
// algebra runs modulo P at the mode's certificate point.

namespace {

using Mono = std::pair<int, int>;  // (u-exp, v-exp)

// (j, i) ordering: lower v-degree first
struct ColLess {
  bool operator()(const Mono& x, const Mono& y) const {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  }
};
using Vec = std::map<Mono, std::uint64_t, ColLess>;
using Series = std::map<Mono, std::uint64_t>;  // truncated in v by the caller

void vadd(Vec& v, const Mono& k, std::uint64_t c) {
  if (!c) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
    return;
  }
  it->second = fp::add(it->second, c);
  if (!it->second) v.erase(it);
}

Series smul(const Series& a, const Series& b, int ell) {
  Series r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.second + kb.second >= ell) continue;
      auto& x = r[{ka.first + kb.first, ka.second + kb.second}];
      x = fp::add(x, fp::mul(ca, cb));
    }
  for (auto it = r.begin(); it != r.end();) it = it->second ? std::next(it) : r.erase(it);
  return r;
}

// exact check that Y^{phi^i} passes through Q and meets Z transversely there
void certify_transverse(int i, const Mode& mode) {
  const BiForm& Y = y_form(i, mode);
  if (Y.coef(0, 0).is_zero())
    throw NotTransverse("Y^phi^" + std::to_string(i) + ": xi is not a unit along the fiber");
  if (!Y.coef(1, 0).is_zero())
    throw NotTransverse("Y^phi^" + std::to_string(i) + ": eta is not in (v), the curve misses Q");
}

// (1 + alpha_i u)^{-1} mod P; alpha_i = eta / xi in k[v]/(v^ell)
Series inverse_factor(int i, int ell, const Mode& mode) {
  certify_transverse(i, mode);
  const BiForm& Y = y_form(i, mode);
  const fp::Point pt = mode.cert_point();
  std::vector<std::uint64_t> eta(static_cast<std::size_t>(ell)), xi(static_cast<std::size_t>(ell));
  for (int j = 0; j <= Y.b() && j < ell; ++j) {
    eta[static_cast<std::size_t>(j)] = pt.eval(Y.coef(1, j));
    xi[static_cast<std::size_t>(j)] = pt.eval(Y.coef(0, j));
  }
  if (!xi[0]) throw CheckFailed("certificate point kills the leading coefficient of xi");
  // power series division
  std::vector<std::uint64_t> al(static_cast<std::size_t>(ell));
  const std::uint64_t inv0 = fp::inv(xi[0]);
  for (int k = 0; k < ell; ++k) {
    std::uint64_t s = eta[static_cast<std::size_t>(k)];
    for (int t = 1; t <= k; ++t)
      s = fp::sub(s, fp::mul(xi[static_cast<std::size_t>(t)], al[static_cast<std::size_t>(k - t)]));
    al[static_cast<std::size_t>(k)] = fp::mul(s, inv0);
  }
  Series x;  // -alpha u
  for (int k = 0; k < ell; ++k)
    if (al[static_cast<std::size_t>(k)]) x[{1, k}] = fp::sub(0, al[static_cast<std::size_t>(k)]);
  Series r{{{0, 0}, 1}}, p = r;
  for (int k = 1; k < ell; ++k) {
    p = smul(p, x, ell);
    for (const auto& [key, c] : p) {
      auto& y = r[key];
      y = fp::add(y, c);
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second ? std::next(it) : r.erase(it);
  return r;
}

// h = prod_{i<n} (1 + alpha_i u)^{-1}, with s^{-1} = u^n h
Series correction(int n, int ell, const Mode& mode) {
  Series h{{{0, 0}, 1}};
  for (int i = 0; i < n; ++i) h = smul(h, inverse_factor(i, ell, mode), ell);
  return h;
}

// S^{+-} / (u^{-a} S^+ + H_n(U^-)) inside the window
struct Core {
  int a, d, ell, n;
  CechWindow w;
  int top;  // largest u-exponent not killed by u^{-a} S^+
  std::map<Mono, Vec, ColLess> pivots;  // pivot column -> normalized, fully reduced row
  std::vector<Mono> basis;               // non-pivot columns
  long rank = 0;
  bool triangular = true;

  Vec reduce(Vec v) const {
    Vec out;
    while (!v.empty()) {
      auto it = v.begin();
      Mono k = it->first;
      std::uint64_t c = it->second;
      v.erase(it);
      auto p = pivots.find(k);
      if (p == pivots.end()) {
        vadd(out, k, c);
        continue;
      }
      for (const auto& [pk, pc] : p->second)
        if (pk != k) vadd(v, pk, fp::sub(0, fp::mul(c, pc)));
    }
    return out;
  }

  Vec project(const Series& t, int di, int dj) const {
    Vec v;
    for (const auto& [k, c] : t) {
      Mono m{k.first + di, k.second + dj};
      if (m.first > w.hi || m.first < w.lo)
        throw WindowTooSmall("term u^" + std::to_string(m.first) + " leaves the window");
      if (m.first <= top && m.second < ell) vadd(v, m, c);
    }
    return v;
  }
};

Core build_core(int a, int d, int ell, int n, CechWindow w, const Mode& mode) {
  if (w.hi < -a) throw WindowTooSmall("window top below u^{-a}");
  Core core{a, d, ell, n, w, std::min(-a - 1, w.hi), {}, {}, 0, true};
  const Series h = correction(n, ell, mode);
  // every term u^k v^j of h has j >= k, exactly, since each alpha_i is in (v)
  for (const auto& [k, c] : h)
    if (k.second < k.first) core.triangular = false;
  // U^- generators u^i v^j h, i <= min(n, j + d); those starting at or above
  // u^{-a} vanish in the quotient
  for (int j = 0; j < ell; ++j)
    for (int i = w.lo; i <= std::min(n, j + d) && i <= core.top; ++i) {
      Vec row = core.project(h, i, j);
      Vec r = core.reduce(row);
      if (r.empty()) {
        core.triangular = false;
        continue;
      }
      Mono pk = r.begin()->first;
      if (pk != Mono{i, j}) core.triangular = false;
      std::uint64_t inv = fp::inv(r.begin()->second);
      for (auto& [k, c] : r) c = fp::mul(c, inv);
      for (auto& [k, prow] : core.pivots) {
        auto f = prow.find(pk);
        if (f == prow.end()) continue;
        std::uint64_t c = f->second;
        for (const auto& [rk, rc] : r) vadd(prow, rk, fp::sub(0, fp::mul(c, rc)));
      }
      core.pivots.emplace(pk, std::move(r));
    }
  core.rank = static_cast<long>(core.pivots.size());
  for (int j = 0; j < ell; ++j)
    for (int i = w.lo; i <= core.top; ++i)
      if (!core.pivots.count({i, j})) core.basis.push_back({i, j});
  std::sort(core.basis.begin(), core.basis.end());
  for (const auto& b : core.basis)
    if (b.first == w.lo || b.first == w.hi)
      throw WindowTooSmall("cokernel basis touches the window boundary at u^" + std::to_string(b.first));
  return core;
}

void check_pre(int a, int d, int ell, int n) {
  if (d < 0) throw std::invalid_argument("fat fiber: d must be nonnegative");
  if (ell < std::max(1, -a - 1)) throw std::invalid_argument("fat fiber: ell below max(1, -a-1)");
  if (n < std::max({d, 1, -a - 1})) throw std::invalid_argument("fat fiber: n below max(d, 1, -a-1)");
}

// coordinates of reduced vectors on a basis, one row per vector
std::vector<std::vector<std::uint64_t>> coords(const std::vector<Vec>& vs, const std::vector<Mono>& basis) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& v : vs) {
    std::vector<std::uint64_t> r(basis.size());
    for (const auto& [k, c] : v) {
      auto it = std::lower_bound(basis.begin(), basis.end(), k);
      if (it == basis.end() || *it != k) throw std::logic_error("fat fiber: reduced vector leaves the basis");
      r[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t rank_of(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  return rows.empty() || cols == 0 ? 0 : rank_mod_p(rows, cols);
}

// Jordan type of multiplication by v on the cokernel
TorsionProfile v_profile(const Core& c) {
  const std::size_t dim = c.basis.size();
  if (dim == 0) return {};
  // images of the basis under v^k, k = 0, 1, ...
  std::vector<Vec> cur;
  for (const auto& b : c.basis) cur.push_back(Vec{{b, 1}});
  std::vector<long> r{static_cast<long>(dim)};
  while (r.back() > 0) {
    for (auto& v : cur) {
      Vec s;
      for (const auto& [k, x] : v)
        if (k.second + 1 < c.ell) vadd(s, {k.first, k.second + 1}, x);
      v = c.reduce(s);
    }
    r.push_back(static_cast<long>(rank_of(coords(cur, c.basis), dim)));
    if (r.back() == r[r.size() - 2]) throw CheckFailed("v is not nilpotent on the cokernel");
  }
  // blocks of size >= k: r_{k-1} - r_k
  std::vector<int> m;
  for (std::size_t k = 1; k < r.size(); ++k) {
    long ge = r[k - 1] - r[k];
    long ge_next = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
    for (long t = 0; t < ge - ge_next; ++t) m.push_back(static_cast<int>(k));
  }
  return TorsionProfile::from(m);
}

std::vector<Mono> closed_form_basis(int a, int d) {
  std::vector<Mono> b;
  for (int i = d + 1; i <= -a - 1; ++i)
    for (int j = 0; j <= i - d - 1; ++j) b.push_back({i, j});
  std::sort(b.begin(), b.end());
  return b;
}

bool same_image(const Core& x, const Core& y) {
  if (x.rank != y.rank) return false;
  for (const auto& [k, row] : y.pivots)
    if (!x.reduce(row).empty()) return false;
  return true;
}

}  // namespace

bool CechResult::matches_closed_form() const {
  std::vector<int> expect;
  for (int k = -a - d - 1; k >= 1; --k) expect.push_back(k);
  return triangular && basis == closed_form && dim == binom(-a - d, 2) && profile.multiplicities == expect;
}

CechResult cech_h1_fatfiber(int a, int b, int d, int ell, int n, const Mode& mode) {
  return cech_h1_fatfiber(a, b, d, ell, n, default_window(a, ell, n), mode);
}

CechResult cech_h1_fatfiber(int a, int b, int d, int ell, int n, CechWindow w, const Mode& mode) {
  check_pre(a, d, ell, n);
  // b enters only through W, which misses the fiber Z
  Core core = build_core(a, d, ell, n, w, mode);
  CechResult r;
  r.a = a, r.b = b, r.d = d, r.ell = ell, r.n = n, r.window = w;
  r.basis = core.basis;
  r.dim = static_cast<long>(core.basis.size());
  r.image_rank = core.rank;
  r.triangular = core.triangular;
  r.profile = v_profile(core);
  r.closed_form = closed_form_basis(a, d);
  return r;
}

StabilizationReport mu_t_and_stabilization(int a, int b, int d, int ell, int n, const Mode& mode) {
  (void)b;
  check_pre(a, d, ell, n);
  CechWindow w = default_window(a, ell + 1, n + 1);
  Core c0 = build_core(a, d, ell, n, w, mode);
  Core c1 = build_core(a, d, ell, n + 1, w, mode);
  Core cl = build_core(a, d, ell + 1, n, w, mode);
  StabilizationReport rep;
  rep.dim_n = static_cast<long>(c0.basis.size());
  rep.dim_n1 = static_cast<long>(c1.basis.size());
  rep.dim_ell1 = static_cast<long>(cl.basis.size());
  // t acts as the identity of S^{+-}; bijective on cokernels iff the images agree
  rep.mu_t_bijective = same_image(c0, c1);
  // restriction S^{+-}/(v^{ell+1}) -> S^{+-}/(v^ell) on cokernels
  std::vector<Vec> cols;
  for (const auto& m : cl.basis) {
    Vec v;
    if (m.second < ell) vadd(v, m, 1);
    cols.push_back(c0.reduce(v));
  }
  rep.restriction_bijective =
      cl.basis.size() == c0.basis.size() && rank_of(coords(cols, c0.basis), c0.basis.size()) == c0.basis.size();
  if (!rep.mu_t_bijective)
    throw CheckFailed("multiplication by t is not bijective at n = " + std::to_string(n));
  if (!rep.restriction_bijective)
    throw CheckFailed("restriction from ell = " + std::to_string(ell + 1) + " is not bijective");
  return rep;
}

FiltrationReport filtration_pointmodules(int a, int b, int d, int ell, int n_lo, int n_hi, const Mode& mode) {
  (void)b;
  if (n_hi < n_lo) throw std::invalid_argument("filtration: empty window");
  check_pre(a, d, ell, n_lo);
  FiltrationReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  CechWindow w = default_window(a, ell, n_hi + 1);
  std::vector<Core> cores;
  for (int n = n_lo; n <= n_hi + 1; ++n) cores.push_back(build_core(a, d, ell, n, w, mode));
  // subquotients W(c)/W(c+1) of V(e)/V(e-1), spanned by u^{c+e} v^c
  std::vector<Mono> sub;
  for (int e = d + 1; e <= -a - 1; ++e)
    for (int c = 0; c <= -a - e - 1; ++c) sub.push_back({c + e, c});
  rep.hilbert.assign(sub.size(), {});
  for (int n = n_lo; n <= n_hi; ++n) {
    const Core& cur = cores[static_cast<std::size_t>(n - n_lo)];
    const Core& nxt = cores[static_cast<std::size_t>(n - n_lo + 1)];
    if (cur.basis.size() != sub.size())
      throw CheckFailed("flag length " + std::to_string(sub.size()) + " differs from dim H_" + std::to_string(n));
    for (std::size_t s = 0; s < sub.size(); ++s)
      rep.hilbert[s].push_back(std::binary_search(cur.basis.begin(), cur.basis.end(), sub[s]) ? 1 : 0);
    if (!same_image(cur, nxt))
      throw CheckFailed("t is not bijective between degrees " + std::to_string(n) + " and " + std::to_string(n + 1));
    // H^0(ell Z, R') = g k[v] + u v g k[v], where r_n^{-1} = u g
    const Series g = inverse_factor(n, ell, mode);
    std::vector<Series> gens;
    for (int k = 0; k < ell; ++k) {
      Series a1, a2;
      for (const auto& [key, c] : g) {
        if (key.second + k < ell) a1[{key.first, key.second + k}] = c;
        if (key.second + k + 1 < ell) a2[{key.first + 1, key.second + k + 1}] = c;
      }
      gens.push_back(a1);
      if (!a2.empty()) gens.push_back(a2);
    }
    rep.action_generators = static_cast<long>(gens.size());
    for (const auto& m : cur.basis) {
      const int e0 = m.first - m.second;
      for (const auto& f : gens) {
        for (const auto& [k, c] : nxt.reduce(nxt.project(f, m.first, m.second))) {
          (void)c;
          const int e = k.first - k.second;
          if (e > e0)
            throw CheckFailed("V(" + std::to_string(e0) + ") is not stable: u^" + std::to_string(m.first) + "v^" +
                              std::to_string(m.second) + " maps onto u^" + std::to_string(k.first) + "v^" +
                              std::to_string(k.second));
          if (e == e0 && k.second < m.second)
            throw CheckFailed("W(" + std::to_string(m.second) + ") in V(" + std::to_string(e0) + ")/V(" +
                              std::to_string(e0 - 1) + ") is not stable");
        }
      }
    }
  }
  for (const auto& h : rep.hilbert)
    if (std::all_of(h.begin(), h.end(), [](long x) { return x == 1; })) ++rep.point_modules;
  if (rep.point_modules != static_cast<long>(sub.size())) throw CheckFailed("a subquotient is not one-dimensional");
  return rep;
}

// ---- pushforward

long product_ideal_exponent(int n, int m, int s) {
  if (n < 0 || m < 0) throw std::invalid_argument("product_ideal_exponent: negative index");
  if (s < 0) return LONG_MAX;
  // dp[t]: least w-exponent using t factors for u among those seen so far
  std::vector<long> dp(static_cast<std::size_t>(n) + 1, LONG_MAX);
  dp[0] = 0;
  for (int h = 1; h <= n; ++h) {
    const long c = m + h - 1;
    for (int t = h; t >= 0; --t) {
      long best = dp[static_cast<std::size_t>(t)] == LONG_MAX ? LONG_MAX : dp[static_cast<std::size_t>(t)] + c;
      if (t > 0 && dp[static_cast<std::size_t>(t - 1)] < best) best = dp[static_cast<std::size_t>(t - 1)];
      dp[static_cast<std::size_t>(t)] = best;
    }
  }
  long r = LONG_MAX;
  for (int t = 0; t <= std::min(s, n); ++t) r = std::min(r, dp[static_cast<std::size_t>(t)]);
  return r;
}

R1pLength r1p_length(int n, int m, int a, int b, Variant v) {
  (void)b;
  if (n < -a - 1) throw std::invalid_argument("r1p_length: needs n >= -a-1");
  if (n < 0 || m < 0) throw std::invalid_argument("r1p_length: negative index");
  R1pLength r;
  r.closed_form = a <= -2 ? 2 * (m * binom(-a, 2) + binom(-a, 3)) : 0;
  if (v == Variant::R) {
    for (int k = 0; k <= n + m; ++k) {
      // order of the base ideal at Q_k and the resulting local twist
      int e = k <= m - 1 ? n : (k <= n + m - 1 ? n + m - k - 1 : 0);
      int ap = n + a - e;
      std::vector<int> prof;
      for (int s = -ap - 1; s >= 1; --s) prof.push_back(s);
      for (OrbitWhich w : {OrbitWhich::F, OrbitWhich::Q}) {
        PointProfile p{w, k, ap, TorsionProfile::from(prof)};
        r.total += p.profile.total();
        if (!p.profile.multiplicities.empty()) r.points.push_back(p);
      }
    }
    return r;
  }
  // monomials of S^{+-} outside F(U^+) + F(U^-) along the fat fiber, at f and
  // at q; the bound L covers every run and L + 1 must give the same count
  const long L = std::max<long>(1, product_ideal_exponent(n, m, 0) + 1);
  auto count = [&](long ell, bool at_f, std::vector<int>* prof) {
    long c = 0;
    // at f (coordinate w = 1/v): u^i w^j with i >= 0, i > n+a, j < e(i)
    // at q: u^i v^j with i < 0, j < e(n+a-i)
    const int lo = at_f ? std::max(0, n + a + 1) : a + 1 - n - 1;
    const int hi = at_f ? n + std::abs(a) + 2 : -1;
    for (int i = lo; i <= hi; ++i) {
      if (!at_f && n + a - i < 0) continue;
      long e = product_ideal_exponent(n, m, at_f ? i : n + a - i);
      long run = std::min(e, ell);
      c += run;
      if (prof && run > 0) prof->push_back(static_cast<int>(run));
    }
    return c;
  };
  for (bool at_f : {true, false}) {
    std::vector<int> prof;
    long c = count(L, at_f, &prof);
    if (count(L + 1, at_f, nullptr) != c) throw CheckFailed("A-variant count does not stabilize in ell");
    PointProfile p{at_f ? OrbitWhich::F : OrbitWhich::Q, 0, a, TorsionProfile::from(prof)};
    r.total += c;
    if (!p.profile.multiplicities.empty()) r.points.push_back(p);
  }
  return r;
}

bool r1p_profiles_match_cech(const R1pLength& r, int b, const Mode& mode) {
  for (const auto& p : r.points) {
    const int a = p.effective_a;
    const int ell = std::max(1, -a - 1), n = std::max(1, -a - 1);
    CechResult c = cech_h1_fatfiber(a, b, 0, ell, n, mode);
    if (!(c.profile == p.profile)) return false;
  }
  return true;
}

bool PushforwardSplit::matches() const {
  auto x = degrees_before, y = closed_form;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

void split_range(int n, int a) {
  if (n < 0) throw RangeUnsupported("pushforward: negative n");
  if (a <= -1 && n < -a) throw RangeUnsupported("pushforward: a <= -1 needs n >= -a");
  if (a >= 0 && n < a + 1) throw RangeUnsupported("pushforward: a >= 0 needs n >= a+1");
}

std::vector<long> split_degrees(int n, int m, int a) {
  std::vector<long> d;
  for (int i = 0; i <= n + a; ++i) {
    // U_- : u^i v^{-j}, j >= e(i);  U_+ : u^i v^j, j >= e(n+a-i)
    long em = product_ideal_exponent(n, m, i), ep = product_ideal_exponent(n, m, n + a - i);
    d.push_back(-(em + ep));
  }
  return d;
}

long twist_shift(int n, int m, int b) { return static_cast<long>(n) * m + binom(n + 1, 2) + b; }

long split_h1(const std::vector<long>& degs) {
  long h = 0;
  for (long x : degs) h += std::max(0L, -x - 1);
  return h;
}

}  // namespace

PushforwardSplit pushforward_split_A(int n, int m, int a, int b, int scan) {
  split_range(n, a);
  PushforwardSplit r;
  r.n = n, r.m = m, r.a = a, r.b = b;
  r.degrees_before = split_degrees(n, m, a);
  if (a <= -1) {
    for (int i = 0; i <= n + a; ++i) r.closed_form.push_back(-(m * (n - a) + binom(n - i, 2) + binom(i - a, 2)));
  } else {
    for (int i = 0; i <= a; ++i)
      for (int rep = 0; rep < 2; ++rep) r.closed_form.push_back(-(m * (n - i) + binom(n - i, 2)));
    for (int i = a + 1; i <= n - 1; ++i) r.closed_form.push_back(-(m * (n - a) + binom(n - i, 2) + binom(i - a, 2)));
  }
  const long sh = twist_shift(n, m, b);
  for (long x : r.degrees_before) r.degrees.push_back(x + sh);
  r.h1 = split_h1(r.degrees);
  const int nmin = a <= -1 ? -a : a + 1;
  const int nmax = std::max(n, nmin) + scan;
  r.n0 = nmax + 1;
  for (int k = nmax; k >= nmin; --k) {
    auto dg = split_degrees(k, m, a);
    for (auto& x : dg) x += twist_shift(k, m, b);
    if (split_h1(dg) != 0) break;
    r.n0 = k;
  }
  return r;
}

long a_sheaf_h1(int n, int m, int a, int b) {
  if (n < 0 || m < 0) throw std::invalid_argument("a_sheaf_h1: negative index");
  const long A = n + a, B = twist_degree(n, m) + b;
  // global sections: monomials of O(A, B) meeting the local ideals at F and Q
  long h0 = 0;
  for (long i = 0; i <= A; ++i)
    for (long j = 0; j <= B; ++j)
      if (B - j >= product_ideal_exponent(n, m, static_cast<int>(i)) &&
          j >= product_ideal_exponent(n, m, static_cast<int>(A - i)))
        ++h0;
  const long len = 2 * (m * binom(n + 1, 2) + binom(n + 1, 3));
  const long chi = (A + 1) * (B + 1) - len;
  const long h2 = (A <= -2 && B <= -2) ? (-A - 1) * (-B - 1) : 0;
  return h0 + h2 - chi;
}

LerayReport leray_balance(int n, int m, int a, int b, bool with_R) {
  LerayReport r;
  r.n = n, r.m = m, r.a = a, r.b = b;
  r.h1_T_A = a_sheaf_h1(n, m, a, b);
  r.h1_push_A = pushforward_split_A(n, m, a, b, 0).h1;
  r.len_A = r1p_length(n, m, a, b, Variant::A).total;
  if (with_R && n + a >= 0 && twist_degree(n, m) + b >= 0) {
    CohomologyCount c = h0_h1(n, m, a, b, Mode::generic());
    r.has_R = true;
    r.h1_T_R = c.h1;
    r.len_R = r1p_length(n, m, a, b, Variant::R).total;
  }
  return r;
}

}  // namespace bcs
