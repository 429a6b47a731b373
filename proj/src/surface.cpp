#include "bcsurf/surface.hpp"

#include <algorithm>
#include <sstream>

namespace bcs {

// ---- BiForm

BiForm BiForm::monomial(int a, int b, int i, int j, const Scalar& c) {
  BiForm f(a, b);
  f.coef(i, j) = c;
  return f;
}

bool BiForm::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

BiForm& BiForm::operator+=(const BiForm& o) {
  if (a_ != o.a_ || b_ != o.b_) throw std::invalid_argument("BiForm: bidegree mismatch in sum");
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
  if (a_ != o.a_ || b_ != o.b_) throw std::invalid_argument("BiForm: bidegree mismatch in difference");
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
  return *this;
}

BiForm operator*(const BiForm& f, const BiForm& g) {
  BiForm h(f.a_ + g.a_, f.b_ + g.b_);
  for (int i1 = 0; i1 <= f.a_; ++i1)
    for (int j1 = 0; j1 <= f.b_; ++j1) {
      const Scalar& s = f.coef(i1, j1);
      if (s.is_zero()) continue;
      for (int i2 = 0; i2 <= g.a_; ++i2)
        for (int j2 = 0; j2 <= g.b_; ++j2) {
          const Scalar& t = g.coef(i2, j2);
          if (t.is_zero()) continue;
          h.coef(i1 + i2, j1 + j2) += s * t;
        }
    }
  return h;
}

BiForm BiForm::scaled(const Scalar& s) const {
  BiForm r = *this;
  for (auto& c : r.c_)
    if (!c.is_zero()) c *= s;
  return r;
}

BiForm BiForm::pow(int e) const {
  BiForm r = monomial(0, 0, 0, 0);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool operator==(const BiForm& f, const BiForm& g) {
  return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
}

Scalar BiForm::eval(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& w) const {
  std::vector<Scalar> px(a_ + 1), py(a_ + 1), pz(b_ + 1), pw(b_ + 1);
  px[0] = py[0] = pz[0] = pw[0] = Scalar(1);
  for (int k = 1; k <= a_; ++k) {
    px[k] = px[k - 1] * x;
    py[k] = py[k - 1] * y;
  }
  for (int k = 1; k <= b_; ++k) {
    pz[k] = pz[k - 1] * z;
    pw[k] = pw[k - 1] * w;
  }
  Scalar s;
  for (int i = 0; i <= a_; ++i) {
    Scalar row;
    for (int j = 0; j <= b_; ++j) {
      const Scalar& c = coef(i, j);
      if (!c.is_zero()) row += c * pz[j] * pw[b_ - j];
    }
    if (!row.is_zero()) s += row * px[i] * py[a_ - i];
  }
  return s;
}

std::vector<std::uint64_t> BiForm::reduce_mod_p(const fp::Point& pt) const {
  std::vector<std::uint64_t> v(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].is_zero() ? 0 : pt.eval(c_[k]);
  return v;
}

std::string BiForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = a_; i >= 0; --i)
    for (int j = b_; j >= 0; --j) {
      const Scalar& c = coef(i, j);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      auto pw = [&](const char* v, int e) {
        if (e == 1) os << "*" << v;
        if (e > 1) os << "*" << v << "^" << e;
      };
      pw("x", i);
      pw("y", a_ - i);
      pw("z", j);
      pw("w", b_ - j);
    }
  return first ? "0" : os.str();
}

bool proportional(const BiForm& f, const BiForm& g) {
  if (f.a() != g.a() || f.b() != g.b()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  std::size_t k = 0;
  while (f.coeffs()[k].is_zero()) ++k;
  if (g.coeffs()[k].is_zero()) return false;
  Scalar r = g.coeffs()[k] / f.coeffs()[k];
  for (std::size_t t = 0; t < f.size(); ++t)
    if (f.coeffs()[t] * r != g.coeffs()[t]) return false;
  return true;
}

// ---- maps

MapSpec MapSpec::make(MapKind kind, const Mode& mode) {
  Abbrev ab = mode.abbrev();
  const Scalar &g = ab.gamma, &d = ab.delta, &e = ab.epsilon, &z = ab.zeta;
  MapSpec m{kind, {}};
  BiForm X = BiForm::x(), Y = BiForm::y(), Z = BiForm::z(), W = BiForm::w();
  switch (kind) {
    case MapKind::Sigma:
      m.images = {X * Z, Y * W, Z, W};
      break;
    case MapKind::SigmaInverse:
      m.images = {X * W, Y * Z, Z, W};
      break;
    case MapKind::Tau:
      m.images = {X.scaled(g) + Y.scaled(d), X.scaled(d) + Y.scaled(g), Z.scaled(e) + W.scaled(z),
                  Z.scaled(z) + W.scaled(e)};
      break;
    case MapKind::TauInverse:
      m.images = {X.scaled(g) - Y.scaled(d), Y.scaled(g) - X.scaled(d), Z.scaled(e) - W.scaled(z),
                  W.scaled(e) - Z.scaled(z)};
      break;
    case MapKind::Phi: {
      // sigma first, then tau
      auto tau = make(MapKind::Tau, mode).images;
      auto sig = make(MapKind::Sigma, mode).images;
      for (int k = 0; k < 4; ++k) m.images[k] = substitute(tau[k], sig);
      break;
    }
    case MapKind::PhiInverse: {
      auto ti = make(MapKind::TauInverse, mode).images;
      auto si = make(MapKind::SigmaInverse, mode).images;
      for (int k = 0; k < 4; ++k) m.images[k] = substitute(si[k], ti);
      break;
    }
  }
  return m;
}

BiForm substitute(const BiForm& f, const std::array<BiForm, 4>& im) {
  const int a = f.a(), b = f.b();
  std::vector<BiForm> px(a + 1), py(a + 1), pz(b + 1), pw(b + 1);
  px[0] = py[0] = pz[0] = pw[0] = BiForm::monomial(0, 0, 0, 0);
  for (int k = 1; k <= a; ++k) {
    px[k] = px[k - 1] * im[0];
    py[k] = py[k - 1] * im[1];
  }
  for (int k = 1; k <= b; ++k) {
    pz[k] = pz[k - 1] * im[2];
    pw[k] = pw[k - 1] * im[3];
  }
  const int ra = a * im[0].a() + b * im[2].a();
  const int rb = a * im[0].b() + b * im[2].b();
  BiForm out(ra, rb);
  std::vector<BiForm> second(b + 1);
  for (int j = 0; j <= b; ++j) second[j] = pz[j] * pw[b - j];
  for (int i = 0; i <= a; ++i) {
    BiForm xy = px[i] * py[a - i];
    for (int j = 0; j <= b; ++j) {
      const Scalar& c = f.coef(i, j);
      if (c.is_zero()) continue;
      out += (xy * second[j]).scaled(c);
    }
  }
  return out;
}

Pullback pullback_form(const BiForm& f, const MapSpec& map) {
  if (f.is_zero()) throw ZeroForm();
  Pullback r{substitute(f, map.images), false};
  MPoly g(kParamVars);
  for (const auto& c : r.form.coeffs()) {
    if (c.is_zero()) continue;
    if (!c.is_poly()) return r;
    g = poly_gcd(g, c.num());
    if (g.is_constant()) break;
  }
  if (!g.is_constant()) {
    Scalar gs(g);
    for (auto& c : r.form.coeffs())
      if (!c.is_zero()) c /= gs;
    r.cancelled = true;
  }
  // rational content as well, so the tau-one forms come out monic
  mpz_class num = 0, den = 1;
  for (const auto& c : r.form.coeffs()) {
    if (c.is_zero()) continue;
    mpq_class q = abs(c.num().content());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  mpq_class q(num, den);
  q.canonicalize();
  if (q != 0 && q != 1) {
    Scalar inv(mpq_class(1 / q));
    for (auto& c : r.form.coeffs())
      if (!c.is_zero()) c *= inv;
  }
  return r;
}

CurveForms curve_forms(int n, const Mode& mode) {
  if (n < 0) throw std::invalid_argument("curve_forms: negative n");
  MapSpec phi = MapSpec::make(MapKind::Phi, mode);
  CurveForms c{BiForm::x(), BiForm::y(), BiForm::z(), BiForm::w()};
  for (int k = 0; k < n; ++k) {
    for (BiForm* f : {&c.X, &c.Y, &c.Z, &c.W}) {
      Pullback p = pullback_form(*f, phi);
      if (p.cancelled && mode.kind == ModeKind::Generic)
        throw std::logic_error("curve_forms: content cancelled in generic mode (stability violated)");
      *f = std::move(p.form);
    }
  }
  return c;
}

namespace {

using UPoly = std::vector<Scalar>;  // ascending coefficients

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// (rho, theta) coefficient polynomial times z^e, in Q[rho, theta, z]
MPoly lift_z(const MPoly& p, int e) {
  MPoly out(3);
  for (const auto& t : p.terms()) {
    auto x = MPoly::unpack(t.key, p.nvars());
    out += MPoly::monomial(3, {x[0], x[1], e}, t.c);
  }
  return out;
}

// degree of the gcd of binary forms of degree d, each given by coefficients of
// z^j w^(d-j).  Dehomogenize at w = 1 and take the multivariate gcd over
// Q[rho, theta, z]; factors free of z are parameter content, not curves.
int binary_gcd_degree(const std::vector<UPoly>& forms, int d) {
  int wmult = d;
  MPoly g(3);
  bool any = false;
  for (const auto& f : forms) {
    UPoly t = f;
    trim(t);
    if (t.empty()) continue;
    any = true;
    wmult = std::min(wmult, d - static_cast<int>(t.size() - 1));
    MPoly h(3);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j].is_zero()) continue;
      Scalar s = t[j];
      if (!s.is_poly()) throw std::invalid_argument("stability_certificate: non-polynomial coefficient");
      h += lift_z(s.num(), static_cast<int>(j));
    }
    g = poly_gcd(g, h);
  }
  if (!any) return d;
  return std::max(0, g.degree_in(2)) + wmult;
}

}  // namespace

std::vector<StabilityStep> stability_certificate(int bound, const Mode& mode) {
  std::vector<StabilityStep> out;
  MapSpec phi = MapSpec::make(MapKind::Phi, mode);
  CurveForms c{BiForm::x(), BiForm::y(), BiForm::z(), BiForm::w()};
  for (int n = 1; n <= bound; ++n) {
    c.X = substitute(c.X, phi.images);
    c.Y = substitute(c.Y, phi.images);
    c.Z = substitute(c.Z, phi.images);
    c.W = substitute(c.W, phi.images);
    std::vector<UPoly> xy;
    for (const BiForm* f : {&c.X, &c.Y})
      for (int i = 0; i <= 1; ++i) {
        UPoly u(n + 1);
        for (int j = 0; j <= n; ++j) u[j] = f->coef(i, j);
        xy.push_back(u);
      }
    std::vector<UPoly> zw;
    for (const BiForm* f : {&c.Z, &c.W}) zw.push_back({f->coef(0, 0), f->coef(0, 1)});
    StabilityStep s;
    s.n = n;
    s.xy_factor_degree = binary_gcd_degree(xy, n);
    s.zw_factor_degree = binary_gcd_degree(zw, 1);
    out.push_back(s);
  }
  return out;
}

// ---- points

SurfacePoint SurfacePoint::normalized() const {
  SurfacePoint r = *this;
  for (auto* pr : {&r.first, &r.second}) {
    auto& p = *pr;
    if (!p[1].is_zero()) {
      p[0] /= p[1];
      p[1] = Scalar(1);
    } else if (!p[0].is_zero()) {
      p[0] = Scalar(1);
    } else {
      throw std::invalid_argument("SurfacePoint: both coordinates zero");
    }
  }
  return r;
}

SurfacePoint SurfacePoint::to_square() const {
  if (system == CoordSystem::Square) return *this;
  SurfacePoint r;
  r.system = CoordSystem::Square;
  r.first = {first[0] + first[1], first[1] - first[0]};
  r.second = {second[0] + second[1], second[1] - second[0]};
  return r;
}

SurfacePoint SurfacePoint::to_round() const {
  if (system == CoordSystem::Round) return *this;
  SurfacePoint r;
  r.system = CoordSystem::Round;
  r.first = {first[0] - first[1], first[0] + first[1]};
  r.second = {second[0] - second[1], second[0] + second[1]};
  return r;
}

bool SurfacePoint::same_point(const SurfacePoint& o) const {
  SurfacePoint a = to_square(), b = o.to_square();
  return a.first[0] * b.first[1] == a.first[1] * b.first[0] &&
         a.second[0] * b.second[1] == a.second[1] * b.second[0];
}

std::string SurfacePoint::str() const {
  const char* l = system == CoordSystem::Square ? "[" : "(";
  const char* r = system == CoordSystem::Square ? "]" : ")";
  return std::string(l) + first[0].str() + " : " + first[1].str() + r + l + second[0].str() + " : " +
         second[1].str() + r;
}

SurfacePoint orbit_point(int n, OrbitWhich which, const Mode& mode) {
  Scalar rho = mode.rho(), theta = mode.theta();
  Scalar p(1), q(-1), tp(1);
  for (int k = 0; k < n; ++k) {
    tp *= theta;
    Scalar np = rho * p - tp * q;
    Scalar nq = q - rho * tp * p;
    p = std::move(np);
    q = std::move(nq);
  }
  if (p.is_zero() && q.is_zero()) throw UndefinedOrbitPoint(n);
  SurfacePoint pt;
  pt.system = CoordSystem::Round;
  if (which == OrbitWhich::F) {
    pt.first = {p, q};
    pt.second = {tp, Scalar(1)};
  } else {
    // psi swaps the coordinates in both factors: (a:b) -> (-a:b)
    pt.first = {-p, q};
    pt.second = {-tp, Scalar(1)};
  }
  return pt;
}

SurfacePoint apply_phi_inverse(const SurfacePoint& p, const Mode& mode) {
  SurfacePoint s = p.to_square();
  Abbrev ab = mode.abbrev();
  const Scalar &x = s.first[0], &y = s.first[1], &z = s.second[0], &w = s.second[1];
  Scalar x1 = ab.gamma * x - ab.delta * y, y1 = ab.gamma * y - ab.delta * x;
  Scalar z1 = ab.epsilon * z - ab.zeta * w, w1 = ab.epsilon * w - ab.zeta * z;
  SurfacePoint r;
  r.system = CoordSystem::Square;
  r.first = {x1 * w1, y1 * z1};
  r.second = {z1, w1};
  if (r.first[0].is_zero() && r.first[1].is_zero()) throw UndefinedOrbitPoint(-1);
  return r;
}

OrbitPolys orbit_polys(int nmax) {
  OrbitPolys o;
  MPoly rho = rho_poly(), theta = theta_poly();
  MPoly p(kParamVars, 1), q(kParamVars, -1), tp(kParamVars, 1);
  o.p.push_back(p);
  o.q.push_back(q);
  for (int k = 0; k < nmax; ++k) {
    tp = tp * theta;
    MPoly np = rho * p - tp * q;
    MPoly nq = q - rho * tp * p;
    p = np;
    q = nq;
    o.p.push_back(p);
    o.q.push_back(q);
  }
  return o;
}

std::vector<std::pair<int, int>> critdens_monomials(int m, int s) {
  std::vector<std::pair<int, int>> mons;
  for (int j = s; j >= 0; --j)
    for (int i = m; i >= 0; --i) mons.push_back({i, j});
  return mons;
}

MPoly critdens_determinant(int m, int s, const std::vector<int>& idx) {
  const std::size_t N = static_cast<std::size_t>((m + 1) * (s + 1));
  if (idx.size() != N) throw BadIndexList("critdens_determinant: need exactly (m+1)(s+1) indices");
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] < 0 || (k > 0 && idx[k] <= idx[k - 1]))
      throw BadIndexList("critdens_determinant: indices must be strictly increasing naturals");
  int nmax = *std::max_element(idx.begin(), idx.end());
  OrbitPolys o = orbit_polys(nmax);
  auto mons = critdens_monomials(m, s);
  ScalarMatrix M(N, N);
  MPoly theta = theta_poly();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int n = idx[j];
      auto [k, l] = mons[i];
      M(i, j) = Scalar(o.p[n].pow(k) * o.q[n].pow(m - k) * theta.pow(static_cast<unsigned>(l * n)));
    }
  return determinant(M).num();
}

LowestTerm lowest_term_theta_rho(const MPoly& p) {
  LowestTerm best;
  bool first = true;
  for (const auto& t : p.terms()) {
    auto e = MPoly::unpack(t.key, p.nvars());
    if (first || e[1] < best.theta_exp || (e[1] == best.theta_exp && e[0] < best.rho_exp)) {
      best = {e[1], e[0], t.c};
      first = false;
    }
  }
  return best;
}

LowestTerm predicted_lowest_term(int m, int s, const std::vector<int>& idx) {
  auto mons = critdens_monomials(m, s);
  LowestTerm t{0, 0, 1};
  for (std::size_t i = 0; i < mons.size(); ++i) {
    auto [k, l] = mons[i];
    t.rho_exp += k * idx[i];
    t.theta_exp += l * idx[i];
    if ((m - k) % 2) t.coeff = -t.coeff;
  }
  return t;
}

// ---- local conditions

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::vector<Scalar> powers(const Scalar& s, int n) {
  std::vector<Scalar> p(n + 1);
  p[0] = Scalar(1);
  for (int k = 1; k <= n; ++k) p[k] = p[k - 1] * s;
  return p;
}

}  // namespace

std::vector<std::vector<Scalar>> vanishing_conditions(const SurfacePoint& pt0, int mult, int a, int b) {
  SurfacePoint pt = pt0.to_square();
  const Scalar &x0 = pt.first[0], &y0 = pt.first[1], &z0 = pt.second[0], &w0 = pt.second[1];
  bool perturb_x = !y0.is_zero();
  bool perturb_z = !w0.is_zero();
  if ((!perturb_x && x0.is_zero()) || (!perturb_z && z0.is_zero()))
    throw std::invalid_argument("vanishing_conditions: no chart contains the point");
  auto px = powers(x0, a), py = powers(y0, a), pz = powers(z0, b), pw = powers(w0, b);
  std::vector<std::vector<Scalar>> rows;
  for (int tot = 0; tot < mult; ++tot)
    for (int k = 0; k <= tot; ++k) {
      int l = tot - k;
      // first-factor weights for each i, second-factor weights for each j
      std::vector<Scalar> fa(a + 1), fb(b + 1);
      for (int i = 0; i <= a; ++i) {
        if (perturb_x)
          fa[i] = i >= k ? Scalar(binom(i, k)) * px[i - k] * py[a - i] : Scalar(0);
        else
          fa[i] = a - i >= k ? Scalar(binom(a - i, k)) * px[i] * py[a - i - k] : Scalar(0);
      }
      for (int j = 0; j <= b; ++j) {
        if (perturb_z)
          fb[j] = j >= l ? Scalar(binom(j, l)) * pz[j - l] * pw[b - j] : Scalar(0);
        else
          fb[j] = b - j >= l ? Scalar(binom(b - j, l)) * pz[j] * pw[b - j - l] : Scalar(0);
      }
      std::vector<Scalar> row(static_cast<std::size_t>((a + 1) * (b + 1)));
      for (int i = 0; i <= a; ++i) {
        if (fa[i].is_zero()) continue;
        for (int j = 0; j <= b; ++j)
          if (!fb[j].is_zero()) row[static_cast<std::size_t>(i * (b + 1) + j)] = fa[i] * fb[j];
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

int vanishing_order(const BiForm& f, const SurfacePoint& pt, int cap) {
  auto rows = vanishing_conditions(pt, cap, f.a(), f.b());
  std::size_t r = 0;
  for (int tot = 0; tot < cap; ++tot)
    for (int k = 0; k <= tot; ++k, ++r) {
      Scalar s;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (!rows[r][t].is_zero() && !f.coeffs()[t].is_zero()) s += rows[r][t] * f.coeffs()[t];
      if (!s.is_zero()) return tot;
    }
  return cap;
}

// ---- base locus

namespace {

// truncated power series in b over Scalar
using Series = std::vector<Scalar>;

Series series_mul(const Series& p, const Series& q, int prec) {
  Series r(prec);
  for (int i = 0; i < prec && i < static_cast<int>(p.size()); ++i) {
    if (p[i].is_zero()) continue;
    for (int j = 0; i + j < prec && j < static_cast<int>(q.size()); ++j)
      if (!q[j].is_zero()) r[i + j] += p[i] * q[j];
  }
  return r;
}

Series series_inv(const Series& p, int prec) {
  Series r(prec);
  r[0] = p[0].inverse();
  for (int k = 1; k < prec; ++k) {
    Scalar s;
    for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j)
      if (!p[j].is_zero() && !r[k - j].is_zero()) s += p[j] * r[k - j];
    r[k] = -s * r[0];
  }
  return r;
}

// at F = [0:1][1:0], chart y = 1, z = 1, coordinates a = x, b = w.  For a
// (1,m)-form x*A(z,w) + y*B(z,w): returns (A, B) as series in b.
std::pair<Series, Series> local_at_F(const BiForm& f, int prec) {
  Series A(prec), B(prec);
  const int m = f.b();
  for (int j = 0; j <= m; ++j) {
    int e = m - j;  // power of w = b
    if (e >= prec) continue;
    A[e] = f.coef(1, j);
    B[e] = f.coef(0, j);
  }
  return {A, B};
}

}  // namespace

BaseLocusReport base_locus_check(int m, const Mode& mode) {
  BaseLocusReport rep;
  rep.m = m;
  if (m < 1) throw std::invalid_argument("base_locus_check: m >= 1 required");
  CurveForms c = curve_forms(m, mode);
  rep.bidegree_ok = c.X.a() == 1 && c.X.b() == m && c.Y.a() == 1 && c.Y.b() == m;
  std::vector<SurfacePoint> pts;
  for (int j = 0; j < m; ++j) {
    pts.push_back(orbit_point(j, OrbitWhich::F, mode).to_square());
    pts.push_back(orbit_point(j, OrbitWhich::Q, mode).to_square());
  }
  rep.vanish_ok = true;
  for (const auto& p : pts) {
    const auto& s = p;
    if (!c.X.eval(s.first[0], s.first[1], s.second[0], s.second[1]).is_zero() ||
        !c.Y.eval(s.first[0], s.first[1], s.second[0], s.second[1]).is_zero())
      rep.vanish_ok = false;
  }
  rep.distinct_ok = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].same_point(pts[j])) rep.distinct_ok = false;
  rep.transverse_ok = true;
  for (const auto& p : pts) {
    auto rows = vanishing_conditions(p, 2, 1, m);
    auto dot = [&](const std::vector<Scalar>& r, const BiForm& f) {
      Scalar s;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (!r[t].is_zero() && !f.coeffs()[t].is_zero()) s += r[t] * f.coeffs()[t];
      return s;
    };
    // rows[1] is d/ds (k=1,l=0), rows[2] is d/dt
    Scalar j = dot(rows[1], c.X) * dot(rows[2], c.Y) - dot(rows[2], c.X) * dot(rows[1], c.Y);
    if (j.is_zero()) rep.transverse_ok = false;
  }
  if (!rep.bidegree_ok)
    rep.failed_clause = "bidegree";
  else if (!rep.vanish_ok)
    rep.failed_clause = "vanishing";
  else if (!rep.distinct_ok)
    rep.failed_clause = "distinctness";
  else if (!rep.transverse_ok)
    rep.failed_clause = "transversality";

  // local ideal at F: solve X = 0 for a, then read the b-order of Y
  const int prec = m + 2;
  auto [A1, B1] = local_at_F(c.X, prec);
  auto [A2, B2] = local_at_F(c.Y, prec);
  // in generic mode transversality already pins the length; the series below
  // lives in the fraction field and gets slow
  if (!A1[0].is_zero() && (mode.kind != ModeKind::Generic || !rep.transverse_ok)) {
    Series a_sol = series_mul(B1, series_inv(A1, prec), prec);
    for (auto& s : a_sol) s = -s;
    Series rest = series_mul(A2, a_sol, prec);
    for (int k = 0; k < prec; ++k) rest[k] += B2[k];
    int ord = prec;
    for (int k = 0; k < prec; ++k)
      if (!rest[k].is_zero()) {
        ord = k;
        break;
      }
    rep.local_b_order = ord;
    rep.notes.push_back("local ideal at F is (a, b^" + std::to_string(ord) + ")");
  }
  return rep;
}

}  // namespace bcs
