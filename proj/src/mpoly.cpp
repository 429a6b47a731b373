#include "bcsurf/exact.hpp"

#include <algorithm>
#include <sstream>

namespace bcs {

namespace {

constexpr int kMaxVars = 4;

int field_shift(int i) { return 32 - 16 * i; }  // variable i < 3 lives at this shift

bool divides(MPoly::Key a, MPoly::Key b, int nvars) {
  auto ea = MPoly::unpack(a, nvars);
  auto eb = MPoly::unpack(b, nvars);
  for (int i = 0; i < nvars; ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

}  // namespace

MPoly::Key MPoly::pack(const std::vector<int>& e, int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("MPoly: at most four variables");
  Key total = 0;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] < 0 || e[i] > 0xffff) throw std::overflow_error("MPoly: exponent out of range");
    total += static_cast<Key>(e[i]);
  }
  if (total > 0xffff) throw std::overflow_error("MPoly: degree out of range");
  Key k = total << 48;
  for (int i = 0; i + 1 < nvars; ++i) k |= static_cast<Key>(e[i]) << field_shift(i);
  return k;
}

std::vector<int> MPoly::unpack(Key k, int nvars) {
  std::vector<int> e(nvars, 0);
  if (nvars == 0) return e;
  int rest = total_degree(k);
  for (int i = 0; i + 1 < nvars; ++i) {
    e[i] = static_cast<int>((k >> field_shift(i)) & 0xffff);
    rest -= e[i];
  }
  e[nvars - 1] = rest;
  return e;
}

MPoly::MPoly(int nvars, const mpq_class& c) : nvars_(nvars) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

MPoly MPoly::var(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(int nvars, const std::vector<int>& exps, const mpq_class& c) {
  MPoly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({pack(exps, nvars), c});
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].c == 1; }
mpq_class MPoly::constant_value() const { return terms_.empty() ? mpq_class(0) : terms_[0].c; }

int MPoly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.back().key); }

int MPoly::degree_in(int v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, unpack(t.key, nvars_)[v]);
  return d;
}

std::vector<MPoly> MPoly::coeffs_in(int v) const {
  std::vector<MPoly> out(std::max(0, degree_in(v) + 1), MPoly(nvars_));
  for (const auto& t : terms_) {
    auto e = unpack(t.key, nvars_);
    int d = e[v];
    e[v] = 0;
    out[d].terms_.push_back({pack(e, nvars_), t.c});
  }
  for (auto& p : out) std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  return out;
}

void MPoly::canonicalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().key == t.key)
      out.back().c += t.c;
    else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  terms_ = std::move(out);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    nvars_ = o.nvars_;
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key))
      out.push_back(terms_[i++]);
    else if (i == terms_.size() || o.terms_[j].key < terms_[i].key)
      out.push_back(o.terms_[j++]);
    else {
      mpq_class c = terms_[i].c + o.terms_[j].c;
      if (sgn(c) != 0) out.push_back({terms_[i].key, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1 && b.terms_[0].key == 0) return a.scaled(b.terms_[0].c);
  if (a.terms_.size() == 1 && a.terms_[0].key == 0) return b.scaled(a.terms_[0].c);
  std::vector<MPoly::Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) ts.push_back({s.key + t.key, s.c * t.c});
  r.canonicalize(ts);
  return r;
}

MPoly MPoly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return MPoly(nvars_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

MPoly MPoly::times_var_power(int v, int e) const {
  std::vector<int> ex(nvars_, 0);
  ex[v] = e;
  Key k = pack(ex, nvars_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.key += k;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(nvars_, 1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
  int nv = std::max(a.nvars_, b.nvars_);
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  MPoly q(nv), r = a;
  r.nvars_ = nv;
  const Term& lb = b.leading();
  std::vector<Term> qt;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (total_degree(lr.key) < total_degree(lb.key) || !divides(lb.key, lr.key, nv)) return std::nullopt;
    Term t{lr.key - lb.key, lr.c / lb.c};
    MPoly step(nv);
    step.terms_.push_back(t);
    qt.push_back(t);
    r -= step * b;
  }
  q.canonicalize(qt);
  return q;
}

mpq_class MPoly::content() const {
  if (terms_.empty()) return 0;
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  }
  mpq_class c(g, l);
  c.canonicalize();
  if (sgn(terms_.back().c) < 0) c = -c;
  return c;
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scaled(1 / content());
}

mpq_class MPoly::eval(const std::vector<mpq_class>& pt) const {
  mpq_class s = 0;
  for (const auto& t : terms_) {
    auto e = unpack(t.key, nvars_);
    mpq_class m = t.c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), pt[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), pt[i].get_den_mpz_t(), e[i]);
      m *= pw;
    }
    s += m;
  }
  return s;
}

MPoly MPoly::substitute(int v, const mpq_class& value) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    auto e = unpack(t.key, nvars_);
    mpq_class pw;
    mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e[v]);
    mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e[v]);
    e[v] = 0;
    ts.push_back({pack(e, nvars_), t.c * pw});
  }
  MPoly r(nvars_);
  r.canonicalize(ts);
  return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto e = unpack(it->key, nvars_);
    mpq_class c = it->c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool mono = it->key != 0;
    if (!mono || c != 1) os << c.get_str();
    bool need_star = !mono || c != 1;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string MPoly::str() const {
  static const std::vector<std::string> kNames = {"rho", "theta", "x2", "x3"};
  return str(kNames);
}

// ---- gcd: primitive pseudo-remainder sequences, recursive in the variables

namespace {

int some_var(const MPoly& p) {
  for (const auto& t : p.terms()) {
    auto e = MPoly::unpack(t.key, p.nvars());
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i] > 0) return i;
  }
  return -1;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_in(const MPoly& p, int v) {
  MPoly g(p.nvars());
  for (const auto& c : p.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MPoly prem(MPoly a, const MPoly& b, int v) {
  int db = b.degree_in(v);
  MPoly lb = b.coeffs_in(v)[db];
  while (!a.is_zero()) {
    int da = a.degree_in(v);
    if (da < db) break;
    MPoly la = a.coeffs_in(v)[da];
    a = lb * a - (la * b).times_var_power(v, da - db);
  }
  return a;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  int nv = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return MPoly(nv, 1);
  int v = some_var(a);
  if (b.degree_in(v) <= 0) return gcd_rec(content_in(a, v), b);
  if (a.degree_in(v) <= 0) return gcd_rec(a, content_in(b, v));
  MPoly ca = content_in(a, v), cb = content_in(b, v);
  MPoly g = gcd_rec(ca, cb);
  MPoly p = MPoly::divide_exact(a, ca)->normalized(), q = MPoly::divide_exact(b, cb)->normalized();
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(v) > 0) {
    MPoly r = prem(p, q, v);
    p = std::move(q);
    if (r.is_zero()) {
      q = MPoly(nv);
      break;
    }
    // strip rational content too, or coefficients grow exponentially
    q = MPoly::divide_exact(r, content_in(r, v))->normalized();
  }
  MPoly last = q.is_zero() ? p : MPoly(nv, 1);  // q constant in v means coprime
  if (!q.is_zero()) return (g * last).normalized();
  last = *MPoly::divide_exact(last, content_in(last, v));
  return (g * last).normalized();
}

}  // namespace

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
  if (p.nvars() != q.nvars() && !p.is_zero() && !q.is_zero())
    throw std::invalid_argument("poly_gcd: variable lists differ");
  return gcd_rec(p, q);
}

}  // namespace bcs
