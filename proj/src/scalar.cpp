#include "bcsurf/exact.hpp"

namespace bcs {

MPoly rho_poly() { return MPoly::var(kParamVars, 0); }
MPoly theta_poly() { return MPoly::var(kParamVars, 1); }

Scalar::Scalar(const MPoly& num) : Scalar(num, MPoly(kParamVars, 1)) {}

Scalar::Scalar(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  is_const_ = false;
  num_ = num;
  den_ = den;
  if (num_.nvars() == 0) num_ = MPoly(kParamVars) + num_;
  normalize();
}

Scalar Scalar::rho() { return Scalar(rho_poly()); }
Scalar Scalar::theta() { return Scalar(theta_poly()); }

void Scalar::normalize() {
  if (is_const_) return;
  if (num_.is_zero()) {
    is_const_ = true;
    q_ = 0;
    num_ = den_ = MPoly();
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *MPoly::divide_exact(num_, g);
      den_ = *MPoly::divide_exact(den_, g);
    }
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.constant_value());
    den_ = MPoly(kParamVars, 1);
    if (num_.is_constant()) {
      is_const_ = true;
      q_ = num_.constant_value();
      num_ = den_ = MPoly();
    }
    return;
  }
  mpq_class c = den_.content();
  den_ = den_.scaled(1 / c);
  num_ = num_.scaled(1 / c);
}

bool Scalar::is_poly() const { return is_const_ || den_.is_one(); }
MPoly Scalar::num() const { return is_const_ ? MPoly(kParamVars, q_) : num_; }
MPoly Scalar::den() const { return is_const_ ? MPoly(kParamVars, 1) : den_; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.is_const_)
    r.q_ = -r.q_;
  else
    r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_const_ && o.is_const_) {
    q_ += o.q_;
    return *this;
  }
  if (is_zero()) return *this = o;
  if (is_poly() && o.is_poly()) {
    *this = Scalar(num() + o.num());
    return *this;
  }
  MPoly d1 = den(), d2 = o.den();
  if (d1 == d2) {
    *this = Scalar(num() + o.num(), d1);
    return *this;
  }
  *this = Scalar(num() * d2 + o.num() * d1, d1 * d2);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_const_ && o.is_const_) {
    q_ *= o.q_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Scalar(0);
  if (o.is_const_) {
    num_ = num_.scaled(o.q_);
    return *this;
  }
  if (is_const_) {
    mpq_class c = q_;
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  if (is_poly() && o.is_poly()) {
    num_ = num_ * o.num_;
    return *this;
  }
  *this = Scalar(num() * o.num(), den() * o.den());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  if (is_const_) return Scalar(mpq_class(1 / q_));
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_const_) {
    if (sgn(o.q_) == 0) throw std::domain_error("Scalar: division by zero");
    if (is_const_)
      q_ /= o.q_;
    else
      num_ = num_.scaled(1 / o.q_);
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_const_ != b.is_const_) return false;
  if (a.is_const_) return a.q_ == b.q_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::size_t Scalar::term_count() const { return is_const_ ? 1 : num_.size() + den_.size(); }

std::string Scalar::str() const {
  if (is_const_) return q_.get_str();
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Abbrev abbreviations(const Scalar& rho, const Scalar& theta) {
  return {rho + Scalar(1), rho - Scalar(1), theta + Scalar(1), theta - Scalar(1)};
}

mpq_class specialize(const MPoly& p, const mpq_class& rho0, const mpq_class& theta0) {
  return p.eval({rho0, theta0});
}

mpq_class specialize(const Scalar& s, const mpq_class& rho0, const mpq_class& theta0) {
  if (s.is_const()) return s.const_value();
  mpq_class d = specialize(s.den(), rho0, theta0);
  if (sgn(d) == 0) throw DenominatorVanishes();
  return specialize(s.num(), rho0, theta0) / d;
}

}  // namespace bcs
