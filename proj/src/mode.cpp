#include "bcsurf/mode.hpp"

#include <random>

namespace bcs {

Mode Mode::generic(std::uint64_t seed) {
  Mode m;
  m.seed = seed;
  return m;
}

Mode Mode::tau_one() {
  Mode m;
  m.kind = ModeKind::TauOne;
  m.rho0 = m.theta0 = 1;
  return m;
}

Mode Mode::specialized(const mpq_class& rho0, const mpq_class& theta0, std::uint64_t seed) {
  Mode m;
  m.kind = ModeKind::Specialized;
  m.rho0 = rho0;
  m.theta0 = theta0;
  m.seed = seed;
  return m;
}

Mode Mode::inverted() const {
  Mode m = *this;
  m.inverse = !m.inverse;
  return m;
}

Scalar Mode::rho() const {
  if (kind == ModeKind::Generic) return inverse ? Scalar::rho().inverse() : Scalar::rho();
  return inverse ? Scalar(mpq_class(1 / rho0)) : Scalar(rho0);
}

Scalar Mode::theta() const {
  if (kind == ModeKind::Generic) return inverse ? Scalar::theta().inverse() : Scalar::theta();
  return inverse ? Scalar(mpq_class(1 / theta0)) : Scalar(theta0);
}

Abbrev Mode::abbrev() const {
  Scalar r = kind == ModeKind::Generic ? Scalar::rho() : Scalar(rho0);
  Scalar t = kind == ModeKind::Generic ? Scalar::theta() : Scalar(theta0);
  Abbrev a = abbreviations(r, t);
  if (inverse) {
    // tau(1/rho) scales (gamma, delta) to (gamma, -delta); projectively the same map
    a.delta = -a.delta;
    a.zeta = -a.zeta;
  }
  return a;
}

fp::Point Mode::cert_point() const {
  std::mt19937_64 g(seed * 0x9E3779B97F4A7C15ULL + 12345);
  std::uint64_t r = 0, t = 0;
  while (r < 2 || r >= fp::P) r = g() >> 3;
  while (t < 2 || t >= fp::P) t = g() >> 3;
  return fp::Point(r, t);
}

std::string Mode::name() const {
  switch (kind) {
    case ModeKind::Generic:
      return "generic";
    case ModeKind::TauOne:
      return "tau-one";
    case ModeKind::Specialized:
      return "specialized";
  }
  return "?";
}

void check_guard(const mpq_class& rho0, const mpq_class& theta0, int bound) {
  for (const mpq_class* v : {&rho0, &theta0}) {
    if (*v == 0 || *v == 1 || *v == -1)
      throw GuardFailure("specialization value " + v->get_str() + " lies in {0, 1, -1}");
  }
  mpq_class p = 1;
  for (int k = 1; k <= 2 * bound; ++k) {
    p *= theta0;
    if (p == 1) throw GuardFailure("theta0 is a root of unity of order " + std::to_string(k));
  }
}

}  // namespace bcs
