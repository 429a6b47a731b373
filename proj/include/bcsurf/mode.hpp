#ifndef BCSURF_MODE_HPP
#define BCSURF_MODE_HPP

#include <cstdint>
#include <string>

#include "bcsurf/exact.hpp"
#include "bcsurf/modp.hpp"

namespace bcs {

enum class ModeKind { Generic, TauOne, Specialized };

// Coefficient mode.  Generic keeps rho, theta transcendental; tau-one sets
// rho = theta = 1; specialized plugs in exact rationals.  The flag `inverse`
// selects tau^{-1} = tau(1/rho, 1/theta), realized as (gamma, -delta, epsilon, -zeta).
struct Mode {
  ModeKind kind = ModeKind::Generic;
  mpq_class rho0 = 0, theta0 = 0;
  bool inverse = false;
  std::uint64_t seed = 1;  // picks the modular certificate point

  static Mode generic(std::uint64_t seed = 1);
  static Mode tau_one();
  static Mode specialized(const mpq_class& rho0, const mpq_class& theta0, std::uint64_t seed = 1);
  Mode inverted() const;

  Scalar rho() const;
  Scalar theta() const;
  Abbrev abbrev() const;
  // point of F_P^2 at which Scalars are evaluated for rank lower bounds
  fp::Point cert_point() const;
  std::string name() const;
};

struct GuardFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rho0, theta0 not in {0, 1, -1}; theta0 not a root of unity of order <= 2*bound
void check_guard(const mpq_class& rho0, const mpq_class& theta0, int bound);

}  // namespace bcs

#endif
