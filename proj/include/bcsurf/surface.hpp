#ifndef BCSURF_SURFACE_HPP
#define BCSURF_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

#include "bcsurf/exact.hpp"
#include "bcsurf/mode.hpp"

namespace bcs {

// Bihomogeneous form of bidegree (a,b) on P1 x P1.  Coefficient of
// x^i y^(a-i) z^j w^(b-j) sits at index i*(b+1)+j.
class BiForm {
 public:
  BiForm() = default;
  BiForm(int a, int b) : a_(a), b_(b), c_(static_cast<std::size_t>((a + 1) * (b + 1))) {}
  static BiForm monomial(int a, int b, int i, int j, const Scalar& c = Scalar(1));
  static BiForm x() { return monomial(1, 0, 1, 0); }
  static BiForm y() { return monomial(1, 0, 0, 0); }
  static BiForm z() { return monomial(0, 1, 0, 1); }
  static BiForm w() { return monomial(0, 1, 0, 0); }

  int a() const { return a_; }
  int b() const { return b_; }
  std::size_t size() const { return c_.size(); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (b_ + 1) + j); }
  const Scalar& coef(int i, int j) const { return c_[index(i, j)]; }
  Scalar& coef(int i, int j) { return c_[index(i, j)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  std::vector<Scalar>& coeffs() { return c_; }
  bool is_zero() const;

  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  friend BiForm operator+(BiForm f, const BiForm& g) { return f += g; }
  friend BiForm operator-(BiForm f, const BiForm& g) { return f -= g; }
  friend BiForm operator*(const BiForm& f, const BiForm& g);
  BiForm scaled(const Scalar& s) const;
  BiForm pow(int e) const;
  friend bool operator==(const BiForm& f, const BiForm& g);

  Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& w) const;
  std::vector<std::uint64_t> reduce_mod_p(const fp::Point& pt) const;
  std::string str() const;

 private:
  int a_ = 0, b_ = 0;
  std::vector<Scalar> c_;
};

// true when f and g agree up to a nonzero Scalar multiple
bool proportional(const BiForm& f, const BiForm& g);

enum class MapKind { Sigma, SigmaInverse, Tau, TauInverse, Phi, PhiInverse };

struct MapSpec {
  MapKind kind;
  std::array<BiForm, 4> images;  // images of x, y, z, w
  static MapSpec make(MapKind kind, const Mode& mode);
};

struct Pullback {
  BiForm form;
  bool cancelled = false;  // a nonconstant common factor was divided out
};

struct ZeroForm : std::invalid_argument {
  ZeroForm() : std::invalid_argument("pullback of the zero form") {}
};

// substitute the map's images for x, y, z, w and divide out the parameter
// content (gcd in Q[rho, theta] of the coefficients)
Pullback pullback_form(const BiForm& f, const MapSpec& map);
BiForm substitute(const BiForm& f, const std::array<BiForm, 4>& images);

struct CurveForms {
  BiForm X, Y, Z, W;
};
// n-fold pullback of x, y, z, w along Phi
CurveForms curve_forms(int n, const Mode& mode);

// Common factor of the pair (X_n, Y_n) and of (Z_n, W_n): the iterate phi^n,
// reduced, differs from n-fold substitution exactly when one is nonconstant.
struct StabilityStep {
  int n = 0;
  int xy_factor_degree = 0;  // degree in (z,w) of gcd(X_n, Y_n)
  int zw_factor_degree = 0;
  bool stable() const { return xy_factor_degree == 0 && zw_factor_degree == 0; }
};
std::vector<StabilityStep> stability_certificate(int bound, const Mode& mode);

// ---- points

enum class CoordSystem { Square, Round };

struct SurfacePoint {
  CoordSystem system = CoordSystem::Square;
  std::array<Scalar, 2> first, second;

  SurfacePoint normalized() const;
  SurfacePoint to_square() const;
  SurfacePoint to_round() const;
  bool same_point(const SurfacePoint& o) const;  // projective equality after conversion
  std::string str() const;
};

struct UndefinedOrbitPoint : std::runtime_error {
  explicit UndefinedOrbitPoint(int n) : std::runtime_error("orbit point " + std::to_string(n) + " undefined") {}
};

enum class OrbitWhich { F, Q };

// F_n = phi^{-n}(F) in round coordinates (p_n : q_n)(theta^n : 1), left
// unnormalized so coordinates stay polynomial; Q_n by the swap symmetry
SurfacePoint orbit_point(int n, OrbitWhich which, const Mode& mode);
// apply phi^{-1} to a square-coordinate point through the form-level inverse map
SurfacePoint apply_phi_inverse(const SurfacePoint& p, const Mode& mode);

struct OrbitPolys {
  std::vector<MPoly> p, q;  // generic-mode p_n, q_n in Z[rho, theta]
};
OrbitPolys orbit_polys(int nmax);

struct BadIndexList : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// monomials (i,j) = x^i y^(m-i) z^j w^(s-j) in the order f_1 < ... < f_N
std::vector<std::pair<int, int>> critdens_monomials(int m, int s);
MPoly critdens_determinant(int m, int s, const std::vector<int>& indices);
// lowest term under lex with theta < rho, and the predicted identity-permutation term
struct LowestTerm {
  int theta_exp = 0, rho_exp = 0;
  mpq_class coeff;
};
LowestTerm lowest_term_theta_rho(const MPoly& p);
LowestTerm predicted_lowest_term(int m, int s, const std::vector<int>& indices);

// local vanishing conditions: coefficient of s^k t^l (k + l < mult) in
// f(x0 + s, y0, z0 + t, w0) or the analogous chart, as a row on form coefficients
std::vector<std::vector<Scalar>> vanishing_conditions(const SurfacePoint& pt, int mult, int a, int b);
// order of vanishing of f at pt (capped at cap)
int vanishing_order(const BiForm& f, const SurfacePoint& pt, int cap);

struct BaseLocusReport {
  int m = 0;
  bool bidegree_ok = false;
  bool vanish_ok = false;
  bool distinct_ok = false;
  bool transverse_ok = false;
  std::string failed_clause;  // empty when all hold
  std::vector<std::string> notes;
  // tau-one alternative: local ideal (a, b^k) at F
  int local_b_order = -1;
  bool ok() const { return failed_clause.empty(); }
};
BaseLocusReport base_locus_check(int m, const Mode& mode);

}  // namespace bcs

#endif
