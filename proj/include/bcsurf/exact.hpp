#ifndef BCSURF_EXACT_HPP
#define BCSURF_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcs {

// Sparse multivariate polynomial with rational coefficients in at most four
// variables.  A monomial is packed into one 64-bit key: total degree in the
// top 16 bits, then the exponents of variables 0,1,2 (the last variable's
// exponent is implied).  Numeric key order is graded lex with x0 > x1 > ...
class MPoly {
 public:
  using Key = std::uint64_t;
  struct Term {
    Key key;
    mpq_class c;
  };

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  MPoly(int nvars, const mpq_class& c);
  static MPoly var(int nvars, int i);
  static MPoly monomial(int nvars, const std::vector<int>& exps, const mpq_class& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  mpq_class constant_value() const;  // valid when is_constant()
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  static Key pack(const std::vector<int>& e, int nvars);
  static std::vector<int> unpack(Key k, int nvars);
  static int total_degree(Key k) { return static_cast<int>(k >> 48); }

  int degree() const;            // total degree, -1 for zero
  int degree_in(int v) const;    // -1 for zero
  const Term& leading() const { return terms_.back(); }

  // coefficients of v^0, v^1, ... as polynomials free of v
  std::vector<MPoly> coeffs_in(int v) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const mpq_class& c) const;
  MPoly times_var_power(int v, int e) const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // exact quotient, or nullopt when b does not divide a
  static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

  // primitive integer coefficients, positive leading coefficient; zero stays zero
  MPoly normalized() const;
  // rational factor c with *this == c * normalized()
  mpq_class content() const;

  mpq_class eval(const std::vector<mpq_class>& pt) const;
  MPoly substitute(int v, const mpq_class& value) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

 private:
  void canonicalize(std::vector<Term>& ts);
  int nvars_ = 0;
  std::vector<Term> terms_;  // ascending key order, no zero coefficients
};

MPoly poly_gcd(const MPoly& p, const MPoly& q);

// Element of Q(rho, theta).  Constants take a fast path that never touches
// the polynomial machinery.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long v) : q_(v) {}  // NOLINT
  Scalar(const mpq_class& v) : q_(v) {}  // NOLINT
  Scalar(const MPoly& num);  // NOLINT
  Scalar(const MPoly& num, const MPoly& den);

  static Scalar rho();
  static Scalar theta();

  bool is_const() const { return is_const_; }
  const mpq_class& const_value() const { return q_; }
  bool is_zero() const { return is_const_ && sgn(q_) == 0; }
  bool is_one() const { return is_const_ && q_ == 1; }
  bool is_poly() const;  // denominator 1
  MPoly num() const;
  MPoly den() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::size_t term_count() const;
  std::string str() const;

 private:
  void normalize();
  bool is_const_ = true;
  mpq_class q_;
  MPoly num_, den_;
};

// the parameter ring is Q[rho, theta]; variable 0 is rho, variable 1 is theta
constexpr int kParamVars = 2;
MPoly rho_poly();
MPoly theta_poly();

struct Abbrev {
  Scalar gamma, delta, epsilon, zeta;
};
// gamma = rho+1, delta = rho-1, epsilon = theta+1, zeta = theta-1
Abbrev abbreviations(const Scalar& rho, const Scalar& theta);

struct DenominatorVanishes : std::runtime_error {
  DenominatorVanishes() : std::runtime_error("denominator vanishes at the specialization") {}
};

mpq_class specialize(const MPoly& p, const mpq_class& rho0, const mpq_class& theta0);
mpq_class specialize(const Scalar& s, const mpq_class& rho0, const mpq_class& theta0);

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<Scalar>> kernel;
};

// fraction-free elimination on cleared numerators, then back substitution
// over the fraction field for the kernel
RankKernel rank_and_kernel(const ScalarMatrix& m);
std::size_t exact_rank(const ScalarMatrix& m);
Scalar determinant(const ScalarMatrix& m);

std::vector<Scalar> mat_vec(const ScalarMatrix& m, const std::vector<Scalar>& v);

}  // namespace bcs

#endif
