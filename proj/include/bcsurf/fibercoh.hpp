#ifndef BCSURF_FIBERCOH_HPP
#define BCSURF_FIBERCOH_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bcsurf/surface.hpp"

namespace bcs {

struct WindowOverflow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// element of k[u, 1/u, v]/(v^ell) with u-exponents confined to [lo, hi]
class TruncElement {
 public:
  using Key = std::pair<int, int>;  // (u-exp, v-exp)
  TruncElement(int ell, int lo, int hi);
  static TruncElement monomial(int ell, int lo, int hi, int i, int j, const Scalar& c = Scalar(1));

  int ell() const { return ell_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::map<Key, Scalar>& terms() const { return c_; }
  Scalar coef(int i, int j) const;
  bool is_zero() const { return c_.empty(); }
  // v-degree >= ell is dropped; u outside the window throws WindowOverflow
  void add(int i, int j, const Scalar& c);

  TruncElement& operator+=(const TruncElement& o);
  TruncElement& operator-=(const TruncElement& o);
  friend TruncElement operator*(const TruncElement& a, const TruncElement& b);
  TruncElement scaled(const Scalar& s) const;
  TruncElement shifted(int du, int dv) const;  // times u^du v^dv
  TruncElement with_window(int lo, int hi) const;
  TruncElement truncated(int ell) const;
  // inverse of c0 + (element of (v)) where every term has u-exponent 0
  TruncElement unit_inverse() const;
  // every term u^i v^j has j >= i (the shape of the correction series)
  bool v_dominates_u() const;
  friend bool operator==(const TruncElement& a, const TruncElement& b) { return a.c_ == b.c_; }
  std::string str() const;

 private:
  int ell_, lo_, hi_;
  std::map<Key, Scalar> c_;
};

struct TorsionProfile {
  std::vector<int> multiplicities;  // descending
  long total() const;
  static TorsionProfile from(std::vector<int> m);
  friend bool operator==(const TorsionProfile& a, const TorsionProfile& b) { return a.multiplicities == b.multiplicities; }
  std::string str() const;
};

struct NotTransverse : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RangeUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Chart { Plus, Minus };

// Y^{phi^i} = x eta_i + y xi_i restricted to the fat fiber ell Z (v = z/w).
// Minus chart: r_i = 1/u + alpha_i.  Plus chart: u r_i = 1 + alpha_i u.
TruncElement restrict_curve_to_fiber(int i, int ell, Chart chart, const Mode& mode = Mode::generic());
// alpha_i in k[v]/(v^ell), as a u-degree zero element
TruncElement fiber_alpha(int i, int ell, const Mode& mode = Mode::generic());

struct CechWindow {
  int lo = 0, hi = 0;
};
CechWindow default_window(int a, int ell, int n);

// H^1 of I_Q^{n-d} O_{ell Z}(aX + bW) (x) L_n by the two-chart Cech complex
struct CechResult {
  int a = 0, b = 0, d = 0, ell = 0, n = 0;
  CechWindow window;
  long dim = 0;
  TorsionProfile profile;
  std::vector<std::pair<int, int>> basis;          // cokernel monomials (i, j), sorted
  std::vector<std::pair<int, int>> closed_form;    // {u^i v^j : 0 <= j <= i-d-1, d+1 <= i <= -a-1}
  long image_rank = 0;                              // rank of the differential inside the window
  bool triangular = false;                          // each U^- generator has its own unit leading term
  bool matches_closed_form() const;
};
CechResult cech_h1_fatfiber(int a, int b, int d, int ell, int n, const Mode& mode = Mode::generic());
CechResult cech_h1_fatfiber(int a, int b, int d, int ell, int n, CechWindow w, const Mode& mode = Mode::generic());

struct StabilizationReport {
  bool mu_t_bijective = false;        // im d_n == im d_{n+1}
  bool restriction_bijective = false;  // H(ell+1)_n -> H(ell)_n
  long dim_n = 0, dim_n1 = 0, dim_ell1 = 0;
};
// throws CheckFailed when either bijection fails
StabilizationReport mu_t_and_stabilization(int a, int b, int d, int ell, int n, const Mode& mode = Mode::generic());

struct FiltrationReport {
  int n_lo = 0, n_hi = 0;
  long point_modules = 0;                // number of one-dimensional subquotients
  std::vector<std::vector<long>> hilbert;  // per subquotient, dims for n in [n_lo, n_hi]
  long action_generators = 0;            // spanning set of H^0(ell Z, R') used
};
// throws CheckFailed naming the unstable flag step
FiltrationReport filtration_pointmodules(int a, int b, int d, int ell, int n_lo, int n_hi,
                                         const Mode& mode = Mode::generic());

// ---- pushforward along the second projection

enum class Variant { R, A };

struct PointProfile {
  OrbitWhich which = OrbitWhich::F;  // side of the base point (f_k or q_k)
  int k = 0;
  int effective_a = 0;
  TorsionProfile profile;
};

struct R1pLength {
  long total = 0;
  long closed_form = 0;  // 2(m C(-a,2) + C(-a,3))
  std::vector<PointProfile> points;
  bool ok() const { return total == closed_form; }
};
// R: per-point rule with effective twists; A: monomial Cech basis at f and q
R1pLength r1p_length(int n, int m, int a, int b, Variant v);
// cross-check each R-variant local profile against the fat-fiber Cech module
bool r1p_profiles_match_cech(const R1pLength& r, int b, const Mode& mode = Mode::generic());

// minimal w-exponent e(s) with u^s w^e in prod_{h=1}^n (u, w^{m+h-1})
long product_ideal_exponent(int n, int m, int s);

struct PushforwardSplit {
  int n = 0, m = 0, a = 0, b = 0;
  std::vector<long> degrees_before;  // direct chart computation, one per u-degree
  std::vector<long> closed_form;     // the displayed splitting
  std::vector<long> degrees;         // after the (0, nm + C(n+1,2) + b) twist
  long h1 = 0;
  int n0 = 0;                        // least n with h1 = 0 for all scanned n >= n0
  bool matches() const;
};
// tau-one only; a <= -1 needs n >= -a; a >= 0 needs n >= a + 1
PushforwardSplit pushforward_split_A(int n, int m, int a, int b, int scan = 8);

// the Leray count h^1(T, F) = h^1(P^1, p_* F) + h^0(R^1 p_* F)
struct LerayReport {
  int n = 0, m = 0, a = 0, b = 0;
  long h1_T_A = 0;       // chart intersection plus Euler characteristic
  long h1_push_A = 0;    // from the splitting
  long len_A = 0;
  bool balanced_A() const { return h1_T_A == h1_push_A + len_A; }
  // R side (generic); h1_T_R is an upper bound from the condition rank
  bool has_R = false;
  long h1_T_R = 0;
  long len_R = 0;
  long h1_push_R_bound() const { return h1_T_R - len_R; }
  bool chain_ok() const { return !has_R || h1_push_R_bound() <= h1_push_A; }
};
long a_sheaf_h1(int n, int m, int a, int b);
LerayReport leray_balance(int n, int m, int a, int b, bool with_R);

}  // namespace bcs

#endif
