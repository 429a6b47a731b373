#ifndef BCSURF_SKEW_HPP
#define BCSURF_SKEW_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bcsurf/pform.hpp"
#include "bcsurf/surface.hpp"

namespace bcs {

// element c0 + c1 u + c2 v + c3 uv of E, standing for (c0 + ... ) t
using Letter = std::array<Scalar, 4>;
Letter generator(int j);  // r1..r4 as j = 0..3

// a product of letters; the i-th letter is pulled back along phi^(m+i)
using SkewWord = std::vector<Letter>;
// linear combination of words of one length
struct SkewPoly {
  std::vector<std::pair<Scalar, SkewWord>> terms;
  int degree() const;
  static SkewPoly word(SkewWord w) { return SkewPoly{{{Scalar(1), std::move(w)}}}; }
  SkewPoly& add(const Scalar& c, SkewWord w);
};

// lower <= dim <= upper
struct DimBound {
  long lower = 0, upper = 0;
  std::string method;
  bool exact() const { return lower == upper; }
};

struct GradedPiece {
  int n = 0, m = 0;
  int A = 0, B = 0;  // bidegree (n, C(n+m+1,2) - C(m+1,2))
  std::vector<std::vector<int>> words;  // generator indices of each basis element
  std::vector<PForm> rows;              // cleared forms mod P, independent
  DimBound dim;
};

struct BoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RelationFailed : std::runtime_error {
  int index;
  std::string residue;
  RelationFailed(int i, std::string r)
      : std::runtime_error("relation " + std::to_string(i) + " does not vanish: " + r), index(i), residue(std::move(r)) {}
};
struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int default_bound(const Mode& mode);

class SkewContext {
 public:
  explicit SkewContext(const Mode& mode, int max_degree = -1);
  const Mode& mode() const { return mode_; }
  int max_degree() const { return max_degree_; }
  const fp::Point& point() const { return pt_; }

  // cleared letter form c0 Y W + c1 X W + c2 Y Z + c3 X Z at level i
  PForm letter_modp(const Letter& l, int level);
  BiForm letter_exact(const Letter& l, int level);
  PForm word_modp(const SkewWord& w, int twist);
  BiForm word_exact(const SkewWord& w, int twist);
  BiForm poly_exact(const SkewPoly& p, int twist);
  PForm poly_modp(const SkewPoly& p, int twist);

  // basis of R_n^{phi^m}; memoized, safe to call from several threads
  const GradedPiece& piece(int n, int m = 0);
  // X_i, Y_i vanish exactly at F_j, Q_j for j < i, checked for levels lo..hi
  bool vanishing_certified(int lo, int hi);

 private:
  void extend_levels_modp(int level);
  void extend_levels_exact(int level);
  GradedPiece build_piece(int n, int m);

  Mode mode_;
  int max_degree_;
  fp::Point pt_;
  std::vector<std::array<PForm, 4>> lv_modp_;
  std::vector<std::array<BiForm, 4>> lv_exact_;
  std::map<std::pair<int, int>, std::unique_ptr<GradedPiece>> pieces_;
  std::map<int, bool> vanish_;
  std::recursive_mutex mu_;
};

// the six quadratic relations as coefficient tables c[a][b] of x_a x_b
using Quadratic = std::array<std::array<Scalar, 4>, 4>;
std::array<Quadratic, 6> relations(const Mode& mode);
SkewPoly quadratic_image(const Quadratic& q);

struct RelationReport {
  std::vector<bool> vanish;      // f1..f6
  bool binomial_ok = true;       // tau-one only: f1..f4, f3 - f5, f6 are the stated binomials
  std::vector<std::string> notes;
};
// throws RelationFailed on the first relation with nonzero image
RelationReport check_relations(const Mode& mode);
void check_relation_list(const std::vector<Quadratic>& rels, const Mode& mode);

std::array<Letter, 10> z_letters(const Mode& mode);
// the fourteen quadratic identities among r's and z's, as (left, right) pairs
// of degree-2 polynomials (sum of two words)
std::vector<SkewPoly> z_relations(const Mode& mode);
struct ZReport {
  std::array<Letter, 10> z;
  std::vector<bool> vanish;  // the fourteen identities in order
  std::vector<std::string> residue;
};
// identities 11 and 12 (z9 z1 + z10 z2, z9 z3 + z10 z4) do not vanish under the
// convention t f = phi(f) t and are only reported; the complex never uses them
bool z_identity_required(int k);
// expands all fourteen; throws RelationFailed(k) if a required one fails
ZReport z_elements(const Mode& mode);

enum class Side { Left, Right };

struct SyzygyReport {
  int n = 0;
  long kernel_dim = 0;
  long expected_dim = 0;  // dimension of the stated module in degree n
  bool contained = false;  // stated generators times A_{n-1} lie in the kernel
  bool equal() const { return contained && kernel_dim == expected_dim; }
};
// kernel of (x, y) -> a x + b y (Right) or x a + y b (Left) on A_n + A_n; tau-one only
SyzygyReport syzygy_kernel(int a, int b, int n, Side side, SkewContext& ctx);

// element in sum_k g_k R_{n - deg g_k}, decided by exact rank comparison
bool ideal_membership(const SkewPoly& element, const std::vector<SkewPoly>& gens, SkewContext& ctx);

struct OppositeReport {
  int n = 0;
  DimBound dim, dim_inverse;
  bool equal() const { return dim.exact() && dim_inverse.exact() && dim.lower == dim_inverse.lower; }
};
OppositeReport opposite_dims(int n, const Mode& mode);

}  // namespace bcs

#endif
