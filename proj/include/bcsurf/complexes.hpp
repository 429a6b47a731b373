#ifndef BCSURF_COMPLEXES_HPP
#define BCSURF_COMPLEXES_HPP

#include <array>
#include <optional>
#include <vector>

#include "bcsurf/skew.hpp"

namespace bcs {

// matrix of degree-one elements (or zeros)
struct SkewMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::optional<Letter>> entries;
  SkewMatrix() = default;
  SkewMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  std::optional<Letter>& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const std::optional<Letter>& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// product A B as a matrix of degree-two polynomials, expanded to forms
std::vector<BiForm> product_forms(const SkewMatrix& a, const SkewMatrix& b, SkewContext& ctx);

// 0 -> R[-4] -M-> R[-3]^4 -N-> R[-2]^6 -P-> R[-1]^4 -Q-> R
struct GradedComplex {
  Mode mode;
  std::array<int, 5> ranks{1, 4, 6, 4, 1};  // C_i = R[-i]^ranks[i]
  std::array<SkewMatrix, 4> maps;           // maps[k]: C_{k+1} -> C_k, i.e. Q, P, N, M
};

// throws RelationFailed(1) for QP, (2) for PN, (3) for NM
void verify_complex(const GradedComplex& c);
GradedComplex build_complex(const Mode& mode);
// every entry is a multiple of one r_i (the tau-one simplification)
bool entries_are_generator_multiples(const GradedComplex& c);

struct DegreeReport {
  int n = 0;
  std::array<long, 5> dims{};      // dim of C_i in degree n
  std::array<long, 4> ranks{};     // rank of maps[k] in degree n (lower bounds)
  std::array<long, 5> homology{};  // upper bounds; exact when zero
  bool certified = false;          // all graded-piece dimensions certified
  long euler() const;
  bool exact() const;  // homology 0 everywhere except 1 at C_0 in degree 0
};
DegreeReport exactness_in_degree(int n, const GradedComplex& c, SkewContext& ctx);

// dual complex: row vectors, right multiplication; Ext^i in degree n sits in R_{n+i}^ranks[i]
struct ExtReport {
  int n = 0;
  std::array<long, 5> dims{};  // -1 when beyond the degree bound
  std::array<long, 5> ext{};   // upper bounds, -1 when unavailable
};
ExtReport ext_dimensions(int n, const GradedComplex& c, SkewContext& ctx);

// (R / (R z9 + R z10))_n
struct QuotientDim {
  int n = 0;
  long upper = 0;  // dim R_n - rank lower bound
  long lower = 0;  // from the kernel {(b z1, b z3)} of (a, b) -> a z9 + b z10
  bool exact() const { return lower == upper; }
};
QuotientDim quotient_hilbert(int n, SkewContext& ctx);

// kernel of k<x1..x4>_2 -> R_2
struct PresentationKernel {
  long word_rank = 0;       // rank of the sixteen products (lower bound)
  long relation_rank = 0;   // exact rank of f1..f6 as coefficient vectors
  bool relations_vanish = false;
  long kernel_dim() const { return relations_vanish && 16 - word_rank == relation_rank ? relation_rank : -1; }
};
PresentationKernel presentation_kernel(SkewContext& ctx);

long euler_sum(int n);  // C(n+3,3) - 4C(n+2,3) + 6C(n+1,3) - 4C(n,3) + C(n-1,3)

}  // namespace bcs

#endif
