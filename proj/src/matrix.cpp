#include <algorithm>

#include "bcsurf/exact.hpp"

namespace bcs {

namespace {

bool all_constant(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_const()) return false;
  return true;
}

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  int swaps = 0;
};

// Gauss-Jordan over Q; leaves the pivot rows reduced in place
Echelon rref_rational(std::vector<std::vector<mpq_class>>& a, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++e.swaps;
    }
    mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

// fraction-free elimination on polynomial entries; pivot = fewest terms
Echelon bareiss(std::vector<std::vector<MPoly>>& a, std::size_t cols) {
  Echelon e;
  MPoly prev(kParamVars, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (!a[i][c].is_zero() && (p == a.size() || a[i][c].size() < a[p][c].size())) p = i;
    if (p == a.size()) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++e.swaps;
    }
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MPoly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = *MPoly::divide_exact(v, prev);
      }
      a[i][c] = MPoly(kParamVars);
    }
    // rows above the pivot row keep their earlier values: plain echelon form
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

std::vector<std::vector<MPoly>> cleared_rows(const ScalarMatrix& m) {
  std::vector<std::vector<MPoly>> a(m.rows(), std::vector<MPoly>(m.cols(), MPoly(kParamVars)));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MPoly l(kParamVars, 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      MPoly d = m(i, j).den();
      if (d.is_one()) continue;
      MPoly g = poly_gcd(l, d);
      l = l * *MPoly::divide_exact(d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& s = m(i, j);
      if (s.is_zero()) continue;
      a[i][j] = s.num() * *MPoly::divide_exact(l, s.den());
    }
  }
  return a;
}

}  // namespace

RankKernel rank_and_kernel(const ScalarMatrix& m) {
  RankKernel out;
  const std::size_t cols = m.cols();
  std::vector<std::size_t> piv;
  std::vector<std::vector<Scalar>> u;
  if (all_constant(m)) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).const_value();
    piv = rref_rational(a, cols).pivot_cols;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      std::vector<Scalar> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = Scalar(a[r][j]);
      u.push_back(std::move(row));
    }
  } else {
    auto a = cleared_rows(m);
    piv = bareiss(a, cols).pivot_cols;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      std::vector<Scalar> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = Scalar(a[r][j]);
      u.push_back(std::move(row));
    }
  }
  out.rank = piv.size();
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> x(cols);
    x[f] = Scalar(1);
    for (std::size_t r = piv.size(); r-- > 0;) {
      Scalar s;
      for (std::size_t j = piv[r] + 1; j < cols; ++j)
        if (!u[r][j].is_zero() && !x[j].is_zero()) s += u[r][j] * x[j];
      x[piv[r]] = -s / u[r][piv[r]];
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

std::size_t exact_rank(const ScalarMatrix& m) {
  if (all_constant(m)) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).const_value();
    return rref_rational(a, m.cols()).pivot_cols.size();
  }
  auto a = cleared_rows(m);
  return bareiss(a, m.cols()).pivot_cols.size();
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  // clear row denominators, run Bareiss, undo the scaling
  Scalar scale(1);
  ScalarMatrix c = m;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly l(kParamVars, 1);
    for (std::size_t j = 0; j < n; ++j) {
      MPoly d = m(i, j).den();
      if (!d.is_one()) l = l * *MPoly::divide_exact(d, poly_gcd(l, d));
    }
    if (!l.is_one()) {
      scale *= Scalar(l);
      for (std::size_t j = 0; j < n; ++j) c(i, j) = m(i, j) * Scalar(l);
    }
  }
  std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = c(i, j).num();
  Echelon e = bareiss(a, n);
  if (e.pivot_cols.size() < n) return Scalar(0);
  Scalar d(a[n - 1][n - 1]);
  if (e.swaps % 2) d = -d;
  return d / scale;
}

std::vector<Scalar> mat_vec(const ScalarMatrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace bcs
