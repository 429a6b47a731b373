#ifndef BCSURF_MODP_HPP
#define BCSURF_MODP_HPP

#include <cstdint>
#include <vector>

#include "bcsurf/exact.hpp"

namespace bcs {

// arithmetic modulo the Mersenne prime 2^61 - 1
namespace fp {

constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x & P);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  if (s >= P) s -= P;
  return s;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= P ? s - P : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return reduce(static_cast<unsigned __int128>(a) * b);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);

std::uint64_t from_mpz(const mpz_class& z);
// throws DenominatorVanishes when the denominator is divisible by P
std::uint64_t from_mpq(const mpq_class& q);

// a point (rho0, theta0) of F_P^2 with cached power tables
class Point {
 public:
  Point(std::uint64_t rho0, std::uint64_t theta0) : r_(rho0), t_(theta0) {}
  std::uint64_t rho() const { return r_; }
  std::uint64_t theta() const { return t_; }
  std::uint64_t eval(const MPoly& p) const;
  std::uint64_t eval(const Scalar& s) const;

 private:
  std::uint64_t r_, t_;
};

}  // namespace fp

// Greedy row basis over F_P.  Rows are offered in order; a row is kept when it
// is independent of the rows kept before it.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  // serial reference: reduce one row at a time
  std::vector<bool> add_rows_serial(const std::vector<std::vector<std::uint64_t>>& rows);
  // OpenMP: reduce a block of rows against the current basis in parallel, then
  // settle dependencies inside the block serially
  std::vector<bool> add_rows_parallel(const std::vector<std::vector<std::uint64_t>>& rows);
  std::vector<bool> add_rows(const std::vector<std::vector<std::uint64_t>>& rows) { return add_rows_parallel(rows); }
  bool in_span(std::vector<std::uint64_t> row) const;

 private:
  void reduce(std::vector<std::uint64_t>& row, std::size_t upto) const;
  bool settle(std::vector<std::uint64_t>& row);
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> basis_;  // normalized, pivot entry 1
  std::vector<std::size_t> pivots_;
};

std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols);

}  // namespace bcs

#endif
