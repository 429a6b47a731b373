#include "bcsurf/modp.hpp"

#include <omp.h>

namespace bcs {
namespace fp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw std::domain_error("fp::inv of zero");
  return pow(a, P - 2);
}

std::uint64_t from_mpz(const mpz_class& z) {
  static const mpz_class kP = []() -> mpz_class {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, 61);
    return p - 1;
  }();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), kP.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

std::uint64_t from_mpq(const mpq_class& q) {
  std::uint64_t d = from_mpz(q.get_den());
  if (d == 0) throw DenominatorVanishes();
  return mul(from_mpz(q.get_num()), inv(d));
}

std::uint64_t Point::eval(const MPoly& p) const {
  std::uint64_t s = 0;
  for (const auto& t : p.terms()) {
    auto e = MPoly::unpack(t.key, p.nvars());
    std::uint64_t m = from_mpq(t.c);
    if (p.nvars() > 0 && e[0]) m = mul(m, pow(r_, e[0]));
    if (p.nvars() > 1 && e[1]) m = mul(m, pow(t_, e[1]));
    s = add(s, m);
  }
  return s;
}

std::uint64_t Point::eval(const Scalar& s) const {
  if (s.is_const()) return from_mpq(s.const_value());
  std::uint64_t d = eval(s.den());
  if (d == 0) throw DenominatorVanishes();
  return mul(eval(s.num()), inv(d));
}

}  // namespace fp

void IncrementalEchelon::reduce(std::vector<std::uint64_t>& row, std::size_t upto) const {
  for (std::size_t k = 0; k < upto; ++k) {
    std::uint64_t f = row[pivots_[k]];
    if (f == 0) continue;
    const auto& b = basis_[k];
    for (std::size_t j = 0; j < cols_; ++j)
      if (b[j]) row[j] = fp::sub(row[j], fp::mul(f, b[j]));
  }
}

bool IncrementalEchelon::settle(std::vector<std::uint64_t>& row) {
  std::size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  std::uint64_t iv = fp::inv(row[p]);
  for (auto& x : row) x = fp::mul(x, iv);
  basis_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

std::vector<bool> IncrementalEchelon::add_rows_serial(const std::vector<std::vector<std::uint64_t>>& rows) {
  std::vector<bool> kept(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto r = rows[i];
    reduce(r, basis_.size());
    kept[i] = settle(r);
  }
  return kept;
}

std::vector<bool> IncrementalEchelon::add_rows_parallel(const std::vector<std::vector<std::uint64_t>>& rows) {
  std::vector<bool> kept(rows.size(), false);
  const std::size_t block = 64;
  for (std::size_t s = 0; s < rows.size(); s += block) {
    const std::size_t e = std::min(rows.size(), s + block);
    std::vector<std::vector<std::uint64_t>> work(rows.begin() + s, rows.begin() + e);
    const std::size_t base = basis_.size();
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < work.size(); ++i) reduce(work[i], base);
    for (std::size_t i = 0; i < work.size(); ++i) {
      // only the pivots added inside this block are still missing
      for (std::size_t k = base; k < basis_.size(); ++k) {
        std::uint64_t f = work[i][pivots_[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
          if (basis_[k][j]) work[i][j] = fp::sub(work[i][j], fp::mul(f, basis_[k][j]));
      }
      kept[s + i] = settle(work[i]);
    }
  }
  return kept;
}

bool IncrementalEchelon::in_span(std::vector<std::uint64_t> row) const {
  reduce(row, basis_.size());
  for (auto x : row)
    if (x) return false;
  return true;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  IncrementalEchelon e(cols);
  e.add_rows(rows);
  return e.rank();
}

}  // namespace bcs
