#ifndef BCSURF_PFORM_HPP
#define BCSURF_PFORM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "bcsurf/modp.hpp"
#include "bcsurf/surface.hpp"

namespace bcs {

// Bihomogeneous form over F_P, same coefficient layout as BiForm.
struct PForm {
  int a = 0, b = 0;
  std::vector<std::uint64_t> c;

  PForm() = default;
  PForm(int a_, int b_) : a(a_), b(b_), c(static_cast<std::size_t>((a_ + 1) * (b_ + 1)), 0) {}
  std::uint64_t& at(int i, int j) { return c[static_cast<std::size_t>(i * (b + 1) + j)]; }
  std::uint64_t at(int i, int j) const { return c[static_cast<std::size_t>(i * (b + 1) + j)]; }
  bool is_zero() const;
  PForm& operator+=(const PForm& o);
  PForm scaled(std::uint64_t s) const;
  friend PForm operator*(const PForm& f, const PForm& g);
  friend bool operator==(const PForm& f, const PForm& g) { return f.a == g.a && f.b == g.b && f.c == g.c; }
};

PForm reduce(const BiForm& f, const fp::Point& pt);
PForm substitute(const PForm& f, const std::array<PForm, 4>& images);

}  // namespace bcs

#endif
