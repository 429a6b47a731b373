#include "bcsurf/pform.hpp"

#include <stdexcept>

namespace bcs {

bool PForm::is_zero() const {
  for (auto x : c)
    if (x) return false;
  return true;
}

PForm& PForm::operator+=(const PForm& o) {
  if (a != o.a || b != o.b) throw std::invalid_argument("PForm: bidegree mismatch");
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = fp::add(c[k], o.c[k]);
  return *this;
}

PForm PForm::scaled(std::uint64_t s) const {
  PForm r = *this;
  for (auto& x : r.c) x = fp::mul(x, s);
  return r;
}

PForm operator*(const PForm& f, const PForm& g) {
  PForm h(f.a + g.a, f.b + g.b);
  for (int i1 = 0; i1 <= f.a; ++i1)
    for (int j1 = 0; j1 <= f.b; ++j1) {
      std::uint64_t s = f.at(i1, j1);
      if (!s) continue;
      for (int i2 = 0; i2 <= g.a; ++i2) {
        std::uint64_t* out = &h.at(i1 + i2, j1);
        const std::uint64_t* in = &g.c[static_cast<std::size_t>(i2 * (g.b + 1))];
        for (int j2 = 0; j2 <= g.b; ++j2)
          if (in[j2]) out[j2] = fp::add(out[j2], fp::mul(s, in[j2]));
      }
    }
  return h;
}

PForm reduce(const BiForm& f, const fp::Point& pt) {
  PForm r(f.a(), f.b());
  r.c = f.reduce_mod_p(pt);
  return r;
}

PForm substitute(const PForm& f, const std::array<PForm, 4>& im) {
  const int a = f.a, b = f.b;
  std::vector<PForm> px(a + 1), py(a + 1), pz(b + 1), pw(b + 1);
  PForm one(0, 0);
  one.c[0] = 1;
  px[0] = py[0] = pz[0] = pw[0] = one;
  for (int k = 1; k <= a; ++k) {
    px[k] = px[k - 1] * im[0];
    py[k] = py[k - 1] * im[1];
  }
  for (int k = 1; k <= b; ++k) {
    pz[k] = pz[k - 1] * im[2];
    pw[k] = pw[k - 1] * im[3];
  }
  PForm out(a * im[0].a + b * im[2].a, a * im[0].b + b * im[2].b);
  std::vector<PForm> second(b + 1);
  for (int j = 0; j <= b; ++j) second[j] = pz[j] * pw[b - j];
  for (int i = 0; i <= a; ++i) {
    PForm xy = px[i] * py[a - i];
    for (int j = 0; j <= b; ++j)
      if (f.at(i, j)) out += (xy * second[j]).scaled(f.at(i, j));
  }
  return out;
}

}  // namespace bcs
