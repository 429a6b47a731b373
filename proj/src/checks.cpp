#include "bcsurf/checks.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "bcsurf/complexes.hpp"
#include "bcsurf/diamond.hpp"
#include "bcsurf/fibercoh.hpp"
#include "bcsurf/linsys.hpp"
#include "bcsurf/skew.hpp"

namespace bcs {

int RunConfig::degree_bound() const { return max_degree >= 0 ? max_degree : default_bound(mode); }

std::string RunConfig::mode_label() const {
  if (mode.kind != ModeKind::Specialized) return mode.name();
  return "specialized(" + mode.rho0.get_str() + "," + mode.theta0.get_str() + ")";
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "]";
  return s.str();
}

CheckRecord rec(std::string name, bool pass, std::string computed, std::string expected) {
  CheckRecord r;
  r.name = std::move(name);
  r.pass = pass;
  r.computed = std::move(computed);
  r.expected = std::move(expected);
  return r;
}

std::string b(bool x) { return x ? "true" : "false"; }

// ---- skew

std::vector<CheckRecord> check_dims(const RunConfig& cfg) {
  const int top = cfg.degree_bound();
  SkewContext ctx(cfg.mode, top);
  std::vector<CheckRecord> out;
  for (int n = 1; n <= top; ++n) {
    const DimBound& d = ctx.piece(n).dim;
    const long want = binom(n + 3, 3);
    std::string got = d.exact() ? std::to_string(d.lower) : std::to_string(d.lower) + ".." + std::to_string(d.upper);
    out.push_back(rec("dims[n=" + std::to_string(n) + "]", d.exact() && d.lower == want, got, std::to_string(want)));
  }
  return out;
}

std::vector<CheckRecord> relations_check(const RunConfig& cfg) {
  RelationReport r = check_relations(cfg.mode);
  long v = 0;
  for (bool x : r.vanish) v += x;
  std::vector<CheckRecord> out{rec("relations", v == 6, std::to_string(v) + " of 6 vanish", "6 of 6 vanish")};
  if (cfg.mode.kind == ModeKind::TauOne)
    out.push_back(rec("relations[binomial]", r.binomial_ok, b(r.binomial_ok), "true"));
  return out;
}

std::vector<CheckRecord> check_witness(const RunConfig& cfg) {
  SkewContext ctx(cfg.mode);
  auto w = [](int n) {
    SkewWord s(static_cast<std::size_t>(n - 1), generator(2));
    s.push_back(generator(3));
    return SkewPoly::word(s);
  };
  std::vector<CheckRecord> out;
  std::vector<SkewPoly> gens{w(1)};
  for (int n = 2; n <= 4; ++n) {
    bool in = ideal_membership(w(n), gens, ctx);
    out.push_back(rec("witness[n=" + std::to_string(n) + "]", !in, in ? "member" : "not a member", "not a member"));
    gens.push_back(w(n));
  }
  return out;
}

std::vector<CheckRecord> check_syzygies(const RunConfig& cfg) {
  SkewContext ctx(cfg.mode);
  std::vector<CheckRecord> out;
  const std::pair<int, int> pairs[] = {{1, 2}, {3, 4}, {1, 3}, {2, 4}};
  for (auto [p, q] : pairs)
    for (Side s : {Side::Right, Side::Left}) {
      std::vector<long> got, want;
      bool ok = true;
      for (int n = 0; n <= std::min(4, cfg.degree_bound()); ++n) {
        SyzygyReport r = syzygy_kernel(p, q, n, s, ctx);
        got.push_back(r.kernel_dim);
        want.push_back(r.expected_dim);
        ok = ok && r.equal();
      }
      out.push_back(rec("syzygies[r" + std::to_string(p) + ",r" + std::to_string(q) + "," +
                            (s == Side::Right ? "right" : "left") + "]",
                        ok, list(got), list(want)));
    }
  return out;
}

std::pair<std::vector<long>, bool> ring_ranks(const Mode& mode, int top) {
  // dims, presentation kernel, exactness ranks, condition ranks
  SkewContext ctx(mode, top);
  std::vector<long> v;
  bool cert = true;
  for (int n = 1; n <= top; ++n) {
    v.push_back(ctx.piece(n).dim.lower);
    cert = cert && ctx.piece(n).dim.exact();
  }
  v.push_back(presentation_kernel(ctx).kernel_dim());
  auto c = build_complex(mode);
  for (int n = 0; n < top; ++n) {
    auto r = exactness_in_degree(n, c, ctx);
    v.insert(v.end(), r.ranks.begin(), r.ranks.end());
  }
  for (int n = 1; n <= top; ++n)
    for (int m = 0; n + m <= top; ++m) v.push_back(static_cast<long>(h0_h1(n, m, 0, 0, mode).rank.lower));
  for (int m = 1; m <= 4; ++m) v.push_back(base_locus_check(m, mode).ok());
  return {v, cert};
}

std::vector<CheckRecord> check_specialization(const RunConfig& cfg) {
  const int top = std::min(cfg.degree_bound(), 4);
  auto [gen, gcert] = ring_ranks(Mode::generic(), top);
  std::vector<CheckRecord> out;
  for (std::uint64_t s = cfg.seed; s < cfg.seed + 3; ++s) {
    auto [r, t] = random_specialization(s, 8);
    auto [sp, scert] = ring_ranks(Mode::specialized(r, t), top);
    out.push_back(rec("specialization[" + r.get_str() + "," + t.get_str() + "]", gcert && scert && sp == gen,
                      std::to_string(sp.size()) + " ranks, " + (sp == gen ? "equal" : "different"),
                      std::to_string(gen.size()) + " generic ranks"));
  }
  return out;
}

// ---- complexes

std::vector<CheckRecord> check_complex(const RunConfig& cfg) {
  try {
    auto c = build_complex(cfg.mode);
    return {rec("complex", true, "QP = PN = NM = 0", "QP = PN = NM = 0")};
  } catch (const RelationFailed& e) {
    return {rec("complex", false, e.what(), "QP = PN = NM = 0")};
  }
}

std::vector<CheckRecord> check_exactness(const RunConfig& cfg) {
  const int top = std::min(cfg.degree_bound(), 5);
  SkewContext ctx(cfg.mode, top);
  auto c = build_complex(cfg.mode);
  std::vector<CheckRecord> out;
  for (int n = 0; n <= top; ++n) {
    auto r = exactness_in_degree(n, c, ctx);
    std::vector<long> h(r.homology.begin(), r.homology.end());
    std::vector<long> want(5, 0);
    if (n == 0) want[0] = 1;
    out.push_back(rec("exactness[n=" + std::to_string(n) + "]", r.exact(), list(h), list(want)));
  }
  return out;
}

std::vector<CheckRecord> check_euler(const RunConfig&) {
  std::vector<long> got, want;
  for (int n = 0; n <= 8; ++n) {
    got.push_back(euler_sum(n));
    want.push_back(n == 0);
  }
  return {rec("euler", got == want, list(got), list(want))};
}

std::vector<CheckRecord> check_presentation(const RunConfig& cfg) {
  SkewContext ctx(cfg.mode, 2);
  auto k = presentation_kernel(ctx);
  return {rec("presentation", k.kernel_dim() == 6, std::to_string(k.kernel_dim()), "6")};
}

std::vector<CheckRecord> check_ext(const RunConfig& cfg) {
  const int top = std::min(4, cfg.degree_bound() - 1);
  SkewContext ctx(cfg.mode);
  auto c = build_complex(cfg.mode);
  std::vector<CheckRecord> out;
  for (int n = 0; n <= top; ++n) {
    auto e = ext_dimensions(n, c, ctx);
    out.push_back(rec("ext[n=" + std::to_string(n) + "]", e.ext[0] == 0 && e.ext[1] == 0,
                      "Ext0 " + std::to_string(e.ext[0]) + ", Ext1 " + std::to_string(e.ext[1]), "Ext0 0, Ext1 0"));
  }
  return out;
}

std::vector<CheckRecord> check_quotient(const RunConfig& cfg) {
  const int top = std::min(4, cfg.degree_bound());
  SkewContext ctx(cfg.mode);
  std::vector<CheckRecord> out;
  for (int n = 0; n <= top; ++n) {
    auto q = quotient_hilbert(n, ctx);
    bool ok = q.lower >= n + 1;
    std::string want = ">= " + std::to_string(n + 1);
    if (n <= 1) {
      ok = ok && q.exact() && q.upper == n + 1;
      want = std::to_string(n + 1);
    }
    std::string got = q.exact() ? std::to_string(q.lower) : std::to_string(q.lower) + ".." + std::to_string(q.upper);
    out.push_back(rec("quotient[n=" + std::to_string(n) + "]", ok, got, want));
  }
  return out;
}

// ---- surface

std::vector<CheckRecord> check_orbit(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  int defined = 0;
  for (int n = 0; n <= 12; ++n) try {
      orbit_point(n, OrbitWhich::F, cfg.mode);
      orbit_point(n, OrbitWhich::Q, cfg.mode);
      ++defined;
    } catch (const UndefinedOrbitPoint&) {
    }
  out.push_back(rec("orbit[defined]", defined == 13, std::to_string(defined) + " of 13", "13 of 13"));
  auto o = orbit_polys(12);
  int good = 0;
  for (int n = 0; n <= 12; ++n)
    good += o.p[static_cast<std::size_t>(n)].substitute(1, 0) == rho_poly().pow(n) &&
            o.q[static_cast<std::size_t>(n)].substitute(1, 0) == MPoly(kParamVars, -1);
  out.push_back(rec("orbit[mod theta]", good == 13, std::to_string(good) + " of 13", "13 of 13"));
  return out;
}

std::vector<CheckRecord> check_critdens(const RunConfig&) {
  struct Case {
    int m, s;
    std::vector<int> idx;
  };
  const std::vector<Case> cases = {{1, 0, {0, 1}}, {1, 0, {0, 2}},       {0, 1, {0, 1}},
                                   {0, 1, {1, 3}}, {1, 1, {0, 1, 2, 3}}, {1, 1, {0, 1, 2, 4}}};
  std::vector<CheckRecord> out;
  for (const auto& c : cases) {
    MPoly d = critdens_determinant(c.m, c.s, c.idx);
    bool ok = !d.is_zero();
    std::string got = ok ? "nonzero" : "zero";
    if (ok) {
      auto lo = lowest_term_theta_rho(d), pr = predicted_lowest_term(c.m, c.s, c.idx);
      bool lt = lo.theta_exp == pr.theta_exp && lo.rho_exp == pr.rho_exp;
      got += lt ? ", lowest term as predicted" : ", lowest term differs";
    }
    out.push_back(rec("critdens[(" + std::to_string(c.m) + "," + std::to_string(c.s) + ")," + list(c.idx) + "]", ok,
                      got, "nonzero"));
  }
  return out;
}

std::vector<CheckRecord> check_baselocus(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int m = 1; m <= 4; ++m) {
    auto r = base_locus_check(m, cfg.mode);
    long len = fat_point_scheme(1, m, cfg.mode).length();
    bool ok = r.ok() && len == 2 * m;
    out.push_back(rec("baselocus[m=" + std::to_string(m) + "]", ok,
                      (r.ok() ? std::string("all clauses hold") : "failed: " + r.failed_clause) + ", length " +
                          std::to_string(len),
                      "all clauses hold, length " + std::to_string(2 * m)));
  }
  return out;
}

// ---- linsys

std::vector<CheckRecord> check_sections(const RunConfig& cfg) {
  const int top = std::min(cfg.degree_bound(), 5);
  SkewContext ctx(cfg.mode, top);
  std::vector<CheckRecord> out;
  for (int n = 1; n <= top; ++n)
    for (int m = 0; n + m <= top; ++m) {
      CohomologyCount c = h0_h1(n, m, 0, 0, cfg.mode);
      SectionsReport s = sections_equal_ring(n, m, ctx);
      const long want = binom(n + 3, 3);
      bool ok = static_cast<long>(c.rank.lower) == c.length && c.h0 == want && c.h1 == 0 && s.ok();
      out.push_back(rec("sections[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]", ok,
                        "rank " + std::to_string(c.rank.lower) + "/" + std::to_string(c.length) + ", h0 " +
                            std::to_string(c.h0) + ", h1 " + std::to_string(c.h1) + ", ring forms vanish " +
                            b(s.rows_vanish && s.vanishing_certified),
                        "rank " + std::to_string(c.length) + "/" + std::to_string(c.length) + ", h0 " +
                            std::to_string(want) + ", h1 0, ring forms vanish true"));
    }
  return out;
}

std::vector<CheckRecord> check_tau_sheaf(const RunConfig& cfg) {
  const int top = std::min(cfg.degree_bound(), 8);
  std::vector<CheckRecord> out;
  for (int m = 0; m <= 4; ++m) {
    bool ok = true;
    std::vector<long> h0, h1;
    for (int n = 0; n <= top; ++n) {
      bool eq = a_monomial_basis(n, m).monomials() == a_product_monomials(n, m);
      AH0H1 c = a_h0_h1(n, m);
      h0.push_back(c.h0);
      h1.push_back(c.h1);
      ok = ok && eq && c.h0 == binom(n + 3, 3) && c.h1 == 0;
    }
    std::vector<long> want0, want1(h1.size(), 0);
    for (int n = 0; n <= top; ++n) want0.push_back(binom(n + 3, 3));
    out.push_back(rec("tau-sheaf[m=" + std::to_string(m) + "]", ok, "h0 " + list(h0) + ", h1 " + list(h1),
                      "h0 " + list(want0) + ", h1 " + list(want1)));
  }
  return out;
}

// ---- diamond

std::vector<CheckRecord> check_diamond(const RunConfig& cfg) {
  RewriteSystem sys = a_system();
  std::vector<CheckRecord> out;
  try {
    auto r = resolve_overlaps(sys);
    out.push_back(rec("diamond[overlaps]", true, std::to_string(r.checked.size()) + " overlaps resolve",
                      "all overlaps resolve"));
  } catch (const UnresolvableOverlap& e) {
    out.push_back(rec("diamond[overlaps]", false, sys.str(e.word) + " leaves " + sys.str(e.difference),
                      "all overlaps resolve"));
  }
  std::vector<long> got, want;
  for (int n = 0; n <= 10; ++n) {
    got.push_back(irreducible_count(sys, n));
    want.push_back(binom(n + 3, 3));
  }
  out.push_back(rec("diamond[counts]", got == want, list(got), list(want)));
  const int top = std::min(cfg.degree_bound(), 8);
  SkewContext ctx(Mode::tau_one(), top);
  std::vector<long> g2, w2;
  bool cert = true;
  for (int n = 0; n <= top; ++n) {
    g2.push_back(irreducible_count(sys, n));
    w2.push_back(ctx.piece(n).dim.lower);
    cert = cert && ctx.piece(n).dim.exact();
  }
  out.push_back(rec("diamond[ring dims]", cert && g2 == w2, list(g2), list(w2)));
  return out;
}

// ---- fibercoh

std::vector<CheckRecord> check_fatfiber(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int a = -1; a >= -4; --a)
    for (int d = 0; d <= 1; ++d) {
      long cases = 0, good = 0;
      std::string first_bad;
      for (int ell = std::max(1, -a - 1); ell <= 4; ++ell)
        for (int n = std::max({d, 1, -a - 1}); n <= 5; ++n) {
          ++cases;
          try {
            auto r = cech_h1_fatfiber(a, 0, d, ell, n, cfg.mode);
            auto s = mu_t_and_stabilization(a, 0, d, ell, n, cfg.mode);
            auto f = filtration_pointmodules(a, 0, d, ell, n, 5, cfg.mode);
            if (r.matches_closed_form() && s.mu_t_bijective && s.restriction_bijective &&
                f.point_modules == binom(-a - d, 2))
              ++good;
            else if (first_bad.empty())
              first_bad = "ell=" + std::to_string(ell) + ",n=" + std::to_string(n);
          } catch (const std::exception& e) {
            if (first_bad.empty()) first_bad = e.what();
          }
        }
      std::vector<int> prof;
      for (int k = -a - d - 1; k >= 1; --k) prof.push_back(k);
      out.push_back(rec("fatfiber[a=" + std::to_string(a) + ",d=" + std::to_string(d) + "]", good == cases,
                        std::to_string(good) + "/" + std::to_string(cases) + " agree" +
                            (first_bad.empty() ? "" : ", first failure " + first_bad),
                        "dim " + std::to_string(binom(-a - d, 2)) + ", profile " + TorsionProfile{prof}.str() +
                            " on all " + std::to_string(cases)));
    }
  return out;
}

std::vector<CheckRecord> check_r1p(const RunConfig&) {
  std::vector<CheckRecord> out;
  for (int a = -1; a >= -3; --a)
    for (int m = 0; m <= 2; ++m) {
      std::vector<long> rr, aa;
      bool ok = true;
      long closed = 0;
      for (int n = std::max(0, -a - 1); n <= -a + 3; ++n) {
        auto x = r1p_length(n, m, a, 0, Variant::R), y = r1p_length(n, m, a, 0, Variant::A);
        rr.push_back(x.total);
        aa.push_back(y.total);
        closed = x.closed_form;
        ok = ok && x.ok() && y.ok() && r1p_profiles_match_cech(x, 0);
      }
      out.push_back(rec("r1p[a=" + std::to_string(a) + ",m=" + std::to_string(m) + "]", ok,
                        "R " + list(rr) + ", A " + list(aa), "each " + std::to_string(closed)));
    }
  return out;
}

std::vector<CheckRecord> check_pushforward(const RunConfig&) {
  std::vector<CheckRecord> out;
  for (int a : {-2, -1, 0, 1})
    for (int bb : {-1, 0, 1})
      for (int m = 0; m <= 1; ++m) {
        const int nmin = a <= -1 ? -a : a + 1;
        bool ok = true;
        int n0 = 0;
        std::vector<long> h1;
        for (int n = nmin; n <= nmin + 6; ++n) {
          auto p = pushforward_split_A(n, m, a, bb);
          n0 = std::max(n0, p.n0);
          h1.push_back(p.h1);
          auto l = leray_balance(n, m, a, bb, false);
          ok = ok && p.matches() && l.balanced_A();
        }
        for (int n = std::max(n0, nmin); n <= nmin + 6; ++n) ok = ok && h1[static_cast<std::size_t>(n - nmin)] == 0;
        out.push_back(rec("pushforward[a=" + std::to_string(a) + ",b=" + std::to_string(bb) + ",m=" +
                              std::to_string(m) + "]",
                          ok, "n0 " + std::to_string(n0) + ", h1 " + list(h1),
                          "closed forms match, Leray balanced, h1 = 0 from n0"));
      }
  // the inequality chain on the generic side at a few points
  bool chain = true;
  std::string got;
  for (auto [n, m, a, bb] : std::vector<std::array<int, 4>>{{2, 1, -2, -1}, {2, 2, -2, 0}, {3, 2, -3, -1}, {3, 1, -2, 0}}) {
    auto l = leray_balance(n, m, a, bb, true);
    chain = chain && l.has_R && l.chain_ok() && l.balanced_A();
    got += (got.empty() ? "" : "; ") + std::to_string(l.h1_push_R_bound()) + " <= " + std::to_string(l.h1_push_A);
  }
  out.push_back(rec("pushforward[chain]", chain, got, "generic bound <= tau-one value"));
  return out;
}

const std::set<ModeKind> kAll{ModeKind::Generic, ModeKind::TauOne, ModeKind::Specialized};
const std::set<ModeKind> kGen{ModeKind::Generic, ModeKind::Specialized};
const std::set<ModeKind> kTau{ModeKind::TauOne};

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = {
      {"dims", "skew", "graded-dimension", kAll, check_dims},
      {"relations", "skew", "quadratic-relations", kAll, relations_check},
      {"presentation", "complexes", "degree-two-kernel", kAll, check_presentation},
      {"complex", "complexes", "complex-identities", kAll, check_complex},
      {"exactness", "complexes", "koszul-exactness", kAll, check_exactness},
      {"euler", "complexes", "euler-identity", kAll, check_euler},
      {"ext", "complexes", "ext-vanishing", kAll, check_ext},
      {"quotient", "complexes", "not-gorenstein-quotient", kAll, check_quotient},
      {"orbit", "surface", "orbit-congruence", kGen, check_orbit},
      {"critdens", "surface", "critical-density", {ModeKind::Generic}, check_critdens},
      {"baselocus", "surface", "base-locus", kGen, check_baselocus},
      {"sections", "linsys", "fat-point-independence", kGen, check_sections},
      {"tau-sheaf", "linsys", "tau-one-sheaf", kTau, check_tau_sheaf},
      {"witness", "skew", "non-noetherian-witness", kTau, check_witness},
      {"diamond", "diamond", "diamond-confluence", kTau, check_diamond},
      {"syzygies", "skew", "syzygy-modules", kTau, check_syzygies},
      {"fatfiber", "fibercoh", "fat-fiber-cohomology", {ModeKind::Generic}, check_fatfiber},
      {"r1p", "fibercoh", "pushforward-length", {ModeKind::Generic, ModeKind::TauOne}, check_r1p},
      {"pushforward", "fibercoh", "pushforward-splitting", {ModeKind::Generic, ModeKind::TauOne}, check_pushforward},
      {"specialization", "skew", "specialization-oracle", {ModeKind::Generic}, check_specialization},
  };
  return reg;
}

const CheckSpec& check_spec(const std::string& key) {
  for (const auto& s : check_registry())
    if (s.key == key) return s;
  throw std::invalid_argument("unknown check " + key);
}

std::map<std::string, std::string> anchor_registry() {
  std::map<std::string, std::string> m;
  for (const auto& s : check_registry()) m[s.key] = s.anchor;
  return m;
}

std::vector<std::string> module_names() { return {"surface", "linsys", "skew", "complexes", "diamond", "fibercoh"}; }

std::vector<CheckRecord> run_check(const CheckSpec& spec, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  try {
    out = spec.run(cfg);
  } catch (const std::exception& e) {
    out = {rec(spec.key, false, std::string("error: ") + e.what(), "no error")};
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  for (auto& r : out) {
    r.check = spec.key;
    r.anchor = spec.anchor;
    r.module = spec.module;
    r.ms = cfg.timing ? ms : 0;
  }
  return out;
}

Report run_checks(const std::string& command, const std::vector<std::string>& keys, const RunConfig& cfg,
                  const Progress& progress) {
  Report rep;
  rep.command = command;
  rep.config = cfg;
  for (const auto& k : keys) {
    const CheckSpec& s = check_spec(k);
    if (progress) progress(k);
    auto recs = run_check(s, cfg);
    rep.checks.insert(rep.checks.end(), recs.begin(), recs.end());
  }
  return rep;
}

Report run_suite(const RunConfig& cfg, const Progress& progress) {
  std::vector<std::string> keys;
  for (const auto& s : check_registry())
    if (s.modes.count(cfg.mode.kind) && (cfg.modules.empty() || cfg.modules.count(s.module))) keys.push_back(s.key);
  return run_checks("suite", keys, cfg, progress);
}

std::pair<mpq_class, mpq_class> random_specialization(std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(2, 97), den(1, 13);
  for (;;) {
    mpq_class r(num(rng), den(rng)), t(num(rng), den(rng));
    r.canonicalize();
    t.canonicalize();
    try {
      check_guard(r, t, bound);
      return {r, t};
    } catch (const GuardFailure&) {
    }
  }
}

}  // namespace bcs
