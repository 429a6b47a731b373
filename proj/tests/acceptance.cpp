// one PASS/FAIL line per acceptance criterion; exit 0 iff all pass
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bcsurf/checks.hpp"
#include "bcsurf/report.hpp"

using namespace bcs;

namespace {

RunConfig config(const Mode& m, int bound = -1) {
  RunConfig c;
  c.mode = m;
  c.max_degree = bound;
  return c;
}

struct Outcome {
  bool pass = true;
  std::string note;
};

// runs keys under cfg; any failing record fails the criterion
void run(Outcome& o, const std::vector<std::string>& keys, const RunConfig& cfg) {
  Report r = run_checks("acceptance", keys, cfg);
  long bad = 0;
  for (const auto& c : r.checks)
    if (!c.pass) {
      if (!bad) o.note += " first failure " + c.name + " (" + c.computed + " vs " + c.expected + ")";
      ++bad;
    }
  o.pass = o.pass && bad == 0 && !r.checks.empty();
  o.note += " " + cfg.mode_label() + ":" + std::to_string(r.checks.size() - bad) + "/" + std::to_string(r.checks.size());
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// time limit in seconds; <= 0 means none
Outcome timed(double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t = std::chrono::steady_clock::now();
  body(o);
  double s = seconds_since(t);
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.2fs", s);
  o.note += buf;
  if (limit > 0 && s > limit) {
    o.pass = false;
    o.note += " over the limit";
  }
  return o;
}

}  // namespace

int main() {
  const Mode gen = Mode::generic(), tau = Mode::tau_one(), spec = Mode::specialized(2, 3);
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> crit = {
      {"graded dimensions",
       [&] {
         Outcome a = timed(600, [&](Outcome& o) { run(o, {"dims"}, config(gen, 5)); });
         Outcome b = timed(60, [&](Outcome& o) {
           run(o, {"dims"}, config(tau, 8));
           run(o, {"dims"}, config(spec, 8));
         });
         return Outcome{a.pass && b.pass, a.note + ";" + b.note};
       }},
      {"presentation", [&] { return timed(0, [&](Outcome& o) { run(o, {"relations", "presentation"}, config(gen)); }); }},
      {"resolution",
       [&] {
         return timed(0, [&](Outcome& o) {
           run(o, {"complex", "exactness", "euler"}, config(gen, 5));
           run(o, {"complex", "exactness", "euler"}, config(tau, 5));
         });
       }},
      {"ext and quotient", [&] { return timed(0, [&](Outcome& o) { run(o, {"ext", "quotient"}, config(gen)); }); }},
      {"orbits and critical density",
       [&] { return timed(60, [&](Outcome& o) { run(o, {"orbit", "critdens"}, config(gen)); }); }},
      {"base loci", [&] { return timed(0, [&](Outcome& o) { run(o, {"baselocus"}, config(gen)); }); }},
      {"fat-point independence", [&] { return timed(0, [&](Outcome& o) { run(o, {"sections"}, config(gen, 5)); }); }},
      {"tau-one sheaf cohomology", [&] { return timed(0, [&](Outcome& o) { run(o, {"tau-sheaf"}, config(tau, 8)); }); }},
      {"fat-fiber cech", [&] { return timed(0, [&](Outcome& o) { run(o, {"fatfiber"}, config(gen)); }); }},
      {"pushforward lengths", [&] { return timed(0, [&](Outcome& o) { run(o, {"r1p"}, config(gen)); }); }},
      {"pushforward h1 vanishing", [&] { return timed(0, [&](Outcome& o) { run(o, {"pushforward"}, config(gen)); }); }},
      {"non-noetherian witness", [&] { return timed(0, [&](Outcome& o) { run(o, {"witness"}, config(tau)); }); }},
      {"diamond lemma", [&] { return timed(0, [&](Outcome& o) { run(o, {"diamond"}, config(tau, 8)); }); }},
      {"syzygies", [&] { return timed(0, [&](Outcome& o) { run(o, {"syzygies"}, config(tau)); }); }},
      {"determinism and oracle agreement",
       [&] {
         return timed(0, [&](Outcome& o) {
           run(o, {"specialization"}, config(gen));
           for (const Mode& m : {gen, tau}) {
             RunConfig c = config(m);
             const std::string first = to_json(run_suite(c)), second = to_json(run_suite(c));
             const bool same = first == second && to_csv(run_suite(c)) == to_csv(run_suite(c));
             o.pass = o.pass && same;
             o.note += std::string(" ") + c.mode_label() + (same ? " byte-identical" : " reports differ");
           }
         });
       }},
  };
  bool all = true;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    Outcome o = crit[i].run();
    all = all && o.pass;
    std::printf("criterion %2zu %-34s %s%s\n", i + 1, crit[i].title, o.pass ? "PASS" : "FAIL", o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
