#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "bcsurf/checks.hpp"
#include "bcsurf/report.hpp"

using namespace bcs;

namespace {

// subcommand -> registry keys
const std::map<std::string, std::vector<std::string>>& commands() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"dims", {"dims"}},
      {"relations", {"relations", "presentation"}},
      {"resolution", {"complex", "exactness", "euler"}},
      {"ext", {"ext", "quotient"}},
      {"orbit", {"orbit"}},
      {"critdens", {"critdens"}},
      {"baselocus", {"baselocus"}},
      {"sheaf", {"sections", "tau-sheaf"}},
      {"fibercoh", {"fatfiber"}},
      {"pushforward", {"r1p", "pushforward"}},
      {"witness", {"witness"}},
      {"diamond", {"diamond"}},
      {"syzygies", {"syzygies"}},
      {"specialization", {"specialization"}},
  };
  return m;
}

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpq_class rational(const std::string& s, const char* what) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ConfigError(std::string("bad rational for ") + what + ": " + s);
  q.canonicalize();
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bcsurf: finite-degree verification of a family of skew surface algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command line flags win");
  app.get_config_ptr()->check(CLI::ExistingFile);

  std::string mode = "generic", rho, theta, out, format = "table";
  int max_degree = -1;
  std::uint64_t seed = 1;
  std::vector<std::string> modules;
  bool timing = false;
  if (const char* e = std::getenv("BCSURF_MAX_DEGREE")) {
    try {
      max_degree = std::stoi(e);
    } catch (const std::exception&) {
      std::cerr << "BCSURF_MAX_DEGREE is not an integer: " << e << "\n";
      return 2;
    }
  }

  app.add_option("--mode", mode, "generic | tau-one | specialized")
      ->check(CLI::IsMember({"generic", "tau-one", "specialized"}));
  app.add_option("--rho", rho, "exact rational for specialized mode");
  app.add_option("--theta", theta, "exact rational for specialized mode");
  app.add_option("--max-degree", max_degree, "degree bound (default: 5 generic, 8 otherwise)");
  app.add_option("--out", out, "report file (default stdout)");
  app.add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", seed, "seed for randomized cross-checks");
  app.add_option("--modules", modules, "comma separated module subset")->delimiter(',');
  app.add_flag("--timing", timing, "record elapsed milliseconds per check");

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, keys] : commands()) subs[name] = app.add_subcommand(name, "run the " + name + " checks");
  auto* suite = app.add_subcommand("suite", "every check applicable to the mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  RunConfig cfg;
  Format fmt;
  try {
    if (mode == "generic")
      cfg.mode = Mode::generic(seed);
    else if (mode == "tau-one")
      cfg.mode = Mode::tau_one();
    else {
      if (rho.empty() || theta.empty()) throw ConfigError("specialized mode needs --rho and --theta");
      cfg.mode = Mode::specialized(rational(rho, "rho"), rational(theta, "theta"), seed);
    }
    if (mode != "specialized" && (!rho.empty() || !theta.empty()))
      throw ConfigError("--rho/--theta only apply to specialized mode");
    cfg.max_degree = max_degree;
    if (max_degree < -1 || max_degree == 0) throw ConfigError("max-degree must be positive");
    cfg.seed = seed;
    cfg.timing = timing;
    auto names = module_names();
    for (const auto& m : modules) {
      if (std::find(names.begin(), names.end(), m) == names.end()) throw ConfigError("unknown module " + m);
      cfg.modules.insert(m);
    }
    if (cfg.mode.kind == ModeKind::Specialized)
      check_guard(cfg.mode.rho0, cfg.mode.theta0, cfg.degree_bound());
    fmt = parse_format(format);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  Progress progress = [](const std::string& k) { std::cerr << "running " << k << "\n"; };
  Report rep;
  try {
    if (suite->parsed()) {
      rep = run_suite(cfg, progress);
    } else {
      for (const auto& [name, sub] : subs) {
        if (!sub->parsed()) continue;
        std::vector<std::string> keys;
        for (const auto& k : commands().at(name))
          if (check_spec(k).modes.count(cfg.mode.kind)) keys.push_back(k);
        if (keys.empty()) {
          std::cerr << name << " does not apply in " << cfg.mode_label() << " mode\n";
          return 2;
        }
        rep = run_checks(name, keys, cfg, progress);
      }
    }
  } catch (const GuardFailure& e) {
    std::cerr << "guard failure: " << e.what() << "\n";
    return 2;
  }

  try {
    emit(rep, fmt, out, std::cout);
  } catch (const ReportIOError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return rep.pass() ? 0 : 1;
}
