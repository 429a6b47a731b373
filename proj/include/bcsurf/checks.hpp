#ifndef BCSURF_CHECKS_HPP
#define BCSURF_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bcsurf/mode.hpp"

namespace bcs {

struct RunConfig {
  Mode mode = Mode::generic();
  int max_degree = -1;  // -1: the mode's default bound
  std::set<std::string> modules;  // empty: all
  std::uint64_t seed = 1;
  bool timing = false;  // record elapsed milliseconds (breaks byte stability)
  int degree_bound() const;
  std::string mode_label() const;
};

struct CheckRecord {
  std::string name;    // e.g. dims[n=3]
  std::string check;   // registry key, e.g. dims
  std::string anchor;  // claim identifier from the anchor registry
  std::string module;
  bool pass = false;
  std::string computed, expected;
  long ms = 0;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckRecord> checks;
  bool pass() const;
};

using CheckFn = std::function<std::vector<CheckRecord>(const RunConfig&)>;

struct CheckSpec {
  std::string key;
  std::string module;
  std::string anchor;
  std::set<ModeKind> modes;  // modes the check applies to
  CheckFn run;
};

// fixed order; report ordering follows it
const std::vector<CheckSpec>& check_registry();
const CheckSpec& check_spec(const std::string& key);
// check key -> anchor
std::map<std::string, std::string> anchor_registry();
std::vector<std::string> module_names();

// runs one registered check; exceptions become failing records
std::vector<CheckRecord> run_check(const CheckSpec& spec, const RunConfig& cfg);
using Progress = std::function<void(const std::string&)>;
Report run_checks(const std::string& command, const std::vector<std::string>& keys, const RunConfig& cfg,
                  const Progress& progress = nullptr);
// every applicable check of the selected modules
Report run_suite(const RunConfig& cfg, const Progress& progress = nullptr);

// admissible specialization drawn from the seed: numerators and denominators
// small, guard list satisfied up to 2 * bound
std::pair<mpq_class, mpq_class> random_specialization(std::uint64_t seed, int bound);

}  // namespace bcs

#endif
