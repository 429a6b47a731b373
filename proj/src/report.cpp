#include "bcsurf/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace bcs {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw std::invalid_argument("unknown format " + s);
}

namespace {

const char* status(bool pass) { return pass ? "PASS" : "FAIL"; }

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["mode"] = c.mode_label();
  if (c.mode.kind == ModeKind::Specialized) {
    j["rho"] = c.mode.rho0.get_str();
    j["theta"] = c.mode.theta0.get_str();
  }
  j["max_degree"] = c.degree_bound();
  j["modules"] = nlohmann::ordered_json::array();
  for (const auto& m : c.modules) j["modules"].push_back(m);
  j["seed"] = c.seed;
  j["timing"] = c.timing;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"') o += '"';
    o += ch;
  }
  return o + "\"";
}

}  // namespace

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["config"] = config_json(r.config);
  j["status"] = status(r.pass());
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["status"] = status(c.pass);
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    e["ms"] = c.ms;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& r) {
  std::ostringstream s;
  s << "name,anchor,status,computed,expected,ms\n";
  for (const auto& c : r.checks)
    s << csv_field(c.name) << ',' << csv_field(c.anchor) << ',' << status(c.pass) << ',' << csv_field(c.computed)
      << ',' << csv_field(c.expected) << ',' << c.ms << '\n';
  return s.str();
}

std::string to_table(const Report& r) {
  std::size_t wn = 4, wc = 8;
  for (const auto& c : r.checks) {
    wn = std::max(wn, c.name.size());
    wc = std::max(wc, c.computed.size());
  }
  wc = std::min<std::size_t>(wc, 60);
  std::ostringstream s;
  s << r.command << "  mode " << r.config.mode_label() << "  max-degree " << r.config.degree_bound() << "\n";
  s << std::left << std::setw(static_cast<int>(wn)) << "name" << "  status  " << std::setw(static_cast<int>(wc))
    << "computed" << "  expected\n";
  for (const auto& c : r.checks) {
    s << std::setw(static_cast<int>(wn)) << c.name << "  " << status(c.pass) << "    "
      << std::setw(static_cast<int>(wc)) << c.computed << "  " << c.expected;
    if (r.config.timing) s << "  (" << c.ms << " ms)";
    s << "\n";
  }
  long bad = 0;
  for (const auto& c : r.checks) bad += !c.pass;
  s << (bad ? std::to_string(bad) + " of " + std::to_string(r.checks.size()) + " failed"
            : "all " + std::to_string(r.checks.size()) + " passed")
    << "\n";
  return s.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json: return to_json(r);
    case Format::Csv: return to_csv(r);
    case Format::Table: return to_table(r);
  }
  return {};
}

void emit(const Report& r, Format f, const std::string& path, std::ostream& out) {
  const std::string text = render(r, f);
  if (path.empty()) {
    out << text;
    out.flush();
    if (!out) throw ReportIOError("cannot write report to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ReportIOError("cannot open " + path);
  file << text;
  file.close();
  if (!file) throw ReportIOError("cannot write " + path);
}

}  // namespace bcs
