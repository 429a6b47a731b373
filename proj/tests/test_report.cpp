#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "bcsurf/checks.hpp"
#include "bcsurf/report.hpp"

using namespace bcs;

namespace {
RunConfig tau() {
  RunConfig c;
  c.mode = Mode::tau_one();
  return c;
}
}  // namespace

TEST_CASE("json report round trips") {
  Report r = run_checks("relations", {"relations", "presentation"}, tau());
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["command"] == "relations");
  CHECK(j["config"]["mode"] == "tau-one");
  REQUIRE(j["checks"].size() == r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(j["checks"][i]["name"] == r.checks[i].name);
    CHECK(j["checks"][i]["anchor"] == r.checks[i].anchor);
    CHECK(j["checks"][i]["status"] == (r.checks[i].pass ? "PASS" : "FAIL"));
    CHECK(j["checks"][i].contains("ms"));
  }
}

TEST_CASE("csv has one row per check") {
  Report r = run_checks("dims", {"dims"}, tau());
  std::string csv = to_csv(r);
  long lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == static_cast<long>(r.checks.size()) + 1);
  CHECK(csv.rfind("name,anchor,status,computed,expected,ms\n", 0) == 0);
}

TEST_CASE("reports are byte identical for a fixed config") {
  RunConfig c = tau();
  CHECK(to_json(run_suite(c)) == to_json(run_suite(c)));
  c.modules = {"fibercoh"};
  Report f = run_suite(c);
  CHECK_FALSE(f.checks.empty());
  for (const auto& k : f.checks) CHECK(k.module == "fibercoh");
}

TEST_CASE("every record carries a registered anchor") {
  auto anchors = anchor_registry();
  Report r = run_suite(tau());
  for (const auto& c : r.checks) {
    REQUIRE(anchors.count(c.check));
    CHECK(anchors[c.check] == c.anchor);
    CHECK_FALSE(c.anchor.empty());
  }
}

TEST_CASE("failures become failing records and flip the report") {
  CheckSpec bad{"boom", "skew", "none", {ModeKind::TauOne},
                [](const RunConfig&) -> std::vector<CheckRecord> { throw std::runtime_error("x"); }};
  auto recs = run_check(bad, tau());
  REQUIRE(recs.size() == 1);
  CHECK_FALSE(recs[0].pass);
  Report r;
  r.checks = recs;
  CHECK_FALSE(r.pass());
}

TEST_CASE("random specializations pass the guard") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto [r, t] = random_specialization(s, 8);
    CHECK_NOTHROW(check_guard(r, t, 8));
    CHECK(random_specialization(s, 8) == std::make_pair(r, t));
  }
}

TEST_CASE("formats and IO errors") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  Report r;
  std::ostringstream os;
  CHECK_THROWS_AS(emit(r, Format::Json, "/nonexistent-dir/r.json", os), ReportIOError);
}
