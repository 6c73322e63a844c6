#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbitgcd/errors.hpp"
#include "orbitgcd/experiments.hpp"

using namespace orbitgcd;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string config_field(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

const char* kA2 = R"({"name": "a2", "arity": 3,
  "map": ["x0^2*x1", "x1^3+x0^2*x1+x0*x2^2", "x2^3"],
  "ideal": ["x0-x2", "x1-x2"], "start": [2, "3", 1], "n_max": 8,
  "composition_cap": 81, "degree_steps": 4,
  "metadata": {"Y in X_f^back": "yes", "orbit generic": "asserted"}})";

}  // namespace

TEST_CASE("config parsing") {
  const ScenarioConfig cfg = parse_config(kA2);
  CHECK(cfg.arity == 3);
  CHECK(cfg.start == std::vector<BigInt>{2, 3, 1});
  CHECK(cfg.n_max == 8);
  CHECK(cfg.primes == std::vector<std::uint64_t>{1009, 2003, 4001});
  CHECK(cfg.metadata.at("Y in X_f^back") == "yes");

  CHECK(config_field("{") == "(document)");
  CHECK(config_field("[]") == "(document)");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1","x2"], "ideal": ["x0"]})") == "start");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1"], "ideal": ["x0"], "start": [1,1,1]})") == "map");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1","x2"], "ideal": ["x0"], "start": [1,1,1], "nmax": 3})") ==
        "nmax");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1","x2"], "ideal": ["x0"], "start": [1,"1.5",1]})") ==
        "start[1]");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1","x2"], "ideal": ["x0"], "start": [1,1,1], "primes": [1001]})") ==
        "primes[0]");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1","x2"], "ideal": ["x0"], "start": [1,1,1], "n_max": -2})") ==
        "n_max");
  CHECK(config_field(R"({"arity": 3, "map": ["x0","x1",2], "ideal": ["x0"], "start": [1,1,1]})") == "map[2]");
}

TEST_CASE("run_scenario validation errors name the field") {
  auto field_of = [](const ScenarioConfig& cfg) -> std::string {
    try {
      run_scenario(cfg);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "";
  };
  ScenarioConfig cfg = parse_config(kA2);
  cfg.map[1] = "x1^3 x0";
  CHECK(field_of(cfg) == "map[1]");
  cfg = parse_config(kA2);
  cfg.map[1] = "x1^2";
  CHECK(field_of(cfg) == "map");
  cfg = parse_config(kA2);
  cfg.ideal[0] = "x0 + 1";
  CHECK(field_of(cfg) == "ideal");
  cfg = parse_config(kA2);
  cfg.start = {0, 0, 0};
  CHECK(field_of(cfg) == "start");
}

TEST_CASE("backnonfin scenario") {
  const OrbitReport r = run_scenario(builtin_scenario("backnonfin"));
  REQUIRE(r.rows.size() == 13);
  CHECK(*r.rows[12].ratio == doctest::Approx(0.98783897).epsilon(1e-7));
  for (std::size_t n = 4; n < r.rows.size(); ++n) CHECK(*r.rows[n].ratio > *r.rows[n - 1].ratio);
  CHECK(r.summary.trend.label == "→ 1-consistent");
  CHECK(r.summary.checklist.verdict == "theorem not applicable");
  CHECK(*r.summary.dN_mode() == 6);
  CHECK(r.summary.d1_estimate() == 3.0);
  CHECK(r.summary.alpha->ratio_tail == doctest::Approx(3.0).epsilon(0.05));

  std::ostringstream csv;
  write_csv(r, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,bits,h,hY_arch,hY_gcd,hY_total,ratio");
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 13);
}

TEST_CASE("a2 scenario") {
  const OrbitReport r = run_scenario(builtin_scenario("a2"));
  CHECK(r.summary.d1_estimate() == 3.0);
  CHECK(*r.summary.dN_mode() == 7);
  CHECK_FALSE(r.flags.budget_exceeded);
  ScenarioConfig longer = builtin_scenario("a2");
  longer.degree_steps = 6;
  longer.n_max = 3;
  const OrbitReport capped = run_scenario(longer);
  CHECK(capped.flags.budget_exceeded);
  CHECK(capped.summary.degrees.steps.size() == 4);
  CHECK(r.summary.checklist.verdict == "predicts ratio → 0");
  const auto doc = nlohmann::json::parse(render_report(r, ReportFormat::json));
  CHECK(doc["summary"]["dN_mode"] == 7);
  CHECK(doc["rows"].size() == r.rows.size());
  CHECK(doc["seed"] == 1);
}

TEST_CASE("bcz scenario equals the closed form") {
  const OrbitReport r = run_scenario(builtin_scenario("bcz", {2, 3, 40}));
  REQUIRE(r.rows.size() == 41);
  for (std::size_t n = 1; n <= 40; ++n) {
    const BczValue c = bcz_closed_form(2, 3, n);
    REQUIRE(r.rows[n].h_y.gcd == c.gcd);
    REQUIRE(r.rows[n].h_y.norm == c.height_max);
    REQUIRE(r.rows[n].h_y.arch_value == c.arch_max);
    REQUIRE(r.rows[n].h == c.h);
    REQUIRE(r.rows[n].h_y.total == c.h_y);
  }
  CHECK(r.summary.checklist.orbit_generic == "asserted");
  CHECK(run_scenario(builtin_scenario("bcz", {2, 4, 5})).summary.checklist.orbit_generic == "no");
  CHECK_THROWS_AS(builtin_scenario("bcz", {1, 3, 5}), ConfigError);
  CHECK_THROWS_AS(builtin_scenario("nope"), ConfigError);
}

TEST_CASE("empty orbit gives a header-only csv and a flag sidecar") {
  ScenarioConfig cfg = builtin_scenario("backnonfin");
  cfg.start = {1, 0, 0};
  const OrbitReport r = run_scenario(cfg);
  CHECK(r.rows.empty());
  CHECK(*r.flags.indeterminate_at == 0);
  const std::string path = "empty_orbit_test.csv";
  emit_report(r, ReportFormat::csv, path);
  CHECK(read_file(path) == "n,bits,h,hY_arch,hY_gcd,hY_total,ratio\n");
  const auto side = nlohmann::json::parse(read_file(path + ".flags.json"));
  CHECK(side["flags"]["truncated"] == true);
  CHECK(side["flags"]["indeterminate_at"] == 0);
  std::remove(path.c_str());
  std::remove((path + ".flags.json").c_str());
  CHECK_THROWS_AS(emit_report(r, ReportFormat::csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST_CASE("reports are byte-deterministic") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const ScenarioConfig cfg = builtin_scenario(name, {2, 3, 8});
    const OrbitReport a = run_scenario(cfg);
    const OrbitReport b = run_scenario(cfg);
    CHECK(render_report(a, ReportFormat::csv) == render_report(b, ReportFormat::csv));
    CHECK(render_report(a, ReportFormat::json) == render_report(b, ReportFormat::json));
  }
}

TEST_CASE("format_double") {
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(std::log(2.0) * 1e20) == "6.9314718056e+19");
  CHECK(format_double(INFINITY) == "inf");
}

TEST_CASE("trend classifier") {
  auto rows_from = [](const std::vector<std::pair<double, double>>& hr) {
    std::vector<RatioRow> rows;
    for (std::size_t i = 0; i < hr.size(); ++i) {
      RatioRow r;
      r.n = i;
      r.h = hr[i].first;
      r.ratio = hr[i].second;
      rows.push_back(r);
    }
    return rows;
  };
  std::vector<std::pair<double, double>> down;
  std::vector<std::pair<double, double>> up;
  std::vector<std::pair<double, double>> flat;
  for (int n = 1; n <= 30; ++n) {
    const double h = std::exp(0.3 * n);
    down.emplace_back(h, 1.0 / std::log(h));
    up.emplace_back(h, 1.0 - 1.0 / std::log(h));
    flat.emplace_back(h, 0.5);
  }
  CHECK(classify_trend(rows_from(down)).label == "→ 0-consistent");
  CHECK(classify_trend(rows_from(up)).label == "→ 1-consistent");
  CHECK(classify_trend(rows_from(flat)).label == "inconclusive");
  CHECK(classify_trend(rows_from(flat)).rows_used == 10);
  CHECK(classify_trend({}).label == "inconclusive");
}

TEST_CASE("check_hypotheses") {
  const ScenarioConfig a2 = builtin_scenario("a2");
  const OrbitReport r = run_scenario(a2);
  const auto yes = check_hypotheses(r, a2, 3.0);
  CHECK(yes.verdict == "predicts ratio → 0");
  CHECK(*yes.threshold == doctest::Approx(std::sqrt(7.0)));
  CHECK(check_hypotheses(r, a2, 2.6).verdict == "hypothesis fails");
  CHECK(check_hypotheses(r, a2, std::sqrt(7.0)).verdict == "hypothesis fails");

  const ScenarioConfig bn = builtin_scenario("backnonfin");
  const OrbitReport rb = run_scenario(bn);
  CHECK(check_hypotheses(rb, bn, 3.0).verdict == "theorem not applicable");

  // d_2 = 9 with alpha = 3 sits exactly on the boundary
  ScenarioConfig sq = builtin_scenario("squaring");
  sq.map = {"x0^3", "x1^3", "x2^3"};
  sq.metadata["orbit generic"] = "asserted";
  const OrbitReport rs = run_scenario(sq);
  REQUIRE(*rs.summary.dN_mode() == 9);
  const auto fails = check_hypotheses(rs, sq, 3.0);
  CHECK(fails.verdict == "hypothesis fails");
  CHECK(fails.predicts == "no");

  ScenarioConfig unknown = a2;
  unknown.metadata.clear();
  CHECK(check_hypotheses(r, unknown, 3.0).verdict == "unknown");
}

TEST_CASE("property: check_hypotheses is monotone in alpha" * doctest::description("3 configs x 400 alphas")) {
  for (const char* name : {"a2", "bcz", "squaring"}) {
    ScenarioConfig cfg = builtin_scenario(name, {2, 3, 10});
    const OrbitReport r = run_scenario(cfg);
    bool seen_yes = false;
    for (int i = 0; i <= 400; ++i) {
      const double alpha = 0.5 + 0.01 * i;
      const bool yes = check_hypotheses(r, cfg, alpha).predicts == "yes";
      if (seen_yes) REQUIRE(yes);
      seen_yes = seen_yes || yes;
    }
  }
}
