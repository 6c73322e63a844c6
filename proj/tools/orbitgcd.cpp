// orbitgcd command-line driver.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitgcd/degrees.hpp"
#include "orbitgcd/errors.hpp"
#include "orbitgcd/experiments.hpp"
#include "orbitgcd/polyparse.hpp"

namespace {

using namespace orbitgcd;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFlagged = 2;
constexpr int kExitInternal = 3;

bool banner_printed = false;

void banner(const std::string& seed) {
  std::cerr << "orbitgcd " << kVersion << " seed=" << seed << '\n';
  banner_printed = true;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ORBITGCD_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("ORBITGCD_SEED", std::string("'") + env + "' is not an unsigned integer");
  }
  return 1;
}

std::vector<std::vector<long>> parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<long> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
      if (used == 0 || used != cell.size()) throw ConfigError("--matrix", "'" + cell + "' is not an integer");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ConfigError("--matrix", "empty matrix");
  return rows;
}

struct RunArgs {
  std::string config;
  std::string scenario;
  long a = 2;
  long b = 3;
  std::optional<std::size_t> n;
  std::string out;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

struct DegreesArgs {
  std::string map;
  std::string mode = "seq";
  std::string matrix;
  std::uint32_t n = 6;
  std::uint64_t cap = 729;
  std::vector<std::uint64_t> primes{1009, 2003, 4001};
  std::size_t targets = 20;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool rational_scan = false;
};

int cmd_run(const RunArgs& args) {
  ScenarioConfig cfg;
  if (!args.config.empty()) {
    cfg = load_config(args.config);
    if (args.n) cfg.n_max = *args.n;
  } else {
    cfg = builtin_scenario(args.scenario, {args.a, args.b, args.n});
  }
  if (args.seed || std::getenv("ORBITGCD_SEED")) cfg.seed = resolve_seed(args.seed);
  banner(std::to_string(cfg.seed));

  const OrbitReport report = run_scenario(cfg);
  const ReportFormat format = args.format == "json" ? ReportFormat::json : ReportFormat::csv;
  if (args.out.empty()) {
    std::cout << render_report(report, format);
    std::cerr << summary_table(report);
  } else {
    emit_report(report, format, args.out);
    std::cout << summary_table(report);
  }
  return report.flags.indeterminate_at ? kExitFlagged : kExitOk;
}

ojson fiber_json(const FiberCountReport& r) {
  ojson j;
  j["dN_mode"] = r.mode() ? ojson(*r.mode()) : ojson(nullptr);
  j["modes"] = r.modes;
  j["ambiguous"] = r.ambiguous;
  j["stable_across_primes"] = r.stable_across_primes;
  j["non_dominant_suspected"] = r.non_dominant_suspected;
  ojson per = ojson::array();
  for (const auto& p : r.per_prime) {
    ojson e;
    e["prime"] = p.prime;
    e["modes"] = p.modes;
    ojson hist = ojson::object();
    for (const auto& [k, v] : p.histogram) hist[std::to_string(k)] = v;
    e["histogram"] = hist;
    per.push_back(e);
  }
  j["per_prime"] = per;
  return j;
}

int cmd_degrees(const DegreesArgs& args) {
  const std::uint64_t seed = resolve_seed(args.seed);
  banner(std::to_string(seed));
  ojson out;
  out["mode"] = args.mode;
  if (args.mode == "monomial") {
    if (args.matrix.empty()) throw ConfigError("--matrix", "required for --mode monomial");
    const MonomialMap a(parse_matrix(args.matrix));
    const MonomialDegrees d = monomial_dyn_degrees(a);
    out["matrix"] = a.matrix();
    out["degrees"] = d.degrees;
    ojson ev = ojson::array();
    for (const auto& z : d.eigenvalues) ev.push_back({z.real(), z.imag()});
    out["eigenvalues"] = ev;
    out["charpoly"] = to_strings(d.charpoly);
    out["det_abs"] = d.det_abs.get_str();
    out["validated"] = d.validated;
    out["map"] = monomial_rational_map(a).to_string();
    std::cout << out.dump(2) << '\n';
    return d.validated ? kExitOk : kExitInternal;
  }
  if (args.map.empty()) throw ConfigError("--map", "required for --mode " + args.mode);
  std::vector<BigPoly> comps;
  const std::size_t arity = static_cast<std::size_t>(std::count(args.map.begin(), args.map.end(), ';')) + 1;
  try {
    comps = parse_poly_list(args.map, arity);
  } catch (const ParseError& e) {
    throw ConfigError("--map", e.what());
  }
  const RationalMap f = [&] {
    try {
      return make_map(std::move(comps));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("--map", e.what());
    }
  }();
  out["map"] = f.to_string();
  if (args.mode == "seq") {
    const DegreeSequence seq = degree_sequence(f, args.n, args.cap);
    ojson steps = ojson::array();
    for (const auto& s : seq.steps) steps.push_back({{"n", s.n}, {"degree", s.degree}, {"root", s.root}});
    out["degrees"] = steps;
    out["d1_estimate"] = seq.d1_estimate();
    out["budget_exceeded"] = seq.budget_exceeded;
    if (seq.budget_exceeded) out["budget_message"] = seq.budget_message;
    std::cout << out.dump(2) << '\n';
    return seq.budget_exceeded ? kExitFlagged : kExitOk;
  }
  if (args.mode == "topo") {
    FiberCountOptions opts{args.primes, args.targets, seed};
    FiberCountReport r;
    try {
      r = topological_degree_ff(f, opts);
    } catch (const DomainError& e) {
      throw ConfigError("--primes/--map", e.what());
    }
    out.update(fiber_json(r));
    if (args.rational_scan) {
      const unsigned threads = args.threads ? args.threads : std::max(1U, std::thread::hardware_concurrency());
      ojson scans = ojson::array();
      for (auto p : args.primes) {
        const auto rs = rational_fiber_counts(f, p, args.targets, seed, threads);
        ojson hist = ojson::object();
        for (const auto& [k, v] : rs.histogram) hist[std::to_string(k)] = v;
        scans.push_back({{"prime", p}, {"counts", rs.counts}, {"histogram", hist}});
      }
      out["rational_scan"] = scans;
    }
    std::cout << out.dump(2) << '\n';
    return (r.ambiguous || r.non_dominant_suspected) ? kExitFlagged : kExitOk;
  }
  throw ConfigError("--mode", "expected seq, topo or monomial");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized-gcd heights along orbits of rational maps"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and emit its report");
  auto* opt_config = run_cmd->add_option("--config", run.config, "JSON scenario file");
  auto* opt_scenario = run_cmd->add_option("--scenario", run.scenario, "Built-in scenario: backnonfin, a2, bcz, squaring");
  opt_config->excludes(opt_scenario);
  opt_scenario->excludes(opt_config);
  run_cmd->add_option("--a", run.a, "bcz: first multiplier")->check(CLI::Range(2L, 1000000L));
  run_cmd->add_option("--b", run.b, "bcz: second multiplier")->check(CLI::Range(2L, 1000000L));
  run_cmd->add_option("--n", run.n, "Number of iterates");
  run_cmd->add_option("--out", run.out, "Report file (default: standard output)");
  run_cmd->add_option("--format", run.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--seed", run.seed, "Random seed (default: $ORBITGCD_SEED or 1)");
  run_cmd->add_option("--threads", run.threads, "Worker threads");

  DegreesArgs deg;
  auto* deg_cmd = app.add_subcommand("degrees", "Dynamical degree estimates");
  deg_cmd->add_option("--map", deg.map, "Components separated by ';'");
  deg_cmd->add_option("--mode", deg.mode, "seq, topo or monomial")->check(CLI::IsMember({"seq", "topo", "monomial"}));
  deg_cmd->add_option("--matrix", deg.matrix, "Rows separated by ';', entries by ','");
  deg_cmd->add_option("--n", deg.n, "Iterates for --mode seq")->check(CLI::Range(1U, 64U));
  deg_cmd->add_option("--cap", deg.cap, "Composition degree cap");
  deg_cmd->add_option("--primes", deg.primes, "Primes for --mode topo")->delimiter(',');
  deg_cmd->add_option("--targets", deg.targets, "Targets per prime")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  deg_cmd->add_option("--seed", deg.seed, "Random seed (default: $ORBITGCD_SEED or 1)");
  deg_cmd->add_option("--threads", deg.threads, "Worker threads for --rational-scan");
  deg_cmd->add_flag("--rational-scan", deg.rational_scan, "Also count F_p-rational preimages by exhaustive scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    banner("-");
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      if (run.config.empty() == run.scenario.empty()) {
        banner("-");
        std::cerr << "error: run needs exactly one of --config or --scenario\n";
        return kExitUsage;
      }
      return cmd_run(run);
    }
    return cmd_degrees(deg);
  } catch (const ConfigError& e) {
    if (!banner_printed) banner("-");
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    if (!banner_printed) banner("-");
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    if (!banner_printed) banner("-");
    std::cerr << "error: " << e.what() << '\n';
    return kExitFlagged;
  } catch (const std::exception& e) {
    if (!banner_printed) banner("-");
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
