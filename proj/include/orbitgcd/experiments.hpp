#pragma once

// Scenario configs, built-in examples, the experiment runner and report output.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbitgcd/bigint.hpp"
#include "orbitgcd/degrees.hpp"
#include "orbitgcd/heights.hpp"
#include "orbitgcd/projgeom.hpp"

namespace orbitgcd {

inline constexpr const char* kVersion = "0.1.0";

struct ScenarioConfig {
  std::string name = "custom";
  std::size_t arity = 3;  // number of homogeneous variables
  std::vector<std::string> map;
  std::vector<std::string> ideal;
  std::vector<BigInt> start;
  std::size_t n_max = 10;
  std::vector<std::uint64_t> primes{1009, 2003, 4001};
  std::size_t targets_per_prime = 20;
  std::uint64_t composition_cap = 729;
  std::uint32_t degree_steps = 8;
  /// Dimension of Y; the hypothesis test uses d_c with c = N - dim_y.
  std::size_t dim_y = 0;
  std::map<std::string, std::string> metadata;
  std::uint64_t seed = 1;
};

/// Parses a JSON scenario. Throws ConfigError naming the offending field.
ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);

struct BuiltinParams {
  long a = 2;
  long b = 3;
  std::optional<std::size_t> n;
};

/// "backnonfin", "a2", "bcz" (diagonal map (a x0 : b x1 : x2)) and "squaring".
ScenarioConfig builtin_scenario(const std::string& name, const BuiltinParams& params = {});
std::vector<std::string> builtin_names();

struct TrendSummary {
  std::string label = "inconclusive";
  double slope = 0.0;
  std::size_t rows_used = 0;
};

/// Least-squares slope of ratio against 1/log h over the last third of the rows
/// with a ratio and h > 1. Inside the +-0.05 band a tail held below 0.05 (above
/// 0.95) still reads as tending to 0 (1).
TrendSummary classify_trend(const std::vector<RatioRow>& rows);

struct HypothesisChecklist {
  std::string y_in_back;     // echoed metadata: yes / no / unknown
  std::string orbit_generic; // echoed metadata: asserted / no / unknown
  std::string morphism;      // echoed metadata: yes / no / unknown
  std::size_t codimension = 0;
  std::optional<double> degree_used;  // d_c
  std::optional<double> threshold;    // d_c^(1/c)
  std::optional<double> alpha;
  std::optional<bool> inequality_holds;
  std::string verdict;   // "predicts ratio → 0", "theorem not applicable", "hypothesis fails", "unknown"
  std::string predicts;  // yes / no / unknown
  std::string reason;
};

struct ReportSummary {
  std::optional<ArithmeticDegreeEstimate> alpha;
  DegreeSequence degrees;
  std::optional<FiberCountReport> fibers;
  std::string fibers_note;
  std::optional<HyperbolicityReport> hyperbolicity;
  TrendSummary trend;
  QuadricCheck quadric;
  HypothesisChecklist checklist;

  double d1_estimate() const { return degrees.d1_estimate(); }
  std::optional<std::int64_t> dN_mode() const;
};

struct ReportFlags {
  std::optional<std::size_t> indeterminate_at;
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> period;
  bool budget_exceeded = false;
  std::string budget_message;
  bool alpha_degenerate = false;
  bool dN_ambiguous = false;
  bool non_dominant_suspected = false;
};

struct OrbitReport {
  ScenarioConfig config;
  RationalMap map;
  std::vector<RatioRow> rows;
  std::vector<ProjPoint> points;
  ReportSummary summary;
  ReportFlags flags;
};

/// Validates and runs a scenario. Config problems surface as ConfigError.
OrbitReport run_scenario(const ScenarioConfig& cfg);

/// Hypotheses of the convergence theorem for this report; alpha is taken from
/// the ratio-tail estimate unless `alpha_override` is given.
HypothesisChecklist check_hypotheses(const OrbitReport& report, const ScenarioConfig& cfg,
                                     std::optional<double> alpha_override = std::nullopt);

enum class ReportFormat { csv, json };

void write_csv(const OrbitReport& report, std::ostream& out);
void write_json(const OrbitReport& report, std::ostream& out);
std::string render_report(const OrbitReport& report, ReportFormat format);
/// Writes the report to `path`; std::runtime_error with the path on I/O failure.
void emit_report(const OrbitReport& report, ReportFormat format, const std::string& path);
/// Human-readable summary table.
std::string summary_table(const OrbitReport& report);

/// "%.12g", with negative zero printed as 0.
std::string format_double(double x);

}  // namespace orbitgcd
