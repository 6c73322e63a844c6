#include "orbitgcd/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orbitgcd/errors.hpp"
#include "orbitgcd/polyparse.hpp"

namespace orbitgcd {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

const std::set<std::string> kConfigKeys = {"name",  "arity",           "map",         "ideal",
                                           "start", "n_max",           "primes",      "targets_per_prime",
                                           "composition_cap", "degree_steps", "dim_y", "metadata",
                                           "seed"};

std::uint64_t get_unsigned(const json& doc, const std::string& key, std::uint64_t lo, std::uint64_t hi) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  if (v.is_number_unsigned() || v.get<std::int64_t>() >= 0) {
    const auto x = v.get<std::uint64_t>();
    if (x >= lo && x <= hi) return x;
  }
  throw ConfigError(key, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<std::string> get_strings(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_array()) throw ConfigError(key, "expected an array of polynomial strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw ConfigError(key + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

BigInt parse_integer(const std::string& field, const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  const bool ok = !t.empty() && std::all_of(t.begin() + (t.front() == '-' ? 1 : 0), t.end(),
                                            [](unsigned char c) { return std::isdigit(c); }) &&
                  t != "-";
  if (!ok) throw ConfigError(field, "'" + text + "' is not an integer");
  return BigInt(t);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("(document)", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("(document)", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kConfigKeys.count(key)) throw ConfigError(key, "unknown key");
  }
  for (const char* key : {"arity", "map", "ideal", "start"}) {
    if (!doc.contains(key)) throw ConfigError(key, "missing required key");
  }

  ScenarioConfig cfg;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ConfigError("name", "expected a string");
    cfg.name = doc["name"].get<std::string>();
  }
  cfg.arity = get_unsigned(doc, "arity", 2, kMaxArity);
  cfg.map = get_strings(doc, "map");
  if (cfg.map.size() != cfg.arity) {
    throw ConfigError("map", "expected " + std::to_string(cfg.arity) + " components, got " +
                                 std::to_string(cfg.map.size()));
  }
  cfg.ideal = get_strings(doc, "ideal");
  if (cfg.ideal.empty()) throw ConfigError("ideal", "needs at least one generator");

  const json& start = doc["start"];
  if (!start.is_array()) throw ConfigError("start", "expected an array of integers");
  if (start.size() != cfg.arity) {
    throw ConfigError("start", "expected " + std::to_string(cfg.arity) + " coordinates, got " +
                                   std::to_string(start.size()));
  }
  for (std::size_t i = 0; i < start.size(); ++i) {
    const std::string field = "start[" + std::to_string(i) + "]";
    if (start[i].is_number_integer()) {
      cfg.start.push_back(parse_integer(field, start[i].dump()));
    } else if (start[i].is_string()) {
      cfg.start.push_back(parse_integer(field, start[i].get<std::string>()));
    } else {
      throw ConfigError(field, "expected an integer or a decimal string");
    }
  }

  if (doc.contains("n_max")) cfg.n_max = get_unsigned(doc, "n_max", 0, 100000);
  if (doc.contains("primes")) {
    const json& v = doc["primes"];
    if (!v.is_array() || v.empty()) throw ConfigError("primes", "expected a non-empty array of primes");
    cfg.primes.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string field = "primes[" + std::to_string(i) + "]";
      if (!v[i].is_number_unsigned()) throw ConfigError(field, "expected a positive integer");
      const auto p = v[i].get<std::uint64_t>();
      if (p < kMinFiberPrime) throw ConfigError(field, std::to_string(p) + " is too small (< 50)");
      if (p >= kMaxPrime || !modp::is_prime(p)) throw ConfigError(field, std::to_string(p) + " is not a prime");
      cfg.primes.push_back(p);
    }
  }
  if (doc.contains("targets_per_prime")) cfg.targets_per_prime = get_unsigned(doc, "targets_per_prime", 1, 100000);
  if (doc.contains("composition_cap")) cfg.composition_cap = get_unsigned(doc, "composition_cap", 1, 1U << 20);
  if (doc.contains("degree_steps")) cfg.degree_steps = static_cast<std::uint32_t>(get_unsigned(doc, "degree_steps", 1, 64));
  if (doc.contains("dim_y")) cfg.dim_y = get_unsigned(doc, "dim_y", 0, cfg.arity - 2);
  if (doc.contains("seed")) cfg.seed = get_unsigned(doc, "seed", 0, UINT64_MAX);
  if (doc.contains("metadata")) {
    const json& m = doc["metadata"];
    if (!m.is_object()) throw ConfigError("metadata", "expected an object");
    for (const auto& [key, value] : m.items()) {
      cfg.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// Built-in scenarios

std::vector<std::string> builtin_names() { return {"backnonfin", "a2", "bcz", "squaring"}; }

ScenarioConfig builtin_scenario(const std::string& name, const BuiltinParams& params) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.arity = 3;
  if (name == "backnonfin") {
    cfg.map = {"x0^2*x1", "x1^3", "x2^3"};
    cfg.ideal = {"x0", "x1"};
    cfg.start = {3, 2, 1};
    cfg.n_max = 12;
    cfg.degree_steps = 6;
    cfg.metadata = {{"Y in X_f^back", "no"}, {"orbit generic", "asserted"}, {"f morphism", "no"}};
  } else if (name == "a2") {
    cfg.map = {"x0^2*x1", "x1^3+x0^2*x1+x0*x2^2", "x2^3"};
    cfg.ideal = {"x0-x2", "x1-x2"};
    cfg.start = {2, 3, 1};
    cfg.n_max = 10;
    cfg.composition_cap = 81;
    cfg.degree_steps = 4;
    cfg.metadata = {{"Y in X_f^back", "yes"}, {"orbit generic", "asserted"}, {"f morphism", "no"}};
  } else if (name == "bcz") {
    if (params.a < 2 || params.b < 2) throw ConfigError("a/b", "bcz needs integers a, b >= 2");
    cfg.name = "bcz a=" + std::to_string(params.a) + " b=" + std::to_string(params.b);
    cfg.map = {std::to_string(params.a) + "*x0", std::to_string(params.b) + "*x1", "x2"};
    cfg.ideal = {"x0-x2", "x1-x2"};
    cfg.start = {1, 1, 1};
    cfg.n_max = 40;
    cfg.degree_steps = 4;
    const bool dependent = multiplicatively_dependent(params.a, params.b);
    cfg.metadata = {{"Y in X_f^back", "yes"},
                    {"orbit generic", dependent ? "no" : "asserted"},
                    {"f morphism", "yes"}};
  } else if (name == "squaring") {
    cfg.map = {"x0^2", "x1^2", "x2^2"};
    cfg.ideal = {"x0", "x1"};
    cfg.start = {2, 1, 1};
    cfg.n_max = 10;
    cfg.degree_steps = 6;
    cfg.metadata = {{"Y in X_f^back", "yes"}, {"orbit generic", "no"}, {"f morphism", "yes"}};
  } else {
    std::string known;
    for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("scenario", "unknown scenario '" + name + "' (known: " + known + ")");
  }
  if (params.n) cfg.n_max = *params.n;
  return cfg;
}

// ---------------------------------------------------------------------------
// Trend and hypotheses

TrendSummary classify_trend(const std::vector<RatioRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (r.ratio && r.h > 1.0) pts.emplace_back(1.0 / std::log(r.h), *r.ratio);
  }
  TrendSummary out;
  std::size_t take = (pts.size() + 2) / 3;
  if (pts.size() >= 3) take = std::max<std::size_t>(take, 3);
  if (take < 3) return out;
  const auto first = pts.end() - static_cast<std::ptrdiff_t>(take);
  double mx = 0.0;
  double my = 0.0;
  for (auto it = first; it != pts.end(); ++it) {
    mx += it->first;
    my += it->second;
  }
  mx /= static_cast<double>(take);
  my /= static_cast<double>(take);
  double sxx = 0.0;
  double sxy = 0.0;
  for (auto it = first; it != pts.end(); ++it) {
    sxx += (it->first - mx) * (it->first - mx);
    sxy += (it->first - mx) * (it->second - my);
  }
  out.rows_used = take;
  if (sxx > 0.0) out.slope = sxy / sxx;
  if (out.slope > 0.05) {
    out.label = "→ 0-consistent";
  } else if (out.slope < -0.05) {
    out.label = "→ 1-consistent";
  } else {
    // flat tail: decide by level
    double lo = first->second;
    double hi = first->second;
    for (auto it = first; it != pts.end(); ++it) {
      lo = std::min(lo, it->second);
      hi = std::max(hi, it->second);
    }
    if (hi <= 0.05) out.label = "→ 0-consistent";
    if (lo >= 0.95) out.label = "→ 1-consistent";
  }
  return out;
}

namespace {

std::string meta_value(const ScenarioConfig& cfg, const std::string& key) {
  auto it = cfg.metadata.find(key);
  if (it == cfg.metadata.end()) return "unknown";
  const std::string v = lower(it->second);
  if (v == "yes" || v == "true" || v == "asserted") return key == "orbit generic" ? "asserted" : "yes";
  if (v == "no" || v == "false") return "no";
  return "unknown";
}

}  // namespace

std::optional<std::int64_t> ReportSummary::dN_mode() const {
  if (!fibers) return std::nullopt;
  return fibers->mode();
}

HypothesisChecklist check_hypotheses(const OrbitReport& report, const ScenarioConfig& cfg,
                                     std::optional<double> alpha_override) {
  HypothesisChecklist out;
  out.y_in_back = meta_value(cfg, "Y in X_f^back");
  out.orbit_generic = meta_value(cfg, "orbit generic");
  out.morphism = meta_value(cfg, "f morphism");
  const std::size_t n = cfg.arity - 1;
  out.codimension = n - std::min(cfg.dim_y, n);

  if (alpha_override) {
    out.alpha = alpha_override;
  } else if (report.summary.alpha && !report.summary.alpha->degenerate) {
    out.alpha = report.summary.alpha->ratio_tail;
  }
  if (out.codimension == n) {
    if (auto m = report.summary.dN_mode()) out.degree_used = static_cast<double>(*m);
  } else if (out.codimension == 1 && !report.summary.degrees.steps.empty()) {
    out.degree_used = report.summary.d1_estimate();
  }
  if (out.degree_used && out.codimension > 0) {
    out.threshold = std::pow(*out.degree_used, 1.0 / static_cast<double>(out.codimension));
  }
  if (out.threshold && out.alpha) out.inequality_holds = *out.threshold < *out.alpha;

  if (out.y_in_back == "no" && out.morphism != "yes") {
    out.verdict = "theorem not applicable";
    out.predicts = "no";
    out.reason = "Y is not contained in X_f^back (user metadata)";
  } else if (!out.inequality_holds) {
    out.verdict = "unknown";
    out.predicts = "unknown";
    out.reason = !out.alpha ? "no arithmetic degree estimate" : "no estimate of d_" + std::to_string(out.codimension);
  } else if (!*out.inequality_holds) {
    out.verdict = "hypothesis fails";
    out.predicts = "no";
    out.reason = "d_c^(1/c) = " + format_double(*out.threshold) + " is not below alpha = " + format_double(*out.alpha);
  } else if (out.orbit_generic != "asserted") {
    out.verdict = "unknown";
    out.predicts = "unknown";
    out.reason = "orbit genericity not asserted";
  } else if (out.y_in_back != "yes" && out.morphism != "yes") {
    out.verdict = "unknown";
    out.predicts = "unknown";
    out.reason = "membership of Y in X_f^back not asserted";
  } else {
    out.verdict = "predicts ratio → 0";
    out.predicts = "yes";
    out.reason = "d_c^(1/c) = " + format_double(*out.threshold) + " < alpha = " + format_double(*out.alpha);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Runner

namespace {

RationalMap build_map(const ScenarioConfig& cfg) {
  std::vector<BigPoly> comps;
  for (std::size_t i = 0; i < cfg.map.size(); ++i) {
    const std::string field = "map[" + std::to_string(i) + "]";
    try {
      comps.push_back(parse_poly({cfg.map[i], cfg.arity}));
    } catch (const ParseError& e) {
      throw ConfigError(field, e.what());
    }
  }
  try {
    return make_map(std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("map", e.what());
  }
}

SubschemeIdeal build_ideal(const ScenarioConfig& cfg) {
  std::vector<BigPoly> gens;
  for (std::size_t i = 0; i < cfg.ideal.size(); ++i) {
    try {
      gens.push_back(parse_poly({cfg.ideal[i], cfg.arity}));
    } catch (const ParseError& e) {
      throw ConfigError("ideal[" + std::to_string(i) + "]", e.what());
    }
  }
  try {
    return SubschemeIdeal(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("ideal", e.what());
  }
}

}  // namespace

OrbitReport run_scenario(const ScenarioConfig& cfg) {
  if (cfg.arity < 2 || cfg.arity > kMaxArity) throw ConfigError("arity", "must lie in [2, 64]");
  if (cfg.map.size() != cfg.arity) throw ConfigError("map", "needs one component per variable");
  if (cfg.start.size() != cfg.arity) throw ConfigError("start", "needs one coordinate per variable");
  if (cfg.ideal.empty()) throw ConfigError("ideal", "needs at least one generator");
  const RationalMap f = build_map(cfg);
  const SubschemeIdeal y = build_ideal(cfg);
  std::optional<ProjPoint> x0;
  try {
    x0 = make_point(cfg.start);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("start", e.what());
  }

  OrbitReport report{cfg, f, {}, {}, {}, {}};
  RatioSeries series = height_ratio_series(f, y, *x0, cfg.n_max);
  report.rows = std::move(series.rows);
  report.points = std::move(series.orbit.points);
  report.flags.indeterminate_at = series.orbit.indeterminate_at;
  report.flags.preperiod = series.orbit.preperiod;
  report.flags.period = series.orbit.period;

  auto& s = report.summary;
  std::vector<double> heights;
  for (const auto& r : report.rows) heights.push_back(r.h);
  if (heights.size() >= 4) {
    s.alpha = arithmetic_degree_estimate(heights);
    report.flags.alpha_degenerate = s.alpha->degenerate;
  }

  s.degrees = degree_sequence(f, cfg.degree_steps, cfg.composition_cap);
  report.flags.budget_exceeded = s.degrees.budget_exceeded;
  report.flags.budget_message = s.degrees.budget_message;

  if (cfg.arity == 3) {
    try {
      s.fibers = topological_degree_ff(f, {cfg.primes, cfg.targets_per_prime, cfg.seed});
      report.flags.dN_ambiguous = s.fibers->ambiguous;
      report.flags.non_dominant_suspected = s.fibers->non_dominant_suspected;
    } catch (const DomainError& e) {
      s.fibers_note = e.what();
    }
  } else {
    s.fibers_note = "fiber counting is only available on P^2";
  }

  if (s.alpha && s.dN_mode() && !s.degrees.steps.empty()) {
    s.hyperbolicity = hyperbolicity_report(s.d1_estimate(), static_cast<double>(*s.dN_mode()), s.alpha->ratio_tail);
  }
  s.trend = classify_trend(report.rows);
  s.quadric = quadric_containment_check(report.points);
  s.checklist = check_hypotheses(report, cfg);
  return report;
}

// ---------------------------------------------------------------------------
// Output

void write_csv(const OrbitReport& report, std::ostream& out) {
  out << "n,bits,h,hY_arch,hY_gcd,hY_total,ratio\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.bits << ',' << format_double(r.h) << ',';
    if (r.h_y.infinite) {
      out << "inf,inf,inf";
    } else {
      out << format_double(r.h_y.arch_part) << ',' << format_double(r.h_y.gcd_part) << ','
          << format_double(r.h_y.total);
    }
    out << ',';
    if (r.ratio) out << format_double(*r.ratio);
    out << '\n';
  }
}

namespace {

ojson number_or_string(double x) {
  if (std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  return format_double(x);
}

template <typename T>
ojson opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

ojson flags_json(const OrbitReport& report) {
  const auto& f = report.flags;
  ojson j;
  j["indeterminate_at"] = opt(f.indeterminate_at);
  j["truncated"] = f.indeterminate_at.has_value();
  j["periodic"] = f.period.has_value();
  j["preperiod"] = opt(f.preperiod);
  j["period"] = opt(f.period);
  j["budget_exceeded"] = f.budget_exceeded;
  j["budget_message"] = f.budget_message;
  j["alpha_degenerate"] = f.alpha_degenerate;
  j["dN_ambiguous"] = f.dN_ambiguous;
  j["non_dominant_suspected"] = f.non_dominant_suspected;
  return j;
}

ojson config_json(const ScenarioConfig& cfg) {
  ojson j;
  j["name"] = cfg.name;
  j["arity"] = cfg.arity;
  j["map"] = cfg.map;
  j["ideal"] = cfg.ideal;
  j["start"] = to_strings(cfg.start);
  j["n_max"] = cfg.n_max;
  j["primes"] = cfg.primes;
  j["targets_per_prime"] = cfg.targets_per_prime;
  j["composition_cap"] = cfg.composition_cap;
  j["degree_steps"] = cfg.degree_steps;
  j["dim_y"] = cfg.dim_y;
  ojson meta = ojson::object();
  for (const auto& [k, v] : cfg.metadata) meta[k] = v;
  j["metadata"] = meta;
  j["seed"] = cfg.seed;
  return j;
}

ojson checklist_json(const HypothesisChecklist& c) {
  ojson j;
  j["Y in X_f^back"] = c.y_in_back;
  j["orbit generic"] = c.orbit_generic;
  j["f morphism"] = c.morphism;
  j["codimension"] = c.codimension;
  j["degree_used"] = opt(c.degree_used);
  j["threshold"] = opt(c.threshold);
  j["alpha"] = opt(c.alpha);
  j["inequality_holds"] = opt(c.inequality_holds);
  j["verdict"] = c.verdict;
  j["predicts_ratio_to_0"] = c.predicts;
  j["reason"] = c.reason;
  return j;
}

ojson summary_json(const OrbitReport& report) {
  const auto& s = report.summary;
  ojson j;
  if (s.alpha) {
    ojson a;
    a["root_tail"] = s.alpha->root_tail;
    a["root_index"] = s.alpha->root_index;
    a["ratio_tail"] = s.alpha->ratio_tail;
    a["ratio_from"] = s.alpha->ratio_from;
    a["ratio_to"] = s.alpha->ratio_to;
    a["degenerate"] = s.alpha->degenerate;
    j["alpha"] = a;
  } else {
    j["alpha"] = nullptr;
  }
  j["d1_estimate"] = s.degrees.steps.empty() ? ojson(nullptr) : ojson(s.d1_estimate());
  ojson seq = ojson::array();
  for (const auto& st : s.degrees.steps) seq.push_back(st.degree);
  j["degree_sequence"] = seq;
  j["dN_mode"] = opt(s.dN_mode());
  if (s.fibers) {
    j["dN_modes"] = s.fibers->modes;
    ojson hist = ojson::object();
    for (const auto& [k, v] : s.fibers->histogram) hist[std::to_string(k)] = v;
    j["dN_histogram"] = hist;
    j["dN_stable_across_primes"] = s.fibers->stable_across_primes;
  } else {
    j["dN_note"] = s.fibers_note;
  }
  if (s.hyperbolicity) {
    ojson h;
    h["hyperbolic"] = s.hyperbolicity->hyperbolic;
    h["alpha_matches_d1"] = s.hyperbolicity->alpha_matches_d1;
    h["advisory"] = s.hyperbolicity->advisory;
    h["message"] = s.hyperbolicity->message;
    j["hyperbolicity"] = h;
  } else {
    j["hyperbolicity"] = nullptr;
  }
  ojson t;
  t["label"] = s.trend.label;
  t["slope"] = s.trend.slope;
  t["rows_used"] = s.trend.rows_used;
  j["ratio_trend"] = t;
  ojson q;
  q["points_used"] = s.quadric.points_used;
  q["rank"] = s.quadric.rank;
  q["monomials"] = s.quadric.monomials;
  q["certified_not_on_quadric"] = s.quadric.certified_not_on_quadric;
  q["label"] = s.quadric.label;
  j["genericity_heuristic"] = q;
  j["checklist"] = checklist_json(s.checklist);
  return j;
}

}  // namespace

void write_json(const OrbitReport& report, std::ostream& out) {
  ojson doc;
  doc["version"] = kVersion;
  doc["config"] = config_json(report.config);
  doc["seed"] = report.config.seed;
  doc["map_reduced"] = report.map.to_string();
  ojson rows = ojson::array();
  for (const auto& r : report.rows) {
    ojson row;
    row["n"] = r.n;
    row["bits"] = r.bits;
    row["h"] = number_or_string(r.h);
    if (r.h_y.infinite) {
      row["hY_arch"] = "inf";
      row["hY_gcd"] = "inf";
      row["hY_total"] = "inf";
    } else {
      row["hY_arch"] = number_or_string(r.h_y.arch_part);
      row["hY_gcd"] = number_or_string(r.h_y.gcd_part);
      row["hY_total"] = number_or_string(r.h_y.total);
    }
    row["ratio"] = r.ratio ? ojson(number_or_string(*r.ratio)) : ojson(nullptr);
    rows.push_back(row);
  }
  doc["rows"] = rows;
  doc["summary"] = summary_json(report);
  doc["flags"] = flags_json(report);
  out << doc.dump(2) << '\n';
}

std::string render_report(const OrbitReport& report, ReportFormat format) {
  std::ostringstream ss;
  if (format == ReportFormat::csv) {
    write_csv(report, ss);
  } else {
    write_json(report, ss);
  }
  return ss.str();
}

void emit_report(const OrbitReport& report, ReportFormat format, const std::string& path) {
  auto write = [](const std::string& target, const std::string& body) {
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + target + "' for writing");
    out << body;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + target + "' failed");
  };
  write(path, render_report(report, format));
  if (format == ReportFormat::csv) {
    ojson side;
    side["seed"] = report.config.seed;
    side["flags"] = flags_json(report);
    write(path + ".flags.json", side.dump(2) + "\n");
  }
}

std::string summary_table(const OrbitReport& report) {
  const auto& s = report.summary;
  std::ostringstream os;
  auto line = [&](const std::string& key, const std::string& value) {
    os << key;
    for (std::size_t i = key.size(); i < 22; ++i) os << ' ';
    os << value << '\n';
  };
  line("scenario", report.config.name);
  line("map", report.map.to_string());
  line("seed", std::to_string(report.config.seed));
  line("rows", std::to_string(report.rows.size()));
  if (!report.rows.empty()) {
    const auto& last = report.rows.back();
    line("last n", std::to_string(last.n));
    line("last ratio", last.ratio ? format_double(*last.ratio) : "undefined");
  }
  if (s.alpha) {
    line("alpha (ratio tail)", format_double(s.alpha->ratio_tail));
    line("alpha (root tail)", format_double(s.alpha->root_tail));
  } else {
    line("alpha", "unavailable (fewer than 4 heights)");
  }
  std::string seq;
  for (const auto& st : s.degrees.steps) seq += (seq.empty() ? "" : ",") + std::to_string(st.degree);
  line("degree sequence", seq);
  line("d1 estimate", s.degrees.steps.empty() ? "unavailable" : format_double(s.d1_estimate()));
  if (s.fibers) {
    std::string modes;
    for (auto m : s.fibers->modes) modes += (modes.empty() ? "" : ",") + std::to_string(m);
    line("dN mode", modes + (s.fibers->ambiguous ? " (tie)" : "") +
                        (s.fibers->stable_across_primes ? "" : " (unstable across primes)"));
  } else {
    line("dN mode", "unavailable: " + s.fibers_note);
  }
  if (s.hyperbolicity) line("hyperbolicity", s.hyperbolicity->message);
  line("ratio trend", s.trend.label + " (slope " + format_double(s.trend.slope) + ")");
  line("genericity", s.quadric.label);
  line("Y in X_f^back", s.checklist.y_in_back);
  line("orbit generic", s.checklist.orbit_generic);
  line("verdict", s.checklist.verdict + (s.checklist.reason.empty() ? "" : " (" + s.checklist.reason + ")"));
  if (report.flags.indeterminate_at) {
    line("flag", "orbit truncated: f^" + std::to_string(*report.flags.indeterminate_at) + "(x) lies in I_f");
  }
  if (report.flags.period) {
    line("flag", "periodic: preperiod " + std::to_string(*report.flags.preperiod) + ", period " +
                     std::to_string(*report.flags.period));
  }
  if (report.flags.budget_exceeded) line("flag", "budget: " + report.flags.budget_message);
  if (report.flags.non_dominant_suspected) line("flag", "fiber counts suggest a non-dominant map");
  return os.str();
}

}  // namespace orbitgcd
