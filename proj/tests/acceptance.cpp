// Acceptance checks; one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbitgcd/degrees.hpp"
#include "orbitgcd/errors.hpp"
#include "orbitgcd/experiments.hpp"
#include "orbitgcd/heights.hpp"
#include "orbitgcd/polyparse.hpp"
#include "support.hpp"

using namespace orbitgcd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RationalMap M(const char* text) { return make_map(parse_poly_list(text, 3)); }
SubschemeIdeal Y(const char* text) { return SubschemeIdeal(parse_poly_list(text, 3)); }

BigInt random_coordinate(std::mt19937_64& rng) {
  BigInt v = static_cast<unsigned long>(rng() >> (rng() % 64));
  return (rng() & 1) ? BigInt(-v) : v;
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& out) {
  std::mt19937_64 rng(1001);
  const SubschemeIdeal y = Y("x0;x1");
  const auto t0 = Clock::now();
  int done = 0;
  while (done < 1000) {
    std::vector<BigInt> raw{random_coordinate(rng), random_coordinate(rng), random_coordinate(rng)};
    if (raw[0] == 0 && raw[1] == 0) continue;
    const ProjPoint x = make_point(raw);
    const auto& c = x.coords();
    // log max(|a|,|b|,|c|) - log max(|a|,|b|) + log gcd(a, b)
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c[0].get_mpz_t(), c[1].get_mpz_t());
    const BigInt top = std::max({abs(c[0]), abs(c[1]), abs(c[2])});
    const BigInt ab = std::max(abs(c[0]), abs(c[1]));
    const HeightValue h = subscheme_height(y, x);
    out.require(!h.infinite, "finite height");
    out.require(h.gcd == g, "gcd(a, b)");
    out.require(h.norm == top, "max |coordinate|");
    out.require(h.arch_value == ab && h.arch_degree == 1, "max(|a|, |b|)");
    const double formula = std::log(top.get_d()) - std::log(ab.get_d()) + std::log(g.get_d());
    out.require(std::fabs(h.total - formula) <= 1e-9 * std::max(1.0, std::fabs(formula)), "log value");
    ++done;
  }
  const double s = seconds_since(t0);
  out.require(s < 1.0, "runtime < 1 s");
  out.detail << done << " points, exact gcd/max agreement, " << s << " s";
}

void criterion2(Outcome& out) {
  const auto t0 = Clock::now();
  const RatioSeries series = height_ratio_series(M("x0^2*x1;x1^3;x2^3"), Y("x0;x1"), make_point({3, 2, 1}), 12);
  out.require(series.rows.size() == 13, "13 rows");
  for (unsigned long n = 0; n < series.orbit.points.size(); ++n) {
    const unsigned long two = 1UL << n;
    const unsigned long three = static_cast<unsigned long>(std::llround(std::pow(3.0, static_cast<double>(n))));
    const std::vector<BigInt> expected{pow_ui(3, two) * pow_ui(2, three - two), pow_ui(2, three), 1};
    out.require(series.orbit.points[n].coords() == expected, "closed-form coordinates at n=" + std::to_string(n));
  }
  const double a = (std::pow(3.0, 12) - 4096.0) * std::log(2.0);
  const double closed = a / (4096.0 * std::log(3.0) + a);
  const double r12 = series.rows.size() == 13 ? series.rows[12].ratio.value_or(0.0) : 0.0;
  out.require(std::fabs(r12 - closed) < 1e-9, "ratio at n=12 within 1e-9 of the closed form");
  out.require(r12 > 0.98, "ratio at n=12 > 0.98");
  for (std::size_t n = 4; n < series.rows.size(); ++n) {
    out.require(*series.rows[n].ratio > *series.rows[n - 1].ratio, "increasing from n=3");
  }
  const double s = seconds_since(t0);
  out.require(s < 30.0, "runtime < 30 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "ratio(12) = %.10f, closed form %.10f, %zu bits at n=12, %.2f s", r12, closed,
                series.rows.back().bits, s);
  out.detail << buf;
}

void criterion3(Outcome& out) {
  const auto t0 = Clock::now();
  struct Case {
    const char* map;
    std::int64_t expected;
  };
  for (const Case& c : {Case{"x0^2*x1;x1^3;x2^3", 6}, Case{"x0^2*x1;x1^3+x0^2*x1+x0*x2^2;x2^3", 7},
                        Case{"x0^2;x1^2;x2^2", 4}}) {
    const RationalMap f = M(c.map);
    const FiberCountReport r = topological_degree_ff(f, {{1009, 2003, 4001}, 20, 1});
    out.require(r.mode() && *r.mode() == c.expected, std::string("mode for ") + c.map);
    out.require(r.stable_across_primes, std::string("stable across primes for ") + c.map);
    for (const auto& pp : r.per_prime) {
      out.require(pp.modes.size() == 1 && pp.modes[0] == c.expected, "per-prime mode");
      for (auto n : pp.counts) out.require(n <= static_cast<std::int64_t>(f.degree() * f.degree()), "Bezout bound");
    }
    out.detail << c.map << " -> " << (r.mode() ? std::to_string(*r.mode()) : "none") << "; ";
  }
  const double s = seconds_since(t0);
  out.require(s < 300.0, "runtime < 5 min");
  out.detail << s << " s";
}

long det3(const std::vector<std::vector<long>>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

void criterion4(Outcome& out) {
  const MonomialDegrees d = monomial_dyn_degrees(MonomialMap({{2, 1}, {0, 3}}));
  out.require(std::fabs(d.degrees[1] - 3.0) < 1e-9 && std::fabs(d.degrees[2] - 6.0) < 1e-9, "(d1, d2) = (3, 6)");
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<long> e(-5, 5);
  int done = 0;
  while (done < 100) {
    std::vector<std::vector<long>> a(3, std::vector<long>(3));
    for (auto& r : a) {
      for (auto& x : r) x = e(rng);
    }
    const long det = det3(a);
    if (det == 0) continue;
    const MonomialDegrees m = monomial_dyn_degrees(MonomialMap(a));
    out.require(m.det_abs == std::labs(det), "d_N = |det A| exactly");
    out.require(m.degrees.back() == static_cast<double>(std::labs(det)), "reported d_N");
    out.require(std::fabs(m.dN_from_roots - static_cast<double>(std::labs(det))) <= 1e-10 * std::labs(det),
                "root product vs |det A|");
    for (std::size_t i = 1; i + 1 < m.degrees.size(); ++i) {
      out.require(m.degrees[i] * m.degrees[i] >= m.degrees[i - 1] * m.degrees[i + 1] * (1 - 1e-9), "log-concavity");
    }
    ++done;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "d1 = %.12f, d2 = %.12f; %d random matrices checked", d.degrees[1], d.degrees[2], done);
  out.detail << buf;
}

void criterion5(Outcome& out) {
  const RatioSeries series = height_ratio_series(M("x0^2*x1;x1^3;x2^3"), Y("x0;x1"), make_point({3, 2, 1}), 12);
  std::vector<double> h;
  for (const auto& r : series.rows) h.push_back(r.h);
  const auto a = arithmetic_degree_estimate(h);
  out.require(std::fabs(a.ratio_tail - 3.0) <= 0.05 * 3.0, "backnonfin ratio_tail within 5% of 3");

  std::vector<double> closed;
  for (int n = 0; n <= 20; ++n) closed.push_back(std::ldexp(1.0, n) * std::log(2.0));
  const auto b = arithmetic_degree_estimate(closed);
  out.require(std::fabs(b.ratio_tail - 2.0) <= 1e-6, "squaring closed form ratio_tail = 2");

  const RatioSeries sq = height_ratio_series(M("x0^2;x1^2;x2^2"), Y("x0;x1"), make_point({2, 1, 1}), 12);
  std::vector<double> hs;
  for (const auto& r : sq.rows) hs.push_back(r.h);
  const auto c = arithmetic_degree_estimate(hs);
  out.require(std::fabs(c.ratio_tail - 2.0) <= 1e-6, "squaring orbit ratio_tail = 2");
  char buf[160];
  std::snprintf(buf, sizeof buf, "backnonfin ratio_tail = %.6f (n=%zu..%zu); squaring %.9f / orbit %.9f",
                a.ratio_tail, a.ratio_from, a.ratio_to, b.ratio_tail, c.ratio_tail);
  out.detail << buf;
}

void criterion6(Outcome& out) {
  const OrbitReport r = run_scenario(builtin_scenario("bcz", {2, 3, 40}));
  out.require(r.rows.size() == 41, "41 rows");
  for (std::size_t n = 1; n < r.rows.size(); ++n) {
    const BczValue c = bcz_closed_form(2, 3, n);
    const auto& hy = r.rows[n].h_y;
    out.require(hy.gcd == c.gcd && hy.norm == c.height_max && hy.arch_value == c.arch_max,
                "integer agreement at n=" + std::to_string(n));
    out.require(r.rows[n].ratio == c.ratio, "ratio agreement at n=" + std::to_string(n));
  }
  const bool exact = out.pass;
  out.require(r.summary.trend.label == "→ 0-consistent", "trend classified → 0-consistent");
  out.detail << "rowwise integer agreement " << (exact ? "yes" : "no") << "; trend " << r.summary.trend.label
             << " (slope " << r.summary.trend.slope << " over last " << r.summary.trend.rows_used << " rows)";
}

void criterion7(Outcome& out) {
  const ScenarioConfig a2 = builtin_scenario("a2");
  const OrbitReport r = run_scenario(a2);
  const auto& c = r.summary.checklist;
  out.require(c.alpha.has_value() && c.degree_used == 7.0, "alpha estimate and d2 = 7 available");
  if (c.alpha) {
    const bool exceeds = *c.alpha > std::sqrt(7.0);
    out.require((c.verdict == "predicts ratio → 0") == exceeds, "predicts iff alpha > sqrt 7");
    out.detail << "a2: alpha = " << *c.alpha << ", verdict " << c.verdict << "; ";
  }
  for (double alpha : {2.0, 2.6, 2.7, 3.0}) {
    const auto forced = check_hypotheses(r, a2, alpha);
    out.require((forced.verdict == "predicts ratio → 0") == (alpha > std::sqrt(7.0)), "forced alpha");
  }
  const OrbitReport b = run_scenario(builtin_scenario("backnonfin"));
  out.require(b.summary.checklist.verdict == "theorem not applicable", "backnonfin not applicable");
  out.require(b.summary.trend.label == "→ 1-consistent", "backnonfin trend → 1");
  out.detail << "backnonfin: " << b.summary.checklist.verdict << ", trend " << b.summary.trend.label;
}

void criterion8(Outcome& out) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1008);
  long cases = 0;
  using testing_support::random_homogeneous;
  using testing_support::random_point;
  using testing_support::random_poly;

  for (int i = 0; i < 3000; ++i, ++cases) {
    const std::size_t n = 1 + rng() % 3;
    const BigPoly a = random_poly(rng, n, 4, 1 + rng() % 5);
    const BigPoly b = random_poly(rng, n, 4, 1 + rng() % 5);
    const BigPoly c = random_poly(rng, n, 4, 1 + rng() % 5);
    out.require(a + b == b + a && a * b == b * a, "commutativity");
    out.require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
    out.require(a * (b + c) == a * b + a * c, "distributivity");
  }
  for (int i = 0; i < 2000; ++i, ++cases) {
    const std::size_t n = 2 + rng() % 2;
    BigPoly g = random_poly(rng, n, 2, 1 + rng() % 3);
    if (g.is_zero()) g = BigPoly::constant(n, 1);
    const BigPoly p = g * random_poly(rng, n, 3, 1 + rng() % 4);
    const BigPoly q = g * random_poly(rng, n, 3, 1 + rng() % 4);
    const BigPoly d = gcd_multivar(p, q);
    if (p.is_zero() && q.is_zero()) continue;
    const auto pd = exact_divide(p, d);
    const auto qd = exact_divide(q, d);
    out.require(pd && qd, "gcd divides both");
    if (pd && qd && !pd->is_zero() && !qd->is_zero()) out.require(gcd_multivar(*pd, *qd).is_constant(), "coprime cofactors");
  }
  for (int i = 0; i < 2000; ++i, ++cases) {
    const std::size_t n = 2 + rng() % 2;
    const BigPoly p = random_homogeneous(rng, n, 1 + rng() % 3, 1 + rng() % 4);
    const std::uint32_t ds = 1 + rng() % 3;
    std::vector<BigPoly> s;
    for (std::size_t k = 0; k < n; ++k) s.push_back(random_homogeneous(rng, n, ds, 1 + rng() % 3));
    const auto a = random_point(rng, n, 1000);
    std::vector<BigInt> sa;
    for (const auto& sk : s) sa.push_back(eval_int(sk, a));
    out.require(eval_int(compose(p, s), a) == eval_int(p, sa), "compose/eval commute");
  }
  int maps = 0;
  for (int i = 0; i < 60 && maps < 25; ++i) {
    std::vector<BigPoly> comps;
    for (int k = 0; k < 3; ++k) comps.push_back(random_homogeneous(rng, 3, 2, 1 + rng() % 3, 3));
    try {
      const RationalMap f = make_map(comps);
      std::vector<std::uint64_t> deg{1, f.degree()};
      RationalMap g = f;
      for (int n = 2; n <= 3; ++n) {
        g = compose_maps(f, g);
        deg.push_back(g.degree());
      }
      for (std::size_t m = 1; m < deg.size(); ++m) {
        for (std::size_t k = 1; m + k < deg.size(); ++k) out.require(deg[m + k] <= deg[m] * deg[k], "submultiplicative");
      }
      ++maps;
      ++cases;
    } catch (const DomainError&) {
    }
  }
  const std::vector<SubschemeIdeal> ideals{Y("x0;x1"), Y("x0-x2;x1-x2"), Y("x0^2-x1*x2;x1+x2")};
  for (int i = 0; i < 3000; ++i, ++cases) {
    auto raw = random_point(rng, 3, 1L << 40);
    if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) continue;
    const BigInt lambda = static_cast<long>(rng() % 2001) - 1000;
    if (lambda == 0) continue;
    std::vector<BigInt> scaled;
    for (const auto& c : raw) scaled.push_back(c * lambda);
    const auto& y = ideals[i % 3];
    const HeightValue a = subscheme_height(y, make_point(raw));
    const HeightValue b = subscheme_height(y, make_point(scaled));
    out.require(a.infinite == b.infinite && a.total == b.total && a.gcd == b.gcd, "representative independence");
  }
  for (const auto& name : builtin_names()) {
    for (std::uint64_t seed : {1ULL, 7ULL}) {
      ScenarioConfig cfg = builtin_scenario(name, {2, 3, 8});
      cfg.seed = seed;
      const std::string a = render_report(run_scenario(cfg), ReportFormat::json);
      const std::string b = render_report(run_scenario(cfg), ReportFormat::json);
      out.require(a == b, "deterministic report for " + name);
      ++cases;
    }
  }
  const double s = seconds_since(t0);
  out.require(cases >= 10000, "at least 10^4 cases");
  out.require(s < 120.0, "runtime < 2 min");
  out.detail << cases << " randomized cases, " << s << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"intro gcd formula oracle", criterion1},
      {"backnonfin orbit and ratio reproduction", criterion2},
      {"topological degrees by fiber counting", criterion3},
      {"monomial dynamical degrees", criterion4},
      {"arithmetic degree estimates", criterion5},
      {"BCZ exact agreement and trend", criterion6},
      {"hypothesis checker", criterion7},
      {"property suites", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    if (!out.pass) ++failed;
    std::printf("%s criterion %zu: %s -- %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
