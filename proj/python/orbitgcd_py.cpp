// Python bindings. Big integers cross the boundary as Python ints (via decimal strings).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>

#include "orbitgcd/degrees.hpp"
#include "orbitgcd/errors.hpp"
#include "orbitgcd/experiments.hpp"
#include "orbitgcd/heights.hpp"
#include "orbitgcd/polyparse.hpp"

namespace py = pybind11;
using namespace orbitgcd;

namespace {

BigInt to_big(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return BigInt(v.cast<std::string>());
  if (!py::isinstance<py::int_>(v)) throw py::type_error("expected an int or a decimal string");
  return BigInt(py::str(v).cast<std::string>());
}

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

ReportFormat format_of(const std::string& f) {
  if (f == "csv") return ReportFormat::csv;
  if (f == "json") return ReportFormat::json;
  throw py::value_error("format must be csv or json");
}

std::vector<BigInt> to_bigs(const py::iterable& xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.push_back(to_big(x));
  return out;
}

py::dict height_dict(const HeightValue& h) {
  py::dict d;
  d["infinite"] = h.infinite;
  d["total"] = h.total;
  d["arch_part"] = h.arch_part;
  d["gcd_part"] = h.gcd_part;
  if (!h.infinite) {
    d["norm"] = to_py(h.norm);
    d["gcd"] = to_py(h.gcd);
    d["arch_index"] = h.arch_index;
    d["arch_degree"] = h.arch_degree;
    d["arch_value"] = to_py(h.arch_value);
  }
  return d;
}

SubschemeIdeal ideal_of(const std::vector<std::string>& gens, std::size_t arity) {
  std::vector<BigPoly> polys;
  for (const auto& g : gens) polys.push_back(parse_poly({g, arity}));
  return SubschemeIdeal(std::move(polys));
}

RationalMap map_of(const std::string& text) {
  const std::size_t arity = static_cast<std::size_t>(std::count(text.begin(), text.end(), ';')) + 1;
  return make_map(parse_poly_list(text, arity));
}

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(_orbitgcd, m) {
  m.doc() = "Generalized-gcd heights along orbits of rational maps";
  m.attr("__version__") = kVersion;

  auto value_error = py::handle(PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", value_error);
  py::register_exception<ParseError>(m, "ParseError", value_error);
  py::register_exception<DomainError>(m, "DomainError", value_error);
  py::register_exception<ArityError>(m, "ArityError", value_error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "parse_poly", [](const std::string& text, std::size_t arity) { return parse_poly({text, arity}).to_string(); },
      py::arg("text"), py::arg("arity") = 3, "Parse and print in canonical form.");

  m.def(
      "poly_gcd",
      [](const std::string& p, const std::string& q, std::size_t arity) {
        return gcd_multivar(parse_poly({p, arity}), parse_poly({q, arity})).to_string();
      },
      py::arg("p"), py::arg("q"), py::arg("arity") = 3);

  m.def(
      "apply_map",
      [](const std::string& map, const py::iterable& point) -> py::object {
        const auto img = apply(map_of(map), make_point(to_bigs(point)));
        if (!img) return py::none();
        py::list out;
        for (const auto& c : img->coords()) out.append(to_py(c));
        return out;
      },
      py::arg("map"), py::arg("point"), "Image of a point, normalised; None at indeterminacy.");

  m.def(
      "subscheme_height",
      [](const std::vector<std::string>& ideal, const py::iterable& point) {
        const auto x = make_point(to_bigs(point));
        return height_dict(subscheme_height(ideal_of(ideal, x.arity()), x));
      },
      py::arg("ideal"), py::arg("point"));

  m.def(
      "weil_height", [](const py::iterable& point) { return weil_height(make_point(to_bigs(point))); },
      py::arg("point"));

  m.def(
      "bcz_closed_form",
      [](const py::handle& a, const py::handle& b, unsigned long n) {
        const BczValue v = bcz_closed_form(to_big(a), to_big(b), n);
        py::dict d;
        d["height_max"] = to_py(v.height_max);
        d["arch_max"] = to_py(v.arch_max);
        d["gcd"] = to_py(v.gcd);
        d["h"] = v.h;
        d["h_y"] = v.h_y;
        d["ratio"] = v.ratio ? py::object(py::float_(*v.ratio)) : py::object(py::none());
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "degree_sequence",
      [](const std::string& map, std::uint32_t n, std::uint64_t cap) {
        const DegreeSequence s = degree_sequence(map_of(map), n, cap);
        std::vector<std::uint64_t> degs;
        for (const auto& st : s.steps) degs.push_back(st.degree);
        py::dict d;
        d["degrees"] = degs;
        d["d1_estimate"] = s.d1_estimate();
        d["budget_exceeded"] = s.budget_exceeded;
        return d;
      },
      py::arg("map"), py::arg("n") = 6, py::arg("cap") = 729);

  m.def(
      "topological_degree",
      [](const std::string& map, std::vector<std::uint64_t> primes, std::size_t targets, std::uint64_t seed) {
        FiberCountReport r;
        {
          py::gil_scoped_release release;
          r = topological_degree_ff(map_of(map), {std::move(primes), targets, seed});
        }
        py::dict d;
        d["mode"] = r.mode() ? py::object(py::int_(*r.mode())) : py::object(py::none());
        d["modes"] = r.modes;
        d["ambiguous"] = r.ambiguous;
        d["stable_across_primes"] = r.stable_across_primes;
        d["non_dominant_suspected"] = r.non_dominant_suspected;
        return d;
      },
      py::arg("map"), py::arg("primes") = std::vector<std::uint64_t>{1009, 2003, 4001}, py::arg("targets") = 20,
      py::arg("seed") = 1);

  m.def(
      "monomial_degrees",
      [](const std::vector<std::vector<long>>& a) {
        const MonomialDegrees r = monomial_dyn_degrees(MonomialMap(a));
        py::dict d;
        d["degrees"] = r.degrees;
        d["det_abs"] = to_py(r.det_abs);
        py::list cp;
        for (const auto& c : r.charpoly) cp.append(to_py(c));
        d["charpoly"] = cp;
        d["eigenvalues"] = r.eigenvalues;
        d["validated"] = r.validated;
        return d;
      },
      py::arg("matrix"));

  m.def(
      "arithmetic_degree",
      [](const std::vector<double>& heights) {
        const auto e = arithmetic_degree_estimate(heights);
        py::dict d;
        d["root_tail"] = e.root_tail;
        d["ratio_tail"] = e.ratio_tail;
        d["ratio_from"] = e.ratio_from;
        d["ratio_to"] = e.ratio_to;
        d["degenerate"] = e.degenerate;
        return d;
      },
      py::arg("heights"));

  m.def("builtin_names", &builtin_names);

  m.def(
      "run_builtin",
      [](const std::string& name, long a, long b, std::optional<std::size_t> n, std::uint64_t seed,
         const std::string& format) {
        ScenarioConfig cfg = builtin_scenario(name, {a, b, n});
        cfg.seed = seed;
        const ReportFormat fmt = format_of(format);
        std::string text;
        {
          py::gil_scoped_release release;
          text = render_report(run_scenario(cfg), fmt);
        }
        return format == "csv" ? py::object(py::str(text)) : json_loads(text);
      },
      py::arg("name"), py::arg("a") = 2, py::arg("b") = 3, py::arg("n") = py::none(), py::arg("seed") = 1,
      py::arg("format") = "json", "Run a built-in scenario; returns the JSON report as a dict, or CSV text.");

  m.def(
      "run_config",
      [](const std::string& json_text, const std::string& format) {
        const ScenarioConfig cfg = parse_config(json_text);
        const ReportFormat fmt = format_of(format);
        std::string text;
        {
          py::gil_scoped_release release;
          text = render_report(run_scenario(cfg), fmt);
        }
        return format == "csv" ? py::object(py::str(text)) : json_loads(text);
      },
      py::arg("config_json"), py::arg("format") = "json");
}
