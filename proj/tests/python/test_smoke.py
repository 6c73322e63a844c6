import json
import math

import pytest

import orbitgcd


def test_version():
    assert orbitgcd.__version__ == "0.1.0"


def test_parse_and_gcd():
    assert orbitgcd.parse_poly("(x0+x1)^2") == orbitgcd.parse_poly("x0^2 + 2*x0*x1 + x1^2")
    g = orbitgcd.poly_gcd("x0^2-x1^2", "x0^2+2*x0*x1+x1^2")
    assert g == orbitgcd.parse_poly("x0+x1")
    with pytest.raises(orbitgcd.ParseError):
        orbitgcd.parse_poly("x0+*x1")
    with pytest.raises(ValueError):
        orbitgcd.parse_poly("x7", 3)


def test_height_big_ints():
    a, b, c = 2**70 * 3, 2**70 * 5, 7
    h = orbitgcd.subscheme_height(["x0", "x1"], [a, b, c])
    assert h["gcd"] == 2**70
    assert h["norm"] == b
    assert h["total"] == pytest.approx(70 * math.log(2))
    assert orbitgcd.subscheme_height(["x0", "x1"], ["6", "10", "1"])["gcd"] == 2
    assert orbitgcd.subscheme_height(["x0", "x1"], [0, 0, 1])["infinite"]


def test_apply_and_backnonfin():
    assert orbitgcd.apply_map("x0^2*x1;x1^3;x2^3", [3, 2, 1]) == [18, 8, 1]
    assert orbitgcd.apply_map("x0*x1;x1^2;x0*x2", [1, 0, 1]) == [0, 0, 1]
    assert orbitgcd.apply_map("x0*x1;x1^2;x0*x2", [0, 0, 1]) is None
    report = orbitgcd.run_builtin("backnonfin", n=12)
    assert report["rows"][-1]["ratio"] == pytest.approx(0.987838972711, abs=1e-9)
    assert report["summary"]["checklist"]["verdict"] == "theorem not applicable"


def test_bcz_matches_scenario():
    report = orbitgcd.run_builtin("bcz", a=2, b=3, n=12)
    for row in report["rows"][1:]:
        assert row["ratio"] == orbitgcd.bcz_closed_form(2, 3, row["n"])["ratio"]


def test_degrees():
    assert orbitgcd.degree_sequence("x0^2;x1^2;x2^2", 4)["degrees"] == [2, 4, 8, 16]
    assert orbitgcd.topological_degree("x0^2*x1;x1^3;x2^3")["mode"] == 6
    m = orbitgcd.monomial_degrees([[2, 1], [0, 3]])
    assert m["degrees"][1:] == pytest.approx([3, 6], abs=1e-9)
    assert m["det_abs"] == 6
    assert orbitgcd.arithmetic_degree([2**n * math.log(2) for n in range(12)])["ratio_tail"] == pytest.approx(2)
    with pytest.raises(orbitgcd.DomainError):
        orbitgcd.topological_degree("x0^2;x1^2;x2^2", primes=[7])


def test_config_and_csv():
    cfg = {"arity": 3, "map": ["x0^2", "x1^2", "x2^2"], "ideal": ["x0", "x1"], "start": [2, 1, 1], "n_max": 5}
    text = orbitgcd.run_config(json.dumps(cfg), format="csv")
    assert text.splitlines()[0] == "n,bits,h,hY_arch,hY_gcd,hY_total,ratio"
    assert len(text.splitlines()) == 7
    cfg["start"] = [1, "x", 1]
    with pytest.raises(orbitgcd.ConfigError, match=r"start\[1\]"):
        orbitgcd.run_config(json.dumps(cfg))
    with pytest.raises(ValueError):
        orbitgcd.run_builtin("a2", format="xml")
