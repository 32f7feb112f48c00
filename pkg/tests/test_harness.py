from __future__ import annotations

import io
import json

import pytest

from ncsieve.cli import main
from ncsieve.harness import (
    CspCell,
    CspReport,
    divisors,
    verify_family,
    verify_identities,
    verify_series,
    verify_theorem,
)


def cell(report, n, k, d):
    (c,) = [c for c in report.cells if (c.n, c.k, c.d) == (n, k, d)]
    return c


def test_theorem_small():
    rep = verify_theorem(4)
    assert rep.exit_code == 0
    assert rep.summary["fail"] == 0
    c = cell(rep, 4, 5, 4)
    assert (c.expected, c.observed, c.ok) == (0, 0, True)
    c = cell(rep, 2, 1, 2)
    assert (c.expected, c.observed) == (1, 1)


def test_theorem_six():
    c = cell(verify_theorem(6), 6, 6, 3)
    assert (c.expected, c.observed) == (5, 5)


def test_theorem_rejects_tiny():
    with pytest.raises(ValueError):
        verify_theorem(1)


def test_theorem_with_workers_is_identical():
    assert verify_theorem(5, workers=2).to_json() == verify_theorem(5).to_json()


@pytest.mark.parametrize("tag,n_max", [("tree", 5), ("dissection", 6), ("partition", 6)])
def test_known_families(tag, n_max):
    rep = verify_family(tag, n_max)
    assert rep.summary["fail"] == 0
    assert all(c.status == "proved" for c in rep.cells)


def test_tree_cell_at_half_turn():
    c = cell(verify_family("tree", 5), 4, 3, 2)
    assert c.ok and c.observed == c.expected


def test_conjecture_cells_are_marked():
    rep = verify_family("forest", 6)
    assert all(c.status == "conjecture" for c in rep.cells)
    assert rep.summary["fail"] == 0


def test_conjecture_failure_does_not_fail_run():
    rep = CspReport("forest", [CspCell("forest", 4, 2, 2, 3, 2, False, "conjecture")])
    assert rep.exit_code == 0
    assert rep.cells[0].verdict() == "conjecture-FAIL"
    proved = CspReport("connected", [CspCell("connected", 4, 3, 2, 4, 5, False)])
    assert proved.exit_code == 1
    assert "FAIL" in list(proved.lines())[0]


def test_json_schema_and_determinism():
    rep = verify_family("partition", 4)
    data = json.loads(rep.to_json())
    assert set(data) == {"family", "cells", "summary", "provenance"}
    assert data["family"] == "partition"
    assert set(data["cells"][0]) >= {"n", "k", "d", "expected", "observed", "ok", "status"}
    assert data["summary"] == {"pass": len(rep.cells), "fail": 0}
    assert rep.to_json() == verify_family("partition", 4).to_json()


def test_unknown_family():
    with pytest.raises(ValueError):
        verify_family("hexagon", 4)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_identities_small():
    reports = verify_identities(6, 6, s2_max=5, binomial_max=12)
    bad = [r.name for r in reports if not r.ok]
    assert not bad
    names = " ".join(r.name for r in reports)
    assert "recurrence" in names and "binomial" in names


def test_recurrence_cells_for_four():
    (rep,) = [r for r in verify_identities(4, 3, s2_max=4) if r.name.startswith("f recurrence")]
    assert rep.ok and rep.checked == 2 + 3


def test_series_reports():
    assert all(r.ok for r in verify_series(5))


# -- CLI -----------------------------------------------------------------------

def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_cli_count():
    assert run("count", "--family", "connected", "--n", "4", "--k", "4") == (0, "9\n")
    assert run("count", "--family", "tree", "--n", "4") == (0, "12\n")
    assert run("count", "--family", "forest", "--n", "4", "--c", "2") == (0, "14\n")
    assert run("count", "--family", "partition", "--n", "4", "--b", "2") == (0, "6\n")
    assert run("count", "--family", "connected", "--n", "6", "--k", "6", "--method", "enumerate", "--fixed-d", "3") == (0, "5\n")


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run("count", "--family", "connected", "--n", "4")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run("count", "--family", "circle", "--n", "4")
    assert exc.value.code == 2
    assert run("enumerate", "--n", "4", "--k", "3", "--family", "connected", "--fixed-d", "3")[0] == 2


def test_cli_enumerate():
    code, text = run("enumerate", "--n", "4", "--k", "3", "--family", "connected", "--fixed-d", "2")
    assert code == 0
    assert text.splitlines() == ["n=4; 1-2 1-3 3-4", "n=4; 1-2 2-4 3-4", "n=4; 1-3 1-4 2-3", "n=4; 1-4 2-3 2-4"]
    code, text = run("enumerate", "--n", "4", "--k", "5", "--family", "connected", "--format", "json")
    assert len(json.loads(text)) == 2
    code, text = run("enumerate", "--n", "3", "--family", "partition", "--format", "json")
    assert len(json.loads(text)) == 5


def test_cli_qpoly():
    assert run("qpoly", "--family", "connected", "--n", "4", "--k", "5") == (0, "1 0 1\n")
    assert run("qpoly", "--family", "tree", "--n", "3") == (0, "1 0 1 0 1\n")


def test_cli_csp(tmp_path):
    path = tmp_path / "forest.json"
    code, text = run("csp", "verify", "--family", "forest", "--max-n", "4", "--json", str(path))
    assert code == 0
    assert "conjecture-pass" in text
    assert json.loads(path.read_text())["summary"]["fail"] == 0
    code, text = run("csp", "verify", "--family", "connected", "--max-n", "4")
    assert code == 0 and text.endswith("0 fail\n")


def test_cli_series():
    code, text = run("series", "verify", "--order", "5")
    assert code == 0 and "FAIL" not in text


@pytest.mark.parametrize(
    "argv",
    [
        ("--which", "tree-quad", "--n", "5"),
        ("--which", "fold2", "--n", "6"),
        ("--which", "fold-d", "--n", "6", "--d", "3"),
    ],
)
def test_cli_bijection(argv):
    code, text = run("bijection", *argv, "--roundtrip")
    assert code == 0 and "round trips ok" in text
    code, text = run("bijection", *argv)
    assert code == 0 and "->" in text


def test_cli_bijection_bad_order():
    with pytest.raises(SystemExit):
        run("bijection", "--which", "fold-d", "--n", "6", "--d", "4")
