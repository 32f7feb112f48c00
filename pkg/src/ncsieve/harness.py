"""CSP verification runs and the identity suite, with JSON reports.

A cell compares the q-analogue at a primitive d-th root of unity (division
first, limit when the q-analogue is not a polynomial) with the number of
objects fixed by rotation of order d.  Forest and general-graph cells are
open conjectures: they are reported but never fail a run.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .algebra import NotRationalInteger, PoleAtRoot, binomial
from .formulas import (
    a_convolution,
    closed_a,
    closed_d,
    closed_f,
    closed_s2_even,
    closed_s2_odd,
    closed_sd,
    connected_at_root,
    count_connected,
    family_of,
    family_parameters,
    family_qpoly,
)
from .ncgraph import (
    Family,
    count,
    count_antipodal_pairs,
    count_fixed,
    count_two_components_separated,
    count_with_edge_1n,
)
from .series import (
    IdentityReport,
    check_A_relation,
    check_C_coefficients,
    check_D_is_C_squared,
    check_F_coefficients,
    check_lagrange_extractions,
    cubic_residual,
)

__all__ = [
    "CspCell",
    "CspReport",
    "PROVED",
    "CONJECTURES",
    "divisors",
    "verify_theorem",
    "verify_family",
    "verify_identities",
    "verify_series",
    "identity_lines",
    "reports_json",
]

PROVED = ("connected", "tree", "dissection", "partition")
CONJECTURES = ("forest", "graph")


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass
class CspCell:
    family: str
    n: int
    k: int
    d: int
    expected: int | None
    observed: int
    ok: bool
    status: str = "proved"
    note: str = ""

    def verdict(self) -> str:
        if self.status == "conjecture":
            return "conjecture-pass" if self.ok else "conjecture-FAIL"
        return "ok" if self.ok else "FAIL"

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "expected": self.expected,
            "observed": self.observed,
            "ok": self.ok,
            "status": self.status,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CspReport:
    family: str
    cells: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.cells if c.ok)
        return {"pass": passed, "fail": len(self.cells) - passed}

    @property
    def proved_failures(self) -> list:
        return [c for c in self.cells if not c.ok and c.status == "proved"]

    @property
    def exit_code(self) -> int:
        return 1 if self.proved_failures else 0

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "cells": [c.as_dict() for c in self.cells],
            "summary": self.summary,
            "provenance": self.provenance,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def lines(self):
        for c in self.cells:
            note = f" ({c.note})" if c.note else ""
            yield f"{c.family} n={c.n} k={c.k} d={c.d} expected={c.expected} observed={c.observed} {c.verdict()}{note}"
        s = self.summary
        yield f"summary: {s['pass']} pass, {s['fail']} fail"


def _map(fn, items, workers: int):
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# -- connected graphs ---------------------------------------------------------

def _theorem_row(n: int) -> list[CspCell]:
    cells = []
    for k in range(n - 1, 2 * n - 2):
        for d in divisors(n):
            expected = connected_at_root(n, k, d)
            observed = count_fixed(n, k, d, Family.connected())
            cells.append(CspCell("connected", n, k, d, expected, observed, expected == observed))
    return cells


def verify_theorem(n_max: int, workers: int = 1) -> CspReport:
    """c(n,k;omega) against rotation-fixed connected graphs, 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = _map(_theorem_row, range(2, n_max + 1), workers)
    report = CspReport("connected", [c for row in rows for c in row])
    report.provenance = {
        "n_range": [2, n_max],
        "k_range": "n-1..2n-3",
        "orders": "all divisors of n",
        "version": __version__,
    }
    return report


# -- other families ------------------------------------------------------------

_FIRST_N = {"tree": 1, "connected": 2, "dissection": 3, "partition": 1, "forest": 1, "graph": 2}


def _family_row(args) -> list[CspCell]:
    tag, n = args
    status = "conjecture" if tag in CONJECTURES else "proved"
    cells = []
    for k in family_parameters(tag, n):
        fam, edges = family_of(tag, k, n)
        q = family_qpoly(tag, n, k)
        for d in divisors(n):
            observed = count_fixed(n, edges, d, fam)
            note = ""
            try:
                expected = q.at_root(d).to_int()
            except PoleAtRoot:
                expected, note = None, "pole at root"
            except NotRationalInteger:
                expected, note = None, "value not a rational integer"
            if not note and not q.is_polynomial:
                note = "limit"
            cells.append(CspCell(tag, n, k, d, expected, observed, expected == observed, status, note))
    return cells


def verify_family(tag: str, n_max: int, workers: int = 1) -> CspReport:
    """CSP check for one family over every n up to n_max, every k, every d | n.

    The k-parameter follows the formula: edges for connected, dissection and
    graph; components for forest; n - blocks for partition.
    """
    if tag not in _FIRST_N:
        raise ValueError(f"unknown family {tag!r}")
    rows = _map(_family_row, [(tag, n) for n in range(_FIRST_N[tag], n_max + 1)], workers)
    report = CspReport(tag, [c for row in rows for c in row])
    report.provenance = {
        "n_range": [_FIRST_N[tag], n_max],
        "orders": "all divisors of n",
        "evaluation": "exact division, else limit at the root",
        "status": "conjecture" if tag in CONJECTURES else "proved",
        "version": __version__,
    }
    return report


# -- identities ----------------------------------------------------------------

def _check(name: str, pairs) -> IdentityReport:
    rep = IdentityReport(name)
    for key, got, want in pairs:
        rep.record(key, got, want)
    return rep


def _enumeration_vs_formula(n_max: int):
    for n in range(2, n_max + 1):
        for k in range(n - 1, 2 * n - 2):
            yield (n, k), count(n, k, Family.connected()), count_connected(n, k)


def _f_recurrence(n_max: int):
    for n in range(3, n_max + 1):
        yield ("base", n), count_with_edge_1n(n, 2 * n - 3), count_connected(n, 2 * n - 3)
        for k in range(n - 1, 2 * n - 3):
            lhs = count_with_edge_1n(n, k) + count_with_edge_1n(n, k + 1)
            rhs = count_connected(n, k) + count_two_components_separated(n, k)
            yield (n, k), lhs, rhs


def _s2_recurrence(n_max: int):
    fam = Family.connected()
    for n in range(3, n_max + 1):
        m = 2 * n - 2
        yield ("base", n), count_fixed(m, 4 * n - 7, 2, fam), binomial(2 * n - 4, n - 2)
        for k in range(n - 1, 2 * n - 3):
            lhs = count_fixed(m, 2 * k - 1, 2, fam) + count_fixed(m, 2 * k + 1, 2, fam)
            rhs = (n - 1) * (count_connected(n, k) + count_two_components_separated(n, k))
            yield (n, k), lhs, rhs


def _d_enumeration(n_max: int):
    for n in range(3, n_max + 1):
        for k in range(0, 2 * n - 4):
            yield (n, k), count_two_components_separated(n, k), closed_d(n, k)


def _binomial_identity(n_max: int):
    for n in range(3, n_max + 1):
        for k in range(n - 1, 2 * n - 2):
            lhs = binomial(3 * n - 5, n + k - 2) * binomial(k - 1, n - 2) + binomial(3 * n - 5, n + k - 1) * binomial(k, n - 2)
            rhs_num = (n - 2) * binomial(3 * n - 3, n + k) * binomial(k - 1, n - 2) + (2 * n - 2) * binomial(3 * n - 5, n + k) * binomial(k - 1, n - 3)
            yield (n, k), (n - 2) * lhs, rhs_num


def _half_turn_closed(n_max: int):
    for n in range(2, n_max + 1, 2):
        for k in range(n - 1, 2 * n - 2):
            closed = closed_s2_odd(n, k) if k % 2 else closed_s2_even(n, k)
            yield (n, k), connected_at_root(n, k, 2), closed


def _order_d_chain(n_max: int):
    for d in (3, 4):
        for n in range(d, n_max + 1, d):
            m = n // d
            for k in range(n - 1, 2 * n - 2):
                yield ("at root", n, k, d), connected_at_root(n, k, d), closed_sd(n, k, d)
                if k % d:
                    continue
                j = k // d
                chain = m * closed_f(m + 1, j) + closed_s2_even(2 * m, 2 * j)
                yield ("chain", n, k, d), closed_sd(n, k, d), chain
                pascal = binomial(3 * m - 2, m + j) + binomial(3 * m - 2, m + j - 1)
                yield ("pascal", m, j), pascal, binomial(3 * m - 1, m + j)


def _closed_f_vs_enumeration(n_max: int):
    for m in range(2, n_max + 1):
        for j in range(1, 2 * m - 2):
            yield (m, j), closed_f(m, j), count_with_edge_1n(m, j)


def _antipodal(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(0, 2 * n + 1):
            a = count_antipodal_pairs(n, k)
            yield ("convolution", n, k), a_convolution(n, k), a
            yield ("closed", n, k), closed_a(n, k), a
            if k >= 1:
                split = count_fixed(2 * n, 2 * k - 1, 2) + count_fixed(2 * n, 2 * k, 2)
                yield ("s2 split", n, k), split, a


def verify_series(order: int) -> list[IdentityReport]:
    """Generating-function checks at truncation order ``order``."""
    residual = cubic_residual(order)
    rep = IdentityReport(f"cubic residual, order {order}")
    rep.record("residual is zero", residual.is_zero(), True)
    return [
        rep,
        check_C_coefficients(order),
        check_D_is_C_squared(max(order, 3), enum_max=min(order, 6)),
        check_F_coefficients(order, enum_max=min(order, 8)),
        check_A_relation(order, enum_max=min(order, 5)),
        check_lagrange_extractions(order),
    ]


def verify_identities(n_max: int, series_order: int, s2_max: int | None = None,
                      binomial_max: int = 30) -> list[IdentityReport]:
    """Every counting identity at the given scale; all reports must be ok.

    ``s2_max`` bounds the half-turn recurrence, whose left side enumerates
    graphs on 2n - 2 points (default min(n_max, 6)).
    """
    if n_max < 2 or series_order < 2:
        raise ValueError("orders must be at least 2")
    s2_max = min(n_max, 6) if s2_max is None else s2_max
    reports = [
        _check(f"enumeration = closed count, n <= {n_max}", _enumeration_vs_formula(n_max)),
        _check(f"f recurrence, n <= {n_max}", _f_recurrence(n_max)),
        _check(f"two-component counts = closed_d, n <= {n_max}", _d_enumeration(n_max)),
        _check(f"closed_f = enumerated f, m <= {n_max}", _closed_f_vs_enumeration(n_max)),
        _check(f"half-turn recurrence, n <= {s2_max}", _s2_recurrence(s2_max)),
        _check(f"binomial identity, n <= {binomial_max}", _binomial_identity(binomial_max)),
        _check("half-turn closed forms, even n <= 12", _half_turn_closed(12)),
        _check("order-d chain and Pascal step, n <= 12", _order_d_chain(12)),
        _check(f"antipodal pair counts, n <= {min(n_max, 5)}", _antipodal(min(n_max, 5))),
    ]
    return reports + verify_series(series_order)


def identity_lines(reports):
    for r in reports:
        flag = "ok" if r.ok else "FAIL"
        yield f"{r.name}: {r.checked} checks {flag}"
        for m in r.mismatches[:10]:
            yield f"    mismatch {m}"


def reports_json(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"

