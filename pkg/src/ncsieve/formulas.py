"""Closed-form counts for non-crossing graph families and their q-analogues.

All plain counts are exact integers; parameters outside a formula's natural
range give 0 so that callers can sweep rectangular grids.  q-analogues are
returned as a :class:`QFormula` holding numerator and denominator; the
quotient is attached whenever the division is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    CycloValue,
    DivisionNotExact,
    Poly,
    binomial,
    eval_at_root,
    eval_limit_at_root,
    poly_exact_div,
    q_binomial,
    q_integer,
)
from .ncgraph import Family, count_with_edge_1n

__all__ = [
    "QFormula",
    "NonIntegerResult",
    "count_connected",
    "qpoly_connected",
    "connected_at_root",
    "closed_s2_odd",
    "closed_s2_even",
    "closed_a",
    "closed_d",
    "closed_f",
    "closed_sd",
    "a_convolution",
    "family_count",
    "family_qpoly",
    "family_parameters",
]


class NonIntegerResult(ArithmeticError):
    """A formula that must produce an integer produced a proper fraction."""


def _exact(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} = {x} is not an integer")
    return x.numerator


def _in_connected_range(n: int, k: int) -> bool:
    return n >= 2 and n - 1 <= k <= 2 * n - 3


def count_connected(n: int, k: int) -> int:
    """Non-crossing connected graphs on n vertices with k edges.

    >>> count_connected(4, 3), count_connected(4, 4), count_connected(2, 1)
    (12, 9, 1)
    """
    if not _in_connected_range(n, k):
        return 0
    return _exact(
        Fraction(binomial(3 * n - 3, n + k) * binomial(k - 1, n - 2), n - 1),
        f"c({n},{k})",
    )


@dataclass(frozen=True)
class QFormula:
    """A q-analogue ``numerator / denominator``; ``quotient`` is None if not a polynomial."""

    name: str
    numerator: Poly
    denominator: Poly
    quotient: Poly | None = None

    @classmethod
    def build(cls, name: str, numerator: Poly, denominator: Poly) -> QFormula:
        try:
            quotient = poly_exact_div(numerator, denominator)
        except DivisionNotExact:
            quotient = None
        return cls(name, numerator, denominator, quotient)

    @property
    def is_polynomial(self) -> bool:
        return self.quotient is not None

    def at_root(self, d: int) -> CycloValue:
        """Value at a primitive d-th root: the quotient if it exists, else the limit."""
        if self.quotient is not None:
            return eval_at_root(self.quotient, d)
        return eval_limit_at_root(self.numerator, self.denominator, d)

    def at_one(self):
        return self.at_root(1).coords[0]


@lru_cache(maxsize=None)
def qpoly_connected(n: int, k: int) -> Poly:
    """c(n,k;q) as an explicit polynomial (exact division by [n-1]_q).

    >>> qpoly_connected(4, 5).coeffs
    (1, 0, 1)
    """
    if not _in_connected_range(n, k):
        return Poly()
    num = q_binomial(3 * n - 3, n + k) * q_binomial(k - 1, n - 2)
    return poly_exact_div(num, q_integer(n - 1))


def connected_at_root(n: int, k: int, d: int) -> int:
    """c(n,k;omega) for omega a primitive d-th root of unity, d | n."""
    if d < 1 or n % d:
        raise ValueError(f"d={d} must divide n={n}")
    return eval_at_root(qpoly_connected(n, k), d).to_int()


def closed_s2_odd(n: int, k: int) -> int:
    """Half-turn fixed count for even n and odd k."""
    if n % 2 or k % 2 == 0:
        raise ValueError("closed_s2_odd needs n even and k odd")
    if k < 1:
        return 0
    n2, k2 = n // 2, (k + 1) // 2
    return binomial(3 * n2 - 2, n2 + k2 - 1) * binomial(k2 - 1, n2 - 1)


def closed_s2_even(n: int, k: int) -> int:
    """Half-turn fixed count for even n and even k."""
    if n % 2 or k % 2:
        raise ValueError("closed_s2_even needs n and k even")
    if k < 2:
        return 0
    return binomial((3 * n - 4) // 2, (n + k) // 2) * binomial((k - 2) // 2, (n - 2) // 2)


def closed_a(n: int, k: int) -> int:
    """Half-turn symmetric connected graphs on 2n vertices with k edge orbits.

    Only n <= k <= 2n - 1 can occur; other k give 0.
    """
    if n < 1 or not n <= k <= 2 * n - 1:
        return 0
    return binomial(3 * n - 1, n + k) * binomial(k - 1, n - 1)


def closed_d(n: int, k: int) -> int:
    """Two-component graphs on n vertices, k edges, with 1 and n in different components."""
    if n < 3:
        raise ValueError("closed_d needs n >= 3")
    if k < n - 2:
        return 0
    return _exact(
        Fraction(2 * binomial(3 * n - 5, n + k) * binomial(k - 1, n - 3), n - 2),
        f"d({n},{k})",
    )


def closed_f(m: int, j: int) -> int:
    """Connected graphs on m vertices with j edges including chord {1, m}.

    Obtained by dividing the half-turn count with one diameter by the m - 1
    possible diameter positions.
    """
    if m < 2:
        raise ValueError("closed_f needs m >= 2")
    if j < 1:
        return 0
    return _exact(Fraction(closed_s2_odd(2 * m - 2, 2 * j - 1), m - 1), f"f({m},{j})")


def closed_sd(n: int, k: int, d: int) -> int:
    """Count fixed under rotation of order d >= 3."""
    if d < 3 or n % d:
        raise ValueError("closed_sd needs d >= 3 dividing n")
    if k % d:
        return 0
    n2, k2 = n // d, k // d
    if k2 < 1:
        return 0
    return binomial(3 * n2 - 1, n2 + k2) * binomial(k2 - 1, n2 - 1)


def a_convolution(n: int, k: int, f=count_with_edge_1n) -> int:
    """a(n,k) from the composition sum over an inner 2m-gon.

    Sums (n_m - 1) f(n_m, k_m) prod_{i<m} f(n_i, k_i) over m and compositions
    k_1 + ... + k_m = k, n_1 + ... + n_m = n + m.  ``f`` defaults to the
    enumerated edge-{1,n} counts.
    """
    if n < 1 or k < 1:
        return 0

    @lru_cache(maxsize=None)
    def fv(a, b):
        return f(a, b) if a >= 2 and b >= 1 else 0

    @lru_cache(maxsize=None)
    def products(parts: int, size: int, edges: int) -> int:
        # sum over compositions of prod f(n_i, k_i), with n_i >= 2, k_i >= 1
        if parts == 0:
            return 1 if size == 0 and edges == 0 else 0
        total = 0
        for a in range(2, size - 2 * (parts - 1) + 1):
            for b in range(1, edges - (parts - 1) + 1):
                v = fv(a, b)
                if v:
                    total += v * products(parts - 1, size - a, edges - b)
        return total

    total = 0
    for m in range(1, n + 1):
        size = n + m
        for last in range(2, size - 2 * (m - 1) + 1):
            for kl in range(1, k - (m - 1) + 1):
                v = fv(last, kl)
                if v:
                    total += (last - 1) * v * products(m - 1, size - last, k - kl)
    return total


# -- the family table ------------------------------------------------------
#
# forest: k is the number of components; partition: n - k is the number of
# blocks; tree: k is ignored (always n - 1 edges); every other family: k edges.

def family_parameters(tag: str, n: int) -> list[int]:
    """The natural k-range of each family formula for a given n."""
    if tag == "tree":
        return [n - 1] if n >= 1 else []
    if tag == "connected":
        return list(range(n - 1, 2 * n - 2)) if n >= 2 else []
    if tag == "dissection":
        return list(range(0, n - 2)) if n >= 3 else []
    if tag == "partition":
        return list(range(0, n)) if n >= 1 else []
    if tag == "forest":
        return list(range(1, n + 1)) if n >= 1 else []
    if tag == "graph":
        return list(range(0, 2 * n - 2)) if n >= 2 else []
    raise ValueError(f"unknown family {tag!r}")


def family_count(tag: str, n: int, k: int | None = None) -> int:
    """Closed-form count for ``tag`` in {tree, connected, dissection, partition, forest, graph}.

    >>> family_count("tree", 4), family_count("dissection", 5, 2)
    (12, 5)
    """
    if tag == "tree":
        if n < 1:
            return 0
        return _exact(Fraction(binomial(3 * n - 3, n - 1), 2 * n - 1), f"T({n})")
    if k is None:
        raise ValueError(f"family {tag} needs k")
    if tag == "connected":
        if not _in_connected_range(n, k):
            return 0
        return _exact(
            Fraction(binomial(3 * n - 3, n + k) * binomial(k - 1, k - n + 1), n - 1),
            f"C({n},{k})",
        )
    if tag == "dissection":
        if n < 3 or k < 0:
            return 0
        return _exact(
            Fraction(binomial(n - 3, k) * binomial(n + k - 1, k), k + 1), f"D({n},{k})"
        )
    if tag == "partition":
        if n < 1 or not 0 <= k < n:
            return 0
        return _exact(Fraction(binomial(n, k) * binomial(n, k + 1), n), f"P({n},{k})")
    if tag == "forest":
        if n < 1 or not 1 <= k <= n:
            return 0
        return _exact(
            Fraction(binomial(n, k - 1) * binomial(3 * n - 2 * k - 1, n - k), 2 * n - k),
            f"F({n},{k})",
        )
    if tag == "graph":
        if n < 2 or k < 0:
            return 0
        s = sum(
            binomial(n - 1, k - j) * binomial(n - 1, j + 1) * binomial(n - 2 + j, n - 2)
            for j in range(n - 1)
        )
        return _exact(Fraction(s, n - 1), f"G({n},{k})")
    raise ValueError(f"unknown family {tag!r}")


@lru_cache(maxsize=None)
def family_qpoly(tag: str, n: int, k: int | None = None) -> QFormula:
    """The q-analogue of :func:`family_count`, division attempted first."""
    zero = QFormula("0", Poly(), Poly((1,)), Poly())
    if tag == "tree":
        if n < 1:
            return zero
        return QFormula.build(
            f"T({n};q)", q_binomial(3 * n - 3, n - 1), q_integer(2 * n - 1)
        )
    if k is None:
        raise ValueError(f"family {tag} needs k")
    name = f"{tag}({n},{k};q)"
    if tag == "connected":
        if not _in_connected_range(n, k):
            return zero
        num = q_binomial(3 * n - 3, n + k) * q_binomial(k - 1, k - n + 1)
        return QFormula.build(name, num, q_integer(n - 1))
    if tag == "dissection":
        if n < 3 or k < 0 or k > n - 3:
            return zero
        num = q_binomial(n - 3, k) * q_binomial(n + k - 1, k)
        return QFormula.build(name, num, q_integer(k + 1))
    if tag == "partition":
        if n < 1 or not 0 <= k < n:
            return zero
        num = (q_binomial(n, k) * q_binomial(n, k + 1)).shift(k * (k + 1))
        return QFormula.build(name, num, q_integer(n))
    if tag == "forest":
        if n < 1 or not 1 <= k <= n:
            return zero
        num = q_binomial(n, k - 1) * q_binomial(3 * n - 2 * k - 1, n - k)
        return QFormula.build(name, num, q_integer(2 * n - k))
    if tag == "graph":
        if n < 2 or k < 0:
            return zero
        num = Poly()
        for j in range(n - 1):
            if not 0 <= k - j <= n - 1:
                continue
            term = q_binomial(n - 1, k - j) * q_binomial(n - 1, j + 1) * q_binomial(n - 2 + j, n - 2)
            num = num + term.shift(j * (j + n - k + 2))
        return QFormula.build(name, num, q_integer(n - 1))
    raise ValueError(f"unknown family {tag!r}")


def family_of(tag: str, k: int | None, n: int) -> tuple[Family, int | None]:
    """Map a formula parameterisation to (enumeration family, edge count)."""
    if tag == "tree":
        return Family.tree(), n - 1
    if tag == "forest":
        return Family.forest(k), n - k
    if tag == "partition":
        return Family.partition(n - k), None
    if tag == "graph":
        return Family.any_graph(), k
    return Family(tag), k
