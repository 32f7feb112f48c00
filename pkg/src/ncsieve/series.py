"""Truncated power series in z with polynomial-in-w coefficients.

The main object is the series y(z, w) with y = z w (1+y)^3 / (1 - w y), from
which the connected-graph generating function is C = z + z y.  The checks in
this module compare series coefficients with the closed forms in
:mod:`ncsieve.formulas` and with enumeration counts in :mod:`ncsieve.ncgraph`.

w-degrees are capped at ``wcap`` (default 2N + 2).  The true coefficient of
z^n in every series used here has w-degree below 2n, so truncation in w never
changes a coefficient that is compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly
from .formulas import closed_a, closed_d, count_connected
from .ncgraph import count_antipodal_pairs, count_two_components_separated, count_with_edge_1n

__all__ = [
    "BivarSeries",
    "InvalidPhi",
    "IdentityReport",
    "solve_y",
    "connected_series",
    "cubic_residual",
    "build_F",
    "check_A_relation",
    "check_D_is_C_squared",
    "check_C_coefficients",
    "check_F_coefficients",
    "check_lagrange_extractions",
    "lagrange_coefficient",
    "phi_connected",
    "psi_identity",
    "psi_log1p",
]


class InvalidPhi(ValueError):
    """Lagrange inversion needs phi(0) != 0."""


def _wtrunc(p: Poly, wcap: int) -> Poly:
    return p if p.degree <= wcap else Poly(p.coeffs[: wcap + 1])


W = Poly((0, 1))
ONE = Poly((1,))


@dataclass(frozen=True)
class BivarSeries:
    """sum_{i <= order} coeffs[i](w) z^i, with w-degree at most ``wcap``."""

    order: int
    coeffs: tuple
    wcap: int = field(default=-1)

    def __post_init__(self):
        wcap = self.wcap if self.wcap >= 0 else 2 * self.order + 2
        cs = [Poly(c.coeffs) if isinstance(c, Poly) else Poly((c,)) for c in self.coeffs]
        cs = cs[: self.order + 1] + [Poly()] * (self.order + 1 - len(cs))
        object.__setattr__(self, "wcap", wcap)
        object.__setattr__(self, "coeffs", tuple(_wtrunc(c, wcap) for c in cs))

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, order: int, wcap: int = -1) -> BivarSeries:
        return cls(order, (), wcap)

    @classmethod
    def constant(cls, c, order: int, wcap: int = -1) -> BivarSeries:
        return cls(order, (c,), wcap)

    @classmethod
    def z(cls, order: int, wcap: int = -1) -> BivarSeries:
        return cls(order, (Poly(), ONE), wcap)

    def _like(self, coeffs) -> BivarSeries:
        return BivarSeries(self.order, tuple(coeffs), self.wcap)

    # access -------------------------------------------------------------
    def __getitem__(self, nk):
        """``s[n]`` is the w-polynomial of z^n; ``s[n, k]`` a single coefficient."""
        if isinstance(nk, tuple):
            n, k = nk
            return self.coeffs[n].coeff(k) if 0 <= n <= self.order else 0
        return self.coeffs[nk]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def constant_term(self) -> Poly:
        return self.coeffs[0]

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> BivarSeries:
        if isinstance(other, BivarSeries):
            return other
        return BivarSeries.constant(other if isinstance(other, Poly) else Poly((other,)), self.order, self.wcap)

    def __add__(self, other):
        o = self._coerce(other)
        return self._like(a + b for a, b in zip(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Poly, int, Fraction)):
            p = other if isinstance(other, Poly) else Poly((other,))
            return self._like(_wtrunc(c * p, self.wcap) for c in self.coeffs)
        o = other
        N, cap = self.order, self.wcap
        out = [Poly()] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(N + 1 - i):
                b = o.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + _wtrunc(a * b, cap)
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivarSeries:
        result = BivarSeries.constant(ONE, self.order, self.wcap)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, s: int) -> BivarSeries:
        """Multiply by z^s; negative s divides, and requires the dropped terms to vanish."""
        if s >= 0:
            return BivarSeries(self.order + s, (Poly(),) * s + self.coeffs, self.wcap)
        if any(not c.is_zero() for c in self.coeffs[:-s]):
            raise ValueError("series not divisible by that power of z")
        return BivarSeries(self.order + s, self.coeffs[-s:], self.wcap)

    def truncate(self, order: int) -> BivarSeries:
        return BivarSeries(order, self.coeffs[: order + 1], self.wcap)

    def dz(self) -> BivarSeries:
        """Derivative in z (order drops by one)."""
        return BivarSeries(self.order - 1, tuple(c * i for i, c in enumerate(self.coeffs))[1:], self.wcap)

    def map_coefficients(self, fn) -> BivarSeries:
        return self._like(fn(i, c) for i, c in enumerate(self.coeffs))

    def _require_no_constant(self, what: str):
        if not self.coeffs[0].is_zero():
            raise ValueError(f"{what} needs a series with zero constant term")

    def geometric(self) -> BivarSeries:
        """1 / (1 - self), for a series with zero constant term."""
        self._require_no_constant("geometric")
        out = BivarSeries.constant(ONE, self.order, self.wcap)
        for _ in range(self.order):
            out = 1 + self * out
        return out

    def log1p(self) -> BivarSeries:
        """log(1 + self) = sum (-1)^(m+1) self^m / m, for zero constant term."""
        self._require_no_constant("log1p")
        out = BivarSeries.zero(self.order, self.wcap)
        power = BivarSeries.constant(ONE, self.order, self.wcap)
        for m in range(1, self.order + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power * Fraction((-1) ** (m + 1), m)
        return out

    def __eq__(self, other):
        if not isinstance(other, BivarSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = [f"({c.format('w')})*z^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return (" + ".join(terms) or "0") + f" + O(z^{self.order + 1})"


# -- y and C -----------------------------------------------------------------

def solve_y(N: int, wcap: int = -1) -> BivarSeries:
    """The series y with y = z w (1+y)^3 / (1 - w y), through z^N.

    Fixed-point iteration: pass m makes the z^m coefficient final.
    """
    if N < 1:
        raise ValueError("order must be positive")
    y = BivarSeries.zero(N, wcap)
    zw = BivarSeries.z(N, wcap) * W
    for _ in range(N):
        y = zw * (1 + y) ** 3 * (y * W).geometric()
    return y


def connected_series(N: int, y: BivarSeries | None = None) -> BivarSeries:
    """C = z + z y through z^N."""
    if y is None:
        y = solve_y(max(N - 1, 1), 2 * N + 2)
    yN = BivarSeries(N, y.coeffs, 2 * N + 2)
    return BivarSeries.z(N) + yN.shift(1).truncate(N)


def cubic_residual(N: int) -> BivarSeries:
    """w C^3 + w C^2 - z (1 + 2w) C + z^2 (1 + w); zero through z^N."""
    if N < 2:
        raise ValueError("order must be at least 2")
    C = connected_series(N)
    z = BivarSeries.z(N, C.wcap)
    return C ** 3 * W + C * C * W - z * C * Poly((1, 2)) + z * z * Poly((1, 1))


def build_F(N: int) -> BivarSeries:
    """F = (w / (1 + w)) (z^2 (1+y)^2 + z y); [z^n w^k] F is the edge-{1,n} count."""
    if N < 2:
        raise ValueError("order must be at least 2")
    cap = 2 * N + 2
    y = BivarSeries(N, solve_y(N, cap).coeffs, cap)
    z = BivarSeries.z(N, cap)
    inner = z * z * (1 + y) ** 2 + z * y
    # 1/(1+w) as a geometric series in w, cut at the cap; terms beyond it are
    # dropped by the w-truncation anyway
    inv = Poly(tuple((-1) ** j for j in range(cap + 1)))
    return inner * (W * inv)


def _yN(N: int) -> BivarSeries:
    return solve_y(N, 2 * N + 2)


# -- identity checks ---------------------------------------------------------

@dataclass
class IdentityReport:
    """Outcome of a generating-function check: ``ok`` plus any mismatches."""

    name: str
    ok: bool = True
    checked: int = 0
    mismatches: list = field(default_factory=list)

    def record(self, key, got, want):
        self.checked += 1
        if got != want:
            self.ok = False
            self.mismatches.append((key, got, want))

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "mismatches": [[str(x) for x in m] for m in self.mismatches],
        }


def check_C_coefficients(N: int) -> IdentityReport:
    """[z^n w^k] (z + z y) against the closed count, for n <= N."""
    rep = IdentityReport(f"C coefficients, order {N}")
    C = connected_series(N)
    for n in range(1, N + 1):
        for k in range(0, 2 * n + 1):
            want = 1 if (n, k) == (1, 0) else count_connected(n, k)
            rep.record((n, k), C[n, k], want)
    return rep


def check_D_is_C_squared(N: int, enum_max: int = 6) -> IdentityReport:
    """C^2 against closed_d (n <= N) and the two-component enumeration (n <= enum_max)."""
    if N < 3:
        raise ValueError("order must be at least 3")
    rep = IdentityReport(f"D = C^2, order {N}")
    C = connected_series(N)
    D = C * C
    rep.record((2, 0), D[2, 0], 1)
    for n in range(3, N + 1):
        for k in range(0, 2 * n):
            rep.record(("formula", n, k), D[n, k], closed_d(n, k))
            if n <= enum_max:
                rep.record(("enum", n, k), D[n, k], count_two_components_separated(n, k))
    return rep


def check_F_coefficients(N: int, enum_max: int = 8) -> IdentityReport:
    """F against enumerated edge-{1,n} counts, and (1 + w) F = w (D + C - z) on them."""
    rep = IdentityReport(f"F coefficients, order {N}")
    F = build_F(N)
    for k in range(0, 2 * N):
        rep.record((1, k), F[1, k], 0)
    top = min(N, enum_max)
    for n in range(2, top + 1):
        for k in range(0, 2 * n):
            rep.record((n, k), F[n, k], count_with_edge_1n(n, k))
    enumerated = BivarSeries(
        top,
        tuple(Poly(tuple(count_with_edge_1n(n, k) for k in range(2 * n))) if n >= 2 else Poly() for n in range(top + 1)),
    )
    C = connected_series(top)
    lhs = enumerated * Poly((1, 1))
    rhs = (C * C + C - BivarSeries.z(top)) * W
    for n in range(top + 1):
        rep.record(("(1+w)F", n), lhs[n], rhs[n])
    return rep


def check_A_relation(N: int, enum_max: int = 5) -> IdentityReport:
    """A/z = (dH/dz)/(1 - H) with H = F/z; coefficients, 1 - H = 1/(1+y), and log(1+y).

    Coefficients of A are compared with the half-turn orbit enumeration for
    n <= min(enum_max, N) and with closed_a for all n <= N.
    """
    if N < 2:
        raise ValueError("order must be at least 2")
    rep = IdentityReport(f"A relation, order {N}")
    cap = 2 * N + 4
    F = build_F(N + 1)
    H = BivarSeries(N, F.shift(-1).coeffs, cap)
    y = BivarSeries(N, _yN(N).coeffs, cap)

    one_minus_H = 1 - H
    inv_1py = (-y).geometric()  # 1/(1+y)
    for n in range(N + 1):
        rep.record(("1-H", n), one_minus_H[n], inv_1py[n])

    # A = z * H' / (1 - H); H' loses one order, so rebuild at order N - 1
    Hd = H.dz()
    A = (BivarSeries(N - 1, Hd.coeffs, cap) * BivarSeries(N - 1, H.coeffs, cap).geometric()).shift(1)
    for n in range(1, N + 1):
        for k in range(0, 2 * n + 1):
            rep.record(("closed_a", n, k), A[n, k], closed_a(n, k))
            if n <= enum_max:
                rep.record(("a_enum", n, k), A[n, k], count_antipodal_pairs(n, k))

    # integrate A/z: coefficient n divided by n; constant of integration is 0
    integrated = A.map_coefficients(lambda i, c: c * Fraction(1, i) if i else c)
    log1py = y.log1p()
    for n in range(N + 1):
        rep.record(("log(1+y)", n), integrated[n], log1py[n])
    return rep


def check_lagrange_extractions(N: int) -> IdentityReport:
    """The two Lagrange extractions behind closed_d, and Lagrange vs iteration.

    [z^m w^k] y = C(3m, m+k+1) C(k-1, m-1) / m and
    [z^m w^k] y^2 = 2 C(3m, m+k+2) C(k-1, m-1) / m, written with m = n - 2.
    """
    from .algebra import binomial

    rep = IdentityReport(f"Lagrange extractions, order {N}")
    y = _yN(N)
    y2 = y * y
    phi = phi_connected(N)
    for m in range(1, N + 1):
        for k in range(0, 2 * m + 2):
            rep.record(("y", m, k), y[m, k], Fraction(binomial(3 * m, m + k + 1) * binomial(k - 1, m - 1), m) if k >= 1 else 0)
            rep.record(("y^2", m, k), y2[m, k], Fraction(2 * binomial(3 * m, m + k + 2) * binomial(k - 1, m - 1), m) if k >= 1 else 0)
        rep.record(("lagrange", m), lagrange_coefficient(phi, psi_identity(N), m), y[m])
    return rep


# -- Lagrange-Buermann -------------------------------------------------------
#
# Series in u reuse BivarSeries with u in the role of z.

def phi_connected(order: int) -> BivarSeries:
    """w (1+u)^3 / (1 - u w), through u^order."""
    u = BivarSeries.z(order, 4 * order + 4)
    return (1 + u) ** 3 * (u * W).geometric() * W


def psi_identity(order: int) -> BivarSeries:
    return BivarSeries.z(order, 4 * order + 4)


def psi_log1p(order: int) -> BivarSeries:
    return BivarSeries.z(order, 4 * order + 4).log1p()


def lagrange_coefficient(phi: BivarSeries, psi: BivarSeries, n: int) -> Poly:
    """[z^n] psi(y) for y = z phi(y), as (1/n) [u^(n-1)] phi(u)^n psi'(u).

    ``phi`` and ``psi`` are series in u, with order at least n - 1 and n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if phi.constant_term().is_zero():
        raise InvalidPhi("phi(0) must be nonzero")
    if phi.order < n - 1 or psi.order < n:
        raise ValueError("phi / psi not expanded far enough")
    cap = max(phi.wcap, psi.wcap, 2 * n + 2) * n
    p = BivarSeries(n - 1, phi.coeffs, cap)
    dpsi = BivarSeries(n - 1, psi.dz().coeffs, cap)
    return (p ** n * dpsi)[n - 1] * Fraction(1, n)
