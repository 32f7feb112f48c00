"""Exact polynomial arithmetic, q-analogues and evaluation at roots of unity.

Polynomials are dense coefficient tuples, lowest degree first, over the
integers or the rationals (``fractions.Fraction``).  A primitive d-th root of
unity is never touched numerically: values live in the field Q[q]/(Phi_d),
stored as rational coordinates in the basis 1, q, ..., q^(phi(d)-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Poly",
    "CycloValue",
    "DivisionNotExact",
    "PoleAtRoot",
    "NotRationalInteger",
    "binomial",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_binomial_product",
    "poly_exact_div",
    "cyclotomic",
    "totient",
    "eval_at_root",
    "eval_limit_at_root",
]


class DivisionNotExact(ArithmeticError):
    """Polynomial division left a remainder or a non-integer quotient."""


class PoleAtRoot(ArithmeticError):
    """A quotient of polynomials diverges at the requested root of unity."""


class NotRationalInteger(ValueError):
    """A cyclotomic value was expected to be a rational integer but is not."""


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial in q with exact coefficients.

    >>> Poly((1, 1)) * Poly((1, 1))
    Poly((1, 2, 1))
    >>> Poly((0, 0))
    Poly(())
    """

    coeffs: tuple

    def __init__(self, coeffs=()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not isinstance(other, Rational):
                return NotImplemented
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def __divmod__(self, other: Poly):
        """Euclidean division over Q."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dd = other.degree
        if len(rem) <= dd:
            return Poly(), Poly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            if lead == 1:
                f = c
            elif lead == -1:
                f = -c
            else:
                f = Fraction(c) / lead
            quot[i - dd] = f
            base = i - dd
            for j, oc in enumerate(other.coeffs):
                if oc:
                    rem[base + j] -= f * oc
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __repr__(self):
        return f"Poly({self.coeffs!r})"

    def __str__(self):
        return self.format("q")

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


ONE = Poly((1,))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, extended to negative ``n``.

    For ``n < 0`` and ``k >= 0`` this uses C(n, k) = (-1)^k C(k-n-1, k).

    >>> binomial(9, 7), binomial(3, 5), binomial(-1, 3)
    (36, 0, -1)
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def q_integer(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return Poly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Poly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n <= 1:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> Poly:
    """Gaussian binomial via [n,k] = [n-1,k-1] + q^k [n-1,k].

    >>> q_binomial(4, 2).coeffs
    (1, 1, 2, 1, 1)
    """
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return Poly()
    if k == 0 or k == n:
        return ONE
    # the smaller side keeps the recursion table narrow
    if 2 * k > n:
        return q_binomial(n, n - k)
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_binomial_product(n: int, k: int) -> Poly:
    """Gaussian binomial as [n]!_q / ([k]!_q [n-k]!_q), by exact division."""
    if n < 0:
        raise ValueError("q_binomial_product needs n >= 0")
    if k < 0 or k > n:
        return Poly()
    return poly_exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def poly_exact_div(num: Poly, den: Poly) -> Poly:
    """Quotient ``num / den``, which must be exact with integer coefficients.

    Raises DivisionNotExact otherwise.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot, rem = divmod(num, den)
    if not rem.is_zero():
        raise DivisionNotExact(f"nonzero remainder dividing by {den}")
    if not quot.is_integral():
        raise DivisionNotExact("quotient has non-integer coefficients")
    return quot


def totient(d: int) -> int:
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """d-th cyclotomic polynomial, by dividing q^d - 1 by the lower ones.

    >>> cyclotomic(6).coeffs
    (1, -1, 1)
    """
    if d < 1:
        raise ValueError("cyclotomic needs d >= 1")
    p = Poly((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            p = poly_exact_div(p, cyclotomic(e))
    return p


def _fold(p: Poly, d: int) -> list:
    # reduction modulo q^d - 1, which Phi_d divides
    out = [0] * d
    for i, c in enumerate(p.coeffs):
        out[i % d] += c
    return out


def _reduce(p: Poly, d: int) -> tuple:
    phi = cyclotomic(d)
    r = Poly(_fold(p, d)) % phi
    coords = [Fraction(c) for c in r.coeffs]
    coords += [Fraction(0)] * (phi.degree - len(coords))
    return tuple(coords)


@dataclass(frozen=True)
class CycloValue:
    """An element of Q[q]/(Phi_d), i.e. a value at a primitive d-th root of unity."""

    d: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != totient(self.d):
            raise ValueError("coordinate count must equal totient(d)")

    @classmethod
    def from_poly(cls, p: Poly, d: int) -> CycloValue:
        return cls(d, _reduce(p, d))

    def as_poly(self) -> Poly:
        return Poly(self.coords)

    def _coerce(self, other) -> CycloValue:
        if isinstance(other, CycloValue):
            if other.d != self.d:
                raise ValueError("cannot mix roots of different orders")
            return other
        return CycloValue.from_poly(Poly((other,)), self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return CycloValue(self.d, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(self.d, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        o = self._coerce(other)
        return CycloValue.from_poly(self.as_poly() * o.as_poly(), self.d)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def inverse(self) -> CycloValue:
        """Multiplicative inverse, by the extended Euclidean algorithm in Q[q]."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        # Phi_d is irreducible, so gcd(a, Phi_d) = 1 for any nonzero a
        r0, r1 = cyclotomic(self.d), self.as_poly()
        s0, s1 = Poly(), ONE
        while r1.degree > 0:
            quot, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quot * s1
        return CycloValue.from_poly(s1 * Fraction(1, r1.coeffs[0]), self.d)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coords[0].denominator == 1

    def to_int(self) -> int:
        if not self.is_rational_integer():
            raise NotRationalInteger(f"{self} is not a rational integer")
        return self.coords[0].numerator

    def __str__(self):
        return f"{self.as_poly()} (mod Phi_{self.d})"


def eval_at_root(p: Poly, d: int) -> CycloValue:
    """Value of ``p`` at a primitive d-th root of unity.

    >>> eval_at_root(Poly((1, 0, 1)), 4).is_zero()
    True
    >>> eval_at_root(Poly((1, 0, 1)), 2).to_int()
    2
    """
    if d < 1:
        raise ValueError("root order must be positive")
    return CycloValue.from_poly(p, d)


def cyclotomic_multiplicity(p: Poly, d: int) -> tuple[int, Poly]:
    """Largest m with Phi_d^m | p, and the cofactor p / Phi_d^m."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinite multiplicity")
    phi = cyclotomic(d)
    m = 0
    while True:
        quot, rem = divmod(p, phi)
        if not rem.is_zero():
            return m, p
        p, m = quot, m + 1


def eval_limit_at_root(num: Poly, den: Poly, d: int) -> CycloValue:
    """Limit of num/den as q tends to a primitive d-th root of unity.

    Common powers of Phi_d are cancelled first; PoleAtRoot is raised when the
    denominator keeps a zero there.
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return eval_at_root(num, d)
    m_num, num_c = cyclotomic_multiplicity(num, d)
    m_den, den_c = cyclotomic_multiplicity(den, d)
    phi = cyclotomic(d)
    common = min(m_num, m_den)
    num_c = num_c * phi ** (m_num - common)
    den_c = den_c * phi ** (m_den - common)
    bottom = eval_at_root(den_c, d)
    if bottom.is_zero():
        raise PoleAtRoot(f"denominator vanishes to order {m_den - m_num} at Phi_{d}")
    return eval_at_root(num_c, d) / bottom
