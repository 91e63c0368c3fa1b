"""Coefficient tables for the dual -1 Hahn difference operators.

Each five-diagonal stencil coefficient is a product of linear forms in
``(alpha, beta)`` (with ``s`` and ``N`` substituted), divided by another such
product. Proportional factors are cancelled before substitution so removable
0/0 points (for example ``alpha + beta = 2N + 2``) evaluate to their limit.
What survives and still vanishes in a denominator is a genuine pole.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DenominatorPole
from .poly import Polynomial, RationalFunction


@dataclass(frozen=True)
class Lin:
    """Linear form ``ca * alpha + cb * beta + c0``."""

    ca: Fraction = Fraction(0)
    cb: Fraction = Fraction(0)
    c0: Fraction = Fraction(0)

    def _vec(self):
        return (self.ca, self.cb, self.c0)

    @staticmethod
    def _lift(other):
        return other if isinstance(other, Lin) else Lin(c0=Fraction(other))

    def __add__(self, other):
        o = self._lift(other)
        return Lin(self.ca + o.ca, self.cb + o.cb, self.c0 + o.c0)

    __radd__ = __add__

    def __neg__(self):
        return Lin(-self.ca, -self.cb, -self.c0)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, k):
        return Lin(self.ca * k, self.cb * k, self.c0 * k)

    __rmul__ = __mul__

    def is_identically_zero(self) -> bool:
        return self.ca == 0 and self.cb == 0 and self.c0 == 0

    def ratio_to(self, other: "Lin"):
        """``k`` with ``self == k * other``, or ``None`` if not proportional."""
        u, v = self._vec(), other._vec()
        pivot = next((i for i, c in enumerate(v) if c != 0), None)
        if pivot is None:
            return None
        k = u[pivot] / v[pivot]
        return k if all(a == k * b for a, b in zip(u, v)) else None

    def __call__(self, alpha, beta):
        return self.ca * alpha + self.cb * beta + self.c0

    def __str__(self):
        parts = []
        for c, sym in ((self.ca, "alpha"), (self.cb, "beta")):
            if c:
                parts.append(f"{c}*{sym}" if c not in (1, -1) else ("-" if c == -1 else "") + sym)
        if self.c0 or not parts:
            parts.append(str(self.c0))
        return " + ".join(parts).replace("+ -", "- ")


ALPHA = Lin(ca=Fraction(1))
BETA = Lin(cb=Fraction(1))


@dataclass(frozen=True)
class FactoredRatio:
    const: Fraction
    num: tuple
    den: tuple

    def reduced(self) -> "FactoredRatio":
        const = Fraction(self.const)
        num = [Lin._lift(f) for f in self.num]
        den = [Lin._lift(f) for f in self.den]
        if const == 0 or any(f.is_identically_zero() for f in num):
            return FactoredRatio(Fraction(0), (), ())
        remaining = []
        for d in den:
            for i, f in enumerate(num):
                k = f.ratio_to(d)
                if k is not None:
                    const *= k
                    del num[i]
                    break
            else:
                remaining.append(d)
        return FactoredRatio(const, tuple(num), tuple(remaining))

    def evaluate(self, alpha, beta, where=None):
        r = self.reduced()
        if r.const == 0:
            return Fraction(0) if isinstance(alpha, Fraction) else 0.0
        den = 1
        for d in r.den:
            v = d(alpha, beta)
            if v == 0:
                raise DenominatorPole(
                    f"stencil denominator factor ({d}) vanishes at s={where}",
                    where=where,
                    factor=str(d),
                )
            den = den * v
        num = r.const
        for f in r.num:
            num = num * f(alpha, beta)
        return num / den


def _ratio(const, num, den) -> FactoredRatio:
    return FactoredRatio(Fraction(const), tuple(num), tuple(den))


def stencil_factors(N: int, s: int) -> dict:
    """Factored ``{offset: ratio}`` for the coefficients U2, U1, V2, V1 at index ``s``.

    Offsets: ``+2 -> U2``, ``+1 -> U1``, ``-2 -> V2``, ``-1 -> V1``.
    """
    a, b = ALPHA, BETA
    ab = a + b
    if N % 2 == 0:
        if s % 2 == 0:
            U2 = _ratio(-2, [a - s - 2, b + a - s - 2, Lin(c0=N - s)], [ab - 2 * s - 2, ab - 2 * s - 4])
            U1 = _ratio(2, [b + a, a - b, Lin(c0=N - s)], [ab - 2 * s, ab - 2 * s - 2, ab - 2 * s - 4])
            V2 = _ratio(2, [Lin(c0=s), b - s, -a - b + N + s], [ab - 2 * s + 2, ab - 2 * s])
            V1 = _ratio(4, [Lin(c0=s), b - s, 2 * N + 2 - a - b], [ab - 2 * s, ab - 2 * s - 2, ab - 2 * s + 2])
        else:
            U2 = _ratio(-2, [a - s - 1, b + a - s - 1, Lin(c0=N - s - 1)], [ab - 2 * s - 2, ab - 2 * s - 4])
            U1 = _ratio(4, [a - s - 1, b + a - s - 1, 2 * N + 2 - a - b], [ab - 2 * s, ab - 2 * s - 2, ab - 2 * s - 4])
            V2 = _ratio(2, [Lin(c0=s - 1), b - s + 1, -a - b + N + s + 1], [ab - 2 * s + 2, ab - 2 * s])
            V1 = _ratio(-2, [b + a, a - b, -a - b + N + s + 1], [ab - 2 * s, ab - 2 * s - 2, ab - 2 * s + 2])
    else:
        if s % 2 == 0:
            U2 = _ratio(-2, [ab + s + 2, a + s + 1, Lin(c0=N - s - 1)], [ab + 2 * s + 2, ab + 2 * s + 4])
            U1 = _ratio(-2, [ab, a + s + 1, ab + 2 * N + 2], [ab + 2 * s, ab + 2 * s + 2, ab + 2 * s + 4])
            V2 = _ratio(-2, [Lin(c0=s), b + s - 1, ab + N + s + 1], [ab + 2 * s - 2, ab + 2 * s])
            V1 = _ratio(-4, [Lin(c0=s), a - b, ab + N + s + 1], [ab + 2 * s, ab + 2 * s + 2, ab + 2 * s - 2])
        else:
            U2 = _ratio(-2, [a + s + 2, ab + s + 1, Lin(c0=N - s)], [ab + 2 * s + 2, ab + 2 * s + 4])
            U1 = _ratio(-4, [a - b, Lin(c0=N - s), ab + s + 1], [ab + 2 * s, ab + 2 * s + 2, ab + 2 * s + 4])
            V2 = _ratio(-2, [Lin(c0=s - 1), b + s, ab + N + s], [ab + 2 * s - 2, ab + 2 * s])
            V1 = _ratio(-2, [b + s, ab, ab + 2 * N + 2], [ab + 2 * s, ab + 2 * s + 2, ab + 2 * s - 2])
    return {2: U2, 1: U1, -2: V2, -1: V1}


def _x_plus(c) -> Polynomial:
    return Polynomial.linear(c)


def dunkl_coefficients(alpha, beta, N: int) -> tuple:
    """Rational coefficients ``(E1, E2, G1, G2)`` of the Dunkl-shift form."""
    a, b = alpha, beta
    x = Polynomial.x()
    if N % 2 == 0:
        e1 = RationalFunction(
            _x_plus(3 - a + b) * _x_plus(3 - a - b) * _x_plus(-1 - 2 * N + a + b),
            _x_plus(1) * _x_plus(3) * 4,
        )
        e2 = RationalFunction(
            -(_x_plus(a - 1 + b) * _x_plus(a - 1 - b) * _x_plus(-1 + 2 * N - a - b)),
            _x_plus(-1) * _x_plus(-3) * 4,
        )
        g1 = RationalFunction(
            _x_plus(a + b - 2 * N - 1) * (a * a - b * b),
            (x * x - 1) * _x_plus(3),
        )
        g2 = RationalFunction(
            (_x_plus(a - 1) * _x_plus(a - 1) - b * b) * (2 * N + 2 - a - b),
            (x * x - 1) * _x_plus(-3),
        )
    else:
        e1 = RationalFunction(
            _x_plus(a + b + 3) * _x_plus(a - b + 1) * _x_plus(-a - b - 2 * N + 1),
            _x_plus(1) * _x_plus(3) * 4,
        )
        e2 = RationalFunction(
            -(_x_plus(-a - b - 1) * _x_plus(b - a - 3) * _x_plus(a + b + 2 * N + 1)),
            _x_plus(-1) * _x_plus(-3) * 4,
        )
        g1 = RationalFunction(
            _x_plus(1 + a - b) * ((a + b) * (a + b + 2 + 2 * N)),
            (1 - x * x) * _x_plus(3),
        )
        g2 = RationalFunction(
            _x_plus(-a - b - 1) * _x_plus(a + b + 2 * N + 1) * (a - b),
            (1 - x * x) * _x_plus(-3),
        )
    return e1, e2, g1, g2
