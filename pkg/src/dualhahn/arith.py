"""Scalar kernels: exact rationals, (q-)Pochhammer symbols and terminating
hypergeometric sums.

Everything here is written against the field operations only, so the same
functions accept :class:`fractions.Fraction` (exact mode), ``float`` (floating
mode) and, for the hypergeometric sums, polynomial-valued numerator
parameters.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

from .errors import DenominatorPole

Scalar = Union[Fraction, float]


def to_scalar(value) -> Scalar:
    """Coerce ints, rationals and strings such as ``"7/2"`` to ``Fraction``.

    Floats are passed through untouched; they select floating mode.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return value
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction))


def isclose(a, b, *, rtol: float, atol: float) -> bool:
    """Tolerance comparison for floating mode; both tolerances are mandatory."""
    return math.isclose(float(a), float(b), rel_tol=rtol, abs_tol=atol)


def pochhammer(x, k: int):
    """Rising factorial ``x (x+1) ... (x+k-1)``; empty product for ``k == 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    result = Fraction(1) if is_exact(x) else 1.0
    for j in range(k):
        result *= x + j
    return result


def q_pochhammer(x, q, k: int):
    """q-shifted factorial ``(x; q)_k = prod_{j<k} (1 - x q^j)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    result = Fraction(1) if is_exact(x) and is_exact(q) else 1.0
    qj = 1
    for _ in range(k):
        result *= 1 - x * qj
        qj = qj * q
    return result


def _check_terminating(num: Sequence, n: int, first) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(num) != 3:
        raise ValueError("expected three numerator parameters")
    if num[0] != first:
        raise ValueError(f"first numerator parameter must be {first}, got {num[0]}")


def hyp3f2_terminating(num: Sequence, den: Sequence, n: int):
    """Terminating 3F2 at unit argument.

    ``num = (-n, a2, a3)`` and ``den = (d1, d2)``. The sum is built by forward
    term recursion. ``a2`` and ``a3`` may be polynomials; ``d1``, ``d2`` must
    be scalars.
    """
    _check_terminating(num, n, -n)
    if len(den) != 2:
        raise ValueError("expected two denominator parameters")
    a1, a2, a3 = num
    d1, d2 = den
    for d in (d1, d2):
        for j in range(n):
            if d + j == 0:
                raise DenominatorPole(
                    f"denominator Pochhammer ({d})_{j + 1} vanishes", where=j, factor=d
                )
    term = Fraction(1) if all(is_exact(d) for d in den) else 1.0
    total = term
    for k in range(n):
        term = term * (a1 + k) * (a2 + k) * (a3 + k) / ((d1 + k) * (d2 + k) * (k + 1))
        total = total + term
    return total


def phi32_terminating(num: Sequence, den: Sequence, q, z, n: int):
    """Terminating basic hypergeometric 3phi2 with base ``q`` and argument ``z``.

    Termination comes from ``num[0] == q**(-n)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(num) != 3 or len(den) != 2:
        raise ValueError("expected three numerator and two denominator parameters")
    if num[0] != q ** (-n):
        raise ValueError(f"first numerator parameter must be q**-{n}")
    a1, a2, a3 = num
    d1, d2 = den
    exact = all(is_exact(v) for v in (*num, *den, q, z))
    qk = Fraction(1) if exact else 1.0
    for j in range(n):
        for d in (d1, d2):
            if 1 - d * qk == 0:
                raise DenominatorPole(
                    f"denominator q-Pochhammer ({d}; q)_{j + 1} vanishes", where=j, factor=d
                )
        qk = qk * q
    term = Fraction(1) if exact else 1.0
    total = term
    qk = Fraction(1) if exact else 1.0
    for _ in range(n):
        ratio = (1 - a1 * qk) * (1 - a2 * qk) * (1 - a3 * qk)
        ratio = ratio / ((1 - d1 * qk) * (1 - d2 * qk) * (1 - qk * q))
        term = term * ratio * z
        total = total + term
        qk = qk * q
    return total
