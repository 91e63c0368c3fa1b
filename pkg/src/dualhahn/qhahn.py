"""Dual q-Hahn polynomials and their q -> 1 shadow, the classical dual Hahn family.

The dual q-Hahn polynomial ``R_n`` lives on the q-quadratic grid
``x_s = q**-s + a*b*q**(s+1)``, ``s = 0..N``, and is normalized by
``R_n(x_0) = 1``. Monic values come from running the monic recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import hyp3f2_terminating, phi32_terminating, q_pochhammer, to_scalar
from .errors import DenominatorPole
from .structures import DiscreteMeasure, SpectralGrid, Stencil


@dataclass(frozen=True)
class QHahnParams:
    """Parameters ``(a, b, q, N)``.

    With ``strict`` (the default) construction rejects ``q in {0, 1, -1}``,
    ``a q^k = 1`` for ``1 <= k <= N``, coincident grid points and vanishing
    weight denominators.
    """

    a: object
    b: object
    q: object
    N: int
    strict: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        for name in ("a", "b", "q"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        if self.q in (0, 1, -1):
            raise ValueError(f"q must avoid 0 and +-1, got {self.q}")
        if self.strict:
            for k in range(1, self.N + 1):
                if self.a * self.q**k == 1:
                    raise DenominatorPole(f"a*q^{k} = 1", where=k, factor="1 - a q^k")
            q_grid(self)
            q_weights(self)


def q_grid(params: QHahnParams) -> SpectralGrid:
    a, b, q, N = params.a, params.b, params.q, params.N
    return SpectralGrid(q ** (-s) + a * b * q ** (s + 1) for s in range(N + 1))


def q_recurrence(params: QHahnParams, n: int):
    """Non-monic recurrence coefficients ``(A_n, C_n)``."""
    a, b, q, N = params.a, params.b, params.q, params.N
    if not 0 <= n <= N:
        raise ValueError(f"n must lie in 0..{N}")
    A = (1 - q ** (n - N)) * (1 - a * q ** (n + 1))
    C = a * q * (1 - q**n) * (b - q ** (n - N - 1))
    return A, C


def q_monic_coeffs(params: QHahnParams, n: int):
    """Monic recurrence data ``(b_n, u_n)`` with ``u_0 = 0`` and ``u_{N+1} = 0``."""
    a, b, q, N = params.a, params.b, params.q, params.N
    if not 0 <= n <= N + 1:
        raise ValueError(f"n must lie in 0..{N + 1}")
    zero = 0 * q
    if n == N + 1:
        A_prev, _ = q_recurrence(params, N)
        return None, A_prev * zero
    A, C = q_recurrence(params, n)
    bn = 1 + a * b * q - A - C
    un = zero if n == 0 else q_recurrence(params, n - 1)[0] * C
    return bn, un


def q_evaluate(params: QHahnParams, n: int, s: int):
    """``R_n(x_s)`` from the terminating 3phi2 sum."""
    a, b, q, N = params.a, params.b, params.q, params.N
    if not (0 <= n <= N and 0 <= s <= N):
        raise ValueError(f"n and s must lie in 0..{N}")
    return phi32_terminating(
        (q ** (-n), q ** (-s), a * b * q ** (s + 1)), (a * q, q ** (-N)), q, q, n
    )


def q_evaluate_recurrence(params: QHahnParams, n: int, x):
    """``R_n(x)`` by forward recursion in ``n`` of the non-monic recurrence."""
    a, b, q = params.a, params.b, params.q
    if not 0 <= n <= params.N:
        raise ValueError(f"n must lie in 0..{params.N}")
    prev, cur = 0 * q, 1 + 0 * q
    for k in range(n):
        A, C = q_recurrence(params, k)
        prev, cur = cur, ((x + A + C - 1 - a * b * q) * cur - C * prev) / A
    return cur


def q_monic_evaluate(params: QHahnParams, n: int, x):
    """Monic ``P_n(x)`` via ``P_{k+1} = (x - b_k) P_k - u_k P_{k-1}``."""
    if not 0 <= n <= params.N + 1:
        raise ValueError(f"n must lie in 0..{params.N + 1}")
    prev, cur = 0 * params.q, 1 + 0 * params.q
    for k in range(n):
        bk, uk = q_monic_coeffs(params, k)
        prev, cur = cur, (x - bk) * cur - uk * prev
    return cur


def q_weights(params: QHahnParams) -> DiscreteMeasure:
    a, b, q, N = params.a, params.b, params.q, params.N
    ab = a * b
    weights = []
    for s in range(N + 1):
        den = (
            q_pochhammer(q, q, s)
            * q_pochhammer(ab * q ** (N + 2), q, s)
            * q_pochhammer(b * q, q, s)
            * (1 - ab * q)
            * (-a * q) ** s
        )
        if den == 0:
            raise DenominatorPole(f"weight denominator vanishes at s={s}", where=s)
        num = (
            q_pochhammer(a * q, q, s)
            * q_pochhammer(ab * q, q, s)
            * q_pochhammer(q ** (-N), q, s)
            * (1 - ab * q ** (2 * s + 1))
            * q ** (N * s - s * (s - 1) // 2)
        )
        weights.append(num / den)
    kden = q_pochhammer(b * q, q, N) * (a * q) ** N
    if kden == 0:
        raise DenominatorPole("normalization denominator (bq; q)_N (aq)^N vanishes")
    return DiscreteMeasure(weights, q_pochhammer(ab * q**2, q, N) / kden)


def _guarded_ratio(num_factors, den_factors, where):
    # A numerator factor that is identically zero (boundary truncation) wins over the denominator.
    num = 1
    for f in num_factors:
        num = num * f
    if num == 0:
        return num
    den = 1
    for f in den_factors:
        if f == 0:
            raise DenominatorPole(f"stencil denominator vanishes at s={where}", where=where, factor=f)
        den = den * f
    return num / den


def q_diff_op(params: QHahnParams) -> Stencil:
    """Second-order q-difference operator with eigenvalues ``q**-n - 1``."""
    a, b, q, N = params.a, params.b, params.q, params.N
    ab = a * b
    up, down = [], []
    for s in range(N + 1):
        up.append(
            _guarded_ratio(
                (1 - q ** (s - N), 1 - a * q ** (s + 1), 1 - ab * q ** (s + 1)),
                (1 - ab * q ** (2 * s + 1), 1 - ab * q ** (2 * s + 2)),
                s,
            )
        )
        down.append(
            -_guarded_ratio(
                (a * q ** (s - N), 1 - q**s, 1 - ab * q ** (s + 1 + N), 1 - b * q**s),
                (1 - ab * q ** (2 * s + 1), 1 - ab * q ** (2 * s)),
                s,
            )
        )
    return Stencil({1: up, -1: down})


# classical dual Hahn family (q -> 1 with a = q^alpha, b = q^beta)


def classical_grid(alpha, beta, N: int) -> SpectralGrid:
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    return SpectralGrid(s * (s + alpha + beta + 1) for s in range(N + 1))


def classical_recurrence(alpha, beta, N: int, n: int):
    """``(A_n, C_n, b_n, u_n)`` of the classical dual Hahn recurrence."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    A = (n - N) * (n + alpha + 1)
    C = n * (n - beta - N - 1)
    u = n * (n - beta - N - 1) * (n - N - 1) * (n + alpha)
    return A, C, -A - C, u


def classical_evaluate(alpha, beta, N: int, n: int, s: int):
    """``W_n(x_s)`` from the terminating 3F2 sum."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    return hyp3f2_terminating((-n, -s, s + 1 + alpha + beta), (alpha + 1, -N), n)


def classical_monic_evaluate(alpha, beta, N: int, n: int, x):
    prev, cur = Fraction(0), Fraction(1)
    for k in range(n):
        _, _, bk, uk = classical_recurrence(alpha, beta, N, k)
        prev, cur = cur, (x - bk) * cur - uk * prev
    return cur
