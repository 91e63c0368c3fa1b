"""Dual -1 Hahn polynomials.

These are the q -> -1 limits of the dual q-Hahn polynomials. The parity of
``N`` selects one of two parametrizations, and with it the grid, recurrence
coefficients, weights and closed forms. All polynomials here are monic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import hyp3f2_terminating, pochhammer, to_scalar
from .errors import DenominatorPole, NonExactDivision
from .poly import Polynomial
from .structures import DiscreteMeasure, SpectralGrid


@dataclass(frozen=True)
class M1HahnParams:
    """Parameters ``(alpha, beta, N)`` of a dual -1 Hahn family.

    Construction validates the grid (distinct points) and the weights (no
    vanishing Pochhammer denominators). Parameters outside the positivity
    regime are accepted; see :attr:`in_positivity_regime`.
    """

    alpha: object
    beta: object
    N: int
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", to_scalar(self.alpha))
        object.__setattr__(self, "beta", to_scalar(self.beta))
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        if self.validate:
            m1_grid(self)
            m1_weights(self)

    @property
    def even(self) -> bool:
        return self.N % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.even else "odd"

    @property
    def xi(self):
        return (self.beta - self.N - 1) / 2 if self.even else self.alpha / 2

    @property
    def eta(self):
        return (self.alpha - self.N - 1) / 2 if self.even else self.beta / 2

    @property
    def tau(self):
        """Shift in the kernel split ``R~_{2n+1}(x) = (x - tau) Q_n(x^2)``."""
        if self.even:
            return 2 * self.N + 2 - self.alpha - self.beta
        return self.beta - self.alpha

    @property
    def in_positivity_regime(self) -> bool:
        if self.even:
            return self.alpha > self.N and self.beta > self.N
        return self.alpha > -1 and self.beta > -1


def m1_grid(params: M1HahnParams) -> SpectralGrid:
    a, b, N = params.alpha, params.beta, params.N
    if params.even:
        pts = ((-1) ** s * (1 - a - b + 2 * s) for s in range(N + 1))
    else:
        pts = ((a + b + 2 * s + 1) if s % 2 == 0 else (-a - b - 2 * s - 1) for s in range(N + 1))
    return SpectralGrid(pts)


def m1_shifted_grid(params: M1HahnParams) -> tuple:
    """Grid points moved by +1, the variable of the closed forms."""
    return m1_grid(params).shifted(1)


def _branch_AC(params: M1HahnParams, n: int):
    a, b, N = params.alpha, params.beta, params.N
    if params.even:
        A = 2 * (n - N) if n % 2 == 0 else 2 * (n + 1 - a)
        C = -2 * n if n % 2 == 0 else 2 * (N + 1 - b - n)
    else:
        A = 2 * (a + n + 1) if n % 2 == 0 else 2 * (n - N)
        C = -2 * n if n % 2 == 0 else 2 * (b + N - n + 1)
    return Fraction(A) if isinstance(A, int) else A, Fraction(C) if isinstance(C, int) else C


def m1_recurrence_branch(params: M1HahnParams, n: int):
    """Branch-form ``(A_n, C_n, u_n, b_n)`` for ``0 <= n <= N + 1``.

    ``u_n`` and ``b_n`` use their own parity-split formulas rather than being
    assembled from ``A`` and ``C``, so the two routes can be compared.
    """
    a, b, N = params.alpha, params.beta, params.N
    if not 0 <= n <= N + 1:
        raise ValueError(f"n must lie in 0..{N + 1}")
    A, C = _branch_AC(params, n)
    if params.even:
        u = 4 * n * (a - n) if n % 2 == 0 else 4 * (N - n + 1) * (n + b - N - 1)
        bn = 2 * N + 1 - a - b if n % 2 == 0 else -2 * N - 3 + a + b
    else:
        u = 4 * n * (N + 1 - n) if n % 2 == 0 else 4 * (a + n) * (b + N + 1 - n)
        bn = -1 - a + b if n % 2 == 0 else -1 + a - b
    return A, C, to_scalar(u), to_scalar(bn)


def mu_number(n: int, mu):
    """``[n]_mu = n + mu (1 - (-1)^n)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n + 2 * mu if n % 2 else n + 0 * mu


def m1_recurrence_compact(params: M1HahnParams, n: int):
    """``(u_n, b_n)`` from the unified mu-number form."""
    a, b, N = params.alpha, params.beta, params.N
    if not 0 <= n <= N + 1:
        raise ValueError(f"n must lie in 0..{N + 1}")
    xi, eta = params.xi, params.eta
    u = 4 * mu_number(n, xi) * mu_number(N - n + 1, eta)
    shift = 1 - a - b if params.even else -2 * N - 1 - a - b
    bn = 2 * (mu_number(n, xi) + mu_number(N - n, eta)) + shift if n <= N else None
    return u, bn


def recurrence_table(params: M1HahnParams):
    """Lists ``b[0..N]`` and ``u[0..N+1]`` of the monic recurrence."""
    b = [m1_recurrence_branch(params, n)[3] for n in range(params.N + 1)]
    u = [m1_recurrence_branch(params, n)[2] for n in range(params.N + 2)]
    return b, u


def m1_weights(params: M1HahnParams) -> DiscreteMeasure:
    a, b, N = params.alpha, params.beta, params.N
    w = [None] * (N + 1)

    def ratio(num, den, where):
        if den == 0:
            raise DenominatorPole(f"weight denominator vanishes at s={where}", where=where)
        return num / den

    if params.even:
        half = Fraction(N, 2)
        c1, c2 = 1 - a / 2, 1 - a / 2 - b / 2
        d1, d2 = 1 - b / 2, half + 1 - a / 2 - b / 2
        for s in range(N // 2 + 1):
            num = (-1) ** s * pochhammer(-half, s) * pochhammer(c1, s) * pochhammer(c2, s)
            w[2 * s] = ratio(num, pochhammer(1, s) * pochhammer(d1, s) * pochhammer(d2, s), 2 * s)
        for s in range(N // 2):
            num = (-1) ** s * pochhammer(-half, s + 1) * pochhammer(c1, s) * pochhammer(c2, s)
            w[2 * s + 1] = ratio(
                num, pochhammer(1, s) * pochhammer(d1, s) * pochhammer(d2, s + 1), 2 * s + 1
            )
        kappa0 = ratio(pochhammer(1 - (a + b) / 2, N // 2), pochhammer(1 - b / 2, N // 2), "kappa0")
    else:
        m = Fraction(N - 1, 2)
        c1, c2 = Fraction(1, 2) + a / 2, 1 + a / 2 + b / 2
        d1, d2 = Fraction(1, 2) + b / 2, Fraction(N, 2) + Fraction(3, 2) + a / 2 + b / 2
        for s in range((N - 1) // 2 + 1):
            base = (-1) ** s * pochhammer(-m, s) / pochhammer(1, s)
            w[2 * s] = ratio(
                base * pochhammer(c1, s) * pochhammer(c2, s),
                pochhammer(d1, s) * pochhammer(d2, s),
                2 * s,
            )
            w[2 * s + 1] = ratio(
                base * pochhammer(c1, s + 1) * pochhammer(c2, s),
                pochhammer(d1, s + 1) * pochhammer(d2, s),
                2 * s + 1,
            )
        kappa0 = ratio(
            pochhammer(1 + (a + b) / 2, (N + 1) // 2), pochhammer((b + 1) / 2, (N + 1) // 2), "kappa0"
        )
    return DiscreteMeasure(w, kappa0)


def m1_evaluate_recurrence(params: M1HahnParams, n: int, x):
    """Monic ``R_n(x)`` by forward three-term recursion, ``0 <= n <= N + 1``."""
    if not 0 <= n <= params.N + 1:
        raise ValueError(f"n must lie in 0..{params.N + 1}")
    b, u = recurrence_table(params)
    prev, cur = 0 * x, 1 + 0 * x
    for k in range(n):
        prev, cur = cur, (x - b[k]) * cur - u[k] * prev
    return cur


def m1_polynomials(params: M1HahnParams, upto: int | None = None) -> list:
    """Monic ``R_0, ..., R_upto`` as coefficient polynomials (default ``upto = N``)."""
    upto = params.N if upto is None else upto
    if not 0 <= upto <= params.N + 1:
        raise ValueError(f"upto must lie in 0..{params.N + 1}")
    b, u = recurrence_table(params)
    x = Polynomial.x()
    polys = [Polynomial.constant(1)]
    prev = Polynomial()
    for k in range(upto):
        nxt = (x - b[k]) * polys[-1] - prev * u[k]
        prev = polys[-1]
        polys.append(nxt)
    return polys


def evaluation_matrix(params: M1HahnParams) -> list:
    """``E[s][n] = R_n(y_s)``."""
    grid = m1_grid(params)
    b, u = recurrence_table(params)
    rows = []
    for y in grid:
        prev, cur = Fraction(0) * y, 1 + 0 * y
        row = [cur]
        for k in range(params.N):
            prev, cur = cur, (y - b[k]) * cur - u[k] * prev
            row.append(cur)
        rows.append(row)
    return rows


def _closed_form_data(params: M1HahnParams, n: int):
    """``(gamma, linear_factor_shift or None, eta, d1, d2, m)`` for index ``n``."""
    a, b, N = params.alpha, params.beta, params.N
    m, odd = divmod(n, 2)
    if params.even:
        eta = Fraction(1, 2) - (a + b) / 4
        d1 = Fraction(-N, 2) if not odd else 1 - Fraction(N, 2)
        d2 = 1 - a / 2
        gamma = 16**m * pochhammer(d1, m) * pochhammer(d2, m)
        factor_shift = -params.tau if odd else None
    else:
        eta = (a + b + 2) / 4
        d1 = Fraction(-(N - 1), 2)
        d2 = (a + 1) / 2 if not odd else (a + 3) / 2
        gamma = 16**m * pochhammer(Fraction(1 - N, 2), m) * pochhammer(d2, m)
        factor_shift = a - b if odd else None
    return gamma, factor_shift, eta, d1, d2, m


def m1_evaluate_closed(params: M1HahnParams, n: int, x):
    """Monic ``R_n(x)`` from the 3F2 closed form in the shifted variable ``x + 1``."""
    if not 0 <= n <= params.N:
        raise ValueError(f"n must lie in 0..{params.N}")
    gamma, factor_shift, eta, d1, d2, m = _closed_form_data(params, n)
    t = x + 1
    value = gamma * hyp3f2_terminating((-m, eta + t / 4, eta - t / 4), (d1, d2), m)
    if factor_shift is not None:
        value = value * (t + factor_shift)
    return value


def m1_closed_polynomial(params: M1HahnParams, n: int) -> Polynomial:
    """Closed form of monic ``R_n`` as a coefficient polynomial in the unshifted ``x``."""
    if not 0 <= n <= params.N:
        raise ValueError(f"n must lie in 0..{params.N}")
    gamma, factor_shift, eta, d1, d2, m = _closed_form_data(params, n)
    t = Polynomial.x()
    shifted = hyp3f2_terminating((-m, t / 4 + eta, eta - t / 4), (d1, d2), m)
    shifted = Polynomial.constant(1) * shifted * gamma
    if factor_shift is not None:
        shifted = shifted * Polynomial.linear(factor_shift)
    return shifted.compose_affine(1, 1)


@dataclass(frozen=True)
class ChristoffelPair:
    """Kernel split of the shifted polynomials ``R~_n(x) = R_n(x - 1)``.

    ``R~_{2n}(x) = P_n(x^2)`` and ``R~_{2n+1}(x) = (x - tau) Q_n(x^2)``, with
    ``Q_n = (P_{n+1} + u_{2n+1} P_n) / (x - tau^2)``.
    """

    tau: object
    p_polys: tuple
    q_polys: tuple
    p_coeffs: tuple  # (b^P_n, u^P_n) pairs
    q_coeffs: tuple
    kernel_quotients: tuple  # Q_n obtained by exact division


def christoffel_pair(params: M1HahnParams, experimental: bool = False) -> ChristoffelPair:
    """Build the P/Q families from their recurrences and check the division.

    Odd ``N`` is gated behind ``experimental``.
    """
    if not params.even and not experimental:
        raise ValueError("the odd-N kernel split is experimental; pass experimental=True")
    N, tau = params.N, params.tau
    _, u = recurrence_table(params)
    u = list(u) + [Fraction(0)]

    def uu(k):
        return u[k] if 0 <= k < len(u) else Fraction(0)

    n_p = N // 2 + 1  # P_0 .. P_{n_p}
    n_q = (N - 1) // 2  # Q_0 .. Q_{n_q}
    z = Polynomial.x()
    tau2 = tau * tau
    p_polys, p_coeffs = [Polynomial.constant(1)], []
    prev = Polynomial()
    for n in range(n_p):
        bP, uP = uu(2 * n) + uu(2 * n + 1) + tau2, uu(2 * n) * uu(2 * n - 1)
        p_coeffs.append((bP, uP))
        nxt = (z - bP) * p_polys[-1] - prev * uP
        prev = p_polys[-1]
        p_polys.append(nxt)
    q_polys, q_coeffs = [Polynomial.constant(1)], []
    prev = Polynomial()
    for n in range(n_q):
        bQ, uQ = uu(2 * n + 2) + uu(2 * n + 1) + tau2, uu(2 * n) * uu(2 * n + 1)
        q_coeffs.append((bQ, uQ))
        nxt = (z - bQ) * q_polys[-1] - prev * uQ
        prev = q_polys[-1]
        q_polys.append(nxt)
    divisor = Polynomial((-tau2, 1))
    quotients = []
    for n in range(n_q + 1):
        quotients.append((p_polys[n + 1] + p_polys[n] * uu(2 * n + 1)).exact_div(divisor))
    for n, (qd, qr) in enumerate(zip(quotients, q_polys)):
        if qd != qr:
            raise NonExactDivision(f"kernel quotient {n} disagrees with the Q recurrence")
    return ChristoffelPair(tau, tuple(p_polys), tuple(q_polys), tuple(p_coeffs), tuple(q_coeffs), tuple(quotients))


def christoffel_reconstruct(pair: ChristoffelPair, n: int) -> Polynomial:
    """``R~_n`` rebuilt from the P/Q families."""
    m, odd = divmod(n, 2)
    if odd:
        return Polynomial((-pair.tau, 1)) * pair.q_polys[m].substitute_square()
    return pair.p_polys[m].substitute_square()


def spectral_bisets(params: M1HahnParams):
    """Grid points split by parity of the index: ``(even-s points, odd-s points)``."""
    grid = m1_grid(params)
    return tuple(grid[s] for s in range(0, params.N + 1, 2)), tuple(
        grid[s] for s in range(1, params.N + 1, 2)
    )


def positivity_report(params: M1HahnParams) -> dict:
    b, u = recurrence_table(params)
    measure = m1_weights(params)
    evens, odds = spectral_bisets(params)
    return {
        "in_regime": params.in_positivity_regime,
        "u_positive": all(v > 0 for v in u[1 : params.N + 1]),
        "weights_positive": measure.positive,
        "bisets_disjoint": not set(evens) & set(odds),
        "biset_sizes": (len(evens), len(odds)),
    }
