"""Numerical checks of the q -> -1 and q -> 1 limits.

Every limit target comes from the exact modules; this module only builds the
q-side quantities along an epsilon schedule, measures the distance to the
target and fits the observed convergence order on a log-log scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .arith import to_scalar
from .errors import ToleranceExceeded
from .m1hahn import M1HahnParams, m1_grid, m1_recurrence_branch
from .operators import m1_stencil
from .qhahn import (
    QHahnParams,
    classical_grid,
    classical_recurrence,
    q_diff_op,
    q_grid,
    q_monic_coeffs,
    q_recurrence,
)


@dataclass(frozen=True)
class EpsilonSchedule:
    """Strictly decreasing positive epsilons plus the tolerances applied to them.

    A check at step ``eps`` passes when ``error <= rtol_factor * eps * max(1, |target|)``;
    the fitted order must land within ``order_tol`` of ``order_target``.
    """

    epsilons: tuple
    rtol_factor: float = 10.0
    order_target: float = 1.0
    order_tol: float = 0.2

    def __post_init__(self):
        eps = tuple(float(e) for e in self.epsilons)
        if len(eps) < 2:
            raise ValueError("a schedule needs at least two epsilons")
        if any(e <= 0 for e in eps):
            raise ValueError("epsilons must be positive")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("epsilons must be strictly decreasing")
        object.__setattr__(self, "epsilons", eps)

    @classmethod
    def geometric(cls, first: int = 4, last: int = 12, **kw) -> "EpsilonSchedule":
        return cls(tuple(2.0**-k for k in range(first, last + 1)), **kw)

    def bound(self, eps: float, target_scale: float) -> float:
        return self.rtol_factor * eps * max(1.0, target_scale)


def fit_order(epsilons: Sequence[float], errors: Sequence[float]) -> Optional[float]:
    """Least-squares slope of ``log(error)`` against ``log(eps)``.

    Zero errors (exact agreement) are dropped; ``None`` if fewer than two remain.
    """
    pts = [(e, r) for e, r in zip(epsilons, errors) if r > 0]
    if len(pts) < 2:
        return None
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


@dataclass
class ConvergenceReport:
    """Per-check record: errors per epsilon, per tracked index, and fitted orders."""

    name: str
    epsilons: tuple
    errors: list  # aggregate (max over indices) per epsilon
    order: Optional[float]
    passed: bool
    index_errors: dict = field(default_factory=dict)
    index_orders: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)  # (index, eps, error, bound)
    extras: dict = field(default_factory=dict)

    @property
    def worst(self):
        if not self.failures:
            return None
        return max(self.failures, key=lambda f: f[2] / f[3] if f[3] else math.inf)[:2]

    def rows(self):
        """Long-format rows ``(check, index, epsilon, error, order)``."""
        for idx, errs in self.index_errors.items():
            for e, r in zip(self.epsilons, errs):
                yield self.name, idx, e, r, self.index_orders.get(idx)
        for e, r in zip(self.epsilons, self.errors):
            yield self.name, "max", e, r, self.order


def _finish(name, schedule, per_index, scales, check_order, extras=None, at_least=False):
    eps = schedule.epsilons
    failures = []
    for idx, errs in per_index.items():
        for e, r in zip(eps, errs):
            bound = schedule.bound(e, scales[idx])
            if not r <= bound:
                failures.append((idx, e, r, bound))
    agg = [max(errs[k] for errs in per_index.values()) for k in range(len(eps))]
    order = fit_order(eps, agg)
    orders = {idx: fit_order(eps, errs) for idx, errs in per_index.items()}
    ok = not failures
    if check_order:
        if order is None:
            ok = ok and True
        elif at_least:
            ok = ok and order >= schedule.order_target - schedule.order_tol
        else:
            ok = ok and abs(order - schedule.order_target) <= schedule.order_tol
    return ConvergenceReport(name, eps, agg, order, ok, per_index, orders, failures, extras or {})


def _raise_if(report: ConvergenceReport, raise_on_fail: bool) -> ConvergenceReport:
    if raise_on_fail and not report.passed:
        raise ToleranceExceeded(
            f"{report.name}: convergence check failed (order={report.order}, worst={report.worst})",
            worst=report.worst,
        )
    return report


def qparams_at_epsilon(alpha, beta, N: int, epsilon: float) -> QHahnParams:
    """Dual q-Hahn parameters approaching the dual -1 Hahn family as ``epsilon -> 0``.

    ``q = -e^eps``; even ``N``: ``a = e^(-alpha eps)``, ``b = e^(-beta eps)``;
    odd ``N``: ``a = -e^(alpha eps)``, ``b = -e^(beta eps)``.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    al, be = float(alpha), float(beta)
    q = -math.exp(epsilon)
    if N % 2 == 0:
        a, b = math.exp(-al * epsilon), math.exp(-be * epsilon)
    else:
        a, b = -math.exp(al * epsilon), -math.exp(be * epsilon)
    return QHahnParams(a, b, q, N)


def _one_plus_q(epsilon: float) -> float:
    # 1 + q = 1 - e^eps, without cancellation
    return -math.expm1(epsilon)


def limit_recurrence_check(alpha, beta, N: int, schedule: EpsilonSchedule | None = None,
                           raise_on_fail: bool = True) -> ConvergenceReport:
    """``A_n/(1+q)``, ``C_n/(1+q)`` and ``x_s/(1+q)`` against their -1 limits."""
    schedule = schedule or EpsilonSchedule.geometric()
    params = M1HahnParams(to_scalar(alpha), to_scalar(beta), N)
    targets = {n: tuple(float(v) for v in m1_recurrence_branch(params, n)[:2]) for n in range(N + 1)}
    grid = [float(y) for y in m1_grid(params)]
    per_index = {n: [] for n in range(N + 1)}
    per_index["grid"] = []
    for eps in schedule.epsilons:
        qp = qparams_at_epsilon(params.alpha, params.beta, N, eps)
        opq = _one_plus_q(eps)
        for n in range(N + 1):
            A, C = q_recurrence(qp, n)
            tA, tC = targets[n]
            per_index[n].append(max(abs(A / opq - tA), abs(C / opq - tC)))
        xs = q_grid(qp)
        per_index["grid"].append(max(abs(x / opq - y) for x, y in zip(xs, grid)))
    scales = {n: max(abs(v) for v in targets[n]) for n in range(N + 1)}
    scales["grid"] = max(abs(y) for y in grid)
    report = _finish("recurrence", schedule, per_index, scales, check_order=True)
    return _raise_if(report, raise_on_fail)


def eigenvalue_limit_series(n: int, order: int = 1) -> list:
    """Exact Taylor coefficients of ``(q^(-2n) - 1)/(1 + q)`` in ``eps`` at ``q = -e^eps``.

    Numerator ``e^(-2n eps) - 1`` and denominator ``1 - e^eps`` both vanish at
    ``eps = 0``; after dividing each by ``eps`` the quotient series is formed
    term by term in rationals.
    """
    num = [Fraction((-2 * n) ** (k + 1), math.factorial(k + 1)) for k in range(order + 1)]
    den = [Fraction(-1, math.factorial(k + 1)) for k in range(order + 1)]
    out = []
    for k in range(order + 1):
        acc = num[k] - sum(out[j] * den[k - j] for j in range(k))
        out.append(acc / den[0])
    return out


def limit_operator_check(alpha, beta, N: int, schedule: EpsilonSchedule | None = None,
                         raise_on_fail: bool = True) -> ConvergenceReport:
    """``(L^2 + 2L)/(1+q)`` against the five-diagonal stencil, plus the eigenvalue shadow.

    The report's extras carry ``eigenvalue`` (a nested report for
    ``(lambda_n^2 + 2 lambda_n)/(1+q) -> 2n``) and ``divergence`` (max entry of
    ``L/(1+q)`` per epsilon, recorded but not asserted).
    """
    schedule = schedule or EpsilonSchedule.geometric()
    params = M1HahnParams(to_scalar(alpha), to_scalar(beta), N)
    H = np.array([[float(v) for v in row] for row in m1_stencil(params).matrix()])
    errs, divergence = [], []
    eig_errs = {n: [] for n in range(N + 1)}
    for eps in schedule.epsilons:
        qp = qparams_at_epsilon(params.alpha, params.beta, N, eps)
        opq = _one_plus_q(eps)
        L = np.array(q_diff_op(qp).matrix(), dtype=float)
        M = (L @ L + 2 * L) / opq
        errs.append(float(np.abs(M - H).max()))
        divergence.append(float(np.abs(L / opq).max()))
        for n in range(N + 1):
            lam = qp.q ** (-n) - 1
            eig_errs[n].append(abs((lam * lam + 2 * lam) / opq - 2 * n))
    eig_report = _finish("eigenvalue", schedule, eig_errs, {n: 2.0 * n for n in range(N + 1)}, True)
    report = _finish(
        "operator",
        schedule,
        {"matrix": errs},
        {"matrix": float(np.abs(H).max())},
        check_order=True,
        extras={"eigenvalue": eig_report, "divergence": divergence},
    )
    report.passed = report.passed and eig_report.passed
    return _raise_if(report, raise_on_fail)


def q_to_1_check(alpha, beta, N: int, schedule: EpsilonSchedule | None = None,
                 raise_on_fail: bool = True) -> ConvergenceReport:
    """Dual q-Hahn with ``q = e^-eps``, ``a = q^alpha``, ``b = q^beta`` against classical dual Hahn.

    The grid is mapped affinely so that ``s = 0, 1`` land exactly on
    ``s (s + alpha + beta + 1)``; the monic coefficients follow the same map
    (``b -> (b - x_0)/c``, ``u -> u/c^2``).
    """
    schedule = schedule or EpsilonSchedule.geometric()
    al, be = to_scalar(alpha), to_scalar(beta)
    fa, fb = float(al), float(be)
    targets = {n: classical_recurrence(al, be, N, n) for n in range(N + 1)}
    tgrid = [float(x) for x in classical_grid(al, be, N)]
    per_index = {f"b{n}": [] for n in range(N + 1)}
    per_index.update({f"u{n}": [] for n in range(1, N + 1)})
    per_index["grid"] = []
    for eps in schedule.epsilons:
        q = math.exp(-eps)
        qp = QHahnParams(q**fa, q**fb, q, N)
        xs = q_grid(qp)
        x0 = xs[0]
        c = (xs[1] - x0) / (fa + fb + 2)
        for n in range(N + 1):
            bn, un = q_monic_coeffs(qp, n)
            per_index[f"b{n}"].append(abs((bn - x0) / c - float(targets[n][2])))
            if n >= 1:
                per_index[f"u{n}"].append(abs(un / c**2 - float(targets[n][3])))
        per_index["grid"].append(max(abs((x - x0) / c - t) for x, t in zip(xs, tgrid)))
    scales = {f"b{n}": abs(float(targets[n][2])) for n in range(N + 1)}
    scales.update({f"u{n}": abs(float(targets[n][3])) for n in range(1, N + 1)})
    scales["grid"] = max(abs(t) for t in tgrid)
    report = _finish("q_to_1", schedule, per_index, scales, check_order=True, at_least=True)
    return _raise_if(report, raise_on_fail)
