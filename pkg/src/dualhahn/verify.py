"""Identity suites run by ``dualhahn verify``.

Each suite returns the largest residual it saw. In exact mode a passing suite
has residual exactly 0; in floating mode it must stay under the caller's
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import m1hahn, operators, qhahn
from .errors import DualHahnError, NonExactDivision
from .poly import Polynomial


@dataclass(frozen=True)
class SuiteResult:
    name: str
    residual: object  # None when the suite was skipped
    ok: bool
    note: str = ""


def _max_abs(values, zero=Fraction(0)):
    best = zero
    for v in values:
        v = abs(v)
        if v > best:
            best = v
    return best


def _gap(x, y):
    """Exact distance for rationals; distance relative to ``max(1, |x|, |y|)`` for floats."""
    d = abs(x - y)
    if isinstance(d, float):
        return d / max(1.0, abs(x), abs(y))
    return d


def _poly_residual(p: Polynomial, q: Polynomial):
    diff = p - q
    return _max_abs(diff.coeffs)


def _judge(name, residual, tol, note=""):
    ok = residual == 0 if tol is None else float(residual) <= tol
    return SuiteResult(name, residual, ok, note)


def _run(name, fn, tol):
    try:
        return _judge(name, fn(), tol)
    except NonExactDivision as exc:
        return SuiteResult(name, None, False, f"NonExactDivision: {exc}")
    except DualHahnError as exc:
        return SuiteResult(name, None, False, f"{type(exc).__name__}: {exc}")


# dual -1 Hahn


def _gram_residual(measure, cols, norms):
    """Worst Gram-matrix defect; floats are scaled by ``sqrt(h_n h_m)``."""
    worst = 0 * measure.kappa0
    for n, cn in enumerate(cols):
        for m, cm in enumerate(cols):
            d = abs(measure.inner(cn, cm) - (norms[n] if n == m else 0))
            if isinstance(d, float):
                d = d / abs(norms[n] * norms[m]) ** 0.5
            worst = max(worst, d)
    return worst


def _norms(kappa0, u):
    out = [kappa0]
    for v in u:
        out.append(out[-1] * v)
    return out


def _m1_orthogonality(p):
    measure = m1hahn.m1_weights(p)
    E = m1hahn.evaluation_matrix(p)
    _, u = m1hahn.recurrence_table(p)
    cols = [[row[n] for row in E] for n in range(p.N + 1)]
    return _gram_residual(measure, cols, _norms(measure.kappa0, u[1 : p.N + 1]))


def _m1_branch_compact(p):
    worst = Fraction(0) * p.alpha
    shift = 1 - p.alpha - p.beta if p.even else 1 + p.alpha + p.beta
    for n in range(p.N + 2):
        A, C, u, b = m1hahn.m1_recurrence_branch(p, n)
        uc, bc = m1hahn.m1_recurrence_compact(p, n)
        worst = max(worst, _gap(u, uc))
        if n <= p.N:
            worst = max(worst, _gap(b, bc), _gap(b, shift - A - C))
        if n >= 1:
            worst = max(worst, _gap(u, m1hahn.m1_recurrence_branch(p, n - 1)[0] * C))
    return worst


def _m1_closed_form(p, exact):
    if exact:
        polys = m1hahn.m1_polynomials(p)
        return _max_abs(
            (_poly_residual(polys[n], m1hahn.m1_closed_polynomial(p, n)) for n in range(p.N + 1))
        )
    grid = m1hahn.m1_grid(p)
    return max(
        _gap(m1hahn.m1_evaluate_recurrence(p, n, y), m1hahn.m1_evaluate_closed(p, n, y))
        for n in range(p.N + 1)
        for y in grid
    )


def _m1_stencil(p):
    st = operators.m1_stencil(p)
    E = m1hahn.evaluation_matrix(p)
    worst = 0 * p.alpha
    for n in range(p.N + 1):
        col = [row[n] for row in E]
        out = st.apply(col)
        worst = max(worst, _max_abs((_gap(o, 2 * n * c) for o, c in zip(out, col)), 0 * p.alpha))
    return worst


def _m1_dunkl(p):
    op = operators.dunkl_operator(p)
    worst = Fraction(0)
    for n, poly in enumerate(m1hahn.m1_polynomials(p)):
        worst = max(worst, _poly_residual(operators.apply_dunkl_to_polynomial(op, poly), poly * (2 * n)))
    return worst


def _m1_dunkl_degree(p):
    op = operators.dunkl_operator(p)
    worst = 0
    for k in range(p.N + 1):
        image = operators.apply_dunkl_to_polynomial(op, Polynomial.monomial(k))
        # k = 0 maps to the zero polynomial
        deg = max(image.degree, 0)
        worst = max(worst, abs(deg - k) if deg > k or (k > 0 and image.degree < 0) else 0)
    return Fraction(worst)


def _m1_dunkl_stencil(p):
    op = operators.dunkl_operator(p)
    st = operators.m1_stencil(p)
    grid = m1hahn.m1_grid(p)
    worst = Fraction(0)
    for k in range(p.N + 1):
        mono = Polynomial.monomial(k)
        image = operators.apply_dunkl_to_polynomial(op, mono)
        sampled = st.apply([mono(y) for y in grid])
        worst = max(worst, _max_abs(image(y) - v for y, v in zip(grid, sampled)))
    return worst


def _m1_leonard(p):
    rep = operators.leonard_pair(p)
    b, u = m1hahn.recurrence_table(p)
    n = p.N + 1
    worst = Fraction(0)
    for i in range(n):
        for j in range(n):
            target_a = Fraction(2 * i) if i == j else Fraction(0)
            if j == i:
                target_b = b[i]
            elif i == j + 1:
                target_b = Fraction(1)
            elif j == i + 1:
                target_b = u[j]
            else:
                target_b = Fraction(0)
            worst = max(worst, abs(rep.a_poly[i][j] - target_a), abs(rep.b_poly[i][j] - target_b))
            if abs(i - j) > 2:
                worst = max(worst, abs(rep.A[i][j]))
    return worst


def _m1_christoffel(p):
    pair = m1hahn.christoffel_pair(p, experimental=not p.even)
    shifted = [poly.compose_affine(1, -1) for poly in m1hahn.m1_polynomials(p)]
    return _max_abs(
        _poly_residual(m1hahn.christoffel_reconstruct(pair, n), shifted[n]) for n in range(p.N + 1)
    )


def verify_m1(params: m1hahn.M1HahnParams, tol: float | None = None) -> list:
    """Run every dual -1 Hahn suite. ``tol=None`` selects exact mode."""
    exact = tol is None
    results = [
        _run("orthogonality", lambda: _m1_orthogonality(params), tol),
        _run("branch-compact", lambda: _m1_branch_compact(params), tol),
        _run("closed-form", lambda: _m1_closed_form(params, exact), tol),
        _run("stencil-eigen", lambda: _m1_stencil(params), tol),
    ]
    algebraic = [
        ("dunkl-eigen", _m1_dunkl),
        ("dunkl-degree", _m1_dunkl_degree),
        ("dunkl-stencil", _m1_dunkl_stencil),
        ("leonard-pair", _m1_leonard),
        ("christoffel" if params.even else "christoffel-odd", _m1_christoffel),
    ]
    for name, fn in algebraic:
        if exact:
            results.append(_run(name, lambda fn=fn: fn(params), tol))
        else:
            results.append(SuiteResult(name, None, True, "skipped: exact mode only"))
    return results


# dual q-Hahn


def verify_qhahn(params: qhahn.QHahnParams, tol: float | None = None) -> list:
    N = params.N

    def orthogonality():
        grid = qhahn.q_grid(params)
        measure = qhahn.q_weights(params)
        cols = [[qhahn.q_monic_evaluate(params, n, x) for x in grid] for n in range(N + 1)]
        u = [qhahn.q_monic_coeffs(params, n)[1] for n in range(1, N + 1)]
        return _gram_residual(measure, cols, _norms(measure.kappa0, u))

    def series():
        grid = qhahn.q_grid(params)
        return max(
            _gap(qhahn.q_evaluate(params, n, s), qhahn.q_evaluate_recurrence(params, n, grid[s]))
            for n in range(N + 1)
            for s in range(N + 1)
        )

    def eigen():
        grid = qhahn.q_grid(params)
        st = qhahn.q_diff_op(params)
        worst = 0 * params.q
        for n in range(N + 1):
            col = [qhahn.q_evaluate_recurrence(params, n, x) for x in grid]
            lam = params.q ** (-n) - 1
            worst = max(worst, max(_gap(o, lam * c) for o, c in zip(st.apply(col), col)))
        return worst

    def truncation():
        return max(abs(qhahn.q_recurrence(params, N)[0]), abs(qhahn.q_recurrence(params, 0)[1]))

    return [
        _run("orthogonality", orthogonality, tol),
        _run("series-recurrence", series, tol),
        _run("difference-eigen", eigen, tol),
        _run("truncation", truncation, tol),
    ]


# classical dual Hahn


def verify_classical(alpha, beta, N: int, tol: float | None = None) -> list:
    grid = qhahn.classical_grid(alpha, beta, N)

    def eigen():
        st = operators.classical_L1_stencil(alpha, beta, N)
        worst = Fraction(0)
        for n in range(N + 1):
            col = [qhahn.classical_evaluate(alpha, beta, N, n, s) for s in range(N + 1)]
            worst = max(worst, max(_gap(o, -n * c) for o, c in zip(st.apply(col), col)))
        return worst

    def recurrence():
        # non-monic three-term recurrence against the 3F2 values on the grid
        worst = Fraction(0)
        for s, x in enumerate(grid):
            vals = [qhahn.classical_evaluate(alpha, beta, N, n, s) for n in range(N + 1)]
            for n in range(N):
                A, C, _, _ = qhahn.classical_recurrence(alpha, beta, N, n)
                lhs = A * vals[n + 1] - (A + C) * vals[n] + (C * vals[n - 1] if n else 0)
                worst = max(worst, _gap(lhs, x * vals[n]))
        return worst

    return [_run("L1-eigen", eigen, tol), _run("series-recurrence", recurrence, tol)]
