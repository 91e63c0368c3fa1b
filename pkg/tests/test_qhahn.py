from fractions import Fraction

import pytest

from dualhahn.errors import DegenerateGrid, DenominatorPole
from dualhahn.qhahn import (
    QHahnParams,
    classical_evaluate,
    classical_grid,
    classical_monic_evaluate,
    classical_recurrence,
    q_diff_op,
    q_evaluate,
    q_evaluate_recurrence,
    q_grid,
    q_monic_coeffs,
    q_monic_evaluate,
    q_recurrence,
    q_weights,
)
from dualhahn.verify import verify_qhahn

F = Fraction
GENERIC = QHahnParams(F(1, 3), F(1, 5), F(1, 2), 3)


def test_grid_examples():
    p = QHahnParams(2, 3, F(1, 2), 2, strict=False)
    grid = q_grid(p)
    assert grid[0] == 4
    assert grid[1] == F(7, 2)
    q = F(2, 7)
    collapsed = QHahnParams(F(1, 3), 1 / (q * F(1, 3)), q, 3, strict=False)
    assert all(x == q**-s + q**s for s, x in enumerate(q_grid(collapsed)))


def test_recurrence_examples():
    p = QHahnParams(2, 3, F(1, 2), 2, strict=False)
    assert q_recurrence(p, 1)[0] == F(-1, 2)
    assert q_recurrence(p, 2)[0] == 0
    assert q_recurrence(p, 0)[1] == 0
    # a q = 1 makes A_0 vanish; strict construction refuses it
    assert q_recurrence(p, 0)[0] == 0
    with pytest.raises(DenominatorPole):
        QHahnParams(2, 3, F(1, 2), 2)


def test_monic_u1_by_substitution():
    a, b, q, N = F(1, 3), F(1, 5), F(1, 2), 3
    A0 = (1 - q**-N) * (1 - a * q)
    C1 = a * q * (1 - q) * (b - q**-N)
    assert q_monic_coeffs(GENERIC, 1)[1] == A0 * C1
    assert q_monic_coeffs(GENERIC, 0)[1] == 0
    assert q_monic_coeffs(GENERIC, N + 1)[1] == 0


def test_series_equals_recurrence():
    grid = q_grid(GENERIC)
    for n in range(4):
        for s in range(4):
            assert q_evaluate(GENERIC, n, s) == q_evaluate_recurrence(GENERIC, n, grid[s])
    assert all(q_evaluate(GENERIC, n, 0) == 1 for n in range(4))
    assert all(q_evaluate(GENERIC, 0, s) == 1 for s in range(4))


def test_aq_equal_one_is_a_series_pole():
    p = QHahnParams(2, 3, F(1, 2), 2, strict=False)
    with pytest.raises(DenominatorPole):
        q_evaluate(p, 1, 0)


def test_weights_and_orthogonality():
    grid = q_grid(GENERIC)
    m = q_weights(GENERIC)
    assert m.weights[0] == 1
    assert m.total() == m.kappa0
    r1 = [q_evaluate(GENERIC, 1, s) for s in range(4)]
    r2 = [q_evaluate(GENERIC, 2, s) for s in range(4)]
    assert m.inner(r1, r2) == 0
    # norm product is u_1 u_2 ... u_n
    p3 = [q_monic_evaluate(GENERIC, 3, x) for x in grid]
    u = [q_monic_coeffs(GENERIC, n)[1] for n in (1, 2, 3)]
    assert m.inner(p3, p3) == m.kappa0 * u[0] * u[1] * u[2]
    assert m.inner(p3, p3) != m.kappa0 * u[0] * u[0] * u[2]


def test_difference_operator():
    L = q_diff_op(GENERIC)
    assert L.coeffs[1][-1] == 0 and L.coeffs[-1][0] == 0
    assert L.apply([F(1)] * 4) == [0] * 4
    grid = q_grid(GENERIC)
    for n in range(4):
        col = [q_evaluate_recurrence(GENERIC, n, x) for x in grid]
        lam = GENERIC.q**-n - 1
        assert L.apply(col) == [lam * c for c in col]


@pytest.mark.parametrize(
    "params",
    [QHahnParams(F(1, 3), F(1, 5), F(1, 2), 4), QHahnParams(F(-2, 7), F(3, 11), F(5, 3), 5),
     QHahnParams(F(4, 9), F(-1, 2), F(-3, 4), 3)],
)
def test_verify_suites_exact(params):
    assert all(r.ok and r.residual == 0 for r in verify_qhahn(params))


def test_validation():
    with pytest.raises(ValueError):
        QHahnParams(F(1, 3), F(1, 5), 1, 3)
    with pytest.raises(ValueError):
        QHahnParams(F(1, 3), F(1, 5), F(1, 2), 0)
    with pytest.raises(DegenerateGrid):
        # ab q^2 = 1 collides x_0 and x_1
        QHahnParams(F(1, 8), F(2), F(2), 2)


def test_floating_mode():
    p = QHahnParams(1 / 3, 1 / 5, 0.5, 4)
    assert all(r.ok for r in verify_qhahn(p, tol=1e-9))


def test_classical_family():
    al, be, N = F(1), F(2), 3
    assert tuple(classical_grid(al, be, N)) == (0, 5, 12, 21)
    A, C, b, u = classical_recurrence(al, be, N, 1)
    assert u == 30
    assert b == -A - C
    assert all(classical_evaluate(al, be, N, n, 0) == 1 for n in range(N + 1))
    # monic W_1(x) = x - b_0
    assert classical_monic_evaluate(al, be, N, 1, F(0)) == -classical_recurrence(al, be, N, 0)[2]
