import math
import time
from fractions import Fraction

import pytest

from dualhahn.errors import ToleranceExceeded
from dualhahn.limits import (
    EpsilonSchedule,
    eigenvalue_limit_series,
    fit_order,
    limit_operator_check,
    limit_recurrence_check,
    q_to_1_check,
    qparams_at_epsilon,
)

F = Fraction


def test_schedule_validation():
    s = EpsilonSchedule.geometric()
    assert s.epsilons[0] == 2**-4 and s.epsilons[-1] == 2**-12
    with pytest.raises(ValueError):
        EpsilonSchedule((0.1, 0.2))
    with pytest.raises(ValueError):
        EpsilonSchedule((0.1, 0.0))
    with pytest.raises(ValueError):
        EpsilonSchedule((0.1,))


def test_qparams_at_epsilon():
    p = qparams_at_epsilon(3, 3, 2, 0.1)
    assert p.a == math.exp(-0.3) and p.q == -math.exp(0.1)
    p = qparams_at_epsilon(1, 1, 1, 0.1)
    assert p.a == -math.exp(0.1)
    for eps in (1e-2, 1e-3, 1e-4):
        for N in (2, 3):
            p = qparams_at_epsilon(F(1, 3), F(2, 5), N, eps)
            assert abs(p.a * p.b - 1) < 2 * eps


def test_fit_order():
    eps = [2.0**-k for k in range(4, 10)]
    assert fit_order(eps, [3 * e**2 for e in eps]) == pytest.approx(2.0)
    assert fit_order(eps, [0.0] * len(eps)) is None


def test_eigenvalue_series_is_exact():
    assert eigenvalue_limit_series(0, 1) == [0, 0]
    for n in range(1, 6):
        assert eigenvalue_limit_series(n, 1) == [2 * n, -(2 * n * n + n)]
    # float cross-check against the unexpanded quotient
    n, eps = 3, 1e-4
    c = eigenvalue_limit_series(n, 2)
    direct = math.expm1(-2 * n * eps) / -math.expm1(eps)
    assert abs(direct - sum(float(ck) * eps**k for k, ck in enumerate(c))) < 1e-10


@pytest.mark.parametrize("alpha, beta, N", [(3, 3, 2), (1, 1, 1), (F(7, 2), F(13, 4), 4), (F(1, 3), F(2, 5), 5)])
def test_recurrence_limit(alpha, beta, N):
    report = limit_recurrence_check(alpha, beta, N)
    assert report.passed
    assert abs(report.order - 1) <= 0.2


def test_recurrence_limit_target_example():
    report = limit_recurrence_check(3, 3, 2)
    # A_1 / (1 + q) -> -2; the tracked error at index 1 shrinks with eps
    errs = report.index_errors[1]
    assert errs[-1] < errs[0] / 100


@pytest.mark.parametrize("alpha, beta, N", [(3, 3, 2), (1, 1, 1), (F(9, 2), F(17, 3), 6), (F(1, 3), F(2, 5), 5)])
def test_operator_limit(alpha, beta, N):
    report = limit_operator_check(alpha, beta, N)
    assert report.passed
    assert abs(report.order - 1) <= 0.2
    eig = report.extras["eigenvalue"]
    assert all(e == 0 for e in eig.index_errors[0])
    # L/(1+q) alone blows up
    div = report.extras["divergence"]
    assert div[-1] > div[0]


def test_q_to_1():
    report = q_to_1_check(1, 2, 3)
    assert report.passed and report.order >= 0.8


def test_failure_raises_with_worst_point():
    tight = EpsilonSchedule.geometric(rtol_factor=1e-6)
    with pytest.raises(ToleranceExceeded) as info:
        limit_recurrence_check(3, 3, 2, tight)
    assert info.value.worst is not None
    report = limit_recurrence_check(3, 3, 2, tight, raise_on_fail=False)
    assert not report.passed


def test_limits_runtime_small_N():
    start = time.perf_counter()
    for N in range(1, 7):
        limit_recurrence_check(F(N + 1, 3), F(N + 2, 5), N)
        limit_operator_check(F(N + 1, 3), F(N + 2, 5), N)
    assert time.perf_counter() - start < 5
